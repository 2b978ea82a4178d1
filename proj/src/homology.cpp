#include "prym/homology.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "prym/error.hpp"

namespace prym {

// ---------------------------------------------------------------- chains

Chain Chain::edge(std::size_t e, const Integer& coefficient) {
  Chain c;
  c.add(e, coefficient);
  return c;
}

Integer Chain::operator[](std::size_t e) const {
  auto it = coefficients_.find(e);
  return it == coefficients_.end() ? Integer(0) : it->second;
}

void Chain::add(std::size_t e, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coefficients_.try_emplace(e, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coefficients_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& other) {
  for (const auto& [e, k] : other.coefficients_) add(e, k);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  for (const auto& [e, k] : other.coefficients_) add(e, -k);
  return *this;
}

Chain& Chain::operator*=(const Integer& factor) {
  if (factor == 0) {
    coefficients_.clear();
    return *this;
  }
  for (auto& [e, k] : coefficients_) k *= factor;
  return *this;
}

std::string Chain::to_string(const MetricGraph& g) const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, k] : coefficients_) {
    const bool negative = k < 0;
    const Integer magnitude = negative ? Integer(-k) : k;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    if (magnitude != 1) os << magnitude.get_str() << "*";
    os << g.edge(e).id;
    first = false;
  }
  return os.str();
}

std::vector<Integer> boundary(const MetricGraph& g, const Chain& c) {
  std::vector<Integer> out(g.num_vertices());
  for (const auto& [e, k] : c.coefficients()) {
    out[g.edge(e).dst] += k;
    out[g.edge(e).src] -= k;
  }
  return out;
}

bool is_cycle(const MetricGraph& g, const Chain& c) {
  const auto d = boundary(g, c);
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 0; });
}

CycleBasis cycle_basis(const MetricGraph& g) {
  const auto tree = canonical_spanning_tree(g);
  // Path chains from vertex 0 along the tree.
  std::vector<Chain> to_root(g.num_vertices());
  std::vector<bool> seen(g.num_vertices(), false);
  const auto at = g.half_edges_by_vertex();
  std::deque<std::size_t> queue;
  if (g.num_vertices() > 0) {
    seen[0] = true;
    queue.push_back(0);
  }
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto h : at[u]) {
      const auto e = edge_of(h);
      if (!tree[e]) continue;
      const auto w = g.root(paired(h));
      if (seen[w]) continue;
      seen[w] = true;
      // Leaving u through its source half-edge traverses e forwards.
      to_root[w] = to_root[u];
      to_root[w].add(e, end_of(h) == End::Source ? 1 : -1);
      queue.push_back(w);
    }
  }
  CycleBasis basis;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (tree[e]) continue;
    Chain cycle = Chain::edge(e) + to_root[g.edge(e).src] - to_root[g.edge(e).dst];
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

// ---------------------------------------------------------- cover maps

Chain pushforward(const DoubleCover& c, const Chain& total_chain) {
  Chain out;
  for (const auto& [e, k] : total_chain.coefficients()) out.add(c.edge_image(e), k * c.edge_orientation(e));
  return out;
}

Chain pullback(const DoubleCover& c, const Chain& base_chain) {
  Chain out;
  for (const auto& [e, k] : base_chain.coefficients())
    for (auto f : c.edge_preimages(e)) out.add(f, k * c.edge_degree(f) * c.edge_orientation(f));
  return out;
}

Chain involution_push(const DoubleCover& c, const Chain& total_chain) {
  const Involution inv = involution(c);
  Chain out;
  for (const auto& [e, k] : total_chain.coefficients()) out.add(inv.edge[e], k * inv.edge_sign[e]);
  return out;
}

// -------------------------------------------------------------- pairing

LengthSymbols edge_symbols(const MetricGraph& g) {
  LengthSymbols out;
  out.reserve(g.num_edges());
  for (const auto& e : g.edges()) out.push_back({e.id, Rational(1)});
  return out;
}

LengthSymbols total_symbols(const DoubleCover& c) {
  LengthSymbols out;
  out.reserve(c.total().num_edges());
  for (std::size_t e = 0; e < c.total().num_edges(); ++e)
    out.push_back({c.base().edge(c.edge_image(e)).id, c.edge_degree(e) == 2 ? Rational(1, 2) : Rational(1)});
  return out;
}

Rational edge_length_pairing(const MetricGraph& g, const Chain& a, const Chain& b) {
  Rational sum(0);
  for (const auto& [e, k] : a.coefficients()) {
    const Integer other = b[e];
    if (other != 0) sum += Rational(k * other) * g.edge(e).length;
  }
  return sum;
}

MultiPoly edge_length_pairing(const LengthSymbols& symbols, const Chain& a, const Chain& b) {
  MultiPoly sum;
  for (const auto& [e, k] : a.coefficients()) {
    const Integer other = b[e];
    if (other == 0) continue;
    const auto& sym = symbols.at(e);
    sum.add_term(Rational(k * other) * sym.scale, Monomial::variable(sym.variable));
  }
  return sum;
}

Rational gram_det(const MetricGraph& g, const std::vector<Chain>& basis) {
  const auto n = basis.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = edge_length_pairing(g, basis[i], basis[j]);
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const auto n = m.size();
  if (n == 0) return MultiPoly(1);
  MultiPoly previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MultiPoly();
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      m[i][k] = MultiPoly();
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly gram_det(const LengthSymbols& symbols, const std::vector<Chain>& basis) {
  const auto n = basis.size();
  std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = edge_length_pairing(symbols, basis[i], basis[j]);
  return determinant(std::move(m));
}

// ------------------------------------------------------------ matrices

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r].at(c);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InapplicableError("matrix dimension mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InapplicableError("matrix dimension mismatch in sum");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + Integer(-1) * b; }

IntMatrix operator*(const Integer& k, const IntMatrix& a) {
  IntMatrix out = a;
  for (auto& x : out.data_) x *= k;
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix matrix_of(const std::function<Chain(const Chain&)>& map, const CycleBasis& domain,
                    const CycleBasis& codomain) {
  std::vector<Chain> images;
  images.reserve(domain.size());
  for (const auto& cycle : domain.cycles) images.push_back(map(cycle));

  std::vector<std::size_t> edges;
  for (const std::vector<Chain>* chains : {&codomain.cycles, static_cast<const std::vector<Chain>*>(&images)})
    for (const auto& ch : *chains)
      for (const auto& [e, k] : ch.coefficients()) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const auto k = codomain.size();
  const auto width = k + images.size();
  std::vector<std::vector<Rational>> a(edges.size(), std::vector<Rational>(width));
  for (std::size_t r = 0; r < edges.size(); ++r) {
    for (std::size_t j = 0; j < k; ++j) a[r][j] = codomain.cycles[j][edges[r]];
    for (std::size_t j = 0; j < images.size(); ++j) a[r][k + j] = images[j][edges[r]];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(k);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) throw ConsistencyError("codomain basis is linearly dependent");
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < width; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_row[col] = row++;
  }
  IntMatrix out(k, images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (std::size_t i = row; i < a.size(); ++i)
      if (a[i][k + j] != 0) throw ConsistencyError("image not in the span of the codomain basis");
    for (std::size_t col = 0; col < k; ++col) {
      const Rational& x = a[pivot_row[col]][k + j];
      if (x.get_den() != 1) throw ConsistencyError("non-integral coordinate " + to_string(x));
      out(col, j) = x.get_num();
    }
  }
  return out;
}

HomologyMaps homology_maps(const DoubleCover& c) {
  HomologyMaps maps;
  maps.base_basis = cycle_basis(c.base());
  maps.total_basis = cycle_basis(c.total());
  maps.push = matrix_of([&](const Chain& ch) { return pushforward(c, ch); }, maps.total_basis, maps.base_basis);
  maps.pull = matrix_of([&](const Chain& ch) { return pullback(c, ch); }, maps.base_basis, maps.total_basis);
  maps.inv =
      matrix_of([&](const Chain& ch) { return involution_push(c, ch); }, maps.total_basis, maps.total_basis);
  return maps;
}

std::size_t rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && a[p][col] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[row][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  return row;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

/// row[target] -= q * row[source]
void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) -= q * m(source, c);
}

/// col[target] -= q * col[source]
void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) -= q * m(r, source);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, col) != 0 && (best == h.rows() || abs(h(i, col)) < abs(h(best, col)))) best = i;
      if (best == h.rows()) break;
      swap_rows(h, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        add_row_multiple(h, i, r, Integer(h(i, col) / h(r, col)));
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0)
      for (std::size_t c = 0; c < h.cols(); ++c) h(r, c) = -h(r, c);
    for (std::size_t i = 0; i < r; ++i) add_row_multiple(h, i, r, floor_div(h(i, col), h(r, col)));
    ++r;
  }
  IntMatrix out(r, h.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < h.cols(); ++c) out(i, c) = h(i, c);
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const auto n = m.cols();
  IntMatrix a = m;
  IntMatrix v = IntMatrix::identity(n);
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.rows() && c < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = c; j < n; ++j)
        if (a(i, j) != 0 && (best == n || abs(a(i, j)) < abs(a(i, best)))) best = j;
      if (best == n) break;
      swap_cols(a, c, best);
      swap_cols(v, c, best);
      bool done = true;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (a(i, j) == 0) continue;
        const Integer q = a(i, j) / a(i, c);
        add_col_multiple(a, j, c, q);
        add_col_multiple(v, j, c, q);
        if (a(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (a(i, c) != 0) ++c;
  }
  IntMatrix kernel_rows(n - c, n);
  for (std::size_t k = c; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) kernel_rows(k - c, r) = v(r, k);
  return hermite_normal_form(kernel_rows).transpose();
}

std::vector<Integer> SnfResult::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SnfResult snf(const IntMatrix& m) {
  SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& a = res.D;
  const auto rows = a.rows();
  const auto cols = a.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return res;
      swap_rows(a, t, pr);
      swap_rows(res.U, t, pr);
      swap_cols(a, t, pc);
      swap_cols(res.V, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);
        add_row_multiple(a, i, t, q);
        add_row_multiple(res.U, i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        add_col_multiple(a, j, t, q);
        add_col_multiple(res.V, j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t offending = rows;
      for (std::size_t i = t + 1; i < rows && offending == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (offending == rows) break;
      add_row_multiple(a, t, offending, Integer(-1));
      add_row_multiple(res.U, t, offending, Integer(-1));
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < rows; ++j) res.U(t, j) = -res.U(t, j);
    }
  }
  return res;
}

IntMatrix induced_polarization(const HomologyMaps& maps) {
  const IntMatrix prym_lattice = kernel_basis(maps.push);
  const IntMatrix annihilator = kernel_basis(maps.pull.transpose());
  return annihilator.transpose() * prym_lattice;
}

std::vector<Chain> chains_from_coordinates(const CycleBasis& basis, const IntMatrix& coords) {
  if (coords.rows() != basis.size()) throw InapplicableError("coordinate matrix does not match basis size");
  std::vector<Chain> out(coords.cols());
  for (std::size_t j = 0; j < coords.cols(); ++j)
    for (std::size_t i = 0; i < coords.rows(); ++i)
      if (coords(i, j) != 0) out[j] += coords(i, j) * basis.cycles[i];
  return out;
}

}  // namespace prym
