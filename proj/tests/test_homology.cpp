#include <doctest.h>

#include "prym/error.hpp"
#include "prym/homology.hpp"
#include "support.hpp"

using namespace prym;

namespace {

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && m(r, c) != 0) return false;
  return true;
}

Integer det_int(const IntMatrix& m) {
  std::vector<std::vector<MultiPoly>> rows(m.rows(), std::vector<MultiPoly>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = MultiPoly(Rational(m(r, c)));
  const MultiPoly d = determinant(rows);
  return d.is_zero() ? Integer(0) : Integer(d.coefficient(Monomial()).get_num());
}

void check_snf(const IntMatrix& m) {
  const auto s = snf(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(is_diagonal(s.D));
  CHECK(abs(det_int(s.U)) == 1);
  CHECK(abs(det_int(s.V)) == 1);
  const auto f = s.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
  CHECK(f.size() == rank(m));
}

}  // namespace

TEST_CASE("chains and boundary") {
  const auto g = test::theta();
  const Chain c = Chain::edge(0) - Chain::edge(1);
  CHECK(is_cycle(g, c));
  CHECK_FALSE(is_cycle(g, Chain::edge(0)));
  CHECK(boundary(g, Chain::edge(0)) == std::vector<Integer>{-1, 1});
  CHECK((c - c).is_zero());
  CHECK((Integer(2) * c)[0] == 2);
  CHECK(c[2] == 0);
  CHECK_FALSE(c.to_string(g).empty());
}

TEST_CASE("fundamental cycles") {
  for (const auto& g : {test::theta(), test::k4(), test::fig1_base(), test::fig1().total()}) {
    const auto basis = cycle_basis(g);
    CHECK(static_cast<long>(basis.size()) == genus(g));
    const auto tree = canonical_spanning_tree(g);
    std::size_t i = 0;
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (tree[e]) continue;
      REQUIRE(i < basis.size());
      CHECK(is_cycle(g, basis.cycles[i]));
      CHECK(basis.cycles[i][e] == 1);
      for (std::size_t f = 0; f < g.num_edges(); ++f)
        if (!tree[f] && f != e) CHECK(basis.cycles[i][f] == 0);
      ++i;
    }
  }
  const auto two = test::graph({"a", "b"}, {{"x", "a", "a"}, {"y", "b", "b"}});
  CHECK_THROWS_AS(cycle_basis(two), ValidationError);
}

TEST_CASE("gram determinants") {
  CHECK(gram_det(test::circle("3"), cycle_basis(test::circle("3")).cycles) == 3);
  CHECK(gram_det(test::theta(), cycle_basis(test::theta()).cycles) == 3);
  CHECK(gram_det(test::k4(), cycle_basis(test::k4()).cycles) == 16);
  CHECK(gram_det(test::theta(), {}) == 1);
  const auto g = test::theta();
  CHECK(gram_det(edge_symbols(g), cycle_basis(g).cycles) == test::poly("e1*e2 + e1*e3 + e2*e3"));

  // A unimodular change of basis leaves the determinant unchanged.
  const auto k = test::k4();
  auto basis = cycle_basis(k).cycles;
  basis[0] += basis[1];
  basis[2] -= Integer(3) * basis[1];
  CHECK(gram_det(edge_symbols(k), basis) == gram_det(edge_symbols(k), cycle_basis(k).cycles));
  // Doubling one cycle scales by four.
  basis[1] *= 2;
  CHECK(gram_det(k, basis) == 64);
}

TEST_CASE("symbolic determinant") {
  const auto x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
  CHECK(determinant({{x, y}, {y, x}}) == x * x - y * y);
  CHECK(determinant({}) == MultiPoly(1));
  // Cofactor expansion along the last column.
  CHECK(determinant({{x, y, MultiPoly(1)}, {y, x, MultiPoly(0)}, {MultiPoly(2), MultiPoly(2), MultiPoly(2)}}) ==
        MultiPoly(2) * (y - x) + MultiPoly(2) * (x * x - y * y));
}

TEST_CASE("total symbols halve dilated lifts") {
  const auto c = test::fig1();
  const auto symbols = total_symbols(c);
  const auto& t = c.total();
  CHECK(symbols[t.edge_index("f1")].variable == "f1");
  CHECK(symbols[t.edge_index("f1")].scale == Rational(1, 2));
  CHECK(symbols[t.edge_index("e3-")].variable == "e3");
  CHECK(symbols[t.edge_index("e3-")].scale == 1);
}

TEST_CASE("homology maps of the two-component cover") {
  const auto c = test::fig1();
  const auto m = homology_maps(c);
  const auto g = m.base_basis.size(), gt = m.total_basis.size();
  CHECK(g == 3);
  CHECK(gt == 6);
  CHECK(m.push * m.pull == Integer(2) * IntMatrix::identity(g));
  CHECK(m.pull * m.push == IntMatrix::identity(gt) + m.inv);
  CHECK(m.inv * m.inv == IntMatrix::identity(gt));
  CHECK(m.push * m.inv == m.push);
  CHECK(m.push.cols() - rank(m.push) == 3);

  // pi^* scales the pairing by two.
  const auto& t = c.total();
  for (const auto& a : m.base_basis.cycles)
    for (const auto& b : m.base_basis.cycles)
      CHECK(edge_length_pairing(t, pullback(c, a), pullback(c, b)) == 2 * edge_length_pairing(c.base(), a, b));
  // iota is an isometry.
  for (const auto& a : m.total_basis.cycles)
    for (const auto& b : m.total_basis.cycles)
      CHECK(edge_length_pairing(t, involution_push(c, a), involution_push(c, b)) == edge_length_pairing(t, a, b));

  const auto pol = snf(induced_polarization(m)).invariant_factors();
  CHECK(pol == std::vector<Integer>{1, 2, 2});
}

TEST_CASE("matrix of a map") {
  const auto g = test::theta();
  const auto basis = cycle_basis(g);
  const auto id = matrix_of([](const Chain& c) { return c; }, basis, basis);
  CHECK(id == IntMatrix::identity(2));
  CHECK_THROWS_AS(matrix_of([](const Chain&) { return Chain::edge(0); }, basis, basis), ConsistencyError);
  CHECK_THROWS_AS(matrix_of([](const Chain& c) { return Integer(2) * c; }, basis,
                            CycleBasis{{Integer(2) * basis.cycles[0], Integer(2) * basis.cycles[1] + basis.cycles[0]}}),
                  ConsistencyError);
}

TEST_CASE("normal forms") {
  const auto m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const auto s = snf(m);
  CHECK(s.D == IntMatrix::from_rows({{2, 0}, {0, 4}}));
  check_snf(m);
  check_snf(IntMatrix::from_rows({{0, 0}, {0, 0}}));
  check_snf(IntMatrix::from_rows({{4, 6, 0}, {6, 9, 3}}));
  check_snf(IntMatrix::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}));
  CHECK(snf(IntMatrix::from_rows({{2, 0}, {0, 3}})).invariant_factors() == std::vector<Integer>{1, 6});

  CHECK(hermite_normal_form(m) == IntMatrix::from_rows({{2, 0}, {0, 4}}));
  CHECK(hermite_normal_form(IntMatrix::from_rows({{1, 2}, {2, 4}})) == IntMatrix::from_rows({{1, 2}}));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix r(rows, cols);
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < cols; ++b) r(a, b) = static_cast<long>(rng() % 13) - 6;
    check_snf(r);
    const auto k = kernel_basis(r);
    CHECK((r * k).is_zero());
    CHECK(k.cols() == cols - rank(r));
    // Saturated: a Z-basis of the kernel has trivial invariant factors.
    for (const auto& f : snf(k).invariant_factors()) CHECK(f == 1);
    CHECK(kernel_basis(r) == k);
  }
}

TEST_CASE("kernel basis") {
  const auto k = kernel_basis(IntMatrix::from_rows({{2, 4, 6}}));
  CHECK(k.rows() == 3);
  CHECK(k.cols() == 2);
  CHECK((IntMatrix::from_rows({{2, 4, 6}}) * k).is_zero());
  CHECK(kernel_basis(IntMatrix::identity(2)).cols() == 0);
}

TEST_CASE("polarization type on the campaign") {
  int checked = 0;
  for (const auto& spec : test::campaign_specs(45)) {
    const auto c = build_from_voltage(spec);
    const auto s = dilation_stats(c);
    if (!s.A) continue;
    const auto f = snf(induced_polarization(homology_maps(c))).invariant_factors();
    std::vector<Integer> expected(static_cast<std::size_t>(*s.B), 1);
    expected.insert(expected.end(), static_cast<std::size_t>(*s.A), 2);
    CHECK(f == expected);
    ++checked;
  }
  CHECK(checked == 30);
}
