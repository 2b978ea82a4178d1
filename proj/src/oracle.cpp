#include "prym/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "prym/error.hpp"
#include "prym/homology.hpp"

namespace prym::oracle {

namespace {

using Adjacency = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;  // (edge, neighbour)

Adjacency adjacency(const MetricGraph& g) {
  Adjacency adj(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    adj[g.edge(e).src].emplace_back(e, g.edge(e).dst);
    adj[g.edge(e).dst].emplace_back(e, g.edge(e).src);
  }
  return adj;
}

/// Labels vertices reachable from `start` through edges with usable[e].
void flood(const Adjacency& adj, const std::vector<bool>& usable, std::size_t start, std::size_t label,
           std::vector<std::size_t>& out) {
  std::vector<std::size_t> stack{start};
  out[start] = label;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (const auto& [e, w] : adj[u]) {
      if (!usable[e] || out[w] != static_cast<std::size_t>(-1)) continue;
      out[w] = label;
      stack.push_back(w);
    }
  }
}

std::size_t count_components(const Adjacency& adj, const std::vector<bool>& usable, std::vector<std::size_t>& label) {
  label.assign(adj.size(), static_cast<std::size_t>(-1));
  std::size_t n = 0;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (label[v] == static_cast<std::size_t>(-1)) flood(adj, usable, v, n++, label);
  return n;
}

Rational laplacian_minor(std::vector<std::vector<Rational>> m) {
  const auto n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      if (f == 0) continue;
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

MetricGraph with_lengths(const MetricGraph& g, const std::vector<Rational>& lengths) {
  auto specs = g.edge_specs();
  for (std::size_t e = 0; e < specs.size(); ++e) specs[e].length = lengths[e];
  return MetricGraph(g.vertex_ids(), std::move(specs));
}

}  // namespace

Rational matrix_tree_value(const MetricGraph& g, const std::map<std::string, Rational>& lengths) {
  const auto adj = adjacency(g);
  std::vector<std::size_t> label;
  if (g.num_vertices() == 0 || count_components(adj, std::vector<bool>(g.num_edges(), true), label) != 1)
    throw ValidationError("graph not connected");
  const auto n = g.num_vertices();
  std::vector<std::vector<Rational>> lap(n, std::vector<Rational>(n));
  Rational product(1);
  for (const auto& e : g.edges()) {
    auto it = lengths.find(e.id);
    if (it == lengths.end()) throw ValidationError("no length for edge '" + e.id + "'");
    if (it->second <= 0) throw ValidationError("length of '" + e.id + "' must be positive");
    product *= it->second;
    if (e.is_loop()) continue;
    const Rational w = 1 / it->second;
    lap[e.src][e.src] += w;
    lap[e.dst][e.dst] += w;
    lap[e.src][e.dst] -= w;
    lap[e.dst][e.src] -= w;
  }
  std::vector<std::vector<Rational>> reduced(n - 1, std::vector<Rational>(n - 1));
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) reduced[i - 1][j - 1] = lap[i][j];
  return product * laplacian_minor(std::move(reduced));
}

std::vector<Ogod> brute_ogods(const DoubleCover& c) {
  const MetricGraph& base = c.base();
  const MetricGraph& total = c.total();
  std::vector<std::size_t> pool;
  for (std::size_t e = 0; e < base.num_edges(); ++e)
    if (c.edge_preimages(e).size() == 2) pool.push_back(e);
  if (pool.size() > 20) throw InapplicableError("brute-force ogod scan limited to 20 undilated edges");

  const auto base_adj = adjacency(base);
  const auto total_adj = adjacency(total);
  std::vector<std::size_t> label;
  const auto base_comps = count_components(base_adj, std::vector<bool>(base.num_edges(), true), label);
  const auto total_comps = count_components(total_adj, std::vector<bool>(total.num_edges(), true), label);
  const long h = (static_cast<long>(total.num_edges()) - static_cast<long>(total.num_vertices()) +
                  static_cast<long>(total_comps)) -
                 (static_cast<long>(base.num_edges()) - static_cast<long>(base.num_vertices()) +
                  static_cast<long>(base_comps));

  std::vector<Ogod> out;
  if (h < 0 || static_cast<std::size_t>(h) > pool.size()) return out;
  const std::uint32_t limit = 1u << pool.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != h) continue;
    std::vector<bool> base_keep(base.num_edges(), true);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) {
        base_keep[pool[i]] = false;
        chosen.push_back(pool[i]);
      }
    std::vector<bool> total_keep(total.num_edges());
    for (std::size_t e = 0; e < total.num_edges(); ++e) total_keep[e] = base_keep[c.edge_image(e)];

    std::vector<std::size_t> base_label, total_label;
    const auto k = count_components(base_adj, base_keep, base_label);
    count_components(total_adj, total_keep, total_label);
    // Every total vertex over a component must share one total label.
    std::vector<std::size_t> seen(k, static_cast<std::size_t>(-1));
    bool ok = true;
    for (std::size_t v = 0; v < total.num_vertices() && ok; ++v) {
      auto& s = seen[base_label[c.vertex_image(v)]];
      if (s == static_cast<std::size_t>(-1))
        s = total_label[v];
      else
        ok = s == total_label[v];
    }
    if (ok) out.push_back({EdgeSet(chosen), static_cast<long>(k)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report numeric_gram_check(const DoubleCover& c, int trials, std::uint64_t seed) {
  require_prym_ready(c);
  const MetricGraph& base = c.base();
  const auto stats = dilation_stats(c);
  const MultiPoly pr = prym_polynomial(c);
  const MultiPoly combinatorial = prym_volume_combinatorial(c);
  const CycleBasis base_basis = cycle_basis(base);
  const CycleBasis total_basis = cycle_basis(c.total());
  std::vector<Chain> kernel_chains;
  if (!stats.is_free()) {
    const IntMatrix push =
        matrix_of([&](const Chain& ch) { return pushforward(c, ch); }, total_basis, base_basis);
    kernel_chains = chains_from_coordinates(total_basis, kernel_basis(push));
  }

  std::mt19937_64 rng(seed);
  Report report;
  for (int t = 0; t < trials; ++t) {
    std::map<std::string, Rational> assignment;
    std::vector<Rational> base_lengths(base.num_edges());
    for (std::size_t e = 0; e < base.num_edges(); ++e) {
      const auto p = static_cast<long>(rng() % 9) + 1;
      const auto q = static_cast<long>(rng() % 4) + 1;
      base_lengths[e] = Rational(p, q);
      base_lengths[e].canonicalize();
      assignment[base.edge(e).id] = base_lengths[e];
    }
    std::vector<Rational> total_lengths(c.total().num_edges());
    std::map<std::string, Rational> total_assignment;
    for (std::size_t e = 0; e < total_lengths.size(); ++e) {
      total_lengths[e] = base_lengths[c.edge_image(e)] / c.edge_degree(e);
      total_assignment[c.total().edge(e).id] = total_lengths[e];
    }
    const MetricGraph metric_base = with_lengths(base, base_lengths);
    const MetricGraph metric_total = with_lengths(c.total(), total_lengths);

    const Rational jb = matrix_tree_value(base, assignment);
    const Rational jt = matrix_tree_value(c.total(), total_assignment);
    const Rational factor = stats.is_free() ? Rational(2) : pow2(1 - stats.m_d + stats.n_d - 2 * stats.d);
    const Rational volume = combinatorial.eval(assignment);
    const std::string tag = "trial " + std::to_string(t) + ": ";
    report.expect("numeric", tag + "thm-a", jt == factor * pr.eval(assignment) * jb,
                  to_string(jt) + " vs " + to_string(factor * pr.eval(assignment) * jb));

    const Rational gram_ratio = gram_det(metric_total, total_basis.cycles) / gram_det(metric_base, base_basis.cycles);
    const Rational homology =
        gram_ratio * (stats.is_free() ? Rational(1, 2) : pow2(stats.m_d - stats.n_d + stats.d));
    report.expect("numeric", tag + "thm-b", homology == volume, to_string(homology) + " vs " + to_string(volume));

    if (stats.is_free()) {
      report.add("numeric", tag + "main (kernel)", Status::Skip, "free cover");
    } else {
      const Rational kernel = pow2(-*stats.A) * gram_det(metric_total, kernel_chains);
      report.expect("numeric", tag + "main (kernel)", kernel == volume,
                    to_string(kernel) + " vs " + to_string(volume));
    }
  }
  return report;
}

}  // namespace prym::oracle
