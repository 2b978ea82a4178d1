#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "prym/cover.hpp"
#include "prym/generator.hpp"
#include "prym/graph.hpp"
#include "prym/polynomial.hpp"

namespace prym::test {

struct E {
  std::string id, src, dst, length = "1";
};

inline MetricGraph graph(std::vector<std::string> vertices, const std::vector<E>& edges) {
  std::vector<EdgeSpec> specs;
  for (const auto& e : edges) specs.push_back({e.id, e.src, e.dst, parse_rational(e.length)});
  return MetricGraph(std::move(vertices), std::move(specs));
}

inline MultiPoly poly(const std::string& s) { return MultiPoly::parse(s); }

inline MetricGraph circle(const std::string& length = "1") { return graph({"v"}, {{"e", "v", "v", length}}); }

inline MetricGraph theta() {
  return graph({"a", "b"}, {{"e1", "a", "b"}, {"e2", "a", "b"}, {"e3", "a", "b"}});
}

inline MetricGraph k4() {
  return graph({"a", "b", "c", "d"}, {{"e1", "a", "b"},
                                      {"e2", "a", "c"},
                                      {"e3", "a", "d"},
                                      {"e4", "b", "c"},
                                      {"e5", "b", "d"},
                                      {"e6", "c", "d"}});
}

inline MetricGraph fig1_base() {
  return graph({"v1", "v2", "v3", "v4", "v5"}, {{"e1", "v1", "v1"},
                                                {"e2", "v1", "v2"},
                                                {"f1", "v2", "v3"},
                                                {"f2", "v2", "v3"},
                                                {"e3", "v3", "v4"},
                                                {"e4", "v4", "v5"},
                                                {"e5", "v5", "v5"}});
}

inline VoltageSpec fig1_spec() { return {fig1_base(), {"v2", "v3", "v4"}, {"f1", "f2"}, {{"e1", -1}, {"e5", -1}}}; }
inline DoubleCover fig1() { return build_from_voltage(fig1_spec()); }

inline MetricGraph disc_base() { return graph({"u", "w"}, {{"e", "u", "w"}, {"f", "w", "w"}}); }
inline DoubleCover disc_left() { return build_from_voltage({disc_base(), {"u"}, {}, {{"f", -1}}}); }

/// One dilated vertex carrying an undilated loop.
inline DoubleCover dilated_circle() { return build_from_voltage({circle(), {"v"}, {}, {}}); }

inline DoubleCover odd_circle() { return build_from_voltage({circle(), {}, {}, {{"e", -1}}}); }

inline DoubleCover theta_free() { return build_from_voltage({theta(), {}, {}, {{"e1", 1}, {"e2", 1}, {"e3", -1}}}); }

/// Every vertex and edge dilated: the total graph is the base with halved
/// lengths.
inline DoubleCover fully_dilated(const MetricGraph& g) {
  VoltageSpec spec{g, {}, {}, {}};
  for (const auto& v : g.vertex_ids()) spec.dilated_vertices.insert(v);
  for (const auto& e : g.edges()) spec.dilated_edges.insert(e.id);
  return build_from_voltage(spec);
}

/// Every vertex dilated, no edge dilated.
inline DoubleCover all_vertices_dilated(const MetricGraph& g) {
  VoltageSpec spec{g, {}, {}, {}};
  for (const auto& v : g.vertex_ids()) spec.dilated_vertices.insert(v);
  return build_from_voltage(spec);
}

/// Replaces edge `id` by two edges id_a (src -> mid) and id_b (mid -> dst)
/// of half the length each. The midpoint is dilated iff the edge is; the
/// first half carries the voltage.
inline VoltageSpec subdivide(const VoltageSpec& spec, const std::string& id) {
  const MetricGraph& g = spec.base;
  const Edge& e = g.edge(g.edge_index(id));
  std::string mid = "m_" + id;
  while (g.find_vertex(mid)) mid += "_";
  std::vector<std::string> vertices = g.vertex_ids();
  vertices.push_back(mid);
  std::vector<EdgeSpec> edges;
  for (const auto& s : g.edge_specs())
    if (s.id != id) edges.push_back(s);
  const std::string a = id + "_a", b = id + "_b";
  edges.push_back({a, g.vertex_id(e.src), mid, e.length / 2});
  edges.push_back({b, mid, g.vertex_id(e.dst), e.length / 2});

  VoltageSpec out{MetricGraph(std::move(vertices), std::move(edges)), spec.dilated_vertices, spec.dilated_edges, {}};
  const bool dilated = spec.dilated_edges.count(id) > 0;
  if (dilated) {
    out.dilated_edges.erase(id);
    out.dilated_edges.insert({a, b});
    out.dilated_vertices.insert(mid);
  }
  for (const auto& [edge, sign] : spec.signs)
    if (edge != id) out.signs[edge] = sign;
  if (!dilated) {
    const bool src_dilated = spec.dilated_vertices.count(g.vertex_id(e.src)) > 0;
    const bool dst_dilated = spec.dilated_vertices.count(g.vertex_id(e.dst)) > 0;
    const int sign = spec.signs.count(id) ? spec.signs.at(id) : 1;
    if (!src_dilated) out.signs[a] = sign;
    if (!dst_dilated) out.signs[b] = src_dilated ? sign : 1;
  }
  return out;
}

/// The seeded 200-cover campaign: free, edge-free and general covers in
/// turn, at most 5 vertices and 8 base edges.
inline std::vector<VoltageSpec> campaign_specs(int count = 200) {
  std::vector<VoltageSpec> out;
  const GenMode modes[] = {GenMode::Free, GenMode::EdgeFree, GenMode::General};
  for (int i = 0; i < count; ++i) {
    const GenMode mode = modes[i % 3];
    const int vertices = 1 + (i * 7) % 5;
    int lo = vertices - 1;
    if (mode == GenMode::Free) lo = vertices;
    if (mode == GenMode::General) lo = std::max(lo, 1);
    const int edges = lo + (i * 13) % (8 - lo + 1);
    out.push_back(generate_cover(vertices, edges, mode, 1000 + static_cast<std::uint64_t>(i)));
  }
  return out;
}

/// Brute-force connectivity used by test oracles: depth-first search over
/// the edges with keep[e].
inline std::size_t component_count(const MetricGraph& g, const std::vector<bool>& keep) {
  std::vector<int> seen(g.num_vertices(), 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < g.num_edges(); ++e) {
        if (!keep[e]) continue;
        const Edge& ed = g.edge(e);
        for (auto [x, y] : {std::pair{ed.src, ed.dst}, std::pair{ed.dst, ed.src}})
          if (x == u && !seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
      }
    }
  }
  return count;
}

/// All k-subsets of edges whose removal keeps g connected, by exhaustive
/// bitmask scan.
inline std::vector<std::vector<std::string>> brute_tree_complements(const MetricGraph& g) {
  const auto m = g.num_edges();
  const long k = static_cast<long>(m) - static_cast<long>(g.num_vertices()) + 1;
  std::vector<std::vector<std::string>> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<bool> keep(m, true);
    std::vector<std::string> ids;
    for (std::size_t e = 0; e < m; ++e)
      if (mask & (1u << e)) {
        keep[e] = false;
        ids.push_back(g.edge(e).id);
      }
    if (component_count(g, keep) == 1) out.push_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prym::test
