#include "prym/generator.hpp"

#include "prym/error.hpp"

namespace prym {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

const char* to_string(GenMode m) {
  switch (m) {
    case GenMode::Free:
      return "free";
    case GenMode::EdgeFree:
      return "edge-free";
    case GenMode::General:
      return "general";
  }
  return "?";
}

GenMode parse_gen_mode(const std::string& name) {
  for (auto m : {GenMode::Free, GenMode::EdgeFree, GenMode::General})
    if (name == to_string(m)) return m;
  throw ParseError("unknown mode '" + name + "'");
}

MetricGraph random_connected_graph(int vertices, int edges, std::mt19937_64& rng) {
  if (vertices < 1 || edges < vertices - 1) throw InfeasibleError("need at least vertices - 1 edges");
  std::vector<std::string> ids;
  for (int v = 1; v <= vertices; ++v) ids.push_back("v" + std::to_string(v));
  std::vector<EdgeSpec> specs;
  auto length = [&] {
    Rational l(static_cast<long>(draw(rng, 5)) + 1, static_cast<long>(draw(rng, 3)) + 1);
    l.canonicalize();
    return l;
  };
  for (int v = 1; v < vertices; ++v) {
    const auto parent = draw(rng, static_cast<std::size_t>(v));
    specs.push_back({"", ids[parent], ids[v], length()});
  }
  while (static_cast<int>(specs.size()) < edges) {
    const auto a = draw(rng, ids.size());
    const auto b = draw(rng, ids.size());
    specs.push_back({"", ids[a], ids[b], length()});
  }
  // Shuffle so that tree edges are not always the first ids.
  for (std::size_t i = specs.size(); i > 1; --i) std::swap(specs[i - 1], specs[draw(rng, i)]);
  for (std::size_t i = 0; i < specs.size(); ++i) specs[i].id = "e" + std::to_string(i + 1);
  return MetricGraph(std::move(ids), std::move(specs));
}

VoltageSpec generate_cover(int vertices, int edges, GenMode mode, std::uint64_t seed) {
  if (vertices < 1 || vertices > 10) throw InfeasibleError("vertices must be between 1 and 10");
  if (edges < 0 || edges > 14) throw InfeasibleError("edges must be between 0 and 14");
  if (edges < vertices - 1) throw InfeasibleError("a connected base needs at least vertices - 1 edges");
  if (mode == GenMode::Free && edges < vertices) throw InfeasibleError("a connected free cover needs a cycle");
  if (mode == GenMode::General && edges < 1) throw InfeasibleError("a dilated edge needs an edge");

  std::mt19937_64 rng(seed);
  VoltageSpec spec;
  spec.base = random_connected_graph(vertices, edges, rng);
  const MetricGraph& g = spec.base;

  if (mode == GenMode::General) {
    const Edge& first = g.edge(draw(rng, g.num_edges()));
    spec.dilated_edges.insert(first.id);
    spec.dilated_vertices.insert(g.vertex_id(first.src));
    spec.dilated_vertices.insert(g.vertex_id(first.dst));
  }
  if (mode != GenMode::Free) {
    for (const auto& v : g.vertex_ids())
      if (draw(rng, 3) == 0) spec.dilated_vertices.insert(v);
    if (spec.dilated_vertices.empty()) spec.dilated_vertices.insert(g.vertex_id(draw(rng, g.num_vertices())));
  }
  if (mode == GenMode::General) {
    for (const auto& e : g.edges())
      if (spec.dilated_vertices.count(g.vertex_id(e.src)) && spec.dilated_vertices.count(g.vertex_id(e.dst)) &&
          draw(rng, 2) == 0)
        spec.dilated_edges.insert(e.id);
  }
  for (const auto& e : g.edges())
    if (!spec.dilated_vertices.count(g.vertex_id(e.src)) && !spec.dilated_vertices.count(g.vertex_id(e.dst)))
      spec.signs[e.id] = draw(rng, 2) == 0 ? 1 : -1;

  if (mode == GenMode::Free && !is_connected(build_from_voltage(spec).total())) {
    // Every cycle is even; making one non-tree edge odd connects the cover.
    const auto tree = canonical_spanning_tree(g);
    for (std::size_t e = 0; e < g.num_edges(); ++e)
      if (!tree[e]) {
        spec.signs[g.edge(e).id] *= -1;
        break;
      }
  }
  return spec;
}

}  // namespace prym
