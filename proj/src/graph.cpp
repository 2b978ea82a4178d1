#include "prym/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detail/union_find.hpp"
#include "prym/error.hpp"

namespace prym {

MetricGraph::MetricGraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw ValidationError("duplicate vertex id '" + *std::adjacent_find(vertices.begin(), vertices.end()) + "'");
  vertices_ = std::move(vertices);
  for (std::size_t v = 0; v < vertices_.size(); ++v) vertex_lookup_.emplace(vertices_[v], v);

  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  edges_.reserve(edges.size());
  for (auto& spec : edges) {
    if (!edge_lookup_.emplace(spec.id, edges_.size()).second)
      throw ValidationError("duplicate edge id '" + spec.id + "'");
    if (spec.length <= 0)
      throw ValidationError("edge '" + spec.id + "' has non-positive length " + to_string(spec.length));
    auto src = find_vertex(spec.src);
    auto dst = find_vertex(spec.dst);
    if (!src || !dst)
      throw ValidationError("edge '" + spec.id + "' has unknown endpoint '" + (src ? spec.dst : spec.src) + "'");
    edges_.push_back(Edge{std::move(spec.id), *src, *dst, std::move(spec.length)});
  }
}

std::optional<std::size_t> MetricGraph::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(std::string(id));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> MetricGraph::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(std::string(id));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t MetricGraph::vertex_index(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw ParseError("unknown vertex id '" + std::string(id) + "'");
}

std::size_t MetricGraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw ParseError("unknown edge id '" + std::string(id) + "'");
}

std::string MetricGraph::half_edge_id(HalfEdge h) const {
  return edges_.at(edge_of(h)).id + (end_of(h) == End::Source ? ":s" : ":t");
}

std::vector<std::vector<HalfEdge>> MetricGraph::half_edges_by_vertex() const {
  std::vector<std::vector<HalfEdge>> out(vertices_.size());
  for (HalfEdge h = 0; h < num_half_edges(); ++h) out[root(h)].push_back(h);
  return out;
}

std::vector<EdgeSpec> MetricGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({e.id, vertices_[e.src], vertices_[e.dst], e.length});
  return out;
}

EdgeSet::EdgeSet(std::vector<std::size_t> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

EdgeSet EdgeSet::from_ids(const MetricGraph& g, const std::vector<std::string>& ids) {
  std::vector<std::size_t> idx;
  idx.reserve(ids.size());
  for (const auto& id : ids) idx.push_back(g.edge_index(id));
  return EdgeSet(std::move(idx));
}

bool EdgeSet::contains(std::size_t e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

std::vector<std::string> EdgeSet::ids(const MetricGraph& g) const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (auto e : edges_) out.push_back(g.edge(e).id);
  return out;
}

std::vector<bool> EdgeSet::mask(std::size_t num_edges) const {
  std::vector<bool> m(num_edges, false);
  for (auto e : edges_) m.at(e) = true;
  return m;
}

Components connected_components(const MetricGraph& g, const std::vector<bool>& keep) {
  detail::UnionFind uf(g.num_vertices());
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (keep[e]) uf.unite(g.edge(e).src, g.edge(e).dst);

  Components c;
  c.of_vertex.assign(g.num_vertices(), Components::npos);
  std::vector<std::size_t> label_of_root(g.num_vertices(), Components::npos);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto r = uf.find(v);
    if (label_of_root[r] == Components::npos) label_of_root[r] = c.count++;
    c.of_vertex[v] = label_of_root[r];
  }
  c.of_edge.assign(g.num_edges(), Components::npos);
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (keep[e]) c.of_edge[e] = c.of_vertex[g.edge(e).src];
  return c;
}

Components connected_components(const MetricGraph& g) {
  return connected_components(g, std::vector<bool>(g.num_edges(), true));
}

bool is_connected(const MetricGraph& g) { return connected_components(g).count <= 1; }

long genus(const MetricGraph& g) {
  return static_cast<long>(g.num_edges()) - static_cast<long>(g.num_vertices()) +
         static_cast<long>(connected_components(g).count);
}

namespace {

class ComplementSearch {
 public:
  ComplementSearch(const MetricGraph& g, const std::function<void(const EdgeSet&)>& visit)
      : g_(g), visit_(visit), keep_(g.num_edges(), true), target_(static_cast<std::size_t>(genus(g))) {}

  void run() { descend(0); }

 private:
  bool still_connected() const { return connected_components(g_, keep_).count <= 1; }

  void descend(std::size_t next) {
    if (chosen_.size() == target_) {
      visit_(EdgeSet(chosen_));
      return;
    }
    if (g_.num_edges() - next < target_ - chosen_.size()) return;
    // Removing `next` first yields lexicographic order of the emitted sets.
    keep_[next] = false;
    if (still_connected()) {
      chosen_.push_back(next);
      descend(next + 1);
      chosen_.pop_back();
    }
    keep_[next] = true;
    descend(next + 1);
  }

  const MetricGraph& g_;
  const std::function<void(const EdgeSet&)>& visit_;
  std::vector<bool> keep_;
  std::vector<std::size_t> chosen_;
  std::size_t target_;
};

}  // namespace

void for_each_spanning_tree_complement(const MetricGraph& g,
                                       const std::function<void(const EdgeSet&)>& visit) {
  if (!is_connected(g)) throw ValidationError("graph not connected");
  ComplementSearch(g, visit).run();
}

std::vector<EdgeSet> spanning_tree_complements(const MetricGraph& g) {
  std::vector<EdgeSet> out;
  for_each_spanning_tree_complement(g, [&](const EdgeSet& c) { out.push_back(c); });
  return out;
}

std::vector<bool> canonical_spanning_tree(const MetricGraph& g) {
  if (!is_connected(g)) throw ValidationError("graph not connected");
  detail::UnionFind uf(g.num_vertices());
  std::vector<bool> tree(g.num_edges(), false);
  for (std::size_t e = 0; e < g.num_edges(); ++e) tree[e] = uf.unite(g.edge(e).src, g.edge(e).dst);
  return tree;
}

Contraction contract_edges(const MetricGraph& g, const EdgeSet& s) {
  for (auto e : s)
    if (e >= g.num_edges()) throw ParseError("edge index out of range in contraction");
  const auto in_s = s.mask(g.num_edges());
  const Components comp = connected_components(g, in_s);

  // Each class is named by its smallest vertex id, which is the first
  // vertex encountered in index order.
  std::vector<std::size_t> representative(comp.count, Components::npos);
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (representative[comp.of_vertex[v]] == Components::npos) representative[comp.of_vertex[v]] = v;

  std::vector<std::string> vertices;
  vertices.reserve(comp.count);
  for (auto v : representative) vertices.push_back(g.vertex_id(v));

  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (in_s[e]) continue;
    const auto& edge = g.edge(e);
    edges.push_back({edge.id, g.vertex_id(representative[comp.of_vertex[edge.src]]),
                     g.vertex_id(representative[comp.of_vertex[edge.dst]]), edge.length});
  }

  Contraction out;
  out.graph = MetricGraph(std::move(vertices), std::move(edges));
  out.vertex_map.resize(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    out.vertex_map[v] = out.graph.vertex_index(g.vertex_id(representative[comp.of_vertex[v]]));
  out.edge_map.assign(g.num_edges(), Contraction::npos);
  for (std::size_t e = 0; e < g.num_edges(); ++e)
    if (!in_s[e]) out.edge_map[e] = out.graph.edge_index(g.edge(e).id);
  return out;
}

MetricGraph delete_edges(const MetricGraph& g, const EdgeSet& s) {
  for (auto e : s)
    if (e >= g.num_edges()) throw ParseError("edge index out of range in deletion");
  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (s.contains(e)) continue;
    const auto& edge = g.edge(e);
    edges.push_back({edge.id, g.vertex_id(edge.src), g.vertex_id(edge.dst), edge.length});
  }
  return MetricGraph(g.vertex_ids(), std::move(edges));
}

bool is_bridge(const MetricGraph& g, std::size_t e) {
  std::vector<bool> keep(g.num_edges(), true);
  const auto before = connected_components(g, keep).count;
  keep.at(e) = false;
  return connected_components(g, keep).count > before;
}

}  // namespace prym
