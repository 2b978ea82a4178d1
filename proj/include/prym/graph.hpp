#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "prym/rational.hpp"

namespace prym {

/// One end of an edge. Every edge owns exactly two half-edges; the source
/// half-edge has index 2*edge and the target 2*edge+1, so the pairing
/// involution is `h ^ 1` and has no fixed points.
enum class End : unsigned char { Source = 0, Target = 1 };

using HalfEdge = std::size_t;

constexpr HalfEdge half_edge_of(std::size_t edge, End end) {
  return 2 * edge + static_cast<std::size_t>(end);
}
constexpr std::size_t edge_of(HalfEdge h) { return h / 2; }
constexpr End end_of(HalfEdge h) { return (h & 1u) ? End::Target : End::Source; }
constexpr HalfEdge paired(HalfEdge h) { return h ^ 1u; }

struct Edge {
  std::string id;
  std::size_t src = 0;
  std::size_t dst = 0;
  Rational length;

  bool is_loop() const { return src == dst; }
};

/// Input record for building a graph by ids.
struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
  Rational length;
};

/// Finite multigraph with loops and positive rational edge lengths.
///
/// Vertices and edges are stored sorted by id, so indices follow the
/// canonical (lexicographic) order. The orientation given at construction
/// (src -> dst) is fixed for the lifetime of the value.
class MetricGraph {
 public:
  MetricGraph() = default;

  /// Throws ValidationError on duplicate ids, unknown endpoints or
  /// non-positive lengths.
  MetricGraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_half_edges() const { return 2 * edges_.size(); }

  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  /// Like find_*, but throws ParseError naming the unknown id.
  std::size_t vertex_index(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;

  /// Vertex at which a half-edge is rooted.
  std::size_t root(HalfEdge h) const {
    const Edge& e = edges_[edge_of(h)];
    return end_of(h) == End::Source ? e.src : e.dst;
  }
  /// "e:s" / "e:t".
  std::string half_edge_id(HalfEdge h) const;

  /// Half-edges rooted at each vertex, in increasing half-edge order.
  std::vector<std::vector<HalfEdge>> half_edges_by_vertex() const;

  std::vector<EdgeSpec> edge_specs() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

/// Sorted, duplicate-free set of edge indices of some ambient graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<std::size_t> edges);

  static EdgeSet from_ids(const MetricGraph& g, const std::vector<std::string>& ids);

  const std::vector<std::size_t>& indices() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(std::size_t e) const;
  std::vector<std::string> ids(const MetricGraph& g) const;
  /// Membership mask of length g.num_edges().
  std::vector<bool> mask(std::size_t num_edges) const;

  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<std::size_t> edges_;
};

/// Connected components, numbered in order of their smallest vertex index.
struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> of_vertex;
  /// Components with no edges are singleton vertices; every kept edge lies
  /// in the component of its endpoints. Removed edges get npos.
  std::vector<std::size_t> of_edge;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

Components connected_components(const MetricGraph& g);
/// Components of the spanning subgraph that keeps only edges with
/// keep[e] == true.
Components connected_components(const MetricGraph& g, const std::vector<bool>& keep);

bool is_connected(const MetricGraph& g);

/// First Betti number #E - #V + #components. For connected graphs this is
/// the genus.
long genus(const MetricGraph& g);

/// Calls `visit` with every g-element edge set whose removal leaves a
/// spanning tree, in lexicographic order. Throws ValidationError if g is
/// disconnected.
void for_each_spanning_tree_complement(const MetricGraph& g,
                                       const std::function<void(const EdgeSet&)>& visit);
std::vector<EdgeSet> spanning_tree_complements(const MetricGraph& g);

/// Lexicographically first spanning tree (greedy in edge order) as a mask.
std::vector<bool> canonical_spanning_tree(const MetricGraph& g);

struct Contraction {
  MetricGraph graph;
  /// old vertex index -> new vertex index
  std::vector<std::size_t> vertex_map;
  /// old edge index -> new edge index, or npos for contracted edges
  std::vector<std::size_t> edge_map;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Collapses every connected component of the subgraph spanned by `s` to a
/// single vertex (named by the smallest vertex id in it) and drops all
/// edges of `s`. Other edges keep their ids, lengths and orientation.
Contraction contract_edges(const MetricGraph& g, const EdgeSet& s);

/// Removes the edges of `s`, keeping every vertex.
MetricGraph delete_edges(const MetricGraph& g, const EdgeSet& s);

/// An edge is a bridge if removing it increases the number of components.
bool is_bridge(const MetricGraph& g, std::size_t e);

}  // namespace prym
