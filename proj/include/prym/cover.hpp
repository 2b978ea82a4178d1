#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prym/graph.hpp"

namespace prym {

/// Harmonic morphism of global degree two between metric graphs.
///
/// Besides the vertex and edge maps the cover records, for every edge of
/// the total graph, how its half-edges map: orientation +1 sends the source
/// half-edge to the source half-edge of the image edge, -1 sends it to the
/// target half-edge. For images that are not loops this is forced by the
/// vertex map; for loops it is part of the data.
///
/// Construction only checks array shapes and index ranges. Use validate()
/// for the cover axioms.
class DoubleCover {
 public:
  DoubleCover() = default;
  DoubleCover(MetricGraph base, MetricGraph total, std::vector<std::size_t> vertex_map,
              std::vector<std::size_t> edge_map, std::vector<int> vertex_degree,
              std::vector<int> edge_degree, std::vector<int> edge_orientation);

  const MetricGraph& base() const { return base_; }
  const MetricGraph& total() const { return total_; }

  std::size_t vertex_image(std::size_t total_vertex) const { return vertex_map_[total_vertex]; }
  std::size_t edge_image(std::size_t total_edge) const { return edge_map_[total_edge]; }
  int vertex_degree(std::size_t total_vertex) const { return vertex_degree_[total_vertex]; }
  int edge_degree(std::size_t total_edge) const { return edge_degree_[total_edge]; }
  int edge_orientation(std::size_t total_edge) const { return edge_orientation_[total_edge]; }
  HalfEdge half_edge_image(HalfEdge total_half_edge) const;

  const std::vector<std::size_t>& vertex_preimages(std::size_t base_vertex) const {
    return vertex_fibers_[base_vertex];
  }
  const std::vector<std::size_t>& edge_preimages(std::size_t base_edge) const { return edge_fibers_[base_edge]; }

  /// A base vertex/edge is dilated when its fiber is a single element of
  /// degree two.
  bool is_dilated_vertex(std::size_t base_vertex) const;
  bool is_dilated_edge(std::size_t base_edge) const;

  const std::vector<std::size_t>& vertex_map() const { return vertex_map_; }
  const std::vector<std::size_t>& edge_map() const { return edge_map_; }
  const std::vector<int>& vertex_degrees() const { return vertex_degree_; }
  const std::vector<int>& edge_degrees() const { return edge_degree_; }
  const std::vector<int>& edge_orientations() const { return edge_orientation_; }

 private:
  MetricGraph base_;
  MetricGraph total_;
  std::vector<std::size_t> vertex_map_;
  std::vector<std::size_t> edge_map_;
  std::vector<int> vertex_degree_;
  std::vector<int> edge_degree_;
  std::vector<int> edge_orientation_;
  std::vector<std::vector<std::size_t>> vertex_fibers_;
  std::vector<std::vector<std::size_t>> edge_fibers_;
};

/// Assembles a cover from id-keyed maps. Every total vertex and edge must be
/// mapped. Missing degrees are derived from fiber sizes (a lone preimage has
/// degree two); missing orientations are derived from the vertex map, and
/// default to +1 over base loops. Throws ParseError for unknown ids.
DoubleCover make_cover(MetricGraph base, MetricGraph total, const std::map<std::string, std::string>& vertex_map,
                       const std::map<std::string, std::string>& edge_map,
                       const std::map<std::string, int>& degree = {},
                       const std::map<std::string, int>& orientation = {});

/// Input for the standard construction of a double cover from a dilation
/// subgraph plus a +-1 voltage on undilated edges between undilated
/// vertices.
struct VoltageSpec {
  MetricGraph base;
  std::set<std::string> dilated_vertices;
  std::set<std::string> dilated_edges;
  std::map<std::string, int> signs;
};

/// Undilated vertex v lifts to "v+" and "v-", undilated edge e to "e+" and
/// "e-"; dilated elements keep their id. A +1 edge joins equal superscripts,
/// a -1 edge crosses. Throws ValidationError("dilation closure violated")
/// for a dilated edge with an undilated endpoint, and on missing or extra
/// signs.
DoubleCover build_from_voltage(const VoltageSpec& spec);

struct Violation {
  std::string kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& kind) const;
  std::string summary() const;
};

/// Checks fibers, incidence, harmonicity, dilation closure, the length rule
/// and connectivity of both graphs. Never throws for malformed covers.
ValidationReport validate(const DoubleCover& c);

/// Throws ValidationError with the report summary unless validate() is ok.
void require_valid(const DoubleCover& c);

enum class CoverClass { Free, EdgeFree, Dilated };

const char* to_string(CoverClass c);

struct DilationStats {
  long m_d = 0;  ///< dilated edges
  long n_d = 0;  ///< dilated vertices
  long d = 0;    ///< components of the dilation subgraph
  long g_base = 0;
  long g_total = 0;
  long h = 0;    ///< g_total - g_base
  CoverClass cover_class = CoverClass::Free;
  /// Populated for covers with nonempty dilation subgraph only.
  std::optional<long> A, B, C;

  bool is_free() const { return cover_class == CoverClass::Free; }
};

DilationStats dilation_stats(const DoubleCover& c);

/// Connected components of the dilation subgraph (dilated vertices and
/// edges of the base), numbered by smallest vertex. Undilated vertices map
/// to Components::npos.
Components dilation_components(const DoubleCover& c);

/// Deck transformation of the total graph. `edge_sign` is +1 when the
/// involution preserves the orientation of the edge.
struct Involution {
  std::vector<std::size_t> vertex;
  std::vector<std::size_t> edge;
  std::vector<int> edge_sign;
};

Involution involution(const DoubleCover& c);

/// Contracts `s` in the base and its preimage in the total graph. A new
/// total vertex has degree two exactly when it is the only vertex over its
/// image.
DoubleCover contract_cover(const DoubleCover& c, const EdgeSet& s);

/// Deletes `s` from the base and its preimage from the total graph.
DoubleCover delete_cover_edges(const DoubleCover& c, const EdgeSet& s);

/// For each base half-edge rooted at the resolved vertex, the id of the
/// total edge whose half-edge over it is re-rooted at the "+" vertex.
using VertexSplit = std::map<std::string, std::string>;

/// Lexicographic alternation: walking the base half-edges at the vertex in
/// order, the smaller lift goes to the "+" vertex, then the larger, and so on.
VertexSplit default_split(const DoubleCover& c, const std::string& base_vertex);

/// Undilates `base_vertex` by attaching a loop `loop_id` of the given length
/// in the base; its single preimage is replaced by two vertices joined by
/// the two lifts of the loop. Throws InapplicableError if the vertex is
/// undilated or carries a dilated edge, ValidationError for a bad split.
DoubleCover resolve_dilated_vertex(const DoubleCover& c, const std::string& base_vertex,
                                   const Rational& loop_length, const VertexSplit& split,
                                   const std::string& loop_id);

}  // namespace prym
