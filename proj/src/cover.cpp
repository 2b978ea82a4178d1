#include "prym/cover.hpp"

#include <algorithm>
#include <sstream>

#include "detail/union_find.hpp"
#include "prym/error.hpp"

namespace prym {

DoubleCover::DoubleCover(MetricGraph base, MetricGraph total, std::vector<std::size_t> vertex_map,
                         std::vector<std::size_t> edge_map, std::vector<int> vertex_degree,
                         std::vector<int> edge_degree, std::vector<int> edge_orientation)
    : base_(std::move(base)),
      total_(std::move(total)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)),
      vertex_degree_(std::move(vertex_degree)),
      edge_degree_(std::move(edge_degree)),
      edge_orientation_(std::move(edge_orientation)) {
  const auto nv = total_.num_vertices();
  const auto ne = total_.num_edges();
  if (vertex_map_.size() != nv || vertex_degree_.size() != nv || edge_map_.size() != ne ||
      edge_degree_.size() != ne || edge_orientation_.size() != ne)
    throw ValidationError("cover maps do not match the total graph size");
  vertex_fibers_.assign(base_.num_vertices(), {});
  edge_fibers_.assign(base_.num_edges(), {});
  for (std::size_t v = 0; v < nv; ++v) {
    if (vertex_map_[v] >= base_.num_vertices()) throw ValidationError("vertex map out of range");
    vertex_fibers_[vertex_map_[v]].push_back(v);
  }
  for (std::size_t e = 0; e < ne; ++e) {
    if (edge_map_[e] >= base_.num_edges()) throw ValidationError("edge map out of range");
    if (edge_orientation_[e] != 1 && edge_orientation_[e] != -1)
      throw ValidationError("edge orientation of '" + total_.edge(e).id + "' must be +1 or -1");
    edge_fibers_[edge_map_[e]].push_back(e);
  }
}

HalfEdge DoubleCover::half_edge_image(HalfEdge h) const {
  const auto e = edge_of(h);
  const bool flip = edge_orientation_[e] < 0;
  const End end = (end_of(h) == End::Target) != flip ? End::Target : End::Source;
  return half_edge_of(edge_map_[e], end);
}

bool DoubleCover::is_dilated_vertex(std::size_t v) const {
  const auto& fiber = vertex_fibers_[v];
  return fiber.size() == 1 && vertex_degree_[fiber.front()] == 2;
}

bool DoubleCover::is_dilated_edge(std::size_t e) const {
  const auto& fiber = edge_fibers_[e];
  return fiber.size() == 1 && edge_degree_[fiber.front()] == 2;
}

DoubleCover make_cover(MetricGraph base, MetricGraph total, const std::map<std::string, std::string>& vertex_map,
                       const std::map<std::string, std::string>& edge_map, const std::map<std::string, int>& degree,
                       const std::map<std::string, int>& orientation) {
  auto lookup = [](const auto& map, const std::string& key, const char* what) -> const auto& {
    auto it = map.find(key);
    if (it == map.end()) throw ParseError(std::string(what) + " has no entry for '" + key + "'");
    return it->second;
  };
  for (const auto& [k, v] : vertex_map)
    if (!total.find_vertex(k)) throw ParseError("vertex_map names unknown total vertex '" + k + "'");
  for (const auto& [k, v] : edge_map)
    if (!total.find_edge(k)) throw ParseError("edge_map names unknown total edge '" + k + "'");
  for (const auto& [k, v] : degree)
    if (!total.find_vertex(k) && !total.find_edge(k))
      throw ParseError("degree names unknown total vertex or edge '" + k + "'");
  for (const auto& [k, v] : orientation)
    if (!total.find_edge(k)) throw ParseError("orientation names unknown total edge '" + k + "'");

  std::vector<std::size_t> vmap(total.num_vertices()), emap(total.num_edges());
  std::vector<std::size_t> vcount(base.num_vertices(), 0), ecount(base.num_edges(), 0);
  for (std::size_t v = 0; v < total.num_vertices(); ++v) {
    vmap[v] = base.vertex_index(lookup(vertex_map, total.vertex_id(v), "vertex_map"));
    ++vcount[vmap[v]];
  }
  for (std::size_t e = 0; e < total.num_edges(); ++e) {
    emap[e] = base.edge_index(lookup(edge_map, total.edge(e).id, "edge_map"));
    ++ecount[emap[e]];
  }

  std::vector<int> vdeg(total.num_vertices()), edeg(total.num_edges()), orient(total.num_edges());
  for (std::size_t v = 0; v < total.num_vertices(); ++v) {
    auto it = degree.find(total.vertex_id(v));
    vdeg[v] = it != degree.end() ? it->second : (vcount[vmap[v]] == 1 ? 2 : 1);
  }
  for (std::size_t e = 0; e < total.num_edges(); ++e) {
    const auto& edge = total.edge(e);
    auto it = degree.find(edge.id);
    edeg[e] = it != degree.end() ? it->second : (ecount[emap[e]] == 1 ? 2 : 1);
    if (auto o = orientation.find(edge.id); o != orientation.end()) {
      orient[e] = o->second;
    } else {
      const auto& image = base.edge(emap[e]);
      orient[e] = (!image.is_loop() && vmap[edge.src] != image.src) ? -1 : 1;
    }
  }
  return DoubleCover(std::move(base), std::move(total), std::move(vmap), std::move(emap), std::move(vdeg),
                     std::move(edeg), std::move(orient));
}

DoubleCover build_from_voltage(const VoltageSpec& spec) {
  const MetricGraph& base = spec.base;
  if (!is_connected(base)) throw ValidationError("base graph not connected");
  for (const auto& v : spec.dilated_vertices) base.vertex_index(v);
  for (const auto& e : spec.dilated_edges) base.edge_index(e);

  auto dilated_vertex = [&](std::size_t v) { return spec.dilated_vertices.count(base.vertex_id(v)) > 0; };
  auto vertex_lifts = [&](std::size_t v) -> std::pair<std::string, std::string> {
    const auto& id = base.vertex_id(v);
    if (dilated_vertex(v)) return {id, id};
    return {id + "+", id + "-"};
  };

  std::vector<std::string> vertices;
  std::map<std::string, std::string> vmap, emap;
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    auto [plus, minus] = vertex_lifts(v);
    vmap[plus] = base.vertex_id(v);
    vmap[minus] = base.vertex_id(v);
    vertices.push_back(plus);
    if (minus != plus) vertices.push_back(minus);
  }
  if (vmap.size() != vertices.size()) throw ValidationError("lifted vertex ids collide with base vertex ids");

  std::vector<EdgeSpec> edges;
  std::set<std::string> used_signs;
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    const Edge& edge = base.edge(e);
    const bool both_undilated = !dilated_vertex(edge.src) && !dilated_vertex(edge.dst);
    auto sign = spec.signs.find(edge.id);
    if (spec.dilated_edges.count(edge.id)) {
      if (!dilated_vertex(edge.src) || !dilated_vertex(edge.dst))
        throw ValidationError("dilation closure violated at edge '" + edge.id + "'");
      if (sign != spec.signs.end()) throw ValidationError("sign given for dilated edge '" + edge.id + "'");
      edges.push_back({edge.id, base.vertex_id(edge.src), base.vertex_id(edge.dst), edge.length / 2});
      emap[edge.id] = edge.id;
      continue;
    }
    int voltage = 1;
    if (both_undilated) {
      if (sign == spec.signs.end()) throw ValidationError("missing sign for edge '" + edge.id + "'");
      if (sign->second != 1 && sign->second != -1)
        throw ValidationError("sign of edge '" + edge.id + "' must be +1 or -1");
      voltage = sign->second;
      used_signs.insert(edge.id);
    } else if (sign != spec.signs.end()) {
      throw ValidationError("sign given for edge '" + edge.id + "' with a dilated endpoint");
    }
    auto [src_plus, src_minus] = vertex_lifts(edge.src);
    auto [dst_plus, dst_minus] = vertex_lifts(edge.dst);
    if (voltage < 0) std::swap(dst_plus, dst_minus);
    edges.push_back({edge.id + "+", src_plus, dst_plus, edge.length});
    edges.push_back({edge.id + "-", src_minus, dst_minus, edge.length});
    emap[edge.id + "+"] = edge.id;
    emap[edge.id + "-"] = edge.id;
  }
  for (const auto& [id, s] : spec.signs)
    if (!base.find_edge(id)) throw ValidationError("sign given for unknown edge '" + id + "'");
  if (emap.size() != edges.size()) throw ValidationError("lifted edge ids collide with base edge ids");

  MetricGraph total(std::move(vertices), std::move(edges));
  return make_cover(base, std::move(total), vmap, emap);
}

bool ValidationReport::has(const std::string& kind) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].kind << ": " << violations[i].message;
  }
  return os.str();
}

ValidationReport validate(const DoubleCover& c) {
  ValidationReport report;
  auto flag = [&](std::string kind, std::string message) {
    report.violations.push_back({std::move(kind), std::move(message)});
  };
  const MetricGraph& base = c.base();
  const MetricGraph& total = c.total();

  for (std::size_t v = 0; v < total.num_vertices(); ++v)
    if (c.vertex_degree(v) != 1 && c.vertex_degree(v) != 2)
      flag("degree", "vertex '" + total.vertex_id(v) + "' has degree " + std::to_string(c.vertex_degree(v)));
  for (std::size_t e = 0; e < total.num_edges(); ++e)
    if (c.edge_degree(e) != 1 && c.edge_degree(e) != 2)
      flag("degree", "edge '" + total.edge(e).id + "' has degree " + std::to_string(c.edge_degree(e)));

  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    int sum = 0;
    for (auto w : c.vertex_preimages(v)) sum += c.vertex_degree(w);
    const auto n = c.vertex_preimages(v).size();
    if (sum != 2 || (n != 1 && n != 2))
      flag("vertex-fiber", "base vertex '" + base.vertex_id(v) + "' has preimage of total degree " +
                               std::to_string(sum) + " over " + std::to_string(n) + " vertices");
  }
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    int sum = 0;
    for (auto f : c.edge_preimages(e)) sum += c.edge_degree(f);
    const auto n = c.edge_preimages(e).size();
    if (sum != 2 || (n != 1 && n != 2))
      flag("edge-fiber", "base edge '" + base.edge(e).id + "' has preimage of total degree " + std::to_string(sum) +
                             " over " + std::to_string(n) + " edges");
  }

  for (HalfEdge h = 0; h < total.num_half_edges(); ++h) {
    const HalfEdge image = c.half_edge_image(h);
    if (c.vertex_image(total.root(h)) != base.root(image))
      flag("incidence", "half-edge '" + total.half_edge_id(h) + "' maps to '" + base.half_edge_id(image) +
                            "' but its root maps elsewhere");
  }

  // Harmonicity: at each total vertex, every base half-edge at the image
  // vertex is covered with multiplicity equal to the vertex degree.
  const auto total_at = total.half_edges_by_vertex();
  const auto base_at = base.half_edges_by_vertex();
  for (std::size_t v = 0; v < total.num_vertices(); ++v) {
    std::map<HalfEdge, int> covered;
    for (auto h : total_at[v]) covered[c.half_edge_image(h)] += c.edge_degree(edge_of(h));
    for (auto bh : base_at[c.vertex_image(v)]) {
      const int sum = covered.count(bh) ? covered[bh] : 0;
      if (sum != c.vertex_degree(v))
        flag("harmonicity", "at '" + total.vertex_id(v) + "' half-edge '" + base.half_edge_id(bh) +
                                "' is covered with degree " + std::to_string(sum) + ", vertex degree " +
                                std::to_string(c.vertex_degree(v)));
    }
  }

  for (HalfEdge h = 0; h < total.num_half_edges(); ++h)
    if (c.edge_degree(edge_of(h)) == 2 && c.vertex_degree(total.root(h)) != 2)
      flag("dilation-closure", "dilated half-edge '" + total.half_edge_id(h) + "' rooted at undilated vertex '" +
                                   total.vertex_id(total.root(h)) + "'");

  for (std::size_t e = 0; e < total.num_edges(); ++e) {
    const Rational& expected = base.edge(c.edge_image(e)).length;
    const Rational want = c.edge_degree(e) == 2 ? Rational(expected / 2) : expected;
    if (total.edge(e).length != want)
      flag("length", "edge '" + total.edge(e).id + "' has length " + to_string(total.edge(e).length) +
                         ", expected " + to_string(want));
  }

  if (!is_connected(base)) flag("base-disconnected", "base graph disconnected");
  if (!is_connected(total)) flag("total-disconnected", "total graph disconnected");
  return report;
}

void require_valid(const DoubleCover& c) {
  const auto report = validate(c);
  if (!report.ok()) throw ValidationError(report.summary());
}

const char* to_string(CoverClass c) {
  switch (c) {
    case CoverClass::Free:
      return "free";
    case CoverClass::EdgeFree:
      return "edge-free";
    case CoverClass::Dilated:
      return "dilated";
  }
  return "?";
}

Components dilation_components(const DoubleCover& c) {
  const MetricGraph& base = c.base();
  detail::UnionFind uf(base.num_vertices());
  for (std::size_t e = 0; e < base.num_edges(); ++e)
    if (c.is_dilated_edge(e)) uf.unite(base.edge(e).src, base.edge(e).dst);
  Components out;
  out.of_vertex.assign(base.num_vertices(), Components::npos);
  out.of_edge.assign(base.num_edges(), Components::npos);
  std::vector<std::size_t> label(base.num_vertices(), Components::npos);
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    if (!c.is_dilated_vertex(v)) continue;
    auto r = uf.find(v);
    if (label[r] == Components::npos) label[r] = out.count++;
    out.of_vertex[v] = label[r];
  }
  for (std::size_t e = 0; e < base.num_edges(); ++e)
    if (c.is_dilated_edge(e)) out.of_edge[e] = out.of_vertex[base.edge(e).src];
  return out;
}

DilationStats dilation_stats(const DoubleCover& c) {
  DilationStats s;
  for (std::size_t e = 0; e < c.base().num_edges(); ++e) s.m_d += c.is_dilated_edge(e) ? 1 : 0;
  for (std::size_t v = 0; v < c.base().num_vertices(); ++v) s.n_d += c.is_dilated_vertex(v) ? 1 : 0;
  s.d = static_cast<long>(dilation_components(c).count);
  s.g_base = genus(c.base());
  s.g_total = genus(c.total());
  s.h = s.g_total - s.g_base;
  if (s.n_d == 0) {
    s.cover_class = CoverClass::Free;
  } else {
    s.cover_class = s.m_d == 0 ? CoverClass::EdgeFree : CoverClass::Dilated;
    s.A = s.g_base - s.m_d + s.n_d - s.d;
    s.B = s.d - 1;
    s.C = s.m_d - s.n_d + s.d;
  }
  return s;
}

Involution involution(const DoubleCover& c) {
  Involution inv;
  const auto& total = c.total();
  inv.vertex.resize(total.num_vertices());
  for (std::size_t v = 0; v < total.num_vertices(); ++v) {
    const auto& fiber = c.vertex_preimages(c.vertex_image(v));
    inv.vertex[v] = fiber.size() == 2 ? (fiber[0] == v ? fiber[1] : fiber[0]) : v;
  }
  inv.edge.resize(total.num_edges());
  inv.edge_sign.resize(total.num_edges());
  for (std::size_t e = 0; e < total.num_edges(); ++e) {
    const auto& fiber = c.edge_preimages(c.edge_image(e));
    inv.edge[e] = fiber.size() == 2 ? (fiber[0] == e ? fiber[1] : fiber[0]) : e;
    inv.edge_sign[e] = c.edge_orientation(e) * c.edge_orientation(inv.edge[e]);
  }
  return inv;
}

namespace {

EdgeSet preimage_edges(const DoubleCover& c, const EdgeSet& s) {
  std::vector<std::size_t> out;
  for (auto e : s) {
    if (e >= c.base().num_edges()) throw ParseError("edge index out of range");
    for (auto f : c.edge_preimages(e)) out.push_back(f);
  }
  return EdgeSet(std::move(out));
}

/// Rebuilds a cover after the total graph was transformed, keeping each
/// surviving total edge's image, degree and orientation by id. Vertex
/// degrees not listed in `vertex_degree` are derived from fiber sizes.
DoubleCover reassemble(const DoubleCover& c, MetricGraph base, MetricGraph total,
                       const std::map<std::string, std::string>& vertex_image,
                       std::map<std::string, int> vertex_degree) {
  std::map<std::string, std::string> emap;
  std::map<std::string, int> orientation;
  std::map<std::string, int>& degree = vertex_degree;
  for (std::size_t e = 0; e < total.num_edges(); ++e) {
    const auto& id = total.edge(e).id;
    const auto old = c.total().edge_index(id);
    emap[id] = c.base().edge(c.edge_image(old)).id;
    degree[id] = c.edge_degree(old);
    orientation[id] = c.edge_orientation(old);
  }
  return make_cover(std::move(base), std::move(total), vertex_image, emap, degree, orientation);
}

}  // namespace

DoubleCover contract_cover(const DoubleCover& c, const EdgeSet& s) {
  const auto lifted = preimage_edges(c, s);
  Contraction base = contract_edges(c.base(), s);
  Contraction total = contract_edges(c.total(), lifted);

  std::map<std::string, std::string> vmap;
  for (std::size_t v = 0; v < c.total().num_vertices(); ++v) {
    const auto& new_total = total.graph.vertex_id(total.vertex_map[v]);
    vmap[new_total] = base.graph.vertex_id(base.vertex_map[c.vertex_image(v)]);
  }
  // A merged total vertex alone over its image has degree two.
  return reassemble(c, std::move(base.graph), std::move(total.graph), vmap, {});
}

DoubleCover delete_cover_edges(const DoubleCover& c, const EdgeSet& s) {
  const auto lifted = preimage_edges(c, s);
  std::map<std::string, std::string> vmap;
  std::map<std::string, int> degree;
  for (std::size_t v = 0; v < c.total().num_vertices(); ++v) {
    vmap[c.total().vertex_id(v)] = c.base().vertex_id(c.vertex_image(v));
    degree[c.total().vertex_id(v)] = c.vertex_degree(v);
  }
  return reassemble(c, delete_edges(c.base(), s), delete_edges(c.total(), lifted), vmap, std::move(degree));
}

VertexSplit default_split(const DoubleCover& c, const std::string& base_vertex) {
  const auto v = c.base().vertex_index(base_vertex);
  if (!c.is_dilated_vertex(v)) throw InapplicableError("vertex '" + base_vertex + "' is not dilated");
  const auto tv = c.vertex_preimages(v).front();
  std::map<HalfEdge, std::vector<std::size_t>> lifts;
  for (HalfEdge h = 0; h < c.total().num_half_edges(); ++h)
    if (c.total().root(h) == tv) lifts[c.half_edge_image(h)].push_back(edge_of(h));
  VertexSplit split;
  std::size_t i = 0;
  for (auto& [bh, edges] : lifts) {
    // Edge indices follow id order; alternate the smaller and larger lift.
    std::sort(edges.begin(), edges.end());
    split[c.base().half_edge_id(bh)] = c.total().edge(i++ % 2 == 0 ? edges.front() : edges.back()).id;
  }
  return split;
}

DoubleCover resolve_dilated_vertex(const DoubleCover& c, const std::string& base_vertex,
                                   const Rational& loop_length, const VertexSplit& split,
                                   const std::string& loop_id) {
  const MetricGraph& base = c.base();
  const MetricGraph& total = c.total();
  const auto v = base.vertex_index(base_vertex);
  if (!c.is_dilated_vertex(v)) throw InapplicableError("vertex '" + base_vertex + "' is not dilated");
  for (std::size_t e = 0; e < base.num_edges(); ++e)
    if (c.is_dilated_edge(e) && (base.edge(e).src == v || base.edge(e).dst == v))
      throw InapplicableError("vertex '" + base_vertex + "' carries dilated edge '" + base.edge(e).id + "'");
  if (loop_length <= 0) throw ValidationError("loop length must be positive");
  if (base.find_edge(loop_id)) throw ValidationError("edge id '" + loop_id + "' already used");

  const auto tv = c.vertex_preimages(v).front();
  const std::string& old_id = total.vertex_id(tv);
  auto fresh_vertex = [&](std::string id) {
    while (total.find_vertex(id)) id += "'";
    return id;
  };
  const std::string plus = fresh_vertex(old_id + "+");
  const std::string minus = fresh_vertex(old_id + "-");
  std::string loop_plus = loop_id + "+";
  std::string loop_minus = loop_id + "-";
  while (total.find_edge(loop_plus)) loop_plus += "'";
  while (total.find_edge(loop_minus)) loop_minus += "'";

  // Check that the split picks one of the two lifts of every base half-edge.
  std::map<HalfEdge, std::vector<std::size_t>> lifts;
  for (HalfEdge h = 0; h < total.num_half_edges(); ++h)
    if (total.root(h) == tv) lifts[c.half_edge_image(h)].push_back(h);
  std::map<HalfEdge, std::string> new_root;
  for (const auto& [bh, hs] : lifts) {
    auto it = split.find(base.half_edge_id(bh));
    if (it == split.end()) throw ValidationError("split has no entry for '" + base.half_edge_id(bh) + "'");
    std::size_t chosen = 0;
    for (auto h : hs) chosen += total.edge(edge_of(h)).id == it->second ? 1 : 0;
    if (hs.size() != 2 || chosen != 1)
      throw ValidationError("split entry '" + it->second + "' is not a lift of '" + base.half_edge_id(bh) + "'");
    for (auto h : hs) new_root[h] = total.edge(edge_of(h)).id == it->second ? plus : minus;
  }

  std::vector<EdgeSpec> base_edges = base.edge_specs();
  base_edges.push_back({loop_id, base_vertex, base_vertex, loop_length});
  MetricGraph new_base(base.vertex_ids(), std::move(base_edges));

  std::vector<std::string> vertices;
  std::map<std::string, std::string> vmap;
  for (std::size_t w = 0; w < total.num_vertices(); ++w) {
    if (w == tv) continue;
    vertices.push_back(total.vertex_id(w));
    vmap[total.vertex_id(w)] = base.vertex_id(c.vertex_image(w));
  }
  vertices.push_back(plus);
  vertices.push_back(minus);
  vmap[plus] = base_vertex;
  vmap[minus] = base_vertex;

  std::vector<EdgeSpec> edges;
  std::map<std::string, std::string> emap;
  std::map<std::string, int> degree, orientation;
  for (std::size_t e = 0; e < total.num_edges(); ++e) {
    const Edge& edge = total.edge(e);
    auto end_id = [&](End end) {
      const HalfEdge h = half_edge_of(e, end);
      return total.root(h) == tv ? new_root.at(h) : total.vertex_id(total.root(h));
    };
    edges.push_back({edge.id, end_id(End::Source), end_id(End::Target), edge.length});
    emap[edge.id] = base.edge(c.edge_image(e)).id;
    degree[edge.id] = c.edge_degree(e);
    orientation[edge.id] = c.edge_orientation(e);
  }
  edges.push_back({loop_plus, plus, minus, loop_length});
  edges.push_back({loop_minus, minus, plus, loop_length});
  for (const auto& id : {loop_plus, loop_minus}) {
    emap[id] = loop_id;
    degree[id] = 1;
    orientation[id] = 1;
  }
  for (std::size_t w = 0; w < total.num_vertices(); ++w)
    if (w != tv) degree[total.vertex_id(w)] = c.vertex_degree(w);
  degree[plus] = 1;
  degree[minus] = 1;

  MetricGraph new_total(std::move(vertices), std::move(edges));
  return make_cover(std::move(new_base), std::move(new_total), vmap, emap, degree, orientation);
}

}  // namespace prym
