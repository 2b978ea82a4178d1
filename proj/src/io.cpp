#include "prym/io.hpp"

#include <fstream>
#include <set>

#include "prym/error.hpp"

namespace prym::io {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational rational_of(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw ParseError(what + " must be a string \"n\" or \"p/q\"");
}

int int_of(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<int>();
}

std::map<std::string, std::string> string_map(const Json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out[k] = string_of(v, what);
  return out;
}

std::map<std::string, int> int_map(const Json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be an object");
  std::map<std::string, int> out;
  for (const auto& [k, v] : j.items()) out[k] = int_of(v, std::string(what) + " entry '" + k + "'");
  return out;
}

std::set<std::string> string_set(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::set<std::string> out;
  for (const auto& v : j) out.insert(string_of(v, what));
  return out;
}

}  // namespace

MetricGraph graph_from_json(const Json& j) {
  std::vector<std::string> vertices;
  const Json& vs = member(j, "vertices");
  if (!vs.is_array()) throw ParseError("'vertices' must be an array");
  for (const auto& v : vs) vertices.push_back(string_of(v, "vertex id"));
  std::vector<EdgeSpec> edges;
  const Json& es = member(j, "edges");
  if (!es.is_array()) throw ParseError("'edges' must be an array");
  for (const auto& e : es) {
    EdgeSpec spec;
    spec.id = string_of(member(e, "id"), "edge id");
    spec.src = string_of(member(e, "src"), "edge src");
    spec.dst = string_of(member(e, "dst"), "edge dst");
    spec.length = rational_of(member(e, "length"), "length of '" + spec.id + "'");
    edges.push_back(std::move(spec));
  }
  return MetricGraph(std::move(vertices), std::move(edges));
}

Json graph_to_json(const MetricGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back(
        {{"id", e.id}, {"src", g.vertex_id(e.src)}, {"dst", g.vertex_id(e.dst)}, {"length", to_string(e.length)}});
  return {{"vertices", g.vertex_ids()}, {"edges", edges}};
}

DoubleCover cover_from_json(const Json& j) {
  MetricGraph base = graph_from_json(member(j, "graph"));
  const Json& cover = member(j, "cover");
  const std::string form = string_of(member(cover, "form"), "cover form");
  if (form == "voltage") {
    VoltageSpec spec;
    spec.base = std::move(base);
    if (cover.contains("dilated_vertices"))
      spec.dilated_vertices = string_set(cover["dilated_vertices"], "dilated_vertices");
    if (cover.contains("dilated_edges")) spec.dilated_edges = string_set(cover["dilated_edges"], "dilated_edges");
    if (cover.contains("signs")) spec.signs = int_map(cover["signs"], "signs");
    return build_from_voltage(spec);
  }
  if (form == "explicit") {
    MetricGraph total = graph_from_json(member(cover, "total"));
    const auto vmap = string_map(member(cover, "vertex_map"), "vertex_map");
    const auto emap = string_map(member(cover, "edge_map"), "edge_map");
    const auto degree = cover.contains("degree") ? int_map(cover["degree"], "degree") : std::map<std::string, int>{};
    const auto orientation =
        cover.contains("orientation") ? int_map(cover["orientation"], "orientation") : std::map<std::string, int>{};
    return make_cover(std::move(base), std::move(total), vmap, emap, degree, orientation);
  }
  throw ParseError("unknown cover form '" + form + "'");
}

Json voltage_to_json(const VoltageSpec& spec) {
  Json signs = Json::object();
  for (const auto& [e, s] : spec.signs) signs[e] = s;
  return {{"graph", graph_to_json(spec.base)},
          {"cover",
           {{"form", "voltage"},
            {"dilated_vertices", spec.dilated_vertices},
            {"dilated_edges", spec.dilated_edges},
            {"signs", signs}}}};
}

Json cover_to_json(const DoubleCover& c) {
  Json vmap = Json::object(), emap = Json::object(), degree = Json::object(), orientation = Json::object();
  const MetricGraph& total = c.total();
  for (std::size_t v = 0; v < total.num_vertices(); ++v) {
    vmap[total.vertex_id(v)] = c.base().vertex_id(c.vertex_image(v));
    degree[total.vertex_id(v)] = c.vertex_degree(v);
  }
  for (std::size_t e = 0; e < total.num_edges(); ++e) {
    emap[total.edge(e).id] = c.base().edge(c.edge_image(e)).id;
    degree[total.edge(e).id] = c.edge_degree(e);
    orientation[total.edge(e).id] = c.edge_orientation(e);
  }
  return {{"graph", graph_to_json(c.base())},
          {"cover",
           {{"form", "explicit"},
            {"total", graph_to_json(total)},
            {"vertex_map", vmap},
            {"edge_map", emap},
            {"degree", degree},
            {"orientation", orientation}}}};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

DoubleCover load_cover(const std::filesystem::path& path) {
  try {
    return cover_from_json(read_json(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed cover file '" + path.string() + "': " + e.what());
  }
}

std::map<std::string, Rational> lengths_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("lengths must be an object of edge id -> length");
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : j.items()) {
    out[k] = rational_of(v, "length of '" + k + "'");
    if (out[k] <= 0) throw ValidationError("length of '" + k + "' must be positive");
  }
  return out;
}

Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = Json::object();
    for (const auto& [name, exp] : m.factors()) mono[name] = exp;
    terms.push_back({{"coefficient", to_string(c)}, {"monomial", mono}});
  }
  return terms;
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  MultiPoly out;
  for (const auto& t : j) {
    const Rational c = rational_of(member(t, "coefficient"), "coefficient");
    std::vector<Monomial::Factor> factors;
    const Json& mono = member(t, "monomial");
    if (!mono.is_object()) throw ParseError("monomial must be an object");
    for (const auto& [name, exp] : mono.items()) {
      if (!exp.is_number_unsigned()) throw ParseError("exponent of '" + name + "' must be a nonnegative integer");
      factors.emplace_back(name, exp.get<std::uint32_t>());
    }
    out.add_term(c, Monomial::from_factors(std::move(factors)));
  }
  return out;
}

Json stats_to_json(const DilationStats& s) {
  Json out = {{"g_base", s.g_base}, {"g_total", s.g_total}, {"h", s.h},       {"m_d", s.m_d},
              {"n_d", s.n_d},       {"d", s.d},             {"class", to_string(s.cover_class)}};
  if (s.A) {
    out["A"] = *s.A;
    out["B"] = *s.B;
    out["C"] = *s.C;
  }
  return out;
}

Json volume_report_to_json(const VolumeReport& r) {
  return {{"method", to_string(r.method)},
          {"value", poly_to_json(r.value)},
          {"string", r.value.to_string()},
          {"stats", stats_to_json(r.stats)}};
}

Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry = {{"identity", c.identity}, {"check", c.name}, {"status", to_string(c.status)}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

Json ogods_to_json(const MetricGraph& base, const std::vector<Ogod>& ogods) {
  Json out = Json::array();
  for (const auto& o : ogods) out.push_back({{"edges", o.edges.ids(base)}, {"rank", o.rank}});
  return out;
}

}  // namespace prym::io
