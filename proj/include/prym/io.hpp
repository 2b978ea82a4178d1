#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "prym/cover.hpp"
#include "prym/graph.hpp"
#include "prym/polynomial.hpp"
#include "prym/volumes.hpp"

namespace prym::io {

using Json = nlohmann::ordered_json;

/// {"vertices":[...],"edges":[{"id","src","dst","length"}]}; lengths are
/// strings "n" or "p/q".
MetricGraph graph_from_json(const Json& j);
Json graph_to_json(const MetricGraph& g);

/// {"graph": ..., "cover": {"form": "voltage" | "explicit", ...}}.
DoubleCover cover_from_json(const Json& j);
Json voltage_to_json(const VoltageSpec& spec);
/// Explicit form with degrees and orientations spelled out.
Json cover_to_json(const DoubleCover& c);

/// Reads and parses a file; throws ParseError on I/O or syntax errors.
Json read_json(const std::filesystem::path& path);
DoubleCover load_cover(const std::filesystem::path& path);

/// {"e1": "3/2", ...}
std::map<std::string, Rational> lengths_from_json(const Json& j);

/// [{"coefficient": "8", "monomial": {"e1": 1, ...}}, ...] in canonical order.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json stats_to_json(const DilationStats& s);
Json volume_report_to_json(const VolumeReport& r);
Json report_to_json(const Report& r);
Json ogods_to_json(const MetricGraph& base, const std::vector<Ogod>& ogods);

}  // namespace prym::io
