#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "prym/error.hpp"
#include "prym/io.hpp"
#include "prym/verify.hpp"
#include "support.hpp"

using namespace prym;
using prym::io::Json;

namespace {

bool same_cover(const DoubleCover& a, const DoubleCover& b) {
  return io::cover_to_json(a) == io::cover_to_json(b);
}

}  // namespace

TEST_CASE("graph round trip") {
  const auto g = test::fig1_base();
  const auto back = io::graph_from_json(io::graph_to_json(g));
  CHECK(io::graph_to_json(back) == io::graph_to_json(g));
  CHECK(back.edge(back.edge_index("e3")).length == 1);
}

TEST_CASE("voltage and explicit forms describe the same cover") {
  for (const auto& spec : test::campaign_specs(30)) {
    const auto c = build_from_voltage(spec);
    CHECK(same_cover(io::cover_from_json(io::voltage_to_json(spec)), c));
    CHECK(same_cover(io::cover_from_json(io::cover_to_json(c)), c));
  }
  // Degrees and orientations may be left out of the explicit form.
  const auto c = test::fig1();
  Json j = io::cover_to_json(c);
  j["cover"].erase("degree");
  j["cover"].erase("orientation");
  CHECK(same_cover(io::cover_from_json(j), c));
}

TEST_CASE("parse errors") {
  Json j = io::voltage_to_json(test::fig1_spec());
  j["graph"]["edges"][0]["length"] = 1.5;
  CHECK_THROWS_AS(io::cover_from_json(j), ParseError);
  j["graph"]["edges"][0]["length"] = "1.5";
  CHECK_THROWS_AS(io::cover_from_json(j), ParseError);
  j["graph"]["edges"][0]["length"] = "3/2";
  CHECK_NOTHROW(io::cover_from_json(j));
  j["graph"]["edges"][0]["length"] = 2;
  CHECK_NOTHROW(io::cover_from_json(j));

  Json k = io::voltage_to_json(test::fig1_spec());
  k["cover"]["form"] = "implicit";
  CHECK_THROWS_AS(io::cover_from_json(k), ParseError);
  k = io::voltage_to_json(test::fig1_spec());
  k.erase("graph");
  CHECK_THROWS_AS(io::cover_from_json(k), ParseError);
  k = io::voltage_to_json(test::fig1_spec());
  k["cover"]["signs"]["e1"] = "odd";
  CHECK_THROWS_AS(io::cover_from_json(k), ParseError);

  CHECK_THROWS_AS(io::load_cover("/nonexistent/cover.json"), ParseError);
  const auto path = std::filesystem::temp_directory_path() / "prym_bad.json";
  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(io::load_cover(path), ParseError);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(io::lengths_from_json(Json{{"e", "0"}}), ValidationError);
  CHECK_THROWS_AS(io::lengths_from_json(Json::array()), ParseError);
  CHECK(io::lengths_from_json(Json{{"e", "1/2"}, {"f", 3}}).at("e") == Rational(1, 2));
}

TEST_CASE("polynomial json") {
  const auto p = test::poly("8*e1*e3*e4 - 1/2*e2^2 + 1");
  const Json j = io::poly_to_json(p);
  CHECK(j.size() == 3);
  CHECK(j[0]["coefficient"] == "8");
  CHECK(io::poly_from_json(j) == p);
  CHECK(io::poly_from_json(Json::array()).is_zero());
  CHECK_THROWS_AS(io::poly_from_json(Json::object()), ParseError);
}

TEST_CASE("report json") {
  const auto r = verify_identity(test::fig1(), "all");
  const Json j = io::report_to_json(r);
  CHECK(j["ok"] == true);
  CHECK(j["checks"].size() == r.checks.size());
  for (const auto& name : identity_names()) {
    bool seen = false;
    for (const auto& c : j["checks"]) seen = seen || c["identity"] == name;
    CHECK_MESSAGE(seen, name);
  }
  const Json v = io::volume_report_to_json(prym_volume(test::fig1(), Method::Kernel));
  CHECK(v["string"] == "8*e1*e3*e4 + 2*e1*e3*e5 + 32*e2*e3*e4 + 8*e2*e3*e5");
  CHECK(v["stats"]["A"] == 2);
  CHECK(io::stats_to_json(dilation_stats(test::theta_free())).contains("A") == false);
  CHECK_THROWS_AS(verify_identity(test::fig1(), "nope"), ParseError);
}

TEST_CASE("verify passes on sample covers") {
  for (const auto& c : {test::fig1(), test::disc_left(), test::theta_free(), test::dilated_circle(),
                        test::fully_dilated(test::theta())})
    CHECK(verify_identity(c, "all").ok());
}

TEST_CASE("generator") {
  const auto a = io::voltage_to_json(generate_cover(4, 6, GenMode::General, 7));
  const auto b = io::voltage_to_json(generate_cover(4, 6, GenMode::General, 7));
  CHECK(a == b);
  CHECK(a != io::voltage_to_json(generate_cover(4, 6, GenMode::General, 8)));
  const CoverClass expected[] = {CoverClass::Free, CoverClass::EdgeFree, CoverClass::Dilated};
  const GenMode modes[] = {GenMode::Free, GenMode::EdgeFree, GenMode::General};
  for (int m = 0; m < 3; ++m)
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const int v = 1 + static_cast<int>(seed % 6);
      const auto spec = generate_cover(v, v + static_cast<int>(seed % 4), modes[m], seed);
      CHECK(spec.base.num_vertices() == static_cast<std::size_t>(v));
      const auto c = build_from_voltage(spec);
      CHECK(validate(c).ok());
      CHECK(dilation_stats(c).cover_class == expected[m]);
    }
  CHECK_THROWS_AS(generate_cover(3, 1, GenMode::General, 1), InfeasibleError);
  CHECK_THROWS_AS(generate_cover(3, 2, GenMode::Free, 1), InfeasibleError);
  CHECK_THROWS_AS(generate_cover(1, 0, GenMode::General, 1), InfeasibleError);
  CHECK_THROWS_AS(generate_cover(11, 12, GenMode::EdgeFree, 1), InfeasibleError);
  CHECK_THROWS_AS(generate_cover(3, 15, GenMode::EdgeFree, 1), InfeasibleError);
  CHECK_NOTHROW(generate_cover(1, 0, GenMode::EdgeFree, 1));
  CHECK(parse_gen_mode("edge-free") == GenMode::EdgeFree);
  CHECK_THROWS_AS(parse_gen_mode("weird"), ParseError);
}
