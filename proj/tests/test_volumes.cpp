#include <doctest.h>

#include "prym/error.hpp"
#include "prym/volumes.hpp"
#include "support.hpp"

using namespace prym;
using prym::test::poly;

namespace {

const char* const kFig1 = "8*e1*e3*e4 + 2*e1*e3*e5 + 32*e2*e3*e4 + 8*e2*e3*e5";

std::map<std::string, Rational> lengths_of(const MetricGraph& g) {
  std::map<std::string, Rational> out;
  for (const auto& e : g.edges()) out[e.id] = e.length;
  return out;
}

MultiPoly edge_product(const MetricGraph& g) {
  MultiPoly p(1);
  for (const auto& e : g.edges()) p *= MultiPoly::variable(e.id);
  return p;
}

}  // namespace

TEST_CASE("jacobian polynomials") {
  CHECK(jacobian_polynomial(test::theta()) == poly("e1*e2 + e1*e3 + e2*e3"));
  CHECK(jacobian_polynomial(test::circle()) == poly("e"));
  const auto tree = test::graph({"a", "b"}, {{"x", "a", "b"}});
  CHECK(jacobian_polynomial(tree) == MultiPoly(1));
  CHECK(jacobian_polynomial_dc(tree) == MultiPoly(1));
  CHECK(jacobian_polynomial(test::k4()).size() == 16);
  for (const auto& spec : test::campaign_specs(30)) {
    CHECK(jacobian_polynomial(spec.base) == jacobian_polynomial_dc(spec.base));
    const auto total = build_from_voltage(spec).total();
    CHECK(jacobian_polynomial(total) == jacobian_polynomial_dc(total));
  }
}

TEST_CASE("ogods of the two-component cover") {
  const auto c = test::fig1();
  const auto ogods = enumerate_ogods(c);
  REQUIRE(ogods.size() == 4);
  const std::vector<std::pair<std::vector<std::string>, long>> expected = {
      {{"e1", "e3", "e4"}, 3}, {{"e1", "e3", "e5"}, 2}, {{"e2", "e3", "e4"}, 4}, {{"e2", "e3", "e5"}, 3}};
  for (std::size_t i = 0; i < ogods.size(); ++i) {
    CHECK(ogods[i].edges.ids(c.base()) == expected[i].first);
    CHECK(ogods[i].rank == expected[i].second);
    CHECK(ogod_rank(c.base(), ogods[i].edges) == expected[i].second);
  }
  CHECK(enumerate_ogods_classified(c) == ogods);
  CHECK(prym_polynomial(c) == poly("16*e1*e3*e4 + 4*e1*e3*e5 + 64*e2*e3*e4 + 16*e2*e3*e5"));
}

TEST_CASE("golden volume by every route") {
  const auto c = test::fig1();
  for (auto m : {Method::Combinatorial, Method::Homology, Method::Kernel}) {
    const auto r = prym_volume(c, m);
    CHECK(r.value.to_string() == kFig1);
    CHECK(r.method == m);
    CHECK(r.stats.h == 3);
  }
  std::map<std::string, Rational> ones;
  for (const auto& e : c.base().edges()) ones[e.id] = 1;
  CHECK(prym_volume_combinatorial(c).eval(ones) == 50);
  CHECK(verify_thm_a(c).ok());
}

TEST_CASE("small covers") {
  CHECK(prym_volume_combinatorial(test::disc_left()) == poly("4*e + f"));
  CHECK(prym_volume_homology(test::disc_left()) == poly("4*e + f"));
  CHECK(prym_volume_kernel(test::disc_left()) == poly("4*e + f"));
  const auto left = test::disc_left();
  const auto right = contract_cover(left, EdgeSet::from_ids(left.base(), {"f"}));
  CHECK(prym_volume_combinatorial(right) == poly("2*e"));
  CHECK(prym_volume_kernel(right) == poly("2*e"));
  // Setting f = 0 in the left volume does not give the right one.
  CHECK(prym_volume_combinatorial(left).substitute({{"f", 0}}) != prym_volume_combinatorial(right));

  CHECK(prym_volume_combinatorial(test::dilated_circle()) == poly("e"));
  CHECK(prym_volume_homology(test::dilated_circle()) == poly("e"));

  const auto free = test::theta_free();
  CHECK(prym_volume_combinatorial(free) == poly("e1 + e2"));
  CHECK(prym_volume_homology(free) == poly("e1 + e2"));
  CHECK_THROWS_AS(prym_volume_kernel(free), InapplicableError);
  CHECK_THROWS_AS(prym_volume(free, Method::Kernel), InapplicableError);
  CHECK(prym_volume_combinatorial(test::odd_circle()) == MultiPoly(1));
  CHECK(prym_volume_homology(test::odd_circle()) == MultiPoly(1));
}

TEST_CASE("fully dilated covers have volume one") {
  for (const auto& g : {test::theta(), test::k4(), test::fig1_base(), test::circle()}) {
    const auto c = test::fully_dilated(g);
    CHECK(dilation_stats(c).h == 0);
    CHECK(prym_volume_combinatorial(c) == MultiPoly(1));
    CHECK(prym_volume_homology(c) == MultiPoly(1));
    CHECK(prym_volume_kernel(c) == MultiPoly(1));
    const auto jt = jacobian_polynomial(c.total(), total_symbols(c));
    CHECK(jt == MultiPoly(pow2(-genus(g))) * jacobian_polynomial(g));
  }
}

TEST_CASE("all vertices dilated") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    const auto g = random_connected_graph(2 + i % 3, 3 + i, rng);
    const auto c = test::all_vertices_dilated(g);
    const auto v = static_cast<long>(g.num_vertices());
    CHECK(prym_volume_combinatorial(c) == MultiPoly(pow2(v - 1)) * edge_product(g));
    CHECK(prym_volume_homology(c) == prym_volume_combinatorial(c));
  }
}

TEST_CASE("routes agree and volumes are homogeneous of degree h") {
  int i = 0;
  for (const auto& spec : test::campaign_specs(45)) {
    const auto c = build_from_voltage(spec);
    const auto s = dilation_stats(c);
    CAPTURE(i++);
    const auto comb = prym_volume_combinatorial(c);
    CHECK(comb == prym_volume_homology(c));
    if (!s.is_free()) CHECK(comb == prym_volume_kernel(c));
    CHECK(comb.is_homogeneous());
    CHECK(static_cast<long>(comb.degree()) == s.h);
    CHECK(verify_thm_a(c).ok());
    CHECK(enumerate_ogods(c) == enumerate_ogods_classified(c));
  }
}

TEST_CASE("subdividing an edge keeps the volume") {
  int i = 0;
  for (const auto& spec : test::campaign_specs(24)) {
    const auto c = build_from_voltage(spec);
    const auto& e = spec.base.edge(static_cast<std::size_t>(i++) % spec.base.num_edges());
    const auto sub = build_from_voltage(test::subdivide(spec, e.id));
    CHECK(validate(sub).ok());
    const Rational before = prym_volume_combinatorial(c).eval(lengths_of(c.base()));
    const Rational after = prym_volume_combinatorial(sub).eval(lengths_of(sub.base()));
    CHECK(before == after);
  }
}

TEST_CASE("deformation moves") {
  const auto fig1 = verify_deformation_moves(test::fig1());
  CHECK(fig1.ok());
  CHECK(fig1.checks.size() > 10);
  const auto disc = verify_deformation_moves(test::disc_left());
  CHECK(disc.ok());
  bool saw_jump = false;
  for (const auto& check : disc.checks) saw_jump = saw_jump || check.status == Status::Info;
  CHECK(saw_jump);
  for (const auto& spec : test::campaign_specs(15)) CHECK(verify_deformation_moves(build_from_voltage(spec)).ok());
}

TEST_CASE("homology identities report") {
  CHECK(verify_homology_identities(test::fig1()).ok());
  CHECK(verify_homology_identities(test::theta_free()).ok());
  CHECK(verify_homology_identities(test::fully_dilated(test::k4())).ok());
}

TEST_CASE("methods and reports") {
  CHECK(parse_method("kernel") == Method::Kernel);
  CHECK(std::string(to_string(Method::Homology)) == "homology");
  CHECK_THROWS_AS(parse_method("magic"), ParseError);
  Report r;
  r.add("x", "info", Status::Info);
  r.add("x", "skipped", Status::Skip);
  CHECK(r.ok());
  r.expect("x", "holds", true);
  CHECK(r.ok());
  r.expect("x", "fails", false, "detail");
  CHECK_FALSE(r.ok());
  CHECK(r.checks.back().status == Status::Fail);
  CHECK(std::string(to_string(Status::Skip)) == "skipped");
}

TEST_CASE("disconnected totals are rejected") {
  const auto trivial = build_from_voltage({test::circle(), {}, {}, {{"e", 1}}});
  CHECK_THROWS_AS(require_prym_ready(trivial), ValidationError);
}
