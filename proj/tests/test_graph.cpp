#include <doctest.h>

#include "prym/error.hpp"
#include "prym/graph.hpp"
#include "support.hpp"

using namespace prym;
using prym::test::graph;

namespace {

std::vector<std::vector<std::string>> complement_ids(const MetricGraph& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : spanning_tree_complements(g)) out.push_back(c.ids(g));
  return out;
}

}  // namespace

TEST_CASE("genus") {
  CHECK(genus(test::circle()) == 1);
  const auto tree = graph({"a", "b", "c", "d", "e"}, {{"1", "a", "b"}, {"2", "b", "c"}, {"3", "b", "d"}, {"4", "d", "e"}});
  CHECK(genus(tree) == 0);
  CHECK(genus(test::fig1_base()) == 3);
  // Betti number of a disconnected graph counts every component.
  const auto two_loops = graph({"a", "b"}, {{"x", "a", "a"}, {"y", "b", "b"}});
  CHECK(genus(two_loops) == 2);
}

TEST_CASE("connected components") {
  CHECK(connected_components(test::k4()).count == 1);
  const auto two_loops = graph({"a", "b"}, {{"x", "a", "a"}, {"y", "b", "b"}});
  const auto comps = connected_components(two_loops);
  CHECK(comps.count == 2);
  CHECK(comps.of_vertex == std::vector<std::size_t>{0, 1});

  const auto g = test::fig1_base();
  const auto f = EdgeSet::from_ids(g, {"e1", "e3", "e4"});
  std::vector<bool> keep(g.num_edges(), true);
  for (auto e : f) keep[e] = false;
  CHECK(connected_components(g, keep).count == 3);
}

TEST_CASE("spanning tree complements") {
  CHECK(complement_ids(test::circle()) == std::vector<std::vector<std::string>>{{"e"}});
  CHECK(complement_ids(test::theta()) ==
        std::vector<std::vector<std::string>>{{"e1", "e2"}, {"e1", "e3"}, {"e2", "e3"}});
  CHECK(complement_ids(test::theta()) == test::brute_tree_complements(test::theta()));
  CHECK(spanning_tree_complements(test::k4()).size() == 16);
  CHECK(complement_ids(test::k4()) == test::brute_tree_complements(test::k4()));
  CHECK(complement_ids(test::fig1_base()) == test::brute_tree_complements(test::fig1_base()));

  for (const auto& c : spanning_tree_complements(test::k4())) {
    CHECK(static_cast<long>(c.size()) == genus(test::k4()));
    const auto rest = delete_edges(test::k4(), c);
    CHECK(is_connected(rest));
    CHECK(genus(rest) == 0);
  }

  const auto two_loops = graph({"a", "b"}, {{"x", "a", "a"}, {"y", "b", "b"}});
  CHECK_THROWS_WITH_AS(spanning_tree_complements(two_loops), "graph not connected", ValidationError);
}

TEST_CASE("spanning tree count matches the reduced Laplacian") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const auto g = random_connected_graph(2 + i % 4, 3 + i % 5, rng);
    const auto n = g.num_vertices();
    std::vector<std::vector<Rational>> lap(n - 1, std::vector<Rational>(n - 1));
    for (const auto& e : g.edges()) {
      if (e.is_loop()) continue;
      for (auto [x, y] : {std::pair{e.src, e.dst}, std::pair{e.dst, e.src}}) {
        if (x > 0) lap[x - 1][x - 1] += 1;
        if (x > 0 && y > 0) lap[x - 1][y - 1] -= 1;
      }
    }
    Rational det(1);
    for (std::size_t c = 0; c + 1 < n; ++c) {
      std::size_t p = c;
      while (lap[p][c] == 0) ++p;
      if (p != c) {
        std::swap(lap[p], lap[c]);
        det = -det;
      }
      det *= lap[c][c];
      for (std::size_t r = c + 1; r + 1 < n; ++r) {
        const Rational f = lap[r][c] / lap[c][c];
        for (std::size_t k = c; k + 1 < n; ++k) lap[r][k] -= f * lap[c][k];
      }
    }
    CHECK(Rational(static_cast<long>(spanning_tree_complements(g).size())) == det);
  }
}

TEST_CASE("contract edges") {
  const auto path = graph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "c", "c"}});
  const auto bridge = contract_edges(path, EdgeSet::from_ids(path, {"x"}));
  CHECK(bridge.graph.num_vertices() == 2);
  CHECK(genus(bridge.graph) == genus(path));
  CHECK(bridge.edge_map[path.edge_index("x")] == Contraction::npos);
  CHECK(bridge.graph.vertex_ids() == std::vector<std::string>{"a", "c"});

  const auto k4 = test::k4();
  const auto c = contract_edges(k4, EdgeSet::from_ids(k4, {"e1"}));
  CHECK(genus(c.graph) == genus(k4));
  CHECK(c.graph.num_edges() == k4.num_edges() - 1);
  CHECK(c.graph.edge(c.graph.edge_index("e4")).length == 1);

  // The disc example: contracting the loop f leaves a single edge.
  const auto disc = test::disc_base();
  const auto right = contract_edges(disc, EdgeSet::from_ids(disc, {"f"}));
  CHECK(right.graph.num_vertices() == 2);
  CHECK(right.graph.num_edges() == 1);
  CHECK(right.graph.edge(0).id == "e");

  CHECK_THROWS_AS(EdgeSet::from_ids(k4, {"nope"}), ParseError);
}

TEST_CASE("contraction preserves the Euler count on non-loops") {
  const auto g = test::fig1_base();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).is_loop()) continue;
    const auto c = contract_edges(g, EdgeSet({e})).graph;
    CHECK(genus(c) == genus(g));
  }
}

TEST_CASE("delete edges") {
  const auto loop = test::circle();
  CHECK(genus(delete_edges(loop, EdgeSet::from_ids(loop, {"e"}))) == 0);
  const auto path = graph({"a", "b"}, {{"x", "a", "b"}});
  CHECK(connected_components(delete_edges(path, EdgeSet::from_ids(path, {"x"}))).count == 2);
  const auto g = test::fig1_base();
  CHECK(connected_components(delete_edges(g, EdgeSet::from_ids(g, {"e2", "e3", "e5"}))).count == 3);
  CHECK(is_bridge(g, g.edge_index("e2")));
  CHECK_FALSE(is_bridge(g, g.edge_index("f1")));
  CHECK_FALSE(is_bridge(g, g.edge_index("e1")));
}

TEST_CASE("contraction and deletion commute on disjoint sets") {
  const auto g = test::k4();
  const auto a = delete_edges(contract_edges(g, EdgeSet::from_ids(g, {"e1"})).graph, {});
  const auto ca = contract_edges(g, EdgeSet::from_ids(g, {"e1"})).graph;
  const auto one = delete_edges(ca, EdgeSet::from_ids(ca, {"e6"}));
  const auto gd = delete_edges(g, EdgeSet::from_ids(g, {"e6"}));
  const auto two = contract_edges(gd, EdgeSet::from_ids(gd, {"e1"})).graph;
  CHECK(one.vertex_ids() == two.vertex_ids());
  REQUIRE(one.num_edges() == two.num_edges());
  for (std::size_t e = 0; e < one.num_edges(); ++e) {
    CHECK(one.edge(e).id == two.edge(e).id);
    CHECK(one.edge(e).src == two.edge(e).src);
    CHECK(one.edge(e).dst == two.edge(e).dst);
  }
  CHECK(a.num_edges() == ca.num_edges());
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(graph({"a", "a"}, {}), ValidationError);
  CHECK_THROWS_AS(graph({"a"}, {{"x", "a", "b"}}), ValidationError);
  CHECK_THROWS_AS(graph({"a"}, {{"x", "a", "a", "0"}}), ValidationError);
  CHECK_THROWS_AS(graph({"a"}, {{"x", "a", "a"}, {"x", "a", "a"}}), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK(parse_rational("6/4") == Rational(3, 2));
}

TEST_CASE("half-edges") {
  const auto g = graph({"a", "b"}, {{"x", "a", "b"}});
  CHECK(g.root(half_edge_of(0, End::Source)) == 0);
  CHECK(g.root(half_edge_of(0, End::Target)) == 1);
  CHECK(paired(half_edge_of(0, End::Source)) == half_edge_of(0, End::Target));
  CHECK(g.half_edge_id(1) == "x:t");
}
