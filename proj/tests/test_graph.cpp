#include <doctest.h>

#include <random>

#include "abcover/errors.hpp"
#include "abcover/graph.hpp"
#include "oracles.hpp"

using namespace abcover;

TEST_SUITE("graph") {

TEST_CASE("edge normalises endpoints") {
  const Edge e{5, 2};
  CHECK(e.u == 2);
  CHECK(e.v == 5);
  CHECK(to_string(e) == "2-5");
  CHECK(Edge{1, 2} < Edge{1, 3});
}

TEST_CASE("vertex set basics") {
  VertexSet s{3, 0, 70};
  CHECK(s.size() == 3);
  CHECK(s.contains(70));
  CHECK_FALSE(s.contains(1));
  CHECK(s.members() == std::vector<int>{0, 3, 70});
  CHECK(to_string(VertexSet{0, 1}) == "{0,1}");
  CHECK(to_string(VertexSet{}) == "{}");
  s.erase(70);
  CHECK(s == VertexSet::from_mask(0b1001));
  CHECK(VertexSet::range(2, 5) == VertexSet{2, 3, 4});
  CHECK(VertexSet{1, 2}.intersects(VertexSet{2, 9}));
  CHECK_FALSE(VertexSet{1}.intersects(VertexSet{2}));
}

TEST_CASE("named families have the advertised size") {
  CHECK(complete(6).size() == 15);
  CHECK(empty_graph(5).size() == 0);
  CHECK(path(5).size() == 4);
  CHECK(cycle(5).size() == 5);
  CHECK(star(3).size() == 3);
  CHECK(star(3).degree(0) == 3);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(petersen().size() == 15);
  CHECK(min_degree(petersen()) == 3);
  CHECK(max_degree(petersen()) == 3);
}

TEST_CASE("h_graph edge count and labelling") {
  for (int n = 1; n <= 12; ++n) {
    for (int gamma = 1; gamma <= n; ++gamma) {
      const Graph h = h_graph(n, gamma);
      CHECK(h.order() == n);
      CHECK(h.size() == binomial2(n - 1) + gamma - 1);
      CHECK(h.degree(n - 1) == gamma - 1);
      if (n >= 3 && gamma < n) CHECK(min_degree(h) == gamma - 1);
      for (int v = 0; v < gamma - 1; ++v) CHECK(h.adjacent(v, n - 1));
    }
  }
  CHECK_THROWS_AS(h_graph(5, 0), InvalidParameter);
  CHECK_THROWS_AS(h_graph(5, 6), InvalidParameter);
}

TEST_CASE("h_6_3 example") {
  const Graph h = h_graph(6, 3);
  CHECK(h.size() == 12);
  CHECK(h.degrees() == std::vector<int>{5, 5, 4, 4, 4, 2});
}

TEST_CASE("join, union and complement") {
  const Graph g = join(complete(3), empty_graph(3));
  CHECK(g.size() == 3 + 9);
  CHECK(complement(g).size() == 3);
  const Graph u = disjoint_union(path(3), cycle(4));
  CHECK(u.order() == 7);
  CHECK(u.size() == 6);
  CHECK(u.adjacent(3, 6));
  CHECK(complement(complement(petersen())) == petersen());
}

TEST_CASE("relabel preserves structure") {
  const std::vector<int> perm{2, 0, 1};
  const Graph g = relabel(path(3), perm);
  CHECK(g.adjacent(2, 0));
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(2, 1));
  const std::vector<int> bad{0, 0, 1};
  CHECK_THROWS_AS(relabel(path(3), bad), InvalidParameter);
}

TEST_CASE("components are ordered by smallest member") {
  Graph g(6, {{4, 5}, {0, 3}, {1, 2}});
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == VertexSet{0, 3});
  CHECK(comps[1] == VertexSet{1, 2});
  CHECK(comps[2] == VertexSet{4, 5});
}

TEST_CASE("bridges match the deletion oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    std::vector<std::pair<int, int>> got;
    for (const auto& e : bridges(g)) got.emplace_back(e.u, e.v);
    CHECK(got == oracle::bridges(g));
  }
  CHECK(bridges(cycle(6)).empty());
  CHECK(bridges(path(4)).size() == 3);
}

TEST_CASE("cross edges and independence") {
  const Graph g = complete(4);
  CHECK(cross_edges(g, VertexSet{0, 1}, VertexSet{2, 3}) == 4);
  CHECK_THROWS_AS(cross_edges(g, VertexSet{0, 1}, VertexSet{1}), InvalidParameter);
  CHECK(is_independent(star(3), VertexSet{1, 2, 3}));
  CHECK_FALSE(is_independent(star(3), VertexSet{0, 1}));
}

TEST_CASE("induced delete keeps original labels") {
  const auto sub = induced_delete(path(5), VertexSet{2});
  CHECK(sub.graph.order() == 4);
  CHECK(sub.graph.size() == 2);
  CHECK(sub.original == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("invalid vertices are rejected") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 3), InvalidParameter);
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidParameter);
  CHECK_THROWS_AS(Graph(-1), InvalidParameter);
}

TEST_CASE("wide graphs use several words per row") {
  const Graph g = complete(130);
  CHECK(g.size() == binomial2(130));
  CHECK(g.degree(129) == 129);
  CHECK(g.neighbors(64).size() == 129);
}

}
