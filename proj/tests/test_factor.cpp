#include <doctest.h>

#include <random>

#include "abcover/enumeration.hpp"
#include "abcover/errors.hpp"
#include "abcover/factor.hpp"
#include "oracles.hpp"

using namespace abcover;

namespace {

DegreeSpec exact(int n, int k) { return DegreeSpec::uniform(n, k, k); }

}  // namespace

TEST_SUITE("factor") {

TEST_CASE("q_hat examples") {
  CHECK(q_hat(complete(3), exact(3, 1), {}, {}) == 1);
  CHECK(q_hat(complete(4), exact(4, 1), VertexSet{0}, VertexSet{1}) == 0);
  CHECK(q_hat(complete(5), DegreeSpec::uniform(5, 1, 2), {}, {}) == 0);
  CHECK_THROWS_AS(q_hat(complete(4), exact(3, 1), {}, {}), InvalidParameter);
}

TEST_CASE("lovasz deficiency examples") {
  CHECK(lovasz_deficiency(complete(3), exact(3, 1), {}, {}) == -1);
  CHECK(lovasz_deficiency(complete(4), exact(4, 1), VertexSet{0}, VertexSet{1}) == 2);
  CHECK(lovasz_deficiency(petersen(), DegreeSpec::uniform(10, 0, 10), {}, {}) == 0);
  CHECK_THROWS_AS(lovasz_deficiency(complete(4), exact(4, 1), VertexSet{0}, VertexSet{0}),
                  InvalidParameter);
}

TEST_CASE("has_gf_factor examples") {
  const auto k3 = has_gf_factor(complete(3), exact(3, 1));
  CHECK_FALSE(k3.exists);
  REQUIRE(k3.certificate);
  CHECK(k3.certificate->s.empty());
  CHECK(k3.certificate->t.empty());
  CHECK(k3.certificate->value == -1);
  CHECK(has_gf_factor(cycle(5), exact(5, 2)).exists);
  CHECK_FALSE(has_gf_factor(h_graph(10, 2), exact(10, 2)).exists);
  CHECK_THROWS_AS(has_gf_factor(complete(17), exact(17, 2)), ResourceLimit);
}

TEST_CASE("find_factor examples") {
  const auto pm = find_factor(complete(4), exact(4, 1));
  REQUIRE(pm);
  CHECK(pm->edges.size() == 2);
  CHECK_FALSE(find_factor(cycle(5), exact(5, 1)));
  const std::vector<Edge> forced{{0, 1}};
  const auto w = find_factor(complete(7), DegreeSpec::uniform(7, 1, 2), forced);
  REQUIRE(w);
  CHECK(std::find(w->edges.begin(), w->edges.end(), Edge{0, 1}) != w->edges.end());
  CHECK(is_factor(complete(7), DegreeSpec::uniform(7, 1, 2), *w));
  const std::vector<Edge> missing{{0, 1}};
  CHECK_THROWS_AS(find_factor(empty_graph(3), exact(3, 0), missing), InvalidParameter);
  CHECK_THROWS_AS(find_factor(complete(13), exact(13, 2)), ResourceLimit);
}

TEST_CASE("edge-forced factors") {
  for (const auto& e : cycle(4).edges()) CHECK(has_factor_containing_edge(cycle(4), 1, 1, e));
  // H_{6,3}: attachment pair {0, 1}; removing it leaves K_3 and the isolated vertex 5.
  CHECK_FALSE(has_factor_containing_edge(h_graph(6, 3), 1, 1, Edge{0, 1}));
  for (const auto& e : h_graph(10, 2).edges()) {
    CHECK_FALSE(has_factor_containing_edge(h_graph(10, 2), 2, 2, e));
  }
  CHECK_THROWS_AS(has_factor_containing_edge(path(3), 1, 1, Edge{0, 2}), InvalidParameter);
}

TEST_CASE("both edge-forced routes agree with the brute-force oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, 0.6, rng);
    if (g.size() == 0) continue;
    const int a = 1 + static_cast<int>(rng() % 2);
    const int b = a + static_cast<int>(rng() % 2);
    const auto edges = oracle::edge_list(oracle::adjacency(g));
    const auto u = oracle::factor_union(g, std::vector<int>(static_cast<std::size_t>(n), a),
                                        std::vector<int>(static_cast<std::size_t>(n), b));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge e{edges[i].first, edges[i].second};
      const bool expected = (u.used >> i) & 1;
      CHECK(has_factor_containing_edge(g, a, b, e) == expected);
      CHECK(has_factor_containing_edge_by_deficiency(g, a, b, e) == expected);
    }
  }
}

TEST_CASE("deficiency scan and search agree with brute force on random degree bounds") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    DegreeSpec spec;
    for (int v = 0; v < n; ++v) {
      const int lo = static_cast<int>(rng() % 3);
      spec.lower.push_back(lo);
      spec.upper.push_back(lo + static_cast<int>(rng() % 3));
    }
    const bool expected = oracle::factor_union(g, spec.lower, spec.upper).any;
    const auto scan = has_gf_factor(g, spec);
    CHECK(scan.exists == expected);
    if (!scan.exists) {
      REQUIRE(scan.certificate);
      CHECK(scan.certificate->value < 0);
      CHECK(lovasz_deficiency(g, spec, scan.certificate->s, scan.certificate->t) ==
            scan.certificate->value);
    }
    const auto w = find_factor(g, spec);
    CHECK(w.has_value() == expected);
    if (w) CHECK(is_factor(g, spec, *w));
  }
}

TEST_CASE("serial and parallel scans return the same certificate") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, 0.45, rng);
    const auto spec = DegreeSpec::uniform(n, 1 + static_cast<int>(rng() % 2), 2);
    const auto s = has_gf_factor(g, spec, {16, Execution::Serial});
    const auto p = has_gf_factor(g, spec, {16, Execution::Parallel});
    CHECK(s.exists == p.exists);
    if (s.certificate && p.certificate) {
      CHECK(s.certificate->s == p.certificate->s);
      CHECK(s.certificate->t == p.certificate->t);
    }
  }
}

TEST_CASE("degree spec validation") {
  DegreeSpec bad{{2}, {1}};
  CHECK_THROWS_AS(bad.validate(1), InvalidParameter);
  CHECK_THROWS_AS(DegreeSpec::uniform(3, 2, 1), InvalidParameter);
  CHECK_THROWS_AS(has_ab_factor(complete(3), 0, -1), InvalidParameter);
}

}
