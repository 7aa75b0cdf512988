#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "abcover/enumeration.hpp"
#include "abcover/errors.hpp"
#include "abcover/graph6.hpp"
#include "oracles.hpp"

using namespace abcover;

TEST_SUITE("enumeration") {

TEST_CASE("canonical form is label invariant") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    CHECK(parse_graph6(canonical_form(g).bytes).size() == g.size());
  }
}

TEST_CASE("regular graphs with many automorphisms") {
  CHECK(are_isomorphic(cycle(4), complete_bipartite(2, 2)));
  CHECK_FALSE(are_isomorphic(path(4), star(3)));
  CHECK_FALSE(are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3))));
  std::vector<int> perm{3, 7, 1, 0, 9, 2, 5, 8, 4, 6};
  CHECK(are_isomorphic(petersen(), relabel(petersen(), perm)));
  CHECK_FALSE(are_isomorphic(petersen(), disjoint_union(cycle(5), cycle(5))));
  CHECK_THROWS_AS(canonical_form(complete(13)), ResourceLimit);
}

TEST_CASE("class counts match the permutation oracle") {
  for (int n = 0; n <= 6; ++n) {
    CHECK(enumerate_all(n).size() == oracle::count_classes(n));
  }
}

TEST_CASE("class counts up to eight vertices") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) CHECK(enumerate_all(n).size() == expected[n]);
  CHECK_THROWS_AS(enumerate_all(9), ResourceLimit);
}

TEST_CASE("representatives are canonical, sorted and pairwise distinct") {
  const auto graphs = enumerate_all(7);
  std::vector<std::string> keys;
  for (const auto& g : graphs) {
    keys.push_back(encode_graph6(g));
    CHECK(canonical_form(g).bytes == keys.back());
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::set<std::string>(keys.begin(), keys.end()).size() == keys.size());
}

TEST_CASE("dense candidates") {
  const auto k0 = enumerate_dense_candidates(7, 0);
  REQUIRE(k0.size() == 1);
  CHECK(are_isomorphic(k0[0], complete(7)));
  CHECK(enumerate_dense_candidates(6, 1).size() == 2);
  // Classes with at most k complement edges equal the classes of graphs with at most k edges.
  for (int n = 3; n <= 7; ++n) {
    const auto all = enumerate_all(n);
    for (int k = 0; k <= std::min<long>(5, binomial2(n)); ++k) {
      const auto expected = std::count_if(all.begin(), all.end(), [&](const Graph& g) {
        return binomial2(n) - g.size() <= k;
      });
      CHECK(enumerate_dense_candidates(n, k).size() == static_cast<std::size_t>(expected));
    }
  }
  CHECK_THROWS_AS(enumerate_dense_candidates(5, 11), InvalidParameter);
  CHECK_THROWS_AS(enumerate_dense_candidates(5, -1), InvalidParameter);
}

TEST_CASE("tasks with filters") {
  EnumerationTask task;
  task.n = 5;
  task.filter = "connected";
  CHECK(run_enumeration(task).size() == 21);
  task.filter = "bipartite";
  CHECK(run_enumeration(task).size() == 13);
  task.filter = "min-degree:2";
  for (const auto& g : run_enumeration(task)) CHECK(min_degree(g) >= 2);
  task.filter = "planar";
  CHECK_THROWS_AS(run_enumeration(task), InvalidParameter);
  EnumerationTask dense;
  dense.n = 10;
  dense.mode = EnumerationTask::Mode::ComplementBudget;
  dense.budget = 2;
  CHECK(run_enumeration(dense).size() == 4);
}

TEST_CASE("class cap is enforced") {
  CHECK_THROWS_AS(enumerate_all(6, EnumerationLimits{100}), ResourceLimit);
}

TEST_CASE("graph6 streams") {
  std::istringstream one("C~\n");
  const auto k4 = ingest_graph6(one);
  REQUIRE(k4.size() == 1);
  CHECK(k4[0] == complete(4));

  std::istringstream empty("");
  CHECK(ingest_graph6(empty).empty());

  std::istringstream crlf("C~\r\n\nD??\r\n");
  CHECK(ingest_graph6(crlf).size() == 2);

  std::istringstream bad("C~\nC~~\n");
  try {
    ingest_graph6(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  std::ostringstream out;
  write_graph6(out, {complete(4), empty_graph(5)});
  CHECK(out.str() == "C~\nD??\n");

  CHECK_THROWS_AS(ingest_graph6_file("/nonexistent/abcover.g6"), InvalidParameter);
}

}
