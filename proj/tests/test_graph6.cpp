#include <doctest.h>

#include <random>

#include "abcover/errors.hpp"
#include "abcover/graph6.hpp"
#include "oracles.hpp"

using namespace abcover;

TEST_SUITE("graph6") {

TEST_CASE("known encodings") {
  // Reference strings produced by networkx for the same labelled graphs.
  CHECK(encode_graph6(h_graph(6, 3)) == "E~~?");
  CHECK(encode_graph6(h_graph(8, 3)) == "G~~~}?");
  CHECK(encode_graph6(h_graph(7, 1)) == "F~~w?");
  CHECK(encode_graph6(h_graph(10, 2)) == "I~~~~~~_?");
  CHECK(encode_graph6(h_graph(4, 1)) == "Cw");
  CHECK(encode_graph6(h_graph(5, 2)) == "D~_");
  CHECK(encode_graph6(complete(4)) == "C~");
  CHECK(encode_graph6(empty_graph(5)) == "D??");
  CHECK(encode_graph6(empty_graph(0)) == "?");
  CHECK(encode_graph6(petersen()) == "IheA@GUAo");
}

TEST_CASE("round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 80);
    const Graph g = oracle::random_graph(n, 0.4, rng);
    CHECK(parse_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("long size header") {
  const Graph g = cycle(100);
  const std::string text = encode_graph6(g);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("optional header is accepted") {
  CHECK(parse_graph6(">>graph6<<C~") == complete(4));
}

TEST_CASE("malformed input reports a byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6(":Fa@x^"), ParseError);
  CHECK_THROWS_AS(parse_graph6("&C~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  try {
    parse_graph6("D?\x7f");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  // Padding bits must be zero: n = 2 has one data bit, "A" sets only bit 5.
  CHECK_THROWS_AS(parse_graph6("A@"), ParseError);
  CHECK(parse_graph6("A_") == complete(2));
}

}
