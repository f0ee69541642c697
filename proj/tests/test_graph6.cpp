#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "egt/graph6.hpp"

using namespace egt;

namespace {

Graph random_graph(int n, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1u) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("fixed decode vectors") {
  CHECK(graph6_decode("A_").graph == Graph::complete(2));
  CHECK(graph6_decode("A?").graph == Graph::empty(2));
  CHECK(graph6_decode("Bw").graph == Graph::complete(3));
  CHECK(graph6_decode("C~").graph == Graph::complete(4));
}

TEST_CASE("fixed encode vectors") {
  CHECK(graph6_encode(Graph::complete(2)) == "A_");
  CHECK(graph6_encode(Graph::empty(5)) == "D??");
  CHECK(graph6_encode(Graph::complete(6)) == "E~~w");
}

TEST_CASE("decoding is label-preserving") {
  // single edge 0-2 on three vertices: bits x(0,1)=0, x(0,2)=1, x(1,2)=0,
  // so the group is 010000 = 16 and the body byte is 63+16 = 'O'
  Graph g = graph6_decode("BO").graph;
  CHECK(g.n() == 3);
  CHECK(g.m() == 1);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("round trip on random graphs up to the capacity") {
  std::mt19937 rng(29);
  for (int n = 0; n <= 32; ++n) {
    Graph g = random_graph(n, rng);
    Graph6Decoded back = graph6_decode(graph6_encode(g));
    CHECK(back.graph == g);
    CHECK_FALSE(back.padding_warning);
  }
}

TEST_CASE("encoding length is 1 + ceil(C(n,2)/6)") {
  std::mt19937 rng(31);
  for (int n = 0; n <= 32; ++n) {
    Graph g = random_graph(n, rng);
    std::size_t expect = 1 + static_cast<std::size_t>((n * (n - 1) / 2 + 5) / 6);
    CHECK(graph6_encode(g).size() == expect);
  }
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("C"), Graph6Error);      // truncated body
  CHECK_THROWS_AS(graph6_decode("C~~"), Graph6Error);    // trailing bytes
  CHECK_THROWS_AS(graph6_decode("B\x1f"), Graph6Error);  // byte below 63
  CHECK_THROWS_AS(graph6_decode("~??"), Graph6Error);    // long form header
  CHECK_THROWS_AS(graph6_decode("}???"), Graph6Error);   // n = 62 beyond capacity
}

TEST_CASE("nonzero padding is a warning, not a failure") {
  // n = 3 uses 3 of 6 group bits; '}' - 63 = 62 = 111110 sets a padding bit
  Graph6Decoded dec = graph6_decode("B}");
  CHECK(dec.padding_warning);
  CHECK(dec.graph == Graph::complete(3));
}

TEST_CASE("stream reader skips blanks, headers, and CR") {
  std::istringstream in(">>graph6<<\nA_\r\n\nBw\n");
  Graph6Reader reader(in);
  auto first = reader.next();
  REQUIRE(first.has_value());
  CHECK(*first == "A_");
  CHECK(reader.line_number() == 2);
  auto second = reader.next();
  REQUIRE(second.has_value());
  CHECK(*second == "Bw");
  CHECK(reader.line_number() == 4);
  CHECK_FALSE(reader.next().has_value());
}

TEST_CASE("header glued to the first record is still read") {
  std::istringstream in(">>graph6<<A?\n");
  Graph6Reader reader(in);
  auto rec = reader.next();
  REQUIRE(rec.has_value());
  CHECK(graph6_decode(*rec).graph == Graph::empty(2));
}
