#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "egt/enumerate.hpp"
#include "egt/solvers.hpp"
#include "oracles.hpp"

using namespace egt;

namespace {

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

std::uint32_t rank_mask_of(const Graph& g, const EdgeSet& s) {
  std::uint32_t mask = 0;
  auto edges = g.edge_pairs();
  for (int r = 0; r < static_cast<int>(edges.size()); ++r)
    if (s.contains(edges[static_cast<std::size_t>(r)].first,
                   edges[static_cast<std::size_t>(r)].second))
      mask |= 1u << r;
  return mask;
}

}  // namespace

TEST_CASE("alpha1 on the named graphs") {
  CHECK(alpha1(Graph::complete(6)).value == 3);
  CHECK(alpha1(Graph::complete_bipartite(3, 3)).value == 9);
  CHECK(alpha1(Graph::cycle(5)).value == 5);
  std::vector<Graph> parts{Graph::complete_bipartite(1, 1), Graph::complete_bipartite(2, 2)};
  CHECK(alpha1(Graph::join(parts)).value == 5);
  CHECK(alpha1(Graph::empty(0)).value == 0);
  CHECK(alpha1(Graph::empty(4)).value == 0);
}

TEST_CASE("tau on the named graphs") {
  CHECK(tau(Graph::complete(6)).value == 6);
  CHECK(tau(Graph::complete(4)).value == 2);
  CHECK(tau(Graph::cycle(5)).value == 0);
  CHECK(tau(Graph::complete(5)).value == 4);
}

TEST_CASE("complete graphs up to n = 8 follow the closed forms") {
  // alpha1 = floor(n/2), tau = C(n,2) - floor(n^2/4), tau_b the same, b = 2
  for (int n = 3; n <= 8; ++n) {
    Graph kn = Graph::complete(n);
    CHECK(alpha1(kn).value == n / 2);
    CHECK(tau(kn).value == n * (n - 1) / 2 - n * n / 4);
    CHECK(tau_b(kn).value == n * (n - 1) / 2 - n * n / 4);
  }
}

TEST_CASE("tau_b on the named graphs") {
  CHECK(tau_b(Graph::cycle(5)).value == 1);
  CHECK(tau_b(Graph::complete(4)).value == 2);
  CHECK(tau_b(Graph::complete_bipartite(3, 4)).value == 0);
  CHECK(tau_b(Graph::complete(6)).value == 6);
}

TEST_CASE("bipartite order on the named graphs") {
  for (int n = 2; n <= 7; ++n) CHECK(bipartite_order(Graph::complete(n)).value == 2);
  CHECK(bipartite_order(Graph::cycle(5)).value == 4);
  CHECK(bipartite_order(Graph::complete_bipartite(2, 5)).value == 7);
  CHECK(bipartite_order(Graph::empty(6)).value == 6);
}

TEST_CASE("solver values and witnesses match brute force on every graph with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_all(n).graphs) {
      oracle::BruteResult a1 = oracle::alpha1(g);
      SolveResult a1_got = alpha1(g);
      CHECK(a1_got.value == a1.value);
      CHECK(rank_mask_of(g, *a1_got.edge_witness) == a1.witness_mask);

      oracle::BruteResult tc = oracle::tau(g);
      SolveResult tau_got = tau(g);
      CHECK(tau_got.value == tc.value);
      CHECK(rank_mask_of(g, *tau_got.edge_witness) == tc.witness_mask);

      oracle::BruteResult tbc = oracle::tau_b(g);
      SolveResult tb_got = tau_b(g);
      CHECK(tb_got.value == tbc.value);
      CHECK(rank_mask_of(g, *tb_got.edge_witness) == tbc.witness_mask);

      oracle::BruteResult bb = oracle::max_bipartite_vertices(g);
      SolveResult b_got = bipartite_order(g);
      CHECK(b_got.value == bb.value);
      CHECK(*b_got.vertex_witness == bb.witness_mask);
    }
  }
}

TEST_CASE("witness feasibility on random graphs up to n = 8") {
  std::mt19937 rng(37);
  for (int rep = 0; rep < 60; ++rep) {
    Graph g = random_graph(8, rng);
    SolveResult a1 = alpha1(g);
    CHECK(is_triangle_independent(g, *a1.edge_witness));
    CHECK(a1.edge_witness->size() == a1.value);

    SolveResult t = tau(g);
    CHECK(is_triangle_edge_cover(g, *t.edge_witness));
    CHECK(t.edge_witness->size() == t.value);

    SolveResult tb = tau_b(g);
    CHECK(is_bipartite(remove_edges(g, *tb.edge_witness)));
    CHECK(tb.edge_witness->size() == tb.value);

    SolveResult b = bipartite_order(g);
    CHECK(bipartition_of(g, *b.vertex_witness).bipartite);
    CHECK(std::popcount(*b.vertex_witness) == b.value);
  }
}

TEST_CASE("monotonicity: edge insertion and deletion move the parameters the right way") {
  std::mt19937 rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    Graph g = random_graph(6, rng);
    // adding one edge raises alpha1 by at most one
    std::vector<std::pair<int, int>> non_edges;
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        if (!g.has_edge(u, v)) non_edges.emplace_back(u, v);
    if (!non_edges.empty()) {
      auto [u, v] = non_edges[rng() % non_edges.size()];
      auto edges = g.edge_pairs();
      edges.emplace_back(u, v);
      Graph bigger = Graph::from_edges(g.n(), edges);
      CHECK(alpha1(bigger).value <= alpha1(g).value + 1);
    }
    // deleting one edge never raises tau or tau_b
    auto edges = g.edge_pairs();
    if (!edges.empty()) {
      std::size_t drop = rng() % edges.size();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
      Graph smaller = Graph::from_edges(g.n(), edges);
      CHECK(tau(smaller).value <= tau(g).value);
      CHECK(tau_b(smaller).value <= tau_b(g).value);
    }
  }
}

TEST_CASE("solvers are deterministic") {
  std::mt19937 rng(43);
  Graph g = random_graph(7, rng);
  SolveResult first = alpha1(g);
  SolveResult second = alpha1(g);
  CHECK(first.value == second.value);
  CHECK(*first.edge_witness == *second.edge_witness);
  CHECK(first.nodes_explored == second.nodes_explored);
  CHECK(*tau(g).edge_witness == *tau(g).edge_witness);
  CHECK(*tau_b(g).edge_witness == *tau_b(g).edge_witness);
}

TEST_CASE("randomized bipartization: exact distribution on K_4 with B = {0,1}") {
  Graph k4 = Graph::complete(4);
  std::uint32_t b_set = 0b0011u;
  BipartizationTrials trials = randomized_bipartization(k4, b_set, 4000, 7);
  // the four equally likely placements delete 3, 2, 2, 3 edges
  CHECK(trials.mean() == doctest::Approx(2.5).epsilon(0.05));
  CHECK(trials.best.size() == 2);
  // every outcome deletes at least 2 edges, so the mean cannot dip below 2
  CHECK(trials.mean() >= 2.0);
}

TEST_CASE("randomized bipartization: bipartite inputs need no deletions") {
  Graph c4 = Graph::cycle(4);
  BipartizationTrials trials = randomized_bipartization(c4, c4.vertex_mask(), 10, 1);
  CHECK(trials.mean() == 0.0);
  CHECK(trials.best.empty());
}

TEST_CASE("randomized bipartization: the best set always leaves a bipartite graph") {
  std::mt19937 rng(47);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = random_graph(7, rng);
    SolveResult b = bipartite_order(g);
    BipartizationTrials trials = randomized_bipartization(g, *b.vertex_witness, 50, rep);
    CHECK(is_bipartite(remove_edges(g, trials.best)));
  }
}

TEST_CASE("randomized bipartization is reproducible from the seed") {
  Graph g = Graph::complete(6);
  std::uint32_t b_set = 0b000011u;
  BipartizationTrials a = randomized_bipartization(g, b_set, 500, 99);
  BipartizationTrials b = randomized_bipartization(g, b_set, 500, 99);
  CHECK(a.deleted_sum == b.deleted_sum);
  CHECK(a.deleted_sq_sum == b.deleted_sq_sum);
  CHECK(a.best == b.best);
  BipartizationTrials c = randomized_bipartization(g, b_set, 500, 100);
  CHECK(a.deleted_sum != c.deleted_sum);  // different seed, different stream
}

TEST_CASE("randomized bipartization rejects bad inputs") {
  Graph k4 = Graph::complete(4);
  CHECK_THROWS(randomized_bipartization(k4, 0b0111u, 10, 1));  // K_3 inside B
  CHECK_THROWS(randomized_bipartization(k4, 0b0011u, 0, 1));   // no trials
  CHECK_THROWS(derandomized_bipartization(k4, 0b0111u));
}

TEST_CASE("derandomized bipartization on K_4 with B = {0,1} deletes exactly 2 edges") {
  Graph k4 = Graph::complete(4);
  EdgeSet deleted = derandomized_bipartization(k4, 0b0011u);
  CHECK(deleted.size() == 2);
  CHECK(is_bipartite(remove_edges(k4, deleted)));
}

TEST_CASE("derandomized bipartization: bipartite graphs with B = V need nothing") {
  Graph c6 = Graph::cycle(6);
  CHECK(derandomized_bipartization(c6, c6.vertex_mask()).empty());
}

TEST_CASE("derandomized bipartization meets the half-remainder bound exhaustively, n <= 6") {
  // over every graph and every maximal induced-bipartite vertex set
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_all(n).graphs) {
      for (std::uint32_t b_set = 1; b_set < (1u << n); ++b_set) {
        if (!bipartition_of(g, b_set).bipartite) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
          if (!((b_set >> v) & 1u) && bipartition_of(g, b_set | (1u << v)).bipartite)
            maximal = false;
        if (!maximal) continue;
        int inside = induced_subgraph(g, b_set).m();
        EdgeSet deleted = derandomized_bipartization(g, b_set);
        CHECK(2 * deleted.size() <= g.m() - inside);
        CHECK(is_bipartite(remove_edges(g, deleted)));
      }
    }
  }
}

TEST_CASE("node counters are populated") {
  Graph k6 = Graph::complete(6);
  CHECK(alpha1(k6).nodes_explored > 0);
  CHECK(tau(k6).nodes_explored > 0);
  CHECK(tau_b(k6).nodes_explored == 32);  // 2^(n-1) bipartitions scanned
  CHECK(bipartite_order(k6).nodes_explored > 0);
}
