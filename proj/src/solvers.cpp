#include "egt/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace egt {

namespace {

// Edges of g in ascending id order, plus a rank lookup keyed by edge id.
struct EdgeTable {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> rank_of_id;

  explicit EdgeTable(const Graph& g) : n(g.n()), pairs(g.edge_pairs()) {
    rank_of_id.assign(static_cast<std::size_t>(edge_slots(n)), -1);
    for (int r = 0; r < static_cast<int>(pairs.size()); ++r)
      rank_of_id[static_cast<std::size_t>(
          edge_id(n, pairs[static_cast<std::size_t>(r)].first,
                  pairs[static_cast<std::size_t>(r)].second))] = r;
  }

  int rank(int u, int v) const {
    return rank_of_id[static_cast<std::size_t>(edge_id(n, u, v))];
  }

  EdgeSet to_edgeset(const Graph& g, const std::vector<signed char>& flags,
                     signed char wanted) const {
    EdgeSet::Words words{};
    for (int r = 0; r < static_cast<int>(pairs.size()); ++r) {
      if (flags[static_cast<std::size_t>(r)] != wanted) continue;
      int id = edge_id(n, pairs[static_cast<std::size_t>(r)].first,
                       pairs[static_cast<std::size_t>(r)].second);
      words[static_cast<std::size_t>(id >> 6)] |= 1ull << (id & 63);
    }
    return EdgeSet::from_words(g, words);
  }
};

// Triangles as edge-rank triples, ranks ascending within each triple.
std::vector<std::array<int, 3>> triangle_ranks(const Graph& g, const EdgeTable& et) {
  std::vector<std::array<int, 3>> out;
  for (const Triangle& t : triangles(g))
    out.push_back({et.rank(t.a, t.b), et.rank(t.a, t.c), et.rank(t.b, t.c)});
  return out;
}

// ---------------------------------------------------------------------------
// alpha1: include/exclude DFS over edges in id order.  Including an edge
// excludes the other two edges of every triangle through it, so no triangle
// ever carries two chosen edges.  Exploring include before exclude makes the
// first optimum found the lex-least one.

struct Alpha1Search {
  int m;
  std::vector<std::vector<std::pair<int, int>>> partners;  // per rank: other two ranks per triangle
  std::vector<signed char> st;  // 0 undecided, 1 included, 2 excluded
  std::vector<int> undo;
  int best = -1;
  std::vector<signed char> best_st;
  std::uint64_t nodes = 0;

  Alpha1Search(int edge_count, const std::vector<std::array<int, 3>>& tris)
      : m(edge_count), partners(static_cast<std::size_t>(edge_count)),
        st(static_cast<std::size_t>(edge_count), 0) {
    for (const auto& t : tris) {
      partners[static_cast<std::size_t>(t[0])].emplace_back(t[1], t[2]);
      partners[static_cast<std::size_t>(t[1])].emplace_back(t[0], t[2]);
      partners[static_cast<std::size_t>(t[2])].emplace_back(t[0], t[1]);
    }
  }

  void dfs(int pos, int chosen, int undecided) {
    while (pos < m && st[static_cast<std::size_t>(pos)] != 0) ++pos;
    if (pos == m) {
      if (chosen > best) {
        best = chosen;
        best_st = st;
      }
      return;
    }
    if (chosen + undecided <= best) return;
    ++nodes;

    st[static_cast<std::size_t>(pos)] = 1;
    std::size_t mark = undo.size();
    for (auto [x, y] : partners[static_cast<std::size_t>(pos)]) {
      if (st[static_cast<std::size_t>(x)] == 0) {
        st[static_cast<std::size_t>(x)] = 2;
        undo.push_back(x);
      }
      if (st[static_cast<std::size_t>(y)] == 0) {
        st[static_cast<std::size_t>(y)] = 2;
        undo.push_back(y);
      }
    }
    int propagated = static_cast<int>(undo.size() - mark);
    dfs(pos + 1, chosen + 1, undecided - 1 - propagated);
    while (undo.size() > mark) {
      st[static_cast<std::size_t>(undo.back())] = 0;
      undo.pop_back();
    }

    st[static_cast<std::size_t>(pos)] = 2;
    dfs(pos + 1, chosen, undecided - 1);
    st[static_cast<std::size_t>(pos)] = 0;
  }
};

// ---------------------------------------------------------------------------
// tau: 3-way branching on the first remaining triangle.  Within one node the
// branches partition the cover space (edges already branched on are forbidden
// in later branches).  Lower bound: greedy edge-disjoint triangle packing.

struct TauSearch {
  const std::vector<std::array<int, 3>>& tris;
  std::vector<signed char> st;  // 0 present, 1 deleted, 2 forbidden
  int best;
  std::vector<signed char> best_st;
  std::uint64_t nodes = 0;
  bool stop_at_first = false;
  bool found = false;

  TauSearch(int edge_count, const std::vector<std::array<int, 3>>& triangles_in)
      : tris(triangles_in), st(static_cast<std::size_t>(edge_count), 0),
        best(edge_count + 1) {}

  bool present(int r) const { return st[static_cast<std::size_t>(r)] != 1; }

  // First triangle with all edges present, and the packing bound in one scan.
  std::pair<int, int> scan() const {
    int first = -1, packing = 0;
    std::array<std::uint64_t, 8> used{};
    for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
      const auto& t = tris[static_cast<std::size_t>(i)];
      if (!present(t[0]) || !present(t[1]) || !present(t[2])) continue;
      if (first < 0) first = i;
      bool free = true;
      for (int e : t)
        if ((used[static_cast<std::size_t>(e >> 6)] >> (e & 63)) & 1ull) free = false;
      if (free) {
        ++packing;
        for (int e : t) used[static_cast<std::size_t>(e >> 6)] |= 1ull << (e & 63);
      }
    }
    return {first, packing};
  }

  void dfs(int deleted_count) {
    ++nodes;
    auto [first, packing] = scan();
    if (deleted_count + packing >= best) return;
    if (first < 0) {
      best = deleted_count;
      best_st = st;
      found = true;
      return;
    }
    const auto& t = tris[static_cast<std::size_t>(first)];
    std::array<int, 3> branched{-1, -1, -1};
    int nb = 0;
    for (int e : t) {
      if (st[static_cast<std::size_t>(e)] == 2) continue;
      st[static_cast<std::size_t>(e)] = 1;
      dfs(deleted_count + 1);
      st[static_cast<std::size_t>(e)] = 2;
      branched[static_cast<std::size_t>(nb++)] = e;
      if (stop_at_first && found) break;
    }
    for (int i = 0; i < nb; ++i) st[static_cast<std::size_t>(branched[static_cast<std::size_t>(i)])] = 0;
  }
};

std::uint32_t side1_after_placement(const Graph& g, std::uint32_t b_set,
                                    std::uint32_t coloring_side1,
                                    std::uint32_t outside_choices) {
  // outside_choices holds, for each vertex outside b_set, its chosen side bit.
  return (coloring_side1 & b_set) | (outside_choices & ~b_set & g.vertex_mask());
}

int deleted_inside_sides(const Graph& g, std::uint32_t side1) {
  std::uint32_t side0 = g.vertex_mask() & ~side1;
  int same = 0;
  for (int v = 0; v < g.n(); ++v)
    same += std::popcount(g.row(v) & (((side1 >> v) & 1u) ? side1 : side0));
  return same / 2;
}

EdgeSet edges_inside_sides(const Graph& g, std::uint32_t side1) {
  EdgeSet::Words words{};
  for (auto [u, v] : g.edge_pairs()) {
    if (((side1 >> u) & 1u) != ((side1 >> v) & 1u)) continue;
    int id = edge_id(g.n(), u, v);
    words[static_cast<std::size_t>(id >> 6)] |= 1ull << (id & 63);
  }
  return EdgeSet::from_words(g, words);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint32_t validated_coloring(const Graph& g, std::uint32_t b_set) {
  if ((b_set & ~g.vertex_mask()) != 0)
    throw std::invalid_argument("vertex set not within V(G)");
  TwoColoring col = bipartition_of(g, b_set);
  if (!col.bipartite) throw std::invalid_argument("G[B] is not bipartite");
  return col.side1;
}

}  // namespace

SolveResult alpha1(const Graph& g) {
  EdgeTable et(g);
  auto tris = triangle_ranks(g, et);
  Alpha1Search search(g.m(), tris);
  search.dfs(0, 0, g.m());
  SolveResult res;
  res.value = search.best;
  if (search.best_st.empty()) search.best_st.assign(static_cast<std::size_t>(g.m()), 0);
  res.edge_witness = et.to_edgeset(g, search.best_st, 1);
  res.nodes_explored = search.nodes;
  return res;
}

SolveResult tau(const Graph& g) {
  EdgeTable et(g);
  auto tris = triangle_ranks(g, et);
  TauSearch value_search(g.m(), tris);
  value_search.dfs(0);
  int target = value_search.best;
  std::uint64_t nodes = value_search.nodes;

  // Lex-least optimal witness: decide edges in id order, keeping an edge in
  // the cover whenever a cover of size `target` extending the decisions
  // exists.
  TauSearch extract(g.m(), tris);
  int in_cover = 0;
  for (int r = 0; r < g.m() && in_cover < target; ++r) {
    extract.st[static_cast<std::size_t>(r)] = 1;
    TauSearch feas(g.m(), tris);
    feas.st = extract.st;
    feas.best = target + 1;
    feas.stop_at_first = true;
    feas.dfs(in_cover + 1);
    nodes += feas.nodes;
    if (feas.found) {
      ++in_cover;
    } else {
      extract.st[static_cast<std::size_t>(r)] = 2;
    }
  }
  assert(in_cover == target);

  SolveResult res;
  res.value = target;
  res.edge_witness = et.to_edgeset(g, extract.st, 1);
  res.nodes_explored = nodes;
  return res;
}

SolveResult tau_b(const Graph& g) {
  SolveResult res;
  if (g.n() == 0) {
    res.edge_witness = EdgeSet(g);
    return res;
  }
  int best_cut = -1;
  EdgeSet best_set;
  std::uint64_t scanned = 0;
  std::uint32_t half_space = g.n() == 1 ? 1u : (1u << (g.n() - 1));
  for (std::uint32_t mask = 0; mask < half_space; ++mask) {
    ++scanned;
    std::uint32_t side1 = mask << 1;  // vertex 0 pinned to side 0
    std::uint32_t side0 = g.vertex_mask() & ~side1;
    int cut = 0;
    std::uint32_t rest = side1;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      cut += std::popcount(g.row(v) & side0);
    }
    if (cut < best_cut) continue;
    EdgeSet inside = edges_inside_sides(g, side1);
    if (cut > best_cut || lex_less(inside, best_set)) {
      best_cut = cut;
      best_set = inside;
    }
  }
  res.value = g.m() - best_cut;
  res.edge_witness = best_set;
  res.nodes_explored = scanned;
  return res;
}

SolveResult bipartite_order(const Graph& g) {
  SolveResult res;
  std::uint64_t tested = 0;
  for (int k = g.n(); k >= 0; --k) {
    // k-subsets in lexicographic order of their sorted vertex lists
    std::array<int, kMaxVertices> c{};
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint32_t mask = 0;
      for (int i = 0; i < k; ++i) mask |= 1u << c[static_cast<std::size_t>(i)];
      ++tested;
      if (bipartition_of(g, mask).bipartite) {
        res.value = k;
        res.vertex_witness = mask;
        res.nodes_explored = tested;
        return res;
      }
      int i = k - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == g.n() - k + i) --i;
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  res.vertex_witness = 0;  // only reachable for n = 0
  res.nodes_explored = tested;
  return res;
}

double BipartizationTrials::stderr_of_mean() const {
  if (trials < 2) return 0.0;
  double t = static_cast<double>(trials);
  double mu = mean();
  double var = (static_cast<double>(deleted_sq_sum) - t * mu * mu) / (t - 1.0);
  if (var < 0) var = 0;  // rounding guard
  return std::sqrt(var / t);
}

BipartizationTrials randomized_bipartization(const Graph& g, std::uint32_t b_set,
                                             std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  std::uint32_t coloring = validated_coloring(g, b_set);
  std::uint32_t outside = g.vertex_mask() & ~b_set;

  BipartizationTrials out;
  out.trials = trials;
  int best_deleted = -1;
  std::uint32_t best_side1 = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::uint64_t state = seed ^ (0xd1b54a32d192ed03ull * (t + 1));
    std::uint32_t choices = 0;
    std::uint32_t rest = outside;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      choices |= static_cast<std::uint32_t>(splitmix64(state) & 1ull) << v;
    }
    std::uint32_t side1 = side1_after_placement(g, b_set, coloring, choices);
    int deleted = deleted_inside_sides(g, side1);
    out.deleted_sum += static_cast<std::uint64_t>(deleted);
    out.deleted_sq_sum += static_cast<std::uint64_t>(deleted) * static_cast<std::uint64_t>(deleted);
    if (best_deleted < 0 || deleted < best_deleted) {
      best_deleted = deleted;
      best_side1 = side1;
    }
  }
  out.best = edges_inside_sides(g, best_side1);
  return out;
}

EdgeSet derandomized_bipartization(const Graph& g, std::uint32_t b_set) {
  std::uint32_t coloring = validated_coloring(g, b_set);
  std::uint32_t placed0 = b_set & ~coloring;
  std::uint32_t placed1 = b_set & coloring;
  std::uint32_t rest = g.vertex_mask() & ~b_set;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    int same0 = std::popcount(g.row(v) & placed0);
    int same1 = std::popcount(g.row(v) & placed1);
    if (same0 <= same1)
      placed0 |= 1u << v;
    else
      placed1 |= 1u << v;
  }
  return edges_inside_sides(g, placed1);
}

}  // namespace egt
