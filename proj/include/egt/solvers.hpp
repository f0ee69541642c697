#pragma once

#include <cstdint>
#include <optional>

#include "egt/edgeset.hpp"
#include "egt/graph.hpp"

namespace egt {

/// Exact optimum with its witness.  Exactly one of edge_witness /
/// vertex_witness is set, depending on the parameter.  Among all optimal
/// witnesses the one returned is minimal in the witness order of lex_less
/// (vertex sets use the same rule over vertex ids).
struct SolveResult {
  int value = 0;
  std::optional<EdgeSet> edge_witness;
  std::optional<std::uint32_t> vertex_witness;
  std::uint64_t nodes_explored = 0;
  bool optimal = true;
};

/// alpha_1: maximum size of an edge set with at most one edge in each
/// triangle.  Depth-first include/exclude over edges in id order; including
/// an edge excludes the other two edges of every triangle through it; a
/// branch is cut when |chosen| + |undecided| cannot beat the incumbent.
SolveResult alpha1(const Graph& g);

/// tau: minimum size of an edge set whose deletion leaves g triangle-free.
/// Branch-and-bound picking a remaining triangle and deleting one of its
/// three edges (branching factor 3, depth at most tau), with an
/// edge-disjoint-triangle packing lower bound; a second pass extracts the
/// lex-least optimal witness.
SolveResult tau(const Graph& g);

/// tau_B: minimum size of an edge set whose deletion makes g bipartite.
/// Computed as m - maxcut over all 2^(n-1) bipartitions; the witness is the
/// set of edges inside the two sides of an optimal cut.
SolveResult tau_b(const Graph& g);

/// b: maximum size of a vertex set inducing a bipartite subgraph.  Scans
/// vertex subsets by decreasing size, lexicographically within a size, and
/// stops at the first hit.
SolveResult bipartite_order(const Graph& g);

/// One randomized-rounding experiment batch for making g bipartite from an
/// induced bipartite vertex set B: each vertex outside B is placed uniformly
/// on one of the two sides of the fixed 2-coloring of g[B] and all edges
/// inside a side are deleted.  Trial t of a given seed is generated by a
/// counter-based stream, so results do not depend on execution order.
struct BipartizationTrials {
  std::uint64_t trials = 0;
  std::uint64_t deleted_sum = 0;
  std::uint64_t deleted_sq_sum = 0;
  EdgeSet best;  // smallest deletion set seen (first trial wins ties)
  double mean() const {
    return trials ? static_cast<double>(deleted_sum) / static_cast<double>(trials) : 0.0;
  }
  double stderr_of_mean() const;
};
BipartizationTrials randomized_bipartization(const Graph& g, std::uint32_t b_set,
                                             std::uint64_t trials, std::uint64_t seed);

/// Conditional-expectation derandomization of the same procedure: outside
/// vertices are placed one at a time (ascending id) on the side with fewer
/// already-placed neighbors, ties to side 0.  The result never exceeds
/// half of |E(g)| - |E(g[B])|.
EdgeSet derandomized_bipartization(const Graph& g, std::uint32_t b_set);

}  // namespace egt
