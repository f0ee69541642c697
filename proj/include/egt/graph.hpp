#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace egt {

inline constexpr int kMaxVertices = 32;

/// Simple undirected graph on at most 32 vertices.  Adjacency is one 32-bit
/// row per vertex (bit v of row(u) set iff uv is an edge).  Values are
/// immutable after construction and safe to share across threads; all
/// factories reject loops, parallel edges and out-of-range vertices.
class Graph {
 public:
  Graph() = default;  // graph on 0 vertices

  static Graph empty(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph complete(int n);
  static Graph complete_bipartite(int a, int b);
  static Graph cycle(int n);
  static Graph disjoint_union(std::span<const Graph> parts);
  /// Disjoint union plus every edge between vertices of different parts.
  static Graph join(std::span<const Graph> parts);

  int n() const { return n_; }
  int m() const { return m_; }
  std::uint32_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// Bit mask of all vertices, (1 << n) - 1.
  std::uint32_t vertex_mask() const {
    return n_ == 32 ? 0xffffffffu : ((1u << n_) - 1u);
  }
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  int degree(int v) const;

  /// Edges as (u, v) pairs with u < v, ascending edge id order.
  std::vector<std::pair<int, int>> edge_pairs() const;

  /// Copy with one new vertex (label n) adjacent to `neighbors`.
  Graph with_vertex_appended(std::uint32_t neighbors) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::array<std::uint32_t, kMaxVertices> adj_{};

  void add_edge_unchecked(int u, int v);
  friend Graph complement(const Graph&);
  friend Graph induced_subgraph(const Graph&, std::uint32_t);
  friend Graph graph_from_upper_triangle_bits(int, std::uint64_t);
};

/// Vertex triple a < b < c with all three pairs adjacent.
struct Triangle {
  int a, b, c;
  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// All triangles of g, ascending by (a, b, c).  The common neighborhood of
/// each edge is an AND of two adjacency rows.
std::vector<Triangle> triangles(const Graph& g);

/// Proper 2-coloring of the subgraph induced by `subset`, if one exists.
/// side1 is the set of vertices colored 1; the rest of `subset` is side 0.
/// The BFS root of every component is the component's smallest vertex and is
/// colored 0, so the witness is deterministic.
struct TwoColoring {
  bool bipartite = false;
  std::uint32_t side1 = 0;
};
TwoColoring bipartition_of(const Graph& g, std::uint32_t subset);
TwoColoring bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced by the vertex set `subset`, relabeled by ascending order
/// of the chosen vertices.
Graph induced_subgraph(const Graph& g, std::uint32_t subset);

/// Upper-triangle adjacency bits of the current labeling in column-major
/// order x(0,1), x(0,2), x(1,2), x(0,3), ...  Bit i of the sequence is stored
/// at bit position 63 - i, so unsigned comparison of packed words equals
/// lexicographic comparison of the bit strings.  Requires n <= 10.
std::uint64_t upper_triangle_bits(const Graph& g);
Graph graph_from_upper_triangle_bits(int n, std::uint64_t bits);

/// Minimum of upper_triangle_bits over all n! relabelings (branch-and-prune
/// over permutation prefixes).  Equal for two graphs iff they are isomorphic.
/// Requires n <= 10.
std::uint64_t canonical_bits(const Graph& g);

/// Canonical byte string: one byte holding n followed by the canonical
/// upper-triangle bits, big-endian.  String equality <=> isomorphism, and
/// byte-wise order matches the order of canonical_bits.
std::string canonical_form(const Graph& g);

/// The canonical representative itself (vertices relabeled so that
/// upper_triangle_bits(g) == canonical_bits(g)).
Graph canonical_graph(const Graph& g);

}  // namespace egt
