#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "egt/graph.hpp"

namespace egt {

/// Edge ids enumerate the pairs (u, v), u < v, in lexicographic order of
/// (u, v): (0,1), (0,2), ..., (0,n-1), (1,2), ...  Ids run 0..C(n,2)-1.
int edge_slots(int n);  // C(n,2)
int edge_id(int n, int u, int v);
std::pair<int, int> edge_pair(int n, int id);

/// Subset of a host graph's edges as a bit-vector over edge ids.  Stores only
/// the host dimensions (n, m); factories that take the host validate that
/// every set bit is an edge of it.  Immutable value, thread-safe to share.
class EdgeSet {
 public:
  static constexpr int kWords = 8;  // 512 bits >= C(32,2)
  using Words = std::array<std::uint64_t, kWords>;

  EdgeSet() = default;

  explicit EdgeSet(const Graph& host) : host_n_(host.n()), host_m_(host.m()) {}
  static EdgeSet all_of(const Graph& host);
  static EdgeSet from_pairs(const Graph& host,
                            std::span<const std::pair<int, int>> edges);
  /// Validates bits against the host edge set.
  static EdgeSet from_words(const Graph& host, const Words& bits);

  int host_n() const { return host_n_; }
  int host_m() const { return host_m_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains_id(int id) const {
    return (bits_[static_cast<std::size_t>(id >> 6)] >> (id & 63)) & 1ull;
  }
  bool contains(int u, int v) const;
  std::vector<int> ids() const;
  std::vector<std::pair<int, int>> pairs() const;
  const Words& words() const { return bits_; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int host_n_ = 0;
  int host_m_ = 0;
  Words bits_{};
};

/// Witness order used for all tie-breaking: scanning edge ids upward, the set
/// containing the first differing id is the smaller one.  For equal-size sets
/// this is lexicographic order of the sorted id sequences.
bool lex_less(const EdgeSet& a, const EdgeSet& b);

/// d_S(v): number of edges of S incident to v.
int degree_in(const EdgeSet& s, int v);

/// True iff every triangle of g contains at most one edge of a.
bool is_triangle_independent(const Graph& g, const EdgeSet& a);

/// True iff g minus the edges of x has no triangle.
bool is_triangle_edge_cover(const Graph& g, const EdgeSet& x);

/// g with the edges of x removed.
Graph remove_edges(const Graph& g, const EdgeSet& x);

}  // namespace egt
