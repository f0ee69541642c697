#include "egt/edgeset.hpp"

#include <bit>
#include <stdexcept>

namespace egt {

int edge_slots(int n) { return n * (n - 1) / 2; }

int edge_id(int n, int u, int v) {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n || u == v) throw std::invalid_argument("bad edge endpoints");
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::pair<int, int> edge_pair(int n, int id) {
  if (id < 0 || id >= edge_slots(n)) throw std::invalid_argument("edge id out of range");
  int u = 0;
  while (id >= n - 1 - u) {
    id -= n - 1 - u;
    ++u;
  }
  return {u, u + 1 + id};
}

EdgeSet EdgeSet::all_of(const Graph& host) {
  EdgeSet s(host);
  for (auto [u, v] : host.edge_pairs()) {
    int id = edge_id(host.n(), u, v);
    s.bits_[static_cast<std::size_t>(id >> 6)] |= 1ull << (id & 63);
  }
  return s;
}

EdgeSet EdgeSet::from_pairs(const Graph& host,
                            std::span<const std::pair<int, int>> edges) {
  EdgeSet s(host);
  for (auto [u, v] : edges) {
    if (!host.has_edge(u, v)) throw std::invalid_argument("edge not in host graph");
    int id = edge_id(host.n(), u, v);
    s.bits_[static_cast<std::size_t>(id >> 6)] |= 1ull << (id & 63);
  }
  return s;
}

EdgeSet EdgeSet::from_words(const Graph& host, const Words& bits) {
  EdgeSet s(host);
  s.bits_ = bits;
  for (int id : s.ids()) {
    auto [u, v] = edge_pair(host.n(), id);
    if (!host.has_edge(u, v)) throw std::invalid_argument("edge not in host graph");
  }
  return s;
}

int EdgeSet::size() const {
  int total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total;
}

bool EdgeSet::contains(int u, int v) const { return contains_id(edge_id(host_n_, u, v)); }

std::vector<int> EdgeSet::ids() const {
  std::vector<int> out;
  for (int w = 0; w < kWords; ++w) {
    std::uint64_t word = bits_[static_cast<std::size_t>(w)];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> EdgeSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int id : ids()) out.push_back(edge_pair(host_n_, id));
  return out;
}

bool lex_less(const EdgeSet& a, const EdgeSet& b) {
  for (int w = 0; w < EdgeSet::kWords; ++w) {
    std::uint64_t diff = a.words()[static_cast<std::size_t>(w)] ^
                         b.words()[static_cast<std::size_t>(w)];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a.words()[static_cast<std::size_t>(w)] & low) != 0;
    }
  }
  return false;
}

int degree_in(const EdgeSet& s, int v) {
  int d = 0;
  for (int id : s.ids()) {
    auto [a, b] = edge_pair(s.host_n(), id);
    if (a == v || b == v) ++d;
  }
  return d;
}

bool is_triangle_independent(const Graph& g, const EdgeSet& a) {
  for (const Triangle& t : triangles(g)) {
    int hits = static_cast<int>(a.contains(t.a, t.b)) +
               static_cast<int>(a.contains(t.a, t.c)) +
               static_cast<int>(a.contains(t.b, t.c));
    if (hits > 1) return false;
  }
  return true;
}

bool is_triangle_edge_cover(const Graph& g, const EdgeSet& x) {
  return triangles(remove_edges(g, x)).empty();
}

Graph remove_edges(const Graph& g, const EdgeSet& x) {
  std::vector<std::pair<int, int>> kept;
  kept.reserve(static_cast<std::size_t>(g.m()));
  for (auto [u, v] : g.edge_pairs())
    if (!x.contains(u, v)) kept.emplace_back(u, v);
  return Graph::from_edges(g.n(), kept);
}

}  // namespace egt
