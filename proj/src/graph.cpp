#include "egt/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace egt {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

int Graph::degree(int v) const {
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

void Graph::add_edge_unchecked(int u, int v) {
  adj_[static_cast<std::size_t>(u)] |= 1u << v;
  adj_[static_cast<std::size_t>(v)] |= 1u << u;
  ++m_;
}

Graph Graph::empty(int n) {
  require(n >= 0 && n <= kMaxVertices, "vertex count out of range 0..32");
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
    require(u != v, "loops are not allowed");
    require(!g.has_edge(u, v), "parallel edges are not allowed");
    g.add_edge_unchecked(u, v);
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g = empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge_unchecked(u, v);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  require(a >= 0 && b >= 0, "negative side size");
  Graph g = empty(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge_unchecked(u, v);
  return g;
}

Graph Graph::cycle(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  Graph g = empty(n);
  for (int v = 0; v < n; ++v) g.add_edge_unchecked(v, (v + 1) % n);
  return g;
}

Graph Graph::disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.n();
  Graph g = empty(total);
  int base = 0;
  for (const Graph& p : parts) {
    for (auto [u, v] : p.edge_pairs()) g.add_edge_unchecked(base + u, base + v);
    base += p.n();
  }
  return g;
}

Graph Graph::join(std::span<const Graph> parts) {
  Graph g = disjoint_union(parts);
  int base = 0;
  for (const Graph& p : parts) {
    for (int u = base; u < base + p.n(); ++u)
      for (int v = base + p.n(); v < g.n(); ++v) g.add_edge_unchecked(u, v);
    base += p.n();
  }
  return g;
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint32_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::with_vertex_appended(std::uint32_t neighbors) const {
  require(n_ < kMaxVertices, "vertex count out of range 0..32");
  require((neighbors & ~vertex_mask()) == 0, "neighbor mask out of range");
  Graph g = *this;
  g.n_ = n_ + 1;
  g.adj_[static_cast<std::size_t>(n_)] = neighbors;
  std::uint32_t rest = neighbors;
  while (rest) {
    int v = std::countr_zero(rest);
    g.adj_[static_cast<std::size_t>(v)] |= 1u << n_;
    ++g.m_;
    rest &= rest - 1;
  }
  return g;
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (int u = 0; u < g.n(); ++u) {
    std::uint32_t higher = g.row(u) >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      higher &= higher - 1;
      // common neighbors above v close a triangle exactly once
      std::uint32_t common = (g.row(u) & g.row(v)) >> (v + 1);
      while (common) {
        int w = v + 1 + std::countr_zero(common);
        out.push_back({u, v, w});
        common &= common - 1;
      }
    }
  }
  return out;
}

TwoColoring bipartition_of(const Graph& g, std::uint32_t subset) {
  TwoColoring col;
  std::uint32_t seen = 0;
  std::uint32_t side1 = 0;
  std::array<int, kMaxVertices> queue{};
  std::uint32_t todo = subset;
  while (todo) {
    int root = std::countr_zero(todo);
    seen |= 1u << root;
    int head = 0, tail = 0;
    queue[static_cast<std::size_t>(tail++)] = root;
    while (head < tail) {
      int u = queue[static_cast<std::size_t>(head++)];
      std::uint32_t u_side = (side1 >> u) & 1u;
      std::uint32_t nbrs = g.row(u) & subset;
      if (nbrs & (u_side ? side1 : (seen & ~side1))) return {};  // odd cycle
      std::uint32_t fresh = nbrs & ~seen;
      while (fresh) {
        int v = std::countr_zero(fresh);
        fresh &= fresh - 1;
        seen |= 1u << v;
        if (!u_side) side1 |= 1u << v;
        queue[static_cast<std::size_t>(tail++)] = v;
      }
    }
    todo = subset & ~seen;
  }
  col.bipartite = true;
  col.side1 = side1;
  return col;
}

TwoColoring bipartition(const Graph& g) { return bipartition_of(g, g.vertex_mask()); }

bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

Graph complement(const Graph& g) {
  Graph c;
  c.n_ = g.n_;
  std::uint32_t all = g.vertex_mask();
  int m = 0;
  for (int v = 0; v < g.n_; ++v) {
    c.adj_[static_cast<std::size_t>(v)] = all & ~g.adj_[static_cast<std::size_t>(v)] & ~(1u << v);
    m += std::popcount(c.adj_[static_cast<std::size_t>(v)]);
  }
  c.m_ = m / 2;
  return c;
}

Graph induced_subgraph(const Graph& g, std::uint32_t subset) {
  require((subset & ~g.vertex_mask()) == 0, "subset not within V(G)");
  std::array<int, kMaxVertices> relabel{};
  int k = 0;
  std::uint32_t rest = subset;
  while (rest) {
    int v = std::countr_zero(rest);
    relabel[static_cast<std::size_t>(k++)] = v;
    rest &= rest - 1;
  }
  Graph h;
  h.n_ = k;
  int m = 0;
  for (int i = 0; i < k; ++i) {
    std::uint32_t old_row = g.row(relabel[static_cast<std::size_t>(i)]) & subset;
    std::uint32_t new_row = 0;
    for (int j = 0; j < k; ++j)
      if ((old_row >> relabel[static_cast<std::size_t>(j)]) & 1u) new_row |= 1u << j;
    h.adj_[static_cast<std::size_t>(i)] = new_row;
    m += std::popcount(new_row);
  }
  h.m_ = m / 2;
  return h;
}

namespace {

constexpr int kCanonMaxN = 10;  // C(10,2) = 45 bits fits the packed word

void require_canon_capacity(int n) {
  if (n > kCanonMaxN)
    throw std::invalid_argument("canonical form capacity exceeded (n <= 10)");
}

// Branch-and-prune minimization of the packed upper-triangle string over all
// vertex orderings.  A partial ordering fixes the first C(k,2) string bits;
// any branch whose fixed prefix already exceeds the best string is cut.
struct CanonSearch {
  const Graph& g;
  int n;
  std::uint64_t best;
  std::array<int, kCanonMaxN> chosen{};

  explicit CanonSearch(const Graph& graph)
      : g(graph), n(graph.n()), best(upper_triangle_bits(graph)) {}

  static std::uint64_t prefix_mask(int bits) {
    return bits == 0 ? 0 : ~0ull << (64 - bits);
  }

  std::uint64_t column_bits(int w, int k, int bitpos) const {
    std::uint64_t col = 0;
    for (int j = 0; j < k; ++j)
      if (g.has_edge(chosen[static_cast<std::size_t>(j)], w))
        col |= 1ull << (63 - (bitpos + j));
    return col;
  }

  void dfs(int k, std::uint32_t used, std::uint64_t prefix, int bitpos) {
    if (k == n) {
      if (prefix < best) best = prefix;
      return;
    }
    // candidates ordered by column value so the greedy descent comes first
    std::array<std::pair<std::uint64_t, int>, kCanonMaxN> cands{};
    int count = 0;
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1u) continue;
      cands[static_cast<std::size_t>(count++)] = {column_bits(w, k, bitpos), w};
    }
    std::sort(cands.begin(), cands.begin() + count);
    std::uint64_t seg_mask = prefix_mask(bitpos + k);
    for (int i = 0; i < count; ++i) {
      auto [col, w] = cands[static_cast<std::size_t>(i)];
      std::uint64_t cand = prefix | col;
      if ((cand & seg_mask) > (best & seg_mask)) break;  // sorted: rest only larger
      chosen[static_cast<std::size_t>(k)] = w;
      dfs(k + 1, used | (1u << w), cand, bitpos + k);
    }
  }

  std::uint64_t run() {
    dfs(0, 0, 0, 0);
    return best;
  }
};

}  // namespace

std::uint64_t upper_triangle_bits(const Graph& g) {
  require_canon_capacity(g.n());
  std::uint64_t bits = 0;
  int pos = 0;
  for (int v = 1; v < g.n(); ++v)
    for (int u = 0; u < v; ++u, ++pos)
      if (g.has_edge(u, v)) bits |= 1ull << (63 - pos);
  return bits;
}

Graph graph_from_upper_triangle_bits(int n, std::uint64_t bits) {
  require_canon_capacity(n);
  Graph g = Graph::empty(n);
  int pos = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++pos)
      if ((bits >> (63 - pos)) & 1ull) g.add_edge_unchecked(u, v);
  return g;
}

std::uint64_t canonical_bits(const Graph& g) {
  require_canon_capacity(g.n());
  if (g.n() <= 1) return 0;
  return CanonSearch(g).run();
}

std::string canonical_form(const Graph& g) {
  std::uint64_t bits = canonical_bits(g);
  int nbits = g.n() * (g.n() - 1) / 2;
  int nbytes = (nbits + 7) / 8;
  std::string out;
  out.reserve(static_cast<std::size_t>(1 + nbytes));
  out.push_back(static_cast<char>(g.n()));
  for (int i = 0; i < nbytes; ++i)
    out.push_back(static_cast<char>((bits >> (56 - 8 * i)) & 0xff));
  return out;
}

Graph canonical_graph(const Graph& g) {
  return graph_from_upper_triangle_bits(g.n(), canonical_bits(g));
}

}  // namespace egt
