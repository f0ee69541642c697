#include "egt/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace egt {

namespace {

constexpr int kMaxEnumerate = 9;

void require_budget(int n) {
  if (n < 1 || n > kMaxEnumerate)
    throw std::invalid_argument("enumeration budget is 1 <= n <= 9");
}

// Canonical codes of level k+1 from the canonical codes of level k.
std::vector<std::uint64_t> augment_level(int k, const std::vector<std::uint64_t>& parents,
                                         int jobs) {
  std::vector<std::vector<std::uint64_t>> buckets(parents.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(parents.size()); ++p) {
    Graph parent = graph_from_upper_triangle_bits(k, parents[static_cast<std::size_t>(p)]);
    std::vector<std::uint64_t>& out = buckets[static_cast<std::size_t>(p)];
    out.reserve(1u << k);
    for (std::uint32_t nbrs = 0; nbrs < (1u << k); ++nbrs)
      out.push_back(canonical_bits(parent.with_vertex_appended(nbrs)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  std::vector<std::uint64_t> merged;
  for (const auto& b : buckets) merged.insert(merged.end(), b.begin(), b.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

std::vector<std::uint64_t> level_codes(int n, int jobs) {
  require_budget(n);
  std::vector<std::uint64_t> codes{0};  // K_1
  for (int k = 1; k < n; ++k) codes = augment_level(k, codes, jobs);
  return codes;
}

}  // namespace

EnumerationLevel enumerate_all(int n, int jobs) {
  EnumerationLevel level;
  level.n = n;
  for (std::uint64_t code : level_codes(n, jobs))
    level.graphs.push_back(graph_from_upper_triangle_bits(n, code));
  return level;
}

EnumerationLevel enumerate_all_serial(int n) {
  require_budget(n);
  std::set<std::uint64_t> codes{0};
  for (int k = 1; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : codes) {
      Graph parent = graph_from_upper_triangle_bits(k, code);
      for (std::uint32_t nbrs = 0; nbrs < (1u << k); ++nbrs)
        next.insert(canonical_bits(parent.with_vertex_appended(nbrs)));
    }
    codes = std::move(next);
  }
  EnumerationLevel level;
  level.n = n;
  for (std::uint64_t code : codes)
    level.graphs.push_back(graph_from_upper_triangle_bits(n, code));
  return level;
}

void enumerate_stream(int n, const std::function<void(const Graph&)>& sink, int jobs) {
  for (std::uint64_t code : level_codes(n, jobs))
    sink(graph_from_upper_triangle_bits(n, code));
}

}  // namespace egt
