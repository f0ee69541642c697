#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "egt/graph.hpp"

namespace egt {

/// All non-isomorphic graphs on n vertices, as canonical representatives
/// sorted by canonical string.
struct EnumerationLevel {
  int n = 0;
  std::vector<Graph> graphs;
};

/// Isomorph-free generation by vertex augmentation: every graph on k
/// vertices is extended by one new vertex wired to each subset of the
/// existing vertices, canonicalized, and deduplicated.  Supported range is
/// 1 <= n <= 9.  jobs <= 0 uses the OpenMP default; augmentation of distinct
/// parents runs in parallel and the result is independent of jobs.
EnumerationLevel enumerate_all(int n, int jobs = 0);

/// Straight single-threaded implementation kept as the reference for tests
/// and the benchmark.
EnumerationLevel enumerate_all_serial(int n);

/// Streaming variant: same graphs as enumerate_all(n), delivered one at a
/// time in ascending canonical-string order.
void enumerate_stream(int n, const std::function<void(const Graph&)>& sink,
                      int jobs = 0);

}  // namespace egt
