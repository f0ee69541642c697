#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egt/bounds.hpp"
#include "egt/graph.hpp"

namespace egt {

enum class Command { solve, verify, enumerate_graphs, construct };
enum class OutputFormat { jsonl, csv, summary };

struct RunConfig {
  Command command = Command::solve;
  int n_lo = 0, n_hi = 0;           // built-in enumeration range
  std::string input_path;           // graph6 stream path, "-" = stdin
  std::string single_graph6;        // one inline record
  std::vector<std::string> checks;  // empty or {"all"} enables every check
  OutputFormat format = OutputFormat::summary;
  int jobs = 0;                     // parallelism degree, 0 = hardware default
  std::uint64_t seed = 0;           // reserved for randomized operations
  bool fail_fast = false;
};

struct CheckStats {
  std::uint64_t holds = 0, tight = 0, fails = 0;
};

struct SweepSummary {
  std::uint64_t graphs_processed = 0;
  std::vector<std::pair<std::string, CheckStats>> per_check;
  std::vector<std::string> counterexamples;  // graph6 records
  double wall_seconds = 0;  // reported on stderr only, to keep stdout reproducible
  int exit_code = 0;        // 0 ok, 2 conjecture counterexample, 1 theorem/internal
};

/// One labeled input graph.
struct GraphRecord {
  Graph graph;
  std::string graph6;
};

/// Checks evaluated for one graph, aligned with report_check_names().
struct GraphOutcome {
  std::string graph6;
  std::vector<std::optional<Check>> checks;
};

/// Evaluates the enabled checks for each record, solving only the parameters
/// those checks need.  The serial variant is the reference implementation;
/// the parallel variant distributes graphs over OpenMP threads and returns
/// bit-identical results in input order.
std::vector<GraphOutcome> evaluate_checks_serial(const std::vector<GraphRecord>& records,
                                                 const std::vector<std::string>& checks);
std::vector<GraphOutcome> evaluate_checks_parallel(const std::vector<GraphRecord>& records,
                                                   const std::vector<std::string>& checks,
                                                   int jobs);

/// Full per-graph reports (all four parameters, all checks), input order.
std::vector<BoundReport> solve_reports_serial(const std::vector<GraphRecord>& records);
std::vector<BoundReport> solve_reports_parallel(const std::vector<GraphRecord>& records,
                                                int jobs);

/// `solve`: read graph6 records, emit one report per graph in input order.
int run_solve(const RunConfig& config, std::istream& in, std::ostream& out,
              std::ostream& err);

/// `verify`: sweep graphs (built-in enumeration or external stream), count
/// holds/tight/fails per check, emit counterexample certificates, and return
/// the summary.  A theorem-check failure stops the sweep with exit code 1.
SweepSummary run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `enumerate`: graph6 lines for one level; count goes to err.
int run_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `construct`: emit one family member; join families also emit their
/// certified triangle-independent edge set as an `A:` id line.
int run_construct(const std::string& family, const std::vector<int>& params,
                  std::ostream& out, std::ostream& err);

void print_summary(const SweepSummary& summary, OutputFormat format, std::ostream& out);

}  // namespace egt
