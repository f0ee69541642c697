#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "egt/enumerate.hpp"
#include "egt/graph6.hpp"
#include "egt/sweep.hpp"

using namespace egt;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("solve: K_4 report on stdin") {
  RunConfig config;
  config.jobs = 1;
  config.format = OutputFormat::jsonl;
  std::istringstream in("C~\n");
  std::ostringstream out, err;
  int rc = run_solve(config, in, out, err);
  CHECK(rc == 0);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].find("\"alpha1\":2") != std::string::npos);
  CHECK(lines[0].find("\"tau\":2") != std::string::npos);
  CHECK(lines[0].find("\"tau_b\":2") != std::string::npos);
  CHECK(lines[0].find("\"b\":2") != std::string::npos);
}

TEST_CASE("solve: one triangle via --graph") {
  RunConfig config;
  config.single_graph6 = "Bw";
  std::ostringstream out, err;
  std::istringstream in;
  CHECK(run_solve(config, in, out, err) == 0);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].find("\"alpha1\":1") != std::string::npos);
  CHECK(lines[0].find("\"tau\":1") != std::string::npos);
}

TEST_CASE("solve: empty input gives empty output and exit 0") {
  RunConfig config;
  std::istringstream in("");
  std::ostringstream out, err;
  CHECK(run_solve(config, in, out, err) == 0);
  CHECK(out.str().empty());
}

TEST_CASE("solve: malformed records are reported with their line number") {
  RunConfig config;
  config.jobs = 1;
  std::istringstream in("A_\nnot graph6!!\nBw\n");
  std::ostringstream out, err;
  int rc = run_solve(config, in, out, err);
  CHECK(rc == 1);
  CHECK(lines_of(out.str()).size() == 2);  // the two good records still solved
  CHECK(err.str().find("line 2") != std::string::npos);
}

TEST_CASE("solve: fail-fast stops at the malformed record") {
  RunConfig config;
  config.fail_fast = true;
  std::istringstream in("A_\nnot graph6!!\nBw\n");
  std::ostringstream out, err;
  CHECK(run_solve(config, in, out, err) == 1);
  CHECK(out.str().empty());
}

TEST_CASE("solve: csv output carries the header") {
  RunConfig config;
  config.format = OutputFormat::csv;
  config.single_graph6 = "C~";
  std::istringstream in;
  std::ostringstream out, err;
  CHECK(run_solve(config, in, out, err) == 0);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].substr(0, 7) == "graph6,");
  CHECK(lines[1].substr(0, 3) == "C~,");
}

TEST_CASE("verify: clean sweep over n <= 5") {
  RunConfig config;
  config.n_lo = 1;
  config.n_hi = 5;
  std::ostringstream out, err;
  SweepSummary summary = run_verify(config, out, err);
  CHECK(summary.exit_code == 0);
  CHECK(summary.graphs_processed == 1 + 2 + 4 + 11 + 34);
  CHECK(summary.counterexamples.empty());
  CHECK(out.str().empty());  // certificates only on failure
  for (const auto& [name, stats] : summary.per_check) {
    CHECK(stats.fails == 0);
    CHECK(stats.holds == summary.graphs_processed);
  }
}

TEST_CASE("verify: filtered checks only count the requested ones") {
  RunConfig config;
  config.n_lo = 3;
  config.n_hi = 3;
  config.checks = {"thm-match"};
  std::ostringstream out, err;
  SweepSummary summary = run_verify(config, out, err);
  CHECK(summary.exit_code == 0);
  REQUIRE(summary.per_check.size() == 1);
  CHECK(summary.per_check[0].first == "thm-match");
  CHECK(summary.per_check[0].second.holds == 4);
  // no graph on 3 vertices is a join of balanced bicliques, so no tight case
  CHECK(summary.per_check[0].second.tight == 0);
}

TEST_CASE("verify: tight census at n = 4 includes K_4 for egt") {
  RunConfig config;
  config.n_lo = 4;
  config.n_hi = 4;
  config.checks = {"egt"};
  std::ostringstream out, err;
  SweepSummary summary = run_verify(config, out, err);
  CHECK(summary.per_check[0].second.tight > 0);
}

TEST_CASE("verify: serial and parallel sweeps produce identical summaries") {
  for (int jobs : {1, 2, 4}) {
    RunConfig config;
    config.n_lo = 1;
    config.n_hi = 6;
    config.jobs = jobs;
    std::ostringstream out, err;
    SweepSummary summary = run_verify(config, out, err);
    CHECK(summary.exit_code == 0);
    CHECK(summary.graphs_processed == 208);
    CHECK(out.str().empty());
    for (const auto& [name, stats] : summary.per_check) CHECK(stats.fails == 0);
    std::ostringstream rendered;
    print_summary(summary, OutputFormat::jsonl, rendered);
    static std::string reference;
    if (jobs == 1) reference = rendered.str();
    CHECK(rendered.str() == reference);
  }
}

TEST_CASE("verify: a single inline record works as the input source") {
  RunConfig config;
  config.single_graph6 = graph6_encode(Graph::complete(6));
  std::ostringstream out, err;
  SweepSummary summary = run_verify(config, out, err);
  CHECK(summary.exit_code == 0);
  CHECK(summary.graphs_processed == 1);
  for (const auto& [name, stats] : summary.per_check)
    if (name == "egt") CHECK(stats.tight == 1);
}

TEST_CASE("verify: built-in range is rejected outside 1..8") {
  RunConfig config;
  config.n_lo = 1;
  config.n_hi = 9;
  std::ostringstream out, err;
  SweepSummary summary = run_verify(config, out, err);
  CHECK(summary.exit_code == 1);
  CHECK(summary.graphs_processed == 0);
}

TEST_CASE("evaluate_checks: parallel equals serial on a mixed batch") {
  std::vector<GraphRecord> records;
  for (int n = 1; n <= 6; ++n) {
    Graph g = Graph::complete(n);
    records.push_back({g, graph6_encode(g)});
  }
  records.push_back({Graph::cycle(5), graph6_encode(Graph::cycle(5))});
  std::vector<std::string> checks;  // all
  auto serial = evaluate_checks_serial(records, checks);
  auto parallel = evaluate_checks_parallel(records, checks, 2);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].graph6 == parallel[i].graph6);
    REQUIRE(serial[i].checks.size() == parallel[i].checks.size());
    for (std::size_t c = 0; c < serial[i].checks.size(); ++c) {
      REQUIRE(serial[i].checks[c].has_value() == parallel[i].checks[c].has_value());
      if (serial[i].checks[c]) {
        CHECK(serial[i].checks[c]->lhs == parallel[i].checks[c]->lhs);
        CHECK(serial[i].checks[c]->rhs == parallel[i].checks[c]->rhs);
      }
    }
  }
}

TEST_CASE("solve: output order matches input order at every parallelism degree") {
  std::ostringstream batch;
  for (const Graph& g : enumerate_all(5).graphs) batch << graph6_encode(g) << "\n";
  std::string reference;
  for (int jobs : {1, 2, 4}) {
    RunConfig config;
    config.jobs = jobs;
    std::istringstream in(batch.str());
    std::ostringstream out, err;
    CHECK(run_solve(config, in, out, err) == 0);
    if (jobs == 1) reference = out.str();
    CHECK(out.str() == reference);
  }
  // reports echo the records in input order
  std::istringstream in(batch.str());
  auto outputs = lines_of(reference);
  auto inputs = lines_of(batch.str());
  REQUIRE(outputs.size() == inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i)
    CHECK(outputs[i].find("\"graph6\":\"" + inputs[i] + "\"") != std::string::npos);
}

TEST_CASE("verify: the n = 6 egt tightness census includes K_6 and K_{3,3}") {
  std::set<std::uint64_t> tight;
  for (const Graph& g : enumerate_all(6).graphs) {
    GraphRecord rec{g, graph6_encode(g)};
    auto outcome = evaluate_checks_serial({rec}, {"egt"});
    if (outcome[0].checks[0]->tight) tight.insert(canonical_bits(g));
  }
  CHECK(tight.count(canonical_bits(Graph::complete(6))) == 1);
  CHECK(tight.count(canonical_bits(Graph::complete_bipartite(3, 3))) == 1);
}

TEST_CASE("summary rendering is stable across formats") {
  RunConfig config;
  config.n_lo = config.n_hi = 4;
  config.checks = {"egt"};
  std::ostringstream out, err;
  SweepSummary summary = run_verify(config, out, err);

  std::ostringstream jsonl;
  print_summary(summary, OutputFormat::jsonl, jsonl);
  CHECK(jsonl.str() ==
        "{\"type\":\"summary\",\"graphs_processed\":11,\"checks\":{\"egt\":{\"holds\":11,"
        "\"tight\":2,\"fails\":0}},\"counterexamples\":[]}\n");

  std::ostringstream csv;
  print_summary(summary, OutputFormat::csv, csv);
  CHECK(csv.str() == "check,holds,tight,fails\negt,11,2,0\n");

  std::ostringstream text;
  print_summary(summary, OutputFormat::summary, text);
  CHECK(text.str().find("graphs processed: 11") != std::string::npos);
  CHECK(text.str().find("counterexamples: 0") != std::string::npos);
}

TEST_CASE("enumerate command: 11 lines for n = 4") {
  RunConfig config;
  config.n_lo = config.n_hi = 4;
  std::ostringstream out, err;
  CHECK(run_enumerate(config, out, err) == 0);
  auto lines = lines_of(out.str());
  CHECK(lines.size() == 11);
  for (const std::string& line : lines) CHECK(graph6_decode(line).graph.n() == 4);
  CHECK(err.str().find("11 graphs") != std::string::npos);
}

TEST_CASE("enumerate command: single graph for n = 1") {
  RunConfig config;
  config.n_lo = config.n_hi = 1;
  std::ostringstream out, err;
  CHECK(run_enumerate(config, out, err) == 0);
  CHECK(lines_of(out.str()).size() == 1);
}

TEST_CASE("construct: join 1,1 gives K_4 with a two-edge witness") {
  std::ostringstream out, err;
  CHECK(run_construct("join", {1, 1}, out, err) == 0);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "C~");
  CHECK(lines[1] == "A: 0 5");
  CHECK(err.str().find("|A| = 2") != std::string::npos);
}

TEST_CASE("construct: join 3 gives K_{3,3} with all nine edges") {
  std::ostringstream out, err;
  CHECK(run_construct("join", {3}, out, err) == 0);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 2);
  Graph g = graph6_decode(lines[0]).graph;
  CHECK(canonical_bits(g) == canonical_bits(Graph::complete_bipartite(3, 3)));
  CHECK(err.str().find("|A| = 9") != std::string::npos);
}

TEST_CASE("construct: complete 6 matches the encoder") {
  std::ostringstream out, err;
  CHECK(run_construct("complete", {6}, out, err) == 0);
  CHECK(lines_of(out.str())[0] == graph6_encode(Graph::complete(6)));
}

TEST_CASE("construct: biclique and cycle families") {
  std::ostringstream out, err;
  CHECK(run_construct("biclique", {3, 3}, out, err) == 0);
  CHECK(lines_of(out.str())[0] == graph6_encode(Graph::complete_bipartite(3, 3)));
  std::ostringstream out2, err2;
  CHECK(run_construct("cycle", {5}, out2, err2) == 0);
  CHECK(lines_of(out2.str())[0] == graph6_encode(Graph::cycle(5)));
}

TEST_CASE("construct: bad parameters fail cleanly") {
  std::ostringstream out, err;
  CHECK(run_construct("join", {0}, out, err) == 1);
  CHECK(run_construct("cycle", {2}, out, err) == 1);
  CHECK(run_construct("nonagon", {9}, out, err) == 1);
}
