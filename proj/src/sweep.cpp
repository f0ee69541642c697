#include "egt/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "egt/enumerate.hpp"
#include "egt/graph6.hpp"
#include "egt/solvers.hpp"

namespace egt {

namespace {

struct Needed {
  bool a1 = false, tau = false, taub = false, b = false, witness = false;
};

std::vector<std::string> expand_checks(const std::vector<std::string>& filter) {
  std::vector<std::string> names;
  bool all = filter.empty();
  for (const std::string& f : filter)
    if (f == "all") all = true;
  for (const CheckName& c : report_check_names()) {
    bool wanted = all;
    for (const std::string& f : filter)
      if (f == c.name) wanted = true;
    if (wanted) names.push_back(c.name);
  }
  if (!all)
    for (const std::string& f : filter)
      if (f != "all") check_kind(f);  // throws on unknown names
  return names;
}

Needed needed_params(const std::vector<std::string>& checks) {
  Needed need;
  for (const std::string& c : checks) {
    if (c == "egt") need.a1 = need.tau = true;
    if (c == "bip" || c == "cor516") need.a1 = need.taub = true;
    if (c == "lemma-nb4") need.a1 = need.b = true;
    if (c == "lemma-taub") need.taub = need.b = true;
    if (c == "thm-match") need.a1 = true;
    if (c == "witness-edgebip" || c == "witness-vertmax")
      need.a1 = need.b = need.witness = true;
  }
  return need;
}

GraphOutcome evaluate_one(const GraphRecord& rec, const std::vector<std::string>& checks,
                          const Needed& need) {
  GraphOutcome out;
  out.graph6 = rec.graph6;
  const Graph& g = rec.graph;
  std::optional<SolveResult> a1, t, tb, b;
  if (need.a1) a1 = alpha1(g);
  if (need.tau) t = tau(g);
  if (need.taub) tb = tau_b(g);
  if (need.b) b = bipartite_order(g);
  std::optional<WitnessCertificates> wit;
  if (need.witness) wit = certify_witness_invariants(g, *a1->edge_witness, b->value);

  for (const CheckName& c : report_check_names()) {
    std::string name = c.name;
    bool enabled = std::find(checks.begin(), checks.end(), name) != checks.end();
    if (!enabled) {
      out.checks.emplace_back(std::nullopt);
      continue;
    }
    Check check;
    if (name == "egt") check = check_egt(g.n(), a1->value, t->value);
    else if (name == "bip") check = check_bip_conjecture(g.n(), a1->value, tb->value);
    else if (name == "cor516") check = check_cor_5n2_16(g.n(), a1->value, tb->value);
    else if (name == "lemma-nb4") check = check_lemma_nb4(g.n(), a1->value, b->value);
    else if (name == "lemma-taub") check = check_lemma_taub(g.n(), tb->value, b->value);
    else if (name == "thm-match") check = check_thm_match(g.n(), g.m(), a1->value);
    else if (name == "witness-edgebip") check = wit->edge_bip;
    else check = wit->vert_max;
    out.checks.emplace_back(check);
  }
  return out;
}

template <typename Fn>
void parallel_for_index(std::int64_t count, int jobs, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
  for (std::int64_t i = 0; i < count; ++i) fn(i);
#else
  (void)jobs;
  for (std::int64_t i = 0; i < count; ++i) fn(i);
#endif
}

std::string certificate_jsonl(const BoundReport& rep, const std::string& check_name) {
  nlohmann::ordered_json j;
  j["type"] = "counterexample";
  j["check"] = check_name;
  for (const auto& [name, check] : rep.checks) {
    if (name != check_name) continue;
    j["lhs"] = check.lhs;
    j["rhs"] = check.rhs;
  }
  j["graph6"] = rep.graph6;
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["alpha1"] = rep.alpha1;
  j["tau"] = rep.tau;
  j["tau_b"] = rep.tau_b;
  j["b"] = rep.b_val;
  return j.dump();
}

// Reads every record from a graph6 stream; parse failures are reported with
// their line number.  Returns false if fail_fast stopped the read.
bool read_records(std::istream& in, bool fail_fast, std::vector<GraphRecord>& records,
                  std::ostream& err, int& parse_errors) {
  Graph6Reader reader(in);
  while (auto rec = reader.next()) {
    try {
      Graph6Decoded dec = graph6_decode(*rec);
      if (dec.padding_warning)
        err << "line " << reader.line_number() << ": warning: nonzero padding bits in \""
            << *rec << "\"\n";
      records.push_back({dec.graph, *rec});
    } catch (const Graph6Error& e) {
      ++parse_errors;
      err << "line " << reader.line_number() << ": " << e.what() << "\n";
      if (fail_fast) return false;
    }
  }
  return true;
}

struct InputSet {
  std::vector<GraphRecord> records;
  int parse_errors = 0;
  bool aborted = false;
};

InputSet gather_input(const RunConfig& config, std::istream& fallback_in,
                      std::ostream& err) {
  InputSet set;
  if (!config.single_graph6.empty()) {
    std::istringstream one(config.single_graph6);
    set.aborted = !read_records(one, config.fail_fast, set.records, err, set.parse_errors);
    return set;
  }
  if (config.input_path.empty() || config.input_path == "-") {
    set.aborted =
        !read_records(fallback_in, config.fail_fast, set.records, err, set.parse_errors);
    return set;
  }
  std::ifstream file(config.input_path);
  if (!file) {
    err << "cannot open " << config.input_path << "\n";
    set.parse_errors = 1;
    set.aborted = true;
    return set;
  }
  set.aborted = !read_records(file, config.fail_fast, set.records, err, set.parse_errors);
  return set;
}

int exit_code_from_reports(const std::vector<BoundReport>& reports, int parse_errors) {
  bool theorem_fail = false, conjecture_fail = false;
  for (const BoundReport& rep : reports)
    for (const auto& [name, check] : rep.checks) {
      if (check.holds) continue;
      if (check_kind(name) == CheckKind::theorem) theorem_fail = true;
      else conjecture_fail = true;
    }
  if (theorem_fail || parse_errors > 0) return 1;
  if (conjecture_fail) return 2;
  return 0;
}

}  // namespace

std::vector<GraphOutcome> evaluate_checks_serial(const std::vector<GraphRecord>& records,
                                                 const std::vector<std::string>& checks) {
  std::vector<std::string> names = expand_checks(checks);
  Needed need = needed_params(names);
  std::vector<GraphOutcome> out;
  out.reserve(records.size());
  for (const GraphRecord& rec : records) out.push_back(evaluate_one(rec, names, need));
  return out;
}

std::vector<GraphOutcome> evaluate_checks_parallel(const std::vector<GraphRecord>& records,
                                                   const std::vector<std::string>& checks,
                                                   int jobs) {
  std::vector<std::string> names = expand_checks(checks);
  Needed need = needed_params(names);
  std::vector<GraphOutcome> out(records.size());
  parallel_for_index(static_cast<std::int64_t>(records.size()), jobs, [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] =
        evaluate_one(records[static_cast<std::size_t>(i)], names, need);
  });
  return out;
}

std::vector<BoundReport> solve_reports_serial(const std::vector<GraphRecord>& records) {
  std::vector<BoundReport> out;
  out.reserve(records.size());
  for (const GraphRecord& rec : records) out.push_back(make_report(rec.graph, rec.graph6));
  return out;
}

std::vector<BoundReport> solve_reports_parallel(const std::vector<GraphRecord>& records,
                                                int jobs) {
  std::vector<BoundReport> out(records.size());
  parallel_for_index(static_cast<std::int64_t>(records.size()), jobs, [&](std::int64_t i) {
    out[static_cast<std::size_t>(i)] =
        make_report(records[static_cast<std::size_t>(i)].graph,
                    records[static_cast<std::size_t>(i)].graph6);
  });
  return out;
}

int run_solve(const RunConfig& config, std::istream& in, std::ostream& out,
              std::ostream& err) {
  InputSet input = gather_input(config, in, err);
  if (input.aborted && input.parse_errors > 0) return 1;

  std::vector<BoundReport> reports =
      config.jobs == 1 ? solve_reports_serial(input.records)
                       : solve_reports_parallel(input.records, config.jobs);
  if (config.format == OutputFormat::csv) {
    out << csv_header() << "\n";
    for (const BoundReport& rep : reports) out << to_csv(rep) << "\n";
  } else {
    for (const BoundReport& rep : reports) out << to_jsonl(rep) << "\n";
  }
  return exit_code_from_reports(reports, input.parse_errors);
}

SweepSummary run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  SweepSummary summary;
  std::vector<std::string> names = expand_checks(config.checks);
  for (const std::string& name : names) summary.per_check.emplace_back(name, CheckStats{});

  bool builtin = config.input_path.empty() && config.single_graph6.empty();
  int parse_errors = 0;
  bool stop = false;

  auto consume_batch = [&](const std::vector<GraphRecord>& records) {
    std::vector<GraphOutcome> outcomes =
        config.jobs == 1 ? evaluate_checks_serial(records, names)
                         : evaluate_checks_parallel(records, names, config.jobs);
    for (std::size_t gi = 0; gi < outcomes.size() && !stop; ++gi) {
      const GraphOutcome& oc = outcomes[gi];
      ++summary.graphs_processed;
      std::size_t slot = 0;
      for (std::size_t idx = 0; idx < report_check_names().size(); ++idx) {
        const CheckName& c = report_check_names()[idx];
        const std::optional<Check>& check = oc.checks[idx];
        if (!check) continue;
        CheckStats& stats = summary.per_check[slot++].second;
        if (check->holds) {
          ++stats.holds;
          if (check->tight) ++stats.tight;
          continue;
        }
        ++stats.fails;
        BoundReport rep = make_report(records[gi].graph, oc.graph6);
        if (c.kind == CheckKind::theorem) {
          err << "theorem check " << c.name << " failed on " << oc.graph6
              << " -- this is a bug in the artifact\n";
          err << certificate_jsonl(rep, c.name) << "\n";
          summary.exit_code = 1;
          stop = true;
          break;
        }
        summary.counterexamples.push_back(oc.graph6);
        out << certificate_jsonl(rep, c.name) << "\n";
        if (summary.exit_code == 0) summary.exit_code = 2;
        if (config.fail_fast) {
          stop = true;
          break;
        }
      }
    }
  };

  if (builtin) {
    if (config.n_lo < 1 || config.n_hi > 8 || config.n_lo > config.n_hi) {
      err << "built-in enumeration supports --n within 1..8; use --input for larger "
             "streams\n";
      summary.exit_code = 1;
      return summary;
    }
    for (int n = config.n_lo; n <= config.n_hi && !stop; ++n) {
      EnumerationLevel level = enumerate_all(n, config.jobs);
      std::vector<GraphRecord> records;
      records.reserve(level.graphs.size());
      for (const Graph& g : level.graphs) records.push_back({g, graph6_encode(g)});
      consume_batch(records);
    }
  } else {
    std::ifstream file;
    std::istringstream one;
    std::istream* in = nullptr;
    if (!config.single_graph6.empty()) {
      one.str(config.single_graph6);
      in = &one;
    } else if (config.input_path == "-") {
      in = &std::cin;
    } else {
      file.open(config.input_path);
      if (!file) {
        err << "cannot open " << config.input_path << "\n";
        summary.exit_code = 1;
        return summary;
      }
      in = &file;
    }
    std::vector<GraphRecord> records;
    bool completed = read_records(*in, config.fail_fast, records, err, parse_errors);
    if (completed || !config.fail_fast) consume_batch(records);
    if (parse_errors > 0 && summary.exit_code == 0) summary.exit_code = 1;
  }

  auto elapsed = std::chrono::steady_clock::now() - start;
  summary.wall_seconds = std::chrono::duration<double>(elapsed).count();
  err << "wall time: " << std::fixed << std::setprecision(2) << summary.wall_seconds
      << " s\n";
  return summary;
}

void print_summary(const SweepSummary& summary, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::jsonl) {
    nlohmann::ordered_json j;
    j["type"] = "summary";
    j["graphs_processed"] = summary.graphs_processed;
    nlohmann::ordered_json checks;
    for (const auto& [name, stats] : summary.per_check)
      checks[name] = {{"holds", stats.holds}, {"tight", stats.tight}, {"fails", stats.fails}};
    j["checks"] = checks;
    j["counterexamples"] = summary.counterexamples;
    out << j.dump() << "\n";
    return;
  }
  if (format == OutputFormat::csv) {
    out << "check,holds,tight,fails\n";
    for (const auto& [name, stats] : summary.per_check)
      out << name << ',' << stats.holds << ',' << stats.tight << ',' << stats.fails << "\n";
    return;
  }
  out << "graphs processed: " << summary.graphs_processed << "\n";
  out << std::left << std::setw(18) << "check" << std::right << std::setw(10) << "holds"
      << std::setw(10) << "tight" << std::setw(10) << "fails" << "\n";
  for (const auto& [name, stats] : summary.per_check)
    out << std::left << std::setw(18) << name << std::right << std::setw(10) << stats.holds
        << std::setw(10) << stats.tight << std::setw(10) << stats.fails << "\n";
  out << "counterexamples: " << summary.counterexamples.size() << "\n";
}

int run_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n_lo != config.n_hi || config.n_lo < 1 || config.n_lo > 9) {
    err << "enumerate needs --n within 1..9\n";
    return 1;
  }
  std::uint64_t count = 0;
  enumerate_stream(config.n_lo, [&](const Graph& g) {
    out << graph6_encode(g) << "\n";
    ++count;
  }, config.jobs);
  err << count << " graphs on " << config.n_lo << " vertices\n";
  return 0;
}

int run_construct(const std::string& family, const std::vector<int>& params,
                  std::ostream& out, std::ostream& err) {
  try {
    if (family == "complete") {
      if (params.size() != 1) throw std::invalid_argument("complete takes one parameter");
      out << graph6_encode(Graph::complete(params[0])) << "\n";
      return 0;
    }
    if (family == "biclique") {
      if (params.size() != 2) throw std::invalid_argument("biclique takes two parameters");
      out << graph6_encode(Graph::complete_bipartite(params[0], params[1])) << "\n";
      return 0;
    }
    if (family == "cycle") {
      if (params.size() != 1) throw std::invalid_argument("cycle takes one parameter");
      out << graph6_encode(Graph::cycle(params[0])) << "\n";
      return 0;
    }
    if (family == "join") {
      if (params.empty()) throw std::invalid_argument("join takes at least one part size");
      JoinProfile profile;
      for (int r : params) {
        if (r < 1) throw std::invalid_argument("join part sizes must be >= 1");
        profile.parts.push_back(r);
      }
      std::sort(profile.parts.begin(), profile.parts.end());
      Graph g = join_of_balanced_bicliques(profile);
      // A = the edges inside each K_{r,r} factor; triangle-independent of
      // size sum r_i^2 by construction, re-checked before emitting.
      std::vector<std::pair<int, int>> a_pairs;
      int base = 0, expected = 0;
      for (int r : profile.parts) {
        for (int u = 0; u < r; ++u)
          for (int v = r; v < 2 * r; ++v) a_pairs.emplace_back(base + u, base + v);
        base += 2 * r;
        expected += r * r;
      }
      EdgeSet a = EdgeSet::from_pairs(g, a_pairs);
      if (a.size() != expected || !is_triangle_independent(g, a))
        throw std::logic_error("constructed witness failed certification");
      out << graph6_encode(g) << "\n";
      out << "A:";
      for (int id : a.ids()) out << ' ' << id;
      out << "\n";
      err << "|A| = " << a.size() << "\n";
      return 0;
    }
    throw std::invalid_argument("unknown family: " + family +
                                " (expected complete|biclique|join|cycle)");
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace egt
