#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "egt/sweep.hpp"

namespace {

bool parse_range(const std::string& text, int& lo, int& hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

std::vector<int> parse_params(const std::vector<std::string>& raw) {
  std::vector<int> out;
  for (const std::string& token : raw) {
    std::string piece;
    std::istringstream ss(token);
    while (std::getline(ss, piece, ','))
      if (!piece.empty()) out.push_back(std::stoi(piece));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers and exhaustive verification for triangle-independent\n"
               "edge sets, triangle edge covers, and edge bipartization of small graphs"};
  app.require_subcommand(1);

  egt::RunConfig config;
  std::string n_range, format, out_path;  // format defaults per subcommand
  std::vector<std::string> params_raw;
  std::string family;

  CLI::App* solve = app.add_subcommand("solve", "solve all four parameters and evaluate "
                                                "every check for each input graph");
  solve->add_option("--input", config.input_path, "graph6 stream (FILE or - for stdin)");
  solve->add_option("--graph", config.single_graph6, "one inline graph6 record");
  solve->add_option("--format", format, "jsonl|csv")->check(CLI::IsMember({"jsonl", "csv"}));
  solve->add_option("--jobs", config.jobs, "worker threads (0 = all cores)");
  solve->add_option("--seed", config.seed, "seed for randomized operations");
  solve->add_flag("--fail-fast", config.fail_fast, "stop at the first malformed record");

  CLI::App* verify = app.add_subcommand(
      "verify", "sweep graphs and certify every enabled inequality");
  verify->add_option("--n", n_range, "vertex range A..B for built-in enumeration (1..8)");
  verify->add_option("--input", config.input_path,
                     "external graph6 stream instead of built-in enumeration");
  verify->add_option("--graph", config.single_graph6, "one inline graph6 record");
  verify->add_option("--check", config.checks,
                     "egt|bip|cor516|lemma-nb4|lemma-taub|thm-match|all (repeatable)");
  verify->add_option("--format", format, "summary|jsonl|csv")
      ->check(CLI::IsMember({"summary", "jsonl", "csv"}));
  verify->add_option("--jobs", config.jobs, "worker threads (0 = all cores)");
  verify->add_option("--seed", config.seed, "seed for randomized operations");
  verify->add_flag("--fail-fast", config.fail_fast, "stop at the first counterexample");

  CLI::App* enumerate = app.add_subcommand("enumerate",
                                           "emit all non-isomorphic graphs on n vertices");
  enumerate->add_option("--n", n_range, "vertex count (1..9)")->required();
  enumerate->add_option("--out", out_path, "write the graph6 lines to FILE");
  enumerate->add_option("--jobs", config.jobs, "worker threads (0 = all cores)");

  CLI::App* construct = app.add_subcommand("construct", "emit one extremal family member");
  construct->add_option("--family", family, "complete|biclique|join|cycle")->required();
  construct->add_option("--params", params_raw, "family parameters (join takes r1,r2,...)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) {
      config.command = egt::Command::solve;
      if (!config.input_path.empty() && !config.single_graph6.empty()) {
        std::cerr << "choose one input source: --input or --graph\n";
        return 1;
      }
      config.format = format == "csv" ? egt::OutputFormat::csv : egt::OutputFormat::jsonl;
      return egt::run_solve(config, std::cin, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      config.command = egt::Command::verify;
      if (!n_range.empty() && !parse_range(n_range, config.n_lo, config.n_hi)) {
        std::cerr << "bad --n range: " << n_range << "\n";
        return 1;
      }
      int sources = (!n_range.empty() ? 1 : 0) + (!config.input_path.empty() ? 1 : 0) +
                    (!config.single_graph6.empty() ? 1 : 0);
      if (sources != 1) {
        std::cerr << "choose exactly one input source: --n A..B, --input FILE, or --graph\n";
        return 1;
      }
      config.format = format == "jsonl"  ? egt::OutputFormat::jsonl
                      : format == "csv"  ? egt::OutputFormat::csv
                                         : egt::OutputFormat::summary;
      egt::SweepSummary summary = egt::run_verify(config, std::cout, std::cerr);
      egt::print_summary(summary, config.format, std::cout);
      return summary.exit_code;
    }
    if (enumerate->parsed()) {
      config.command = egt::Command::enumerate_graphs;
      if (!parse_range(n_range, config.n_lo, config.n_hi)) {
        std::cerr << "bad --n value: " << n_range << "\n";
        return 1;
      }
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "cannot open " << out_path << "\n";
          return 1;
        }
        return egt::run_enumerate(config, out, std::cerr);
      }
      return egt::run_enumerate(config, std::cout, std::cerr);
    }
    config.command = egt::Command::construct;
    return egt::run_construct(family, parse_params(params_raw), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
