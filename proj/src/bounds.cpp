#include "egt/bounds.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "egt/solvers.hpp"

namespace egt {

Check make_check(long long lhs, long long rhs) {
  return {lhs, rhs, lhs <= rhs, lhs == rhs};
}

Check check_egt(int n, int alpha1, int tau) {
  return make_check(4ll * (alpha1 + tau), 1ll * n * n);
}

Check check_bip_conjecture(int n, int alpha1, int tau_b) {
  return make_check(4ll * (alpha1 + tau_b), 1ll * n * n);
}

Check check_cor_5n2_16(int n, int alpha1, int tau_b) {
  return make_check(16ll * (alpha1 + tau_b), 5ll * n * n);
}

Check check_lemma_nb4(int n, int alpha1, int b_val) {
  return make_check(4ll * alpha1, 1ll * n * b_val);
}

Check check_lemma_taub(int n, int tau_b, int b_val) {
  return make_check(4ll * tau_b, 1ll * n * n - 1ll * b_val * b_val);
}

Check check_thm_match(int n, int m, int alpha1) {
  return make_check(2ll * alpha1, 1ll * n * n - 2ll * m);
}

std::optional<JoinProfile> recognize_join_of_balanced_bicliques(const Graph& g) {
  if (g.n() == 0 || g.n() % 2 != 0) return std::nullopt;
  Graph comp = complement(g);
  // components of the complement, each required to be a clique
  std::map<int, int> size_count;
  std::uint32_t unvisited = comp.vertex_mask();
  while (unvisited) {
    std::uint32_t component = 1u << std::countr_zero(unvisited);
    while (true) {
      std::uint32_t grown = component;
      std::uint32_t rest = component;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        grown |= comp.row(v);
      }
      if (grown == component) break;
      component = grown;
    }
    std::uint32_t rest = component;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if ((comp.row(v) & component) != (component & ~(1u << v))) return std::nullopt;
    }
    ++size_count[std::popcount(component)];
    unvisited &= ~component;
  }
  JoinProfile profile;
  for (auto [size, count] : size_count) {
    if (count % 2 != 0) return std::nullopt;
    for (int i = 0; i < count / 2; ++i) profile.parts.push_back(size);
  }
  return profile;
}

Graph join_of_balanced_bicliques(const JoinProfile& profile) {
  std::vector<Graph> factors;
  for (int r : profile.parts) factors.push_back(Graph::complete_bipartite(r, r));
  return Graph::join(factors);
}

WitnessCertificates certify_witness_invariants(const Graph& g, const EdgeSet& a,
                                               int b_val) {
  WitnessCertificates out;
  std::array<int, kMaxVertices> deg_a{};
  for (auto [u, v] : a.pairs()) {
    ++deg_a[static_cast<std::size_t>(u)];
    ++deg_a[static_cast<std::size_t>(v)];
  }

  long long worst_pair = 0;
  for (auto [u, v] : g.edge_pairs()) {
    long long lhs = deg_a[static_cast<std::size_t>(u)] + deg_a[static_cast<std::size_t>(v)];
    worst_pair = std::max(worst_pair, lhs);
    if (lhs > b_val)
      out.violations.push_back({"witness-edgebip", u, v, lhs, b_val});
  }
  out.edge_bip = make_check(worst_pair, b_val);

  // worst margin of d_A(u) <= n - d_G(v), both orientations of each A-edge
  long long worst_lhs = 0, worst_rhs = g.n();
  bool seen = false;
  auto consider = [&](int u, int v) {
    long long lhs = deg_a[static_cast<std::size_t>(u)];
    long long rhs = g.n() - g.degree(v);
    if (!seen || lhs - rhs > worst_lhs - worst_rhs) {
      worst_lhs = lhs;
      worst_rhs = rhs;
      seen = true;
    }
    if (lhs > rhs) out.violations.push_back({"witness-vertmax", u, v, lhs, rhs});
  };
  for (auto [u, v] : a.pairs()) {
    consider(u, v);
    consider(v, u);
  }
  out.vert_max = seen ? make_check(worst_lhs, worst_rhs) : make_check(0, g.n());
  return out;
}

const std::vector<CheckName>& report_check_names() {
  static const std::vector<CheckName> names = {
      {"egt", CheckKind::conjecture},      {"bip", CheckKind::conjecture},
      {"cor516", CheckKind::theorem},      {"lemma-nb4", CheckKind::theorem},
      {"lemma-taub", CheckKind::theorem},  {"thm-match", CheckKind::theorem},
      {"witness-edgebip", CheckKind::theorem},
      {"witness-vertmax", CheckKind::theorem},
  };
  return names;
}

CheckKind check_kind(const std::string& name) {
  for (const CheckName& c : report_check_names())
    if (name == c.name) return c.kind;
  throw std::invalid_argument("unknown check: " + name);
}

BoundReport make_report(const Graph& g, const std::string& graph6_record) {
  BoundReport rep;
  rep.graph6 = graph6_record;
  rep.n = g.n();
  rep.m = g.m();
  SolveResult a1 = alpha1(g);
  SolveResult t = tau(g);
  SolveResult tb = tau_b(g);
  SolveResult b = bipartite_order(g);
  rep.alpha1 = a1.value;
  rep.tau = t.value;
  rep.tau_b = tb.value;
  rep.b_val = b.value;

  WitnessCertificates wit = certify_witness_invariants(g, *a1.edge_witness, b.value);
  rep.checks.emplace_back("egt", check_egt(rep.n, rep.alpha1, rep.tau));
  rep.checks.emplace_back("bip", check_bip_conjecture(rep.n, rep.alpha1, rep.tau_b));
  rep.checks.emplace_back("cor516", check_cor_5n2_16(rep.n, rep.alpha1, rep.tau_b));
  rep.checks.emplace_back("lemma-nb4", check_lemma_nb4(rep.n, rep.alpha1, rep.b_val));
  rep.checks.emplace_back("lemma-taub", check_lemma_taub(rep.n, rep.tau_b, rep.b_val));
  rep.checks.emplace_back("thm-match", check_thm_match(rep.n, rep.m, rep.alpha1));
  rep.checks.emplace_back("witness-edgebip", wit.edge_bip);
  rep.checks.emplace_back("witness-vertmax", wit.vert_max);
  rep.join_profile = recognize_join_of_balanced_bicliques(g);
  return rep;
}

std::string to_jsonl(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["graph6"] = report.graph6;
  j["n"] = report.n;
  j["m"] = report.m;
  j["alpha1"] = report.alpha1;
  j["tau"] = report.tau;
  j["tau_b"] = report.tau_b;
  j["b"] = report.b_val;
  nlohmann::ordered_json checks;
  for (const auto& [name, check] : report.checks) {
    checks[name] = {{"lhs", check.lhs},
                    {"rhs", check.rhs},
                    {"holds", check.holds},
                    {"tight", check.tight}};
  }
  j["checks"] = checks;
  if (report.join_profile)
    j["join_profile"] = report.join_profile->parts;
  else
    j["join_profile"] = nullptr;
  return j.dump();
}

std::string csv_header() {
  std::ostringstream out;
  out << "graph6,n,m,alpha1,tau,tau_b,b";
  for (const CheckName& c : report_check_names())
    out << ',' << c.name << "_lhs," << c.name << "_rhs," << c.name << "_holds,"
        << c.name << "_tight";
  out << ",join_profile";
  return out.str();
}

std::string to_csv(const BoundReport& report) {
  std::ostringstream out;
  out << report.graph6 << ',' << report.n << ',' << report.m << ',' << report.alpha1
      << ',' << report.tau << ',' << report.tau_b << ',' << report.b_val;
  for (const auto& [name, check] : report.checks)
    out << ',' << check.lhs << ',' << check.rhs << ',' << (check.holds ? 1 : 0) << ','
        << (check.tight ? 1 : 0);
  out << ',';
  if (report.join_profile) {
    for (std::size_t i = 0; i < report.join_profile->parts.size(); ++i) {
      if (i) out << '+';
      out << report.join_profile->parts[i];
    }
  }
  return out.str();
}

}  // namespace egt
