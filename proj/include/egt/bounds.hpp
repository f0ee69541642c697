#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egt/edgeset.hpp"
#include "egt/graph.hpp"

namespace egt {

/// One inequality evaluated in cleared-denominator integer arithmetic.
/// holds = (lhs <= rhs), tight = (lhs == rhs).  No floating point anywhere.
struct Check {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = true;
  bool tight = false;
};

Check make_check(long long lhs, long long rhs);

/// Proved results are theorem checks (a failure is a bug in this artifact);
/// the two open inequalities are conjecture checks (a failure is a
/// counterexample certificate).
enum class CheckKind { theorem, conjecture };

// 4(alpha1 + tau) <= n^2
Check check_egt(int n, int alpha1, int tau);
// 4(alpha1 + tau_B) <= n^2
Check check_bip_conjecture(int n, int alpha1, int tau_b);
// 16(alpha1 + tau_B) <= 5 n^2
Check check_cor_5n2_16(int n, int alpha1, int tau_b);
// 4 alpha1 <= n b
Check check_lemma_nb4(int n, int alpha1, int b_val);
// 4 tau_B <= n^2 - b^2
Check check_lemma_taub(int n, int tau_b, int b_val);
// 2 alpha1 <= n^2 - 2m
Check check_thm_match(int n, int m, int alpha1);

/// Multiset [r_1, ..., r_t] certifying that G is the join of the balanced
/// complete bipartite graphs K_{r_i, r_i}.
struct JoinProfile {
  std::vector<int> parts;  // ascending, each >= 1, sum of 2 r_i equals n
  friend bool operator==(const JoinProfile&, const JoinProfile&) = default;
};

/// Detects joins of balanced complete bipartite graphs: G qualifies iff its
/// complement is a disjoint union of cliques whose size multiset has even
/// multiplicity at every size (equal-size cliques pair into K_{r,r}
/// factors).
std::optional<JoinProfile> recognize_join_of_balanced_bicliques(const Graph& g);

/// Rebuilds join(K_{r_1,r_1}, ..., K_{r_t,r_t}) from a profile.
Graph join_of_balanced_bicliques(const JoinProfile& profile);

/// Per-edge certificates for an optimal triangle-independent set A:
///   every edge uv of G satisfies d_A(u) + d_A(v) <= b(G);
///   every edge uv of A satisfies d_A(u) <= n - d_G(v) (both orientations).
/// The summary checks carry the worst edge on each side.
struct WitnessViolation {
  std::string check;
  int u = 0, v = 0;
  long long lhs = 0, rhs = 0;
};
struct WitnessCertificates {
  Check edge_bip;   // max over uv in E of d_A(u)+d_A(v), against b
  Check vert_max;   // worst-margin instance of d_A(u) <= n - d_G(v) over A
  std::vector<WitnessViolation> violations;
  bool ok() const { return violations.empty(); }
};
WitnessCertificates certify_witness_invariants(const Graph& g, const EdgeSet& a,
                                               int b_val);

/// Everything the harness reports for one graph.
struct BoundReport {
  std::string graph6;
  int n = 0, m = 0;
  int alpha1 = 0, tau = 0, tau_b = 0, b_val = 0;
  std::vector<std::pair<std::string, Check>> checks;  // fixed order, all eight
  std::optional<JoinProfile> join_profile;
};

struct CheckName {
  const char* name;
  CheckKind kind;
};
/// The eight report checks in output order: egt, bip, cor516, lemma-nb4,
/// lemma-taub, thm-match, witness-edgebip, witness-vertmax.
const std::vector<CheckName>& report_check_names();
CheckKind check_kind(const std::string& name);

/// Solves all four parameters and evaluates every check for one graph.
BoundReport make_report(const Graph& g, const std::string& graph6_record);

std::string to_jsonl(const BoundReport& report);
std::string csv_header();
std::string to_csv(const BoundReport& report);

}  // namespace egt
