#pragma once

// The finite enumeration behind the odd-automorphism-group classification
// below 3^7: candidate orders of Aut(G), candidate orders of G/Z, which
// Sylow subgroup of G/Z is forced normal, and the cases needing a finer
// argument. Every elimination is a named rule with an audit entry; derived
// lists are compared against stored reference data, never copied from it.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddaut/group.hpp"

namespace oddaut {

inline constexpr std::uint64_t kAutOrderBound = 2187;  // 3^7

struct NumberProfile {
  std::uint64_t n = 1;
  std::map<std::uint64_t, unsigned> factorization;
  unsigned big_omega = 0;    // prime factors with multiplicity
  unsigned small_omega = 0;  // distinct primes
  std::vector<std::uint64_t> primes() const;
};
NumberProfile number_profile(std::uint64_t n);

enum class Verdict { Pass, Reject };

struct AuditEntry {
  std::string rule;
  Verdict verdict = Verdict::Pass;
  std::string justification;
};

struct CandidateOrder {
  NumberProfile profile;
  std::vector<AuditEntry> audit;
  bool survives() const;
};

/// Every odd n in [3, bound) with its audit under the rules R1 (odd),
/// R2 (at least five prime factors), R3 (not a prime power).
std::vector<CandidateOrder> audit_aut_orders(std::uint64_t bound = kAutOrderBound);
/// Survivors of audit_aut_orders, ascending.
std::vector<CandidateOrder> candidate_aut_orders(std::uint64_t bound = kAutOrderBound);

/// Every divisor d > 1 of a candidate with its audit under Q0 (prime
/// powers), Q1 (a prime-order Sylow subgroup forced normal by counting)
/// and Q2 (square-free orders).
std::vector<CandidateOrder> audit_quotient_orders(const std::vector<CandidateOrder>& aut_candidates);
std::vector<CandidateOrder> candidate_quotient_orders(const std::vector<CandidateOrder>& aut_candidates);

/// Which Sylow subgroups of a group of order d with no normal subgroup of
/// prime order can be forced normal.
struct SylowAnalysis {
  std::uint64_t d = 0;
  /// (i, p) when exactly one prime p is forced in every surviving branch.
  std::optional<std::pair<unsigned, std::uint64_t>> row;
  /// Distinct outcomes over all branches: sets of forced primes, plus
  /// "open" when some branch forces nothing.
  std::vector<std::vector<std::uint64_t>> forced_sets;
  bool has_open_branch = false;
  std::vector<std::string> trace;
};
SylowAnalysis analyze_quotient_order(std::uint64_t d);

struct TableRow {
  unsigned i = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> quotient_orders;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct NormalSylowTable {
  std::vector<TableRow> rows;  // sorted by (i, p); orders ascending
  std::vector<SylowAnalysis> omitted;
};
NormalSylowTable normal_sylow_table(const std::vector<CandidateOrder>& quotient_candidates);

/// The single omitted order whose analysis forces one prime or leaves an
/// open branch (as opposed to two competing primes).
bool is_exceptional_order(const SylowAnalysis& a);

/// Rows with i >= 3 where some other prime of d divides |GL(j, p)| or
/// |GL(i - j, p)| for a layer 1 <= j <= i - 2, so the action on a
/// non-elementary P/(Z ∩ P) cannot be dismissed by order arguments.
struct Step2Case {
  std::uint64_t d = 0;
  unsigned i = 0;
  std::uint64_t p = 0;
  std::vector<std::string> reasons;
};
std::vector<Step2Case> step2_hard_cases(const NormalSylowTable& table);

struct ExceptionalShapeReport {
  std::size_t central_quotient_order = 0;
  bool order_matches = false;         // |G/Z| = 3^4 * 13
  bool quotient_centerless = false;   // Z(G/Z) = 1
  bool abelianization_divisible_by_3 = false;
  bool splits_over_normal_3_subgroup = false;  // G = P ⋊ B with P a normal 3-subgroup, P ∩ B = 1
  bool matches() const {
    return order_matches && quotient_centerless && abelianization_divisible_by_3 && splits_over_normal_3_subgroup;
  }
};
ExceptionalShapeReport exceptional_shape(const Group& g);

/// Reference data files: whitespace-separated integers, '#' comments.
std::vector<std::uint64_t> read_number_list(const std::string& path);
/// Lines "i p d1 d2 ...".
std::vector<TableRow> read_table(const std::string& path);
std::string paper_data_dir();

/// Throws RuleSetIncomplete listing missing and extra entries.
void require_same_set(const std::vector<std::uint64_t>& derived, const std::vector<std::uint64_t>& reference,
                      const std::string& what);
void require_same_table(const std::vector<TableRow>& derived, const std::vector<TableRow>& reference);

}  // namespace oddaut
