#include "oddaut/case_analysis.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "oddaut/linalg_fp.hpp"
#include "oddaut/numtheory.hpp"
#include "oddaut/structure.hpp"

namespace oddaut {
namespace {

std::string join_numbers(const std::vector<std::uint64_t>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

/// Possible numbers of Sylow q-subgroups of a group of order k: divisors of
/// the q'-part that are 1 mod q.
std::vector<std::uint64_t> sylow_counts(std::uint64_t k, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x : divisors(k / p_part(k, q))) {
    if (x % q == 1) out.push_back(x);
  }
  return out;
}

// Outcome of the counting facts on a characteristic subgroup of order k
// inside a group of order d: dead (contradicts "no normal subgroup of prime
// order"), a set of primes whose Sylow subgroup of the whole group is
// forced normal, or inconclusive.
struct Outcome {
  enum Kind { Dead, Forced, Inconclusive } kind = Inconclusive;
  std::set<std::uint64_t> primes;
};

std::vector<Outcome> counting_facts(std::uint64_t k, std::uint64_t d, std::vector<std::string>& trace) {
  const auto f = factorize(k);
  std::set<std::uint64_t> forced;
  bool dead = false;
  for (const auto& [q, a] : f) {
    if (sylow_counts(k, q) != std::vector<std::uint64_t>{1}) continue;
    if (a != valuation(d, q)) continue;
    if (a == 1) {
      trace.push_back("order " + std::to_string(k) + ": unique Sylow " + std::to_string(q) +
                      "-subgroup of prime order is normal: excluded");
      dead = true;
    } else {
      trace.push_back("order " + std::to_string(k) + ": Sylow count forces the Sylow " + std::to_string(q) +
                      "-subgroup normal");
      forced.insert(q);
    }
  }
  if (dead) return {{Outcome::Dead, {}}};
  if (!forced.empty()) return {{Outcome::Forced, forced}};

  // Element counting in a two-prime order k with q exactly dividing k:
  // n_q (q-1) elements of order q leave k - n_q (q-1); if that is the
  // p-part, the Sylow p-subgroup is unique.
  if (f.size() == 2) {
    for (const auto& [q, a] : f) {
      if (a != 1) continue;
      const std::uint64_t p = (f.begin()->first == q) ? std::next(f.begin())->first : f.begin()->first;
      const unsigned b = f.at(p);
      std::vector<Outcome> outs;
      bool all_decided = true;
      for (std::uint64_t nq : sylow_counts(k, q)) {
        Outcome o;
        if (nq == 1) {
          if (valuation(d, q) == 1) o.kind = Outcome::Dead;
        } else if (k - nq * (q - 1) == ipow(p, b)) {
          if (b == valuation(d, p)) {
            o.kind = b == 1 ? Outcome::Dead : Outcome::Forced;
            if (b != 1) o.primes = {p};
          }
        }
        if (o.kind == Outcome::Inconclusive) all_decided = false;
        outs.push_back(o);
      }
      if (all_decided) {
        trace.push_back("order " + std::to_string(k) + ": element count over the admissible Sylow " +
                        std::to_string(q) + "-counts decides every branch");
        return outs;
      }
    }
  }
  return {{Outcome::Inconclusive, {}}};
}

struct Exploration {
  std::set<std::vector<std::uint64_t>> forced;
  bool open = false;
};

// Characteristic subgroups grow by elementary abelian q^j layers (an odd
// order group has a characteristic elementary abelian subgroup; apply this
// to successive quotients). Follow every chain 1 < N_1 < ... until facts
// decide it.
void explore(std::uint64_t n, std::uint64_t d, Exploration& out, std::vector<std::string>& trace) {
  std::vector<Outcome> outcomes{{Outcome::Inconclusive, {}}};
  if (n > 1) outcomes = counting_facts(n, d, trace);
  for (const Outcome& o : outcomes) {
    if (o.kind == Outcome::Dead) continue;
    if (o.kind == Outcome::Forced) {
      out.forced.insert(std::vector<std::uint64_t>(o.primes.begin(), o.primes.end()));
      continue;
    }
    if (n == d) {
      out.open = true;
      continue;
    }
    for (const auto& [q, a] : factorize(d / n)) {
      std::uint64_t step = 1;
      for (unsigned j = 1; j <= a; ++j) {
        step *= q;
        explore(n * step, d, out, trace);
      }
    }
  }
}

AuditEntry entry(const char* rule, bool reject, std::string why) {
  return {rule, reject ? Verdict::Reject : Verdict::Pass, std::move(why)};
}

}  // namespace

std::vector<std::uint64_t> NumberProfile::primes() const {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factorization) out.push_back(p);
  return out;
}

NumberProfile number_profile(std::uint64_t n) {
  require(n >= 1, ErrorKind::InvalidParameter, "number_profile needs n >= 1");
  NumberProfile np;
  np.n = n;
  np.factorization = factorize(n);
  for (const auto& [p, e] : np.factorization) np.big_omega += e;
  np.small_omega = static_cast<unsigned>(np.factorization.size());
  return np;
}

bool CandidateOrder::survives() const {
  return std::none_of(audit.begin(), audit.end(), [](const AuditEntry& a) { return a.verdict == Verdict::Reject; });
}

std::vector<CandidateOrder> audit_aut_orders(std::uint64_t bound) {
  std::vector<CandidateOrder> out;
  for (std::uint64_t n = 3; n < bound; n += 2) {
    CandidateOrder c{number_profile(n), {}};
    c.audit.push_back(entry("R1-odd", false, "an N.I. group has an automorphism group of odd order"));
    c.audit.push_back(entry("R2-omega", c.profile.big_omega < 5,
                            "Omega = " + std::to_string(c.profile.big_omega) +
                                "; automorphism groups with at most four prime factors (with multiplicity) have even order"));
    c.audit.push_back(entry("R3-prime-power", c.profile.small_omega == 1,
                            "an odd automorphism group of order below 3^7 is not a p-group"));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CandidateOrder> candidate_aut_orders(std::uint64_t bound) {
  std::vector<CandidateOrder> out;
  for (auto& c : audit_aut_orders(bound)) {
    if (c.survives()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<CandidateOrder> audit_quotient_orders(const std::vector<CandidateOrder>& aut_candidates) {
  std::set<std::uint64_t> ds;
  for (const auto& c : aut_candidates) {
    for (std::uint64_t d : divisors(c.profile.n)) {
      if (d > 1) ds.insert(d);
    }
  }
  std::vector<CandidateOrder> out;
  for (std::uint64_t d : ds) {
    CandidateOrder c{number_profile(d), {}};
    c.audit.push_back(entry("Q0-prime-power", c.profile.small_omega == 1,
                            "G/Z a p-group makes G nilpotent, so Aut(G) is the product of the automorphism "
                            "groups of its Sylow subgroups, which cannot be odd and small here"));
    std::vector<std::uint64_t> forced;
    for (const auto& [p, e] : c.profile.factorization) {
      if (e == 1 && sylow_counts(d, p) == std::vector<std::uint64_t>{1}) forced.push_back(p);
    }
    c.audit.push_back(entry("Q1-forced-normal-sylow", !forced.empty(),
                            forced.empty() ? "no prime-order Sylow subgroup is forced normal by counting"
                                           : "Sylow count forces a normal abelian Sylow subgroup for p in {" +
                                                 join_numbers(forced) +
                                                 "}; it splits off and its inversion extends to an involution"));
    const bool squarefree = std::all_of(c.profile.factorization.begin(), c.profile.factorization.end(),
                                        [](const auto& pe) { return pe.second == 1; });
    c.audit.push_back(entry("Q2-square-free", squarefree,
                            "a characteristic elementary abelian subgroup of a square-free odd order group is a "
                            "normal Sylow subgroup of prime order"));
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CandidateOrder> candidate_quotient_orders(const std::vector<CandidateOrder>& aut_candidates) {
  std::vector<CandidateOrder> out;
  for (auto& c : audit_quotient_orders(aut_candidates)) {
    if (c.survives()) out.push_back(std::move(c));
  }
  return out;
}

SylowAnalysis analyze_quotient_order(std::uint64_t d) {
  SylowAnalysis a;
  a.d = d;
  require(d > 1, ErrorKind::InvalidParameter, "quotient order must exceed 1");
  Exploration ex;
  bool decided = true;
  for (const Outcome& o : counting_facts(d, d, a.trace)) {
    if (o.kind == Outcome::Inconclusive) decided = false;
    if (o.kind == Outcome::Forced) ex.forced.insert(std::vector<std::uint64_t>(o.primes.begin(), o.primes.end()));
  }
  if (!decided) {
    a.trace.push_back("order " + std::to_string(d) + ": counting is inconclusive; following characteristic chains");
    ex = {};
    explore(1, d, ex, a.trace);
  }
  a.forced_sets.assign(ex.forced.begin(), ex.forced.end());
  a.has_open_branch = ex.open;
  if (!ex.open && ex.forced.size() == 1 && ex.forced.begin()->size() == 1) {
    const std::uint64_t p = ex.forced.begin()->front();
    a.row = std::make_pair(valuation(d, p), p);
  }
  return a;
}

NormalSylowTable normal_sylow_table(const std::vector<CandidateOrder>& quotient_candidates) {
  NormalSylowTable t;
  std::map<std::pair<unsigned, std::uint64_t>, std::vector<std::uint64_t>> rows;
  for (const auto& c : quotient_candidates) {
    SylowAnalysis a = analyze_quotient_order(c.profile.n);
    if (a.row) {
      rows[*a.row].push_back(c.profile.n);
    } else {
      t.omitted.push_back(std::move(a));
    }
  }
  for (auto& [key, orders] : rows) {
    std::sort(orders.begin(), orders.end());
    t.rows.push_back({key.first, key.second, orders});
  }
  return t;
}

bool is_exceptional_order(const SylowAnalysis& a) {
  if (a.row) return false;
  std::set<std::uint64_t> primes;
  for (const auto& s : a.forced_sets) primes.insert(s.begin(), s.end());
  return primes.size() <= 1 && a.has_open_branch;
}

std::vector<Step2Case> step2_hard_cases(const NormalSylowTable& table) {
  std::vector<Step2Case> out;
  for (const TableRow& row : table.rows) {
    if (row.i < 3) continue;
    for (std::uint64_t d : row.quotient_orders) {
      Step2Case c{d, row.i, row.p, {}};
      for (std::uint64_t r : prime_divisors(d)) {
        if (r == row.p) continue;
        for (unsigned j = 1; j + 2 <= row.i; ++j) {
          for (unsigned dim : {j, row.i - j}) {
            const auto gl = gl_order(dim, row.p);
            if (gl % r == 0) {
              c.reasons.push_back(std::to_string(r) + " divides |GL(" + std::to_string(dim) + "," +
                                  std::to_string(row.p) + ")| = " + gl.str());
            }
          }
        }
      }
      std::sort(c.reasons.begin(), c.reasons.end());
      c.reasons.erase(std::unique(c.reasons.begin(), c.reasons.end()), c.reasons.end());
      if (!c.reasons.empty()) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const Step2Case& a, const Step2Case& b) { return a.d < b.d; });
  return out;
}

ExceptionalShapeReport exceptional_shape(const Group& g) {
  ExceptionalShapeReport r;
  const Quotient gz = quotient(g, center(g));
  r.central_quotient_order = gz.group.order();
  r.order_matches = gz.group.order() == 81 * 13;
  r.quotient_centerless = center(gz.group).is_trivial();
  r.abelianization_divisible_by_3 = (g.order() / derived_subgroup(g).size()) % 3 == 0;
  const SylowReport s3 = sylow(g, 3);
  // A normal 3-subgroup P with a complement: try the normal Sylow
  // 3-subgroup, then the largest normal 3-subgroup.
  std::vector<Subgroup> candidates;
  if (s3.is_normal) candidates.push_back(s3.subgroup);
  // O_3(G) is the intersection of all Sylow 3-subgroups: elements whose
  // every conjugate lies in the chosen Sylow subgroup.
  std::vector<Elem> o3;
  for (Elem x : s3.subgroup.members()) {
    bool ok = true;
    for (Elem y = 0; y < g.order() && ok; ++y) ok = s3.subgroup.contains(g.conj(x, y));
    if (ok) o3.push_back(x);
  }
  const Subgroup o3s = Subgroup::from_members(g, o3);
  if (!o3s.is_trivial()) candidates.push_back(o3s);
  for (const Subgroup& p : candidates) {
    const ComplementResult c = find_complement(g, p);
    if (c.complement) {
      r.splits_over_normal_3_subgroup = true;
      break;
    }
  }
  return r;
}

std::vector<std::uint64_t> read_number_list(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::ParseError, "cannot open " + path);
  std::vector<std::uint64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        out.push_back(std::stoull(tok, &used));
        require(used == tok.size(), ErrorKind::ParseError, "bad number '" + tok + "' in " + path);
      } catch (const std::logic_error&) {
        fail(ErrorKind::ParseError, "bad number '" + tok + "' in " + path);
      }
    }
  }
  return out;
}

std::vector<TableRow> read_table(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::ParseError, "cannot open " + path);
  std::vector<TableRow> out;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    std::vector<std::uint64_t> xs;
    std::uint64_t x;
    while (ls >> x) xs.push_back(x);
    require(ls.eof(), ErrorKind::ParseError, "bad table line '" + line + "' in " + path);
    if (xs.empty()) continue;
    require(xs.size() >= 3, ErrorKind::ParseError, "table line needs i, p and orders: '" + line + "'");
    TableRow row{static_cast<unsigned>(xs[0]), xs[1], {xs.begin() + 2, xs.end()}};
    std::sort(row.quotient_orders.begin(), row.quotient_orders.end());
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end(), [](const TableRow& a, const TableRow& b) {
    return std::tie(a.i, a.p) < std::tie(b.i, b.p);
  });
  return out;
}

std::string paper_data_dir() {
  if (const char* env = std::getenv("ODDAUT_PAPER_DATA")) return env;
  return ODDAUT_PAPER_DATA_DIR;
}

void require_same_set(const std::vector<std::uint64_t>& derived, const std::vector<std::uint64_t>& reference,
                      const std::string& what) {
  const std::set<std::uint64_t> a(derived.begin(), derived.end()), b(reference.begin(), reference.end());
  std::vector<std::uint64_t> missing, extra;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(missing));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(extra));
  if (!missing.empty() || !extra.empty() || derived.size() != reference.size()) {
    fail(ErrorKind::RuleSetIncomplete, what + ": missing {" + join_numbers(missing) + "}, extra {" +
                                           join_numbers(extra) + "}, derived " + std::to_string(derived.size()) +
                                           " vs reference " + std::to_string(reference.size()));
  }
}

void require_same_table(const std::vector<TableRow>& derived, const std::vector<TableRow>& reference) {
  if (derived == reference) return;
  std::string diff;
  auto show = [](const TableRow& r) {
    return "(" + std::to_string(r.i) + "," + std::to_string(r.p) + "): " + join_numbers(r.quotient_orders, " ");
  };
  for (const auto& r : reference) {
    if (std::find(derived.begin(), derived.end(), r) == derived.end()) diff += " missing " + show(r) + ";";
  }
  for (const auto& r : derived) {
    if (std::find(reference.begin(), reference.end(), r) == reference.end()) diff += " extra " + show(r) + ";";
  }
  fail(ErrorKind::RuleSetIncomplete, "normal Sylow table differs:" + diff);
}

}  // namespace oddaut
