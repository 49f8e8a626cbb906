// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status
// non-zero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "oddaut/aut.hpp"
#include "oddaut/case_analysis.hpp"
#include "oddaut/catalog.hpp"
#include "oddaut/extend.hpp"
#include "oddaut/group_io.hpp"
#include "oddaut/group_spec.hpp"
#include "oddaut/linalg_fp.hpp"
#include "oddaut/property_suites.hpp"
#include "oddaut/scan.hpp"
#include "oddaut/structure.hpp"
#include "test_helpers.hpp"

using namespace oddaut;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::uint64_t> orders_of(const std::vector<CandidateOrder>& c) {
  std::vector<std::uint64_t> out;
  for (const auto& x : c) out.push_back(x.profile.n);
  return sorted(out);
}

Outcome criterion_case_analysis() {
  const Stopwatch clock;
  const auto aut = candidate_aut_orders();
  const auto quot = candidate_quotient_orders(aut);
  const auto table = normal_sylow_table(quot);
  const double elapsed = clock.seconds();

  const std::string dir = paper_data_dir();
  const auto ref_aut = sorted(read_number_list(dir + "/aut_orders.txt"));
  const auto ref_quot = sorted(read_number_list(dir + "/quotient_orders.txt"));
  const auto ref_table = read_table(dir + "/normal_sylow_table.txt");

  std::size_t covered = 0;
  for (const auto& r : table.rows) covered += r.quotient_orders.size();
  std::vector<std::uint64_t> omitted;
  for (const auto& a : table.omitted) omitted.push_back(a.d);
  omitted = sorted(omitted);

  Outcome o;
  o.pass = orders_of(aut) == ref_aut && orders_of(quot) == ref_quot && table.rows == ref_table &&
           table.rows.size() == 8 && covered == 18 && omitted == std::vector<std::uint64_t>{1053, 1575, 2025} &&
           elapsed < 1.0;
  std::ostringstream d;
  d << aut.size() << " aut orders, " << quot.size() << " quotient orders, " << table.rows.size() << " rows covering "
    << covered << " orders, omitted";
  for (auto x : omitted) d << ' ' << x;
  d << "; " << fmt_seconds(elapsed);
  o.detail = d.str();
  return o;
}

std::uint64_t euler_phi_by_gcd(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

Outcome criterion_aut_oracles() {
  const Stopwatch clock;
  std::size_t checks = 0;
  std::ostringstream bad;
  for (std::uint64_t n = 1; n <= 50; ++n) {
    const auto aut = automorphism_group(cyclic(n));
    if (aut.order != euler_phi_by_gcd(n)) bad << " C" << n;
    ++checks;
  }
  const std::vector<std::pair<unsigned, std::uint64_t>> elementary{{2, 2}, {3, 2}, {2, 3}, {4, 2},
                                                                  {2, 5}, {3, 3}, {4, 3}, {3, 5}};
  for (const auto& [k, p] : elementary) {
    const Group g = abelian(std::vector<std::uint64_t>(k, p));
    if (automorphism_group(g).order != gl_order(k, p)) bad << " C" << p << "^" << k;
    ++checks;
  }
  // The catalog must reach all 24 isomorphism types of order <= 12; these are
  // told apart by their order together with the multiset of element orders.
  std::set<std::vector<std::size_t>> small_types;
  for (const auto& e : test_catalog()) {
    if (e.group.order() > 12) continue;
    const auto aut = automorphism_group(e.group);
    if (aut.order != oddaut::testing::brute_aut_count(e.group)) bad << ' ' << e.name;
    ++checks;
    std::vector<std::size_t> signature{e.group.order()};
    for (Elem x = 0; x < e.group.order(); ++x) signature.push_back(e.group.element_order(x));
    std::sort(signature.begin() + 1, signature.end());
    small_types.insert(signature);
  }
  const std::size_t small_groups = small_types.size();
  if (small_groups != 24) bad << " (" << small_groups << " types of order <= 12 instead of 24)";
  const double elapsed = clock.seconds();
  Outcome o;
  o.pass = bad.str().empty() && elapsed < 60.0;
  o.detail = std::to_string(checks) + " oracle comparisons (" + std::to_string(small_groups) + " types of order <= 12)" + (bad.str().empty() ? "" : ", mismatches:" + bad.str()) +
             "; " + fmt_seconds(elapsed);
  return o;
}

Outcome criterion_ni_sweep() {
  const Stopwatch clock;
  const auto catalog = odd_catalog(243);
  std::size_t groups = 0;
  std::ostringstream bad;
  for (const auto& e : catalog) {
    const auto aut = automorphism_group(e.group);
    const NiReport r = is_ni(e.group, aut);
    if (r.trivial_group) continue;
    ++groups;
    if (r.aut_order_odd != r.no_inversion || r.aut_order_odd) bad << ' ' << e.name;
  }
  const double elapsed = clock.seconds();
  Outcome o;
  o.pass = bad.str().empty() && elapsed < 600.0;
  o.detail = std::to_string(groups) + " non-trivial odd groups of order <= 243, all with |Aut| even" +
             (bad.str().empty() ? "" : "; disagreements:" + bad.str()) + "; " + fmt_seconds(elapsed);
  return o;
}

struct Instance {
  const char* label;
  const char* spec;
  std::size_t a_order;
  std::size_t b_order;
};

const std::vector<Instance>& extension_instances() {
  static const std::vector<Instance> list{
      {"C25^2:C3", "sdp:(abelian:25,25)x(cyclic:3):matrix=25,2,0,1,24,24", 625, 3},
      {"He3:C2", "sdp:(extraspecial:3:p)x(cyclic:2):matrix=3,2,2,0,0,2", 27, 2},
      {"He3:C4", "sdp:(extraspecial:3:p)x(cyclic:4):matrix=3,2,0,1,2,0", 27, 4},
      {"C3^4:C4", "sdp:(abelian:3,3,3,3)x(cyclic:4):matrix=3,4,0,1,0,0,2,0,0,0,0,0,0,1,0,0,2,0", 81, 4},
      {"C3^4:C4 mixed", "sdp:(abelian:3,3,3,3)x(cyclic:4):matrix=3,4,0,1,0,0,2,0,0,0,0,0,2,0,0,0,0,1", 81, 4},
      {"(He3xHe3):C2",
       "sdp:(dp:(extraspecial:3:p)x(extraspecial:3:p))x(cyclic:2):matrix=3,4,2,0,0,0,0,2,0,0,0,0,2,0,0,0,0,2", 729,
       2},
  };
  return list;
}

/// Exhaustive check on the full multiplication table.
bool verified_involution(const Group& g, const Perm& f) {
  if (f.size() != g.order()) return false;
  std::vector<bool> seen(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (f[x] >= g.order() || seen[f[x]] || f[f[x]] != x) return false;
    seen[f[x]] = true;
    for (Elem y = 0; y < g.order(); ++y) {
      if (f[g.mul(x, y)] != g.mul(f[x], f[y])) return false;
    }
  }
  if (f == identity_perm(g.order())) return false;
  for (Elem z : oddaut::testing::brute_center(g)) {
    if (f[z] != z) return false;
  }
  return true;
}

Outcome criterion_constructive_involutions() {
  std::ostringstream d;
  bool all = true;
  bool abelian_noncyclic = false, extraspecial_c2 = false, extraspecial_c4 = false, multi_block = false;
  for (const auto& inst : extension_instances()) {
    const Stopwatch clock;
    bool ok = false;
    std::string note;
    try {
      const Group g = make_group(inst.spec);
      const auto problem = semidirect_problem(g, inst.a_order, inst.b_order);
      const auto cert = build_involution_thm213(problem);
      ok = verified_involution(g, cert.automorphism);
      if (ok && inst.a_order == 625) abelian_noncyclic = true;
      if (ok && inst.a_order == 27 && inst.b_order == 2) extraspecial_c2 = true;
      if (ok && inst.a_order == 27 && inst.b_order == 4) extraspecial_c4 = true;
      if (ok && cert.blocks.blocks.size() >= 2) multi_block = true;
      note = std::to_string(cert.blocks.blocks.size()) + " block(s)";
    } catch (const std::exception& e) {
      note = e.what();
    }
    ok = ok && clock.seconds() < 60.0;
    all = all && ok;
    d << inst.label << ' ' << (ok ? "ok" : "FAILED") << " (" << note << ", " << fmt_seconds(clock.seconds()) << "); ";
  }
  Outcome o;
  o.pass = all && abelian_noncyclic && extraspecial_c2 && extraspecial_c4 && multi_block;
  o.detail = d.str();
  return o;
}

Outcome criterion_property_suites() {
  const Stopwatch clock;
  const auto catalog = test_catalog();
  const auto report = run_property_suites(catalog);
  const double elapsed = clock.seconds();
  Outcome o;
  o.pass = report.ok() && catalog.size() >= 40 && elapsed < 300.0;
  std::ostringstream d;
  d << catalog.size() << " groups: " << report.count(PropertyStatus::Pass) << " pass, "
    << report.count(PropertyStatus::Fail) << " fail, " << report.count(PropertyStatus::Skipped) << " skipped, "
    << report.count(PropertyStatus::NotApplicable) << " not applicable; " << fmt_seconds(elapsed);
  for (const auto& r : report.results) {
    if (r.status == PropertyStatus::Fail) d << "\n    " << r.group << ' ' << r.property << ": " << r.detail;
  }
  o.detail = d.str();
  return o;
}

Outcome criterion_zeta_uniqueness() {
  std::size_t checked = 0;
  std::ostringstream bad;
  for (const auto& inst : extension_instances()) {
    try {
      const Group g = make_group(inst.spec);
      const auto cert = build_involution_thm213(semidirect_problem(g, inst.a_order, inst.b_order));
      if (cert.action.center_part.size() > 125) continue;
      for (const auto& blk : cert.basis.blocks) {
        const ZetaSolution sol = solve_zeta(g, cert.action.center_part, blk.a, blk.z, blk.k);
        ++checked;
        if (!sol.exhaustive_count || *sol.exhaustive_count != 1 || sol.zeta != blk.zeta) bad << ' ' << inst.label;
      }
    } catch (const std::exception& e) {
      bad << ' ' << inst.label << " (" << e.what() << ')';
    }
  }
  Outcome o;
  o.pass = bad.str().empty() && checked > 0;
  o.detail = std::to_string(checked) + " blocks with a unique central solution" +
             (bad.str().empty() ? "" : "; failures:" + bad.str());
  return o;
}

std::string strip_timing(const std::string& scan_output) {
  std::istringstream in(scan_output);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    out << (line.empty() || line[0] == '#' ? line : line.substr(0, line.rfind('\t'))) << '\n';
  }
  return out.str();
}

Outcome criterion_determinism() {
  const fs::path dir = fs::temp_directory_path() / "oddaut_acceptance_scan";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::size_t round_trips = 0;
  bool files_ok = true;
  for (const auto& e : odd_catalog(243)) {
    const std::string path = (dir / (catalog_file_stem(e.name) + ".cay")).string();
    write_group_file(path, e.group, e.spec);
    const std::string first = read_file(path);
    const GroupFile back = parse_group_file(path);
    files_ok = files_ok && write_group_text(back.group, back.spec) == first &&
               std::equal(back.group.flat_table().begin(), back.group.flat_table().end(), e.group.flat_table().begin());
    ++round_trips;
  }
  for (const auto& e : test_catalog()) {
    files_ok = files_ok && write_group_text(parse_group_text(write_group_text(e.group, e.spec)).group, e.spec) ==
                               write_group_text(e.group, e.spec);
    ++round_trips;
  }

  ScanOptions opts;
  opts.odd_only = true;
  opts.jobs = 4;
  std::ostringstream run1, run2, fresh;
  scan_directory(dir.string(), opts, run1);
  opts.jobs = 1;
  scan_directory(dir.string(), opts, run2);
  opts.use_cache = false;
  const auto summary = scan_directory(dir.string(), opts, fresh);
  const bool identical = run1.str() == run2.str();
  const bool same_results = strip_timing(run1.str()) == strip_timing(fresh.str());
  fs::remove_all(dir);

  Outcome o;
  o.pass = files_ok && identical && same_results && summary.failures.empty();
  o.detail = std::to_string(round_trips) + " bit-exact round trips; two scans of " +
             std::to_string(summary.records.size()) + " files " + (identical ? "byte-identical" : "DIFFER") +
             "; uncached rescan " + (same_results ? "agrees except timing" : "DISAGREES");
  return o;
}

constexpr const char* kExceptionalSpec =
    "sdp:(abelian:3,3,3)x(sdp:(cyclic:13)x(cyclic:3):matrix=13,1,3):"
    "matrix=3,3,1,0,0,2,1,0,1,1,1;matrix=3,3,0,0,1,2,1,0,0,2,1";

Outcome criterion_exceptional_shape() {
  const Stopwatch clock;
  Outcome o;
  try {
    const Group g = make_group(kExceptionalSpec);
    const Subgroup z = center(g);
    const Subgroup d = derived_subgroup(g);
    const auto aut = automorphism_group(g);
    const NiReport ni = is_ni(g, aut);
    const auto shape = exceptional_shape(g);
    std::ostringstream s;
    s << "C3^3:(C13:C3), order " << g.order() << ", |Z| = " << z.size() << ", |G'| = " << d.size()
      << ", |Aut| = " << aut.order << " (" << (aut.order % 2 == 0 ? "even" : "odd") << ")"
      << ", inversion " << (ni.no_inversion ? "absent" : "present") << ", quotient shape "
      << (shape.matches() ? "matches" : "does not match") << "; " << fmt_seconds(clock.seconds())
      << " [outcome reported, not asserted]";
    o.pass = true;  // the parity was computed within budget
    o.detail = s.str();
  } catch (const std::exception& e) {
    o.detail = std::string("not computed: ") + e.what();
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"case-analysis golden match", criterion_case_analysis},
      {"automorphism engine oracle equivalence", criterion_aut_oracles},
      {"N.I. equivalence sweep", criterion_ni_sweep},
      {"constructive involution suite", criterion_constructive_involutions},
      {"property suites on the test catalog", criterion_property_suites},
      {"central solution uniqueness", criterion_zeta_uniqueness},
      {"determinism and round trip", criterion_determinism},
      {"exceptional-shape experiment", criterion_exceptional_shape},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
