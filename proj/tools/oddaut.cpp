// Command-line front end: analysis, automorphism groups, batch scans,
// reference-data verification, involution construction and group files.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "oddaut/abelian.hpp"
#include "oddaut/aut.hpp"
#include "oddaut/case_analysis.hpp"
#include "oddaut/catalog.hpp"
#include "oddaut/extend.hpp"
#include "oddaut/group_io.hpp"
#include "oddaut/group_spec.hpp"
#include "oddaut/numtheory.hpp"
#include "oddaut/property_suites.hpp"
#include "oddaut/scan.hpp"
#include "oddaut/structure.hpp"

namespace fs = std::filesystem;
using namespace oddaut;

namespace {

enum ExitCode { kOk = 0, kOther = 1, kValidation = 2, kBudget = 3, kMismatch = 4 };

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::SearchBudgetExceeded: return kBudget;
    case ErrorKind::RuleSetIncomplete: return kMismatch;
    case ErrorKind::InvariantViolation: return kOther;
    default: return kValidation;
  }
}

std::vector<Elem> parse_elements(const std::string& text, std::size_t order) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    require(used == item.size(), ErrorKind::ParseError, "bad element index '" + item + "'");
    require(v < order, ErrorKind::InvalidParameter, "element " + item + " out of range");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

std::string join(const std::vector<Elem>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

int cmd_analyze(const std::string& path) {
  const GroupFile f = parse_group_file(path);
  const Group& g = f.group;
  std::cout << "name\t" << g.name() << "\norder\t" << g.order() << "\nabelian\t" << (g.is_abelian() ? "yes" : "no")
            << "\nexponent\t" << g.exponent() << "\ncenter_order\t" << center(g).size() << "\nderived_order\t"
            << derived_subgroup(g).size() << '\n';
  const AbelianInvariants ab = abelian_invariants(quotient(g, derived_subgroup(g)).group);
  std::cout << "abelianization\t";
  for (std::size_t i = 0; i < ab.factors.size(); ++i) std::cout << (i ? "," : "") << ab.factors[i];
  std::cout << (ab.factors.empty() ? "1" : "") << '\n';
  const auto cq = central_quotient_profile(g);
  std::cout << "central_quotient_order\t" << cq.quotient_order << "\ncentral_quotient_abelian\t"
            << (cq.abelian ? "yes" : "no") << "\ncentral_quotient_p_group\t"
            << (cq.is_p_group ? "p=" + std::to_string(cq.prime) : "no") << '\n';
  if (cq.exponents) {
    std::cout << "central_quotient_exponents\t";
    for (std::size_t i = 0; i < cq.exponents->size(); ++i) std::cout << (i ? "," : "") << (*cq.exponents)[i];
    std::cout << "\nrank_condition\t" << (cq.rank_condition_holds ? "holds" : "fails") << '\n';
  }
  for (std::uint64_t p : prime_divisors(g.order())) {
    const SylowReport s = sylow(g, p);
    std::cout << "sylow\tp=" << p << "\torder=" << s.subgroup.size() << "\tconjugates=" << s.conjugate_count
              << "\tnormal=" << (s.is_normal ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_aut(const std::string& path, std::uint64_t budget) {
  const GroupFile f = parse_group_file(path);
  const AutGroup aut = automorphism_group(f.group, budget);
  const NiReport ni = is_ni(f.group, aut);
  std::cout << "name\t" << f.group.name() << "\norder\t" << f.group.order() << "\naut_order\t" << aut.order
            << "\naut_parity\t" << (ni.aut_order_odd ? "odd" : "even") << "\nno_inversion\t"
            << (ni.no_inversion ? "yes" : "no") << '\n';
  if (ni.inverted_element) std::cout << "inverted_element\t" << *ni.inverted_element << '\n';
  std::cout << "generators\t" << aut.generators.size() << "\nnodes_visited\t" << aut.stats.nodes_visited
            << "\npruned_by_order\t" << aut.stats.pruned_by_order << "\npruned_by_class\t"
            << aut.stats.pruned_by_class << "\nwall_time_ms\t" << static_cast<long long>(aut.stats.wall_time_ms)
            << '\n';
  return kOk;
}

int cmd_scan(const std::string& dir, const ScanOptions& options, const std::string& out_path) {
  ScanSummary summary;
  if (out_path.empty()) {
    summary = scan_directory(dir, options, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    require(out.good(), ErrorKind::InvalidParameter, "cannot write " + out_path);
    summary = scan_directory(dir, options, out);
  }
  std::cerr << "scanned " << summary.records.size() << " groups (" << summary.from_cache << " from cache), "
            << summary.failures.size() << " failed\n";
  int code = kOk;
  for (const auto& failure : summary.failures) {
    std::cerr << failure.file << ": " << failure.message << '\n';
    code = std::max(code, exit_code_for(failure.kind));
  }
  return code;
}

std::string match_line(const std::vector<std::uint64_t>& derived, const std::vector<std::uint64_t>& reference) {
  const std::set<std::uint64_t> d(derived.begin(), derived.end());
  std::size_t hits = 0;
  for (auto v : reference) hits += d.count(v);
  return std::to_string(hits) + "/" + std::to_string(reference.size()) + " match";
}

int cmd_verify(bool lists, bool table, bool lemmas) {
  if (!lists && !table && !lemmas) lists = table = lemmas = true;
  const std::string dir = paper_data_dir();
  int code = kOk;
  auto guarded = [&](auto&& body) {
    try {
      body();
    } catch (const Error& e) {
      std::cout << e.what() << '\n';
      code = std::max(code, exit_code_for(e.kind()));
    }
  };
  const auto aut_candidates = candidate_aut_orders();
  const auto quotient_candidates = candidate_quotient_orders(aut_candidates);
  auto orders = [](const std::vector<CandidateOrder>& c) {
    std::vector<std::uint64_t> v;
    for (const auto& x : c) v.push_back(x.profile.n);
    return v;
  };
  if (lists) {
    guarded([&] {
      const auto a = orders(aut_candidates), q = orders(quotient_candidates);
      const auto ra = read_number_list(dir + "/aut_orders.txt"), rq = read_number_list(dir + "/quotient_orders.txt");
      std::cout << match_line(a, ra) << ", " << match_line(q, rq) << '\n';
      require_same_set(a, ra, "candidate automorphism-group orders");
      require_same_set(q, rq, "candidate central-quotient orders");
    });
  }
  if (table) {
    guarded([&] {
      const auto t = normal_sylow_table(quotient_candidates);
      const auto ref = read_table(dir + "/normal_sylow_table.txt");
      std::size_t hits = 0, covered = 0;
      for (const auto& row : ref) {
        hits += std::count(t.rows.begin(), t.rows.end(), row);
        covered += row.quotient_orders.size();
      }
      std::cout << hits << "/" << ref.size() << " rows match (" << covered << " orders), " << t.omitted.size()
                << " omitted:";
      for (const auto& o : t.omitted) std::cout << ' ' << o.d << (is_exceptional_order(o) ? "*" : "");
      std::cout << '\n';
      require_same_table(t.rows, ref);
      std::vector<std::uint64_t> hard;
      for (const auto& c : step2_hard_cases(t)) hard.push_back(c.d);
      const auto ref_hard = read_number_list(dir + "/step2_cases.txt");
      std::cout << "finer-argument cases: " << match_line(hard, ref_hard) << '\n';
      require_same_set(hard, ref_hard, "finer-argument cases");
    });
  }
  if (lemmas) {
    guarded([&] {
      const auto report = run_property_suites(test_catalog());
      for (const auto& r : report.results) {
        if (r.status == PropertyStatus::Fail) std::cout << "FAIL\t" << r.group << '\t' << r.property << '\t' << r.detail << '\n';
      }
      std::cout << "property suites: " << report.count(PropertyStatus::Pass) << " pass, "
                << report.count(PropertyStatus::Fail) << " fail, " << report.count(PropertyStatus::Skipped)
                << " skipped, " << report.count(PropertyStatus::NotApplicable) << " not applicable\n";
      require(report.ok(), ErrorKind::RuleSetIncomplete, "property suites reported failures");
    });
  }
  return code;
}

int cmd_extend(const std::string& path, const std::string& normal, const std::string& complement,
               const std::string& mode) {
  const GroupFile f = parse_group_file(path);
  const Group& g = f.group;
  const auto a_gens = parse_elements(normal, g.order());
  const auto b_gens = parse_elements(complement, g.order());
  const ExtensionProblem problem = make_problem(g, generated_subgroup(g, a_gens), generated_subgroup(g, b_gens));
  Perm automorphism;
  if (mode == "thm213") {
    const InvolutionCertificate cert = build_involution_thm213(problem);
    automorphism = cert.automorphism;
    std::cout << "p\t" << cert.action.p << "\nexponent\t" << cert.action.q << "\ndimension\t" << cert.action.dimension
              << "\ncentral_part_order\t" << cert.action.center_part.size() << "\nblocks\t"
              << cert.blocks.blocks.size() << '\n';
    for (const auto& b : cert.basis.blocks) {
      std::cout << "block\t" << b.block_index << "\tb=" << b.b << "\ta=" << join(b.a) << "\tzeta=" << join(b.zeta)
                << '\n';
    }
  } else if (mode == "cor212") {
    automorphism = build_involution_cor212(problem);
  } else if (mode == "lemma211") {
    // Inversion on A, which must satisfy the extension hypotheses as given.
    Perm phi = identity_perm(g.order());
    for (Elem x : problem.a.members()) phi[x] = g.inv(x);
    automorphism = extend_by_lemma_211(problem, phi);
  } else {
    fail(ErrorKind::InvalidParameter, "unknown mode " + mode);
  }
  verify_involution(problem, automorphism);
  std::cout << "mode\t" << mode << "\nverified\tautomorphism of order 2 fixing the center\ngenerator_images\t";
  const auto gens = simple_generating_set(g);
  for (std::size_t i = 0; i < gens.size(); ++i) std::cout << (i ? "," : "") << gens[i] << "->" << automorphism[gens[i]];
  std::cout << '\n';
  return kOk;
}

int cmd_make(const std::string& spec, const std::string& out) {
  const Group g = make_group(spec);
  write_group_file(out, g, spec);
  std::cout << g.name() << " order " << g.order() << " -> " << out << '\n';
  return kOk;
}

int cmd_catalog(const std::string& dir, const std::string& which, std::size_t max_order) {
  fs::create_directories(dir);
  const auto entries = which == "test" ? test_catalog() : odd_catalog(max_order);
  std::set<std::string> stems;
  for (const auto& e : entries) {
    std::string stem = catalog_file_stem(e.name);
    require(stems.insert(stem).second, ErrorKind::InvariantViolation, "duplicate catalog file " + stem);
    write_group_file((fs::path(dir) / (stem + ".cay")).string(), e.group, e.spec);
  }
  std::ofstream cov(fs::path(dir) / "COVERAGE");
  cov << (which == "test" ? std::string("coverage: mixed-parity test catalog") : odd_catalog_coverage(max_order)) << '\n';
  std::cout << entries.size() << " groups written to " << dir << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oddaut: automorphism groups of finite groups and inversion-free checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::size_t> cap;
  app.add_option("--cap", cap, "largest group order to build (overrides ODDAUT_CAP)");

  std::string file, dir, out, spec, normal, complement, mode = "thm213", which = "odd";
  std::uint64_t budget = kDefaultAutBudget;
  std::size_t max_order = 243;
  ScanOptions scan_options;
  bool lists = false, table = false, lemmas = false, no_cache = false;

  auto* analyze = app.add_subcommand("analyze", "structural invariants of a group file");
  analyze->add_option("FILE", file)->required();

  auto* aut = app.add_subcommand("aut", "automorphism group order, parity and search statistics");
  aut->add_option("FILE", file)->required();
  aut->add_option("--budget", budget, "search node budget");

  auto* scan = app.add_subcommand("scan", "tab-separated records for every *.cay file of a directory");
  scan->add_option("DIR", dir)->required();
  scan->add_flag("--odd-only", scan_options.odd_only, "skip groups of even order");
  scan->add_option("--jobs", scan_options.jobs, "concurrent groups")->check(CLI::PositiveNumber);
  scan->add_option("--out", out, "output file (default stdout)");
  scan->add_option("--budget", budget, "search node budget per group");
  scan->add_flag("--no-cache", no_cache, "ignore and do not update the results cache");

  auto* verify = app.add_subcommand("verify-paper", "compare derived case lists and property suites with reference data");
  verify->add_flag("--lists", lists, "candidate order lists");
  verify->add_flag("--table", table, "normal Sylow table and finer-argument cases");
  verify->add_flag("--lemmas", lemmas, "property suites over the test catalog");

  auto* extend = app.add_subcommand("extend", "construct an automorphism of order 2 extending one of a normal subgroup");
  extend->add_option("FILE", file)->required();
  extend->add_option("--normal", normal, "comma-separated generators of the normal subgroup A")->required();
  extend->add_option("--complement", complement, "comma-separated generators of B with G = AB")->required();
  extend->add_option("--mode", mode, "thm213 | cor212 | lemma211")->check(CLI::IsMember({"thm213", "cor212", "lemma211"}));

  auto* make = app.add_subcommand("make", "build a group from a construction spec");
  make->add_option("SPEC", spec)->required();
  make->add_option("--out", out, "group file to write")->required();

  auto* catalog = app.add_subcommand("catalog", "write a built-in catalog as group files");
  catalog->add_option("--out", dir, "directory")->required();
  catalog->add_option("--which", which, "odd | test")->check(CLI::IsMember({"odd", "test"}));
  catalog->add_option("--max-order", max_order, "largest order for the odd catalog");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cap) set_order_cap(*cap);
    if (*analyze) return cmd_analyze(file);
    if (*aut) return cmd_aut(file, budget);
    if (*scan) {
      scan_options.budget = budget;
      scan_options.use_cache = !no_cache;
      return cmd_scan(dir, scan_options, out);
    }
    if (*verify) return cmd_verify(lists, table, lemmas);
    if (*extend) return cmd_extend(file, normal, complement, mode);
    if (*make) return cmd_make(spec, out);
    if (*catalog) return cmd_catalog(dir, which, max_order);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOk;
}
