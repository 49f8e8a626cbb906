#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oddaut/catalog.hpp"
#include "oddaut/group_io.hpp"
#include "oddaut/group_spec.hpp"
#include "oddaut/property_suites.hpp"
#include "oddaut/scan.hpp"
#include "oddaut/structure.hpp"
#include "test_helpers.hpp"

using namespace oddaut;
using oddaut::testing::throws_kind;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("oddaut_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::string slurp(const fs::path& p) { return read_file(p.string()); }

int run_cli(const std::string& args) {
  const char* cli = std::getenv("ODDAUT_CLI");
  if (cli == nullptr) return -1;
  const int status = std::system((std::string(cli) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(GroupFile, TrivialAndCyclic) {
  const auto t = parse_group_text("cay 1\nname T\norder 1\n0\n");
  EXPECT_EQ(t.group.order(), 1u);
  EXPECT_EQ(t.group.name(), "T");
  const auto c3 = parse_group_text("cay 1\nname C3\norder 3\n0 1 2\n1 2 0\n2 0 1\n");
  EXPECT_EQ(c3.group.order(), 3u);
  EXPECT_TRUE(c3.spec.empty());
}

TEST(GroupFile, DuplicateEntryIsNotAGroup) {
  const std::string msg = error_message([] { parse_group_text("cay 1\nname X\norder 3\n0 1 2\n1 1 0\n2 0 1\n"); });
  EXPECT_NE(msg.find("NotAGroup"), std::string::npos) << msg;
  EXPECT_NE(msg.find("row 1"), std::string::npos) << msg;
}

TEST(GroupFile, ParseErrorsCarryPosition) {
  const std::string bad_header = error_message([] { parse_group_text("cay 1\nnom X\norder 1\n0\n"); });
  EXPECT_NE(bad_header.find("ParseError"), std::string::npos);
  EXPECT_NE(bad_header.find(":2:1:"), std::string::npos) << bad_header;
  const std::string bad_entry = error_message([] { parse_group_text("cay 1\nname X\norder 2\n0 1\n1 z\n"); });
  EXPECT_NE(bad_entry.find(":5:3:"), std::string::npos) << bad_entry;
  EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { parse_group_text("cay 1\nname X\norder 2\n0 1\n"); }));
  EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { parse_group_text("cay 2\nname X\norder 1\n0\n"); }));
  EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { parse_group_text("cay 1\nname X\norder 1\n0 0\n"); }));
  EXPECT_TRUE(throws_kind(ErrorKind::NotAGroup, [] { parse_group_text("cay 1\nname X\norder 2\n1 0\n0 1\n"); }));
}

TEST(GroupFile, RoundTripIsBitExact) {
  for (const auto& e : test_catalog()) {
    const std::string text = write_group_text(e.group, e.spec);
    const GroupFile back = parse_group_text(text);
    EXPECT_EQ(back.spec, e.spec);
    EXPECT_TRUE(std::equal(back.group.flat_table().begin(), back.group.flat_table().end(),
                           e.group.flat_table().begin()))
        << e.name;
    EXPECT_EQ(write_group_text(back.group, back.spec), text) << e.name;
  }
  const fs::path dir = fresh_dir("roundtrip");
  const Group g = make_group("extraspecial:3:p2");
  write_group_file((dir / "m27.cay").string(), g);
  const std::string first = slurp(dir / "m27.cay");
  write_group_file((dir / "again.cay").string(), parse_group_file((dir / "m27.cay").string()).group);
  EXPECT_EQ(slurp(dir / "again.cay"), first);
}

TEST(GroupSpec, Constructors) {
  EXPECT_EQ(make_group("cyclic:9").order(), 9u);
  EXPECT_EQ(make_group("abelian:2,4,3").order(), 24u);
  EXPECT_EQ(make_group("extraspecial:5:p2").exponent(), 25u);
  EXPECT_EQ(make_group("extraspecial:3:3").exponent(), 3u);
  EXPECT_EQ(make_group("dp:(cyclic:2)x(sym:3)").order(), 12u);
  EXPECT_EQ(make_group("dihedral:10").order(), 10u);
  EXPECT_EQ(center(make_group("dihedral:8")).size(), 2u);
  EXPECT_EQ(make_group("alt:5").order(), 60u);
  const Group f21 = make_group("sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2");
  EXPECT_EQ(center(f21).size(), 1u);
  const Group c25 = make_group("sdp:(abelian:25,25)x(cyclic:3):matrix=25,2,0,1,24,24");
  EXPECT_EQ(c25.order(), 1875u);
  EXPECT_FALSE(c25.is_abelian());
  // b^-1 a_1 b = a_2 with a_1, a_2 the standard generators (indices 25*3 and 1*3).
  EXPECT_EQ(c25.conj(25 * 3, 1), 1u * 3);
}

TEST(GroupSpec, Errors) {
  EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { make_group("cyclc:3"); }));
  EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { make_group("cyclic:3x"); }));
  EXPECT_TRUE(throws_kind(ErrorKind::ParseError, [] { make_group("dp:(cyclic:3)(cyclic:3)"); }));
  EXPECT_TRUE(throws_kind(ErrorKind::InvalidParameter, [] { make_group("sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2,3"); }));
  EXPECT_TRUE(throws_kind(ErrorKind::NotAnAction, [] { make_group("sdp:(cyclic:7)x(cyclic:2):matrix=7,1,2"); }));
  EXPECT_TRUE(throws_kind(ErrorKind::InvalidParameter, [] { make_group("sdp:(abelian:3,3)x(cyclic:2):matrix=3,2,1,1,1,1"); }));
}

TEST(Catalog, Contents) {
  const auto tc = test_catalog();
  EXPECT_GE(tc.size(), 40u);
  std::set<std::string> names;
  for (const auto& e : tc) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_EQ(make_group(e.spec).order(), e.group.order());
  }
  for (const char* n : {"S3", "D8", "A4", "C7:C3", "He3", "M27", "Q8"}) EXPECT_TRUE(names.count(n)) << n;
  const auto oc = odd_catalog(243);
  std::set<std::string> stems;
  for (const auto& e : oc) {
    EXPECT_EQ(e.group.order() % 2, 1u) << e.name;
    EXPECT_LE(e.group.order(), 243u);
    EXPECT_TRUE(stems.insert(catalog_file_stem(e.name)).second) << e.name;
  }
}

TEST(PropertySuites, AbelianSanityLayer) {
  std::vector<CatalogEntry> abelians;
  for (const auto& e : test_catalog()) {
    if (e.group.is_abelian() && e.group.order() <= 30) abelians.push_back(e);
  }
  const auto report = run_property_suites(abelians);
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.count(PropertyStatus::Pass), 0u);
}

TEST(PropertySuites, SmallNonAbelianGroupsPass) {
  std::vector<CatalogEntry> picked;
  for (const auto& e : test_catalog()) {
    for (const char* n : {"S3", "D8", "A4", "C7:C3", "He3", "M27"}) {
      if (e.name == n) picked.push_back(e);
    }
  }
  const auto report = run_property_suites(picked);
  for (const auto& r : report.results) EXPECT_NE(r.status, PropertyStatus::Fail) << r.group << " " << r.property << " " << r.detail;
}

TEST(PropertySuites, CorruptedTableStopsAtIngestion) {
  EXPECT_TRUE(throws_kind(ErrorKind::NotAGroup, [] { parse_group_text("cay 1\nname X\norder 3\n0 1 2\n1 0 2\n2 1 0\n"); }));
}

TEST(Scan, RecordsAreDeterministicAndCached) {
  const fs::path dir = fresh_dir("scan");
  for (const char* spec : {"cyclic:9", "abelian:3,3", "extraspecial:3:p", "sym:3", "sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2"}) {
    const Group g = make_group(spec);
    write_group_file((dir / (catalog_file_stem(spec) + ".cay")).string(), g, spec);
  }
  std::ostringstream first, second, third;
  ScanOptions opts;
  opts.odd_only = true;
  const auto s1 = scan_directory(dir.string(), opts, first);
  EXPECT_EQ(s1.records.size(), 4u);
  EXPECT_EQ(s1.skipped_even, 1u);
  EXPECT_EQ(s1.from_cache, 0u);
  EXPECT_TRUE(fs::exists(dir / ".oddaut_cache.tsv"));
  opts.jobs = 3;
  const auto s2 = scan_directory(dir.string(), opts, second);
  EXPECT_EQ(s2.from_cache, 4u);
  EXPECT_EQ(first.str(), second.str());
  opts.use_cache = false;
  scan_directory(dir.string(), opts, third);
  // Without the cache only the timing column may differ.
  std::istringstream a(first.str()), b(third.str());
  std::string la, lb;
  while (std::getline(a, la) && std::getline(b, lb)) {
    if (la.empty() || la[0] == '#') {
      EXPECT_EQ(la, lb);
      continue;
    }
    EXPECT_EQ(la.substr(0, la.rfind('\t')), lb.substr(0, lb.rfind('\t')));
  }
  for (const auto& r : s1.records) {
    EXPECT_EQ(r.aut_parity, "even");
    EXPECT_EQ(r.ni_status, "not-ni");
    EXPECT_EQ(parse_record(format_record(r)).aut_order, r.aut_order);
  }
  EXPECT_NE(first.str().find("#name\torder"), std::string::npos);
}

TEST(Scan, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cli, ExitCodes) {
  if (std::getenv("ODDAUT_CLI") == nullptr) GTEST_SKIP() << "CLI path not provided";
  const fs::path dir = fresh_dir("cli");
  const std::string c9 = (dir / "c9.cay").string();
  EXPECT_EQ(run_cli("make cyclic:9 --out " + c9), 0);
  EXPECT_EQ(run_cli("aut " + c9), 0);
  EXPECT_EQ(run_cli("analyze " + c9), 0);
  EXPECT_EQ(run_cli("verify-paper --lists --table"), 0);
  EXPECT_EQ(run_cli("make cyclc:9 --out " + c9), 2);
  EXPECT_EQ(run_cli("aut " + c9 + " --budget 0"), 3);
  EXPECT_EQ(run_cli("aut " + c9 + " --cap 4"), 2);
  const fs::path bad = fresh_dir("cli_golden");
  std::ofstream(bad / "aut_orders.txt") << "1215\n";
  for (const char* f : {"quotient_orders.txt", "normal_sylow_table.txt", "step2_cases.txt"}) {
    fs::copy_file(fs::path(ODDAUT_PAPER_DATA_DIR) / f, bad / f);
  }
  EXPECT_EQ(run_cli("verify-paper --lists"), 0);
  const std::string env = "ODDAUT_PAPER_DATA=" + bad.string() + " ";
  const char* cli = std::getenv("ODDAUT_CLI");
  const int status = std::system((env + cli + " verify-paper --lists > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 4);
}

TEST(Cli, ExtendCommand) {
  if (std::getenv("ODDAUT_CLI") == nullptr) GTEST_SKIP() << "CLI path not provided";
  const fs::path dir = fresh_dir("cli_extend");
  const std::string f = (dir / "he3c2.cay").string();
  ASSERT_EQ(run_cli("make 'sdp:(extraspecial:3:p)x(cyclic:2):matrix=3,2,2,0,0,2' --out " + f), 0);
  // A = {2x : x < 27} is generated by the images of He3's generators; B = <1>.
  const Group he = extraspecial(3, true);
  std::string a_gens;
  for (Elem x : simple_generating_set(he)) a_gens += (a_gens.empty() ? "" : ",") + std::to_string(x * 2);
  EXPECT_EQ(run_cli("extend " + f + " --normal " + a_gens + " --complement 1 --mode thm213"), 0);
  EXPECT_EQ(run_cli("extend " + f + " --normal " + a_gens + " --complement 1 --mode cor212"), 2);
}
