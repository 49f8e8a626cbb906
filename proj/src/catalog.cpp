#include "oddaut/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "oddaut/group_spec.hpp"
#include "oddaut/numtheory.hpp"

namespace oddaut {
namespace {

CatalogEntry entry(const std::string& name, const std::string& spec) {
  return CatalogEntry{name, spec, make_group(spec).renamed(name)};
}

std::string join_sizes(const std::vector<std::size_t>& v, const std::string& sep, const std::string& prefix = {}) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + prefix + std::to_string(v[i]);
  return out;
}

/// Partitions of e, parts non-increasing.
std::vector<std::vector<unsigned>> partitions(unsigned e, unsigned max_part) {
  if (e == 0) return {{}};
  std::vector<std::vector<unsigned>> out;
  for (unsigned part = std::min(e, max_part); part >= 1; --part) {
    for (auto rest : partitions(e - part, part)) {
      rest.insert(rest.begin(), part);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

/// Every abelian group of order n as a list of prime-power cyclic factors.
std::vector<std::vector<std::size_t>> abelian_types(std::size_t n) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (const auto& [p, e] : factorize(n)) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out) {
      for (const auto& part : partitions(e, e)) {
        auto v = prefix;
        for (unsigned k : part) v.push_back(static_cast<std::size_t>(ipow(p, k)));
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Smallest r in [2, p) of multiplicative order exactly q modulo m, or 0.
std::size_t unit_of_order(std::size_t m, std::size_t q) {
  for (std::size_t r = 2; r < m; ++r) {
    std::size_t x = r, k = 1;
    while (x != 1 && k <= m) {
      x = x * r % m;
      ++k;
    }
    if (x == 1 && k == q) return r;
  }
  return 0;
}

}  // namespace

std::vector<CatalogEntry> test_catalog() {
  std::vector<CatalogEntry> c;
  for (std::size_t n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 25, 27}) {
    c.push_back(entry("C" + std::to_string(n), "cyclic:" + std::to_string(n)));
  }
  c.push_back(entry("C2xC2", "abelian:2,2"));
  c.push_back(entry("C2xC4", "abelian:2,4"));
  c.push_back(entry("C2xC2xC2", "abelian:2,2,2"));
  c.push_back(entry("C2xC6", "abelian:2,6"));
  c.push_back(entry("C3xC3", "abelian:3,3"));
  c.push_back(entry("C3xC9", "abelian:3,9"));
  c.push_back(entry("C5xC5", "abelian:5,5"));
  c.push_back(entry("C3xC3xC3", "abelian:3,3,3"));
  c.push_back(entry("C4xC4", "abelian:4,4"));
  c.push_back(entry("S3", "sym:3"));
  c.push_back(entry("D8", "dihedral:8"));
  c.push_back(entry("Q8", "quaternion"));
  c.push_back(entry("A4", "alt:4"));
  c.push_back(entry("S4", "sym:4"));
  c.push_back(entry("D10", "dihedral:10"));
  c.push_back(entry("D12", "dihedral:12"));
  c.push_back(entry("D14", "dihedral:14"));
  c.push_back(entry("C7:C3", "sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2"));
  c.push_back(entry("C5:C4", "sdp:(cyclic:5)x(cyclic:4):matrix=5,1,2"));
  c.push_back(entry("C3:C4", "sdp:(cyclic:3)x(cyclic:4):matrix=3,1,2"));
  c.push_back(entry("C13:C3", "sdp:(cyclic:13)x(cyclic:3):matrix=13,1,3"));
  c.push_back(entry("C11:C5", "sdp:(cyclic:11)x(cyclic:5):matrix=11,1,3"));
  c.push_back(entry("He3", "extraspecial:3:p"));
  c.push_back(entry("M27", "extraspecial:3:p2"));
  c.push_back(entry("He5", "extraspecial:5:p"));
  c.push_back(entry("M125", "extraspecial:5:p2"));
  c.push_back(entry("C5^2:C3", "sdp:(abelian:5,5)x(cyclic:3):matrix=5,2,0,1,4,4"));
  c.push_back(entry("C7^2:C3", "sdp:(abelian:7,7)x(cyclic:3):matrix=7,2,2,0,0,4"));
  c.push_back(entry("C3xS3", "dp:(cyclic:3)x(sym:3)"));
  c.push_back(entry("C2xS3", "dp:(cyclic:2)x(sym:3)"));
  c.push_back(entry("C3xD8", "dp:(cyclic:3)x(dihedral:8)"));
  c.push_back(entry("C3xQ8", "dp:(cyclic:3)x(quaternion)"));
  c.push_back(entry("C3xC7:C3", "dp:(cyclic:3)x(sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2)"));
  c.push_back(entry("He3:C2", "sdp:(extraspecial:3:p)x(cyclic:2):matrix=3,2,2,0,0,2"));
  c.push_back(entry("S3xS3", "dp:(sym:3)x(sym:3)"));
  c.push_back(entry("C3^2:C2", "sdp:(abelian:3,3)x(cyclic:2):matrix=3,2,2,0,0,2"));
  c.push_back(entry("C3^2:C4", "sdp:(abelian:3,3)x(cyclic:4):matrix=3,2,0,1,2,0"));
  c.push_back(entry("C9:C9", "sdp:(cyclic:9)x(cyclic:9):matrix=9,1,4"));
  return c;
}

std::vector<CatalogEntry> odd_catalog(std::size_t max_order) {
  std::vector<CatalogEntry> c;
  auto add = [&](std::size_t order, const std::string& name, const std::string& spec) {
    if (order <= max_order) c.push_back(entry(name, spec));
  };
  for (std::size_t n = 3; n <= max_order; n += 2) {
    for (const auto& type : abelian_types(n)) {
      add(n, join_sizes(type, "x", "C"), "abelian:" + join_sizes(type, ","));
    }
  }
  for (std::size_t p : {3, 5}) {
    const std::string ps = std::to_string(p);
    add(p * p * p, "He" + ps, "extraspecial:" + ps + ":p");
    add(p * p * p, "M" + std::to_string(p * p * p), "extraspecial:" + ps + ":p2");
  }
  for (std::size_t q = 3; q * q < max_order; q += 2) {
    if (!is_prime(q)) continue;
    for (std::size_t p = q + 2; p * q <= max_order; p += 2) {
      if (!is_prime(p) || (p - 1) % q != 0) continue;
      const std::size_t r = unit_of_order(p, q);
      add(p * q, "C" + std::to_string(p) + ":C" + std::to_string(q),
          "sdp:(cyclic:" + std::to_string(p) + ")x(cyclic:" + std::to_string(q) + "):matrix=" + std::to_string(p) +
              ",1," + std::to_string(r));
    }
  }
  const std::string c7c3 = "sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2";
  add(63, "C3xC7:C3", "dp:(cyclic:3)x(" + c7c3 + ")");
  add(63, "C7:C9", "sdp:(cyclic:7)x(cyclic:9):matrix=7,1,2");
  add(75, "C5^2:C3", "sdp:(abelian:5,5)x(cyclic:3):matrix=5,2,0,1,4,4");
  add(81, "C3xHe3", "dp:(cyclic:3)x(extraspecial:3:p)");
  add(81, "C3xM27", "dp:(cyclic:3)x(extraspecial:3:p2)");
  add(81, "C9:C9", "sdp:(cyclic:9)x(cyclic:9):matrix=9,1,4");
  add(81, "C3^2:C9", "sdp:(abelian:3,3)x(cyclic:9):matrix=3,2,1,1,0,1");
  add(81, "C3wrC3", "sdp:(abelian:3,3,3)x(cyclic:3):matrix=3,3,0,1,0,0,0,1,1,0,0");
  add(105, "C5xC7:C3", "dp:(cyclic:5)x(" + c7c3 + ")");
  add(117, "C13:C9", "sdp:(cyclic:13)x(cyclic:9):matrix=13,1,3");
  add(117, "C3xC13:C3", "dp:(cyclic:3)x(sdp:(cyclic:13)x(cyclic:3):matrix=13,1,3)");
  add(125, "C5^2:C5", "sdp:(abelian:5,5)x(cyclic:5):matrix=5,2,1,1,0,1");
  add(147, "C49:C3", "sdp:(cyclic:49)x(cyclic:3):matrix=49,1,18");
  add(147, "C7^2:C3(2,4)", "sdp:(abelian:7,7)x(cyclic:3):matrix=7,2,2,0,0,4");
  add(147, "C7^2:C3(2,2)", "sdp:(abelian:7,7)x(cyclic:3):matrix=7,2,2,0,0,2");
  add(147, "C7^2:C3(2,1)", "sdp:(abelian:7,7)x(cyclic:3):matrix=7,2,2,0,0,1");
  add(165, "C3xC11:C5", "dp:(cyclic:3)x(sdp:(cyclic:11)x(cyclic:5):matrix=11,1,3)");
  add(171, "C19:C9", "sdp:(cyclic:19)x(cyclic:9):matrix=19,1,4");
  add(189, "C3^2xC7:C3", "dp:(abelian:3,3)x(" + c7c3 + ")");
  add(225, "C3xC5^2:C3", "dp:(cyclic:3)x(sdp:(abelian:5,5)x(cyclic:3):matrix=5,2,0,1,4,4)");
  add(225, "C5^2:C9", "sdp:(abelian:5,5)x(cyclic:9):matrix=5,2,0,1,4,4");
  add(243, "C3^2xHe3", "dp:(abelian:3,3)x(extraspecial:3:p)");
  add(243, "C9xHe3", "dp:(cyclic:9)x(extraspecial:3:p)");
  add(243, "C9xM27", "dp:(cyclic:9)x(extraspecial:3:p2)");
  add(243, "C9^2:C3", "sdp:(abelian:9,9)x(cyclic:3):matrix=9,2,1,3,0,1");
  add(243, "C3^4:C3", "sdp:(abelian:3,3,3,3)x(cyclic:3):matrix=3,4,1,1,0,0,0,1,1,0,0,0,1,0,0,0,0,1");
  return c;
}

std::string odd_catalog_coverage(std::size_t max_order) {
  return "coverage: all abelian groups of odd order 3.." + std::to_string(max_order) +
         ", extraspecial p^3, non-abelian C_p:C_q, and a fixed list of further products;"
         " not a census up to isomorphism";
}

std::string catalog_file_stem(const std::string& name) {
  std::string out;
  for (char ch : name) {
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_') {
      out += ch;
    } else if (ch == ':') {
      out += "_sdp_";
    } else if (ch == '^') {
      out += "_";
    } else {
      out += '-';
    }
  }
  return out;
}

}  // namespace oddaut
