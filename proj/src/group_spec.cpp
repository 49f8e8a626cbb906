#include "oddaut/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "oddaut/extend.hpp"
#include "oddaut/linalg_fp.hpp"
#include "oddaut/numtheory.hpp"

namespace oddaut {
namespace {

struct Built {
  Group group;
  /// (m, n) when the group is C_m^n in standard coordinates.
  std::optional<std::pair<std::size_t, std::size_t>> homocyclic;
};

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : text_(text) {}

  Built parse_all() {
    Built b = parse();
    if (pos_ != text_.size()) error("unexpected trailing text");
    return b;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "group spec column " + std::to_string(pos_ + 1) + ": " + what + " in '" + text_ + "'");
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(const std::string& word) {
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    pos_ += word.size();
    return true;
  }
  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a constructor name");
    return text_.substr(start, pos_ - start);
  }
  long long integer() {
    const char* begin = text_.data() + pos_;
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc()) error("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }
  std::size_t positive() {
    const long long v = integer();
    if (v <= 0) error("expected a positive integer");
    return static_cast<std::size_t>(v);
  }
  std::vector<long long> integer_list() {
    std::vector<long long> out{integer()};
    while (peek(',')) {
      ++pos_;
      out.push_back(integer());
    }
    return out;
  }

  std::pair<Built, Built> operand_pair() {
    expect('(');
    Built a = parse();
    expect(')');
    expect('x');
    expect('(');
    Built b = parse();
    expect(')');
    return {std::move(a), std::move(b)};
  }

  Built parse() {
    const std::string kind = identifier();
    if (kind == "quaternion") return {quaternion(), std::nullopt};
    expect(':');
    if (kind == "cyclic") {
      const std::size_t n = positive();
      return {cyclic(n), std::pair{n, std::size_t{1}}};
    }
    if (kind == "abelian") {
      std::vector<std::size_t> factors;
      for (long long d : integer_list()) {
        if (d <= 0) error("abelian factors must be positive");
        factors.push_back(static_cast<std::size_t>(d));
      }
      std::optional<std::pair<std::size_t, std::size_t>> homo;
      if (std::all_of(factors.begin(), factors.end(), [&](std::size_t d) { return d == factors[0]; })) {
        homo = std::pair{factors[0], factors.size()};
      }
      return {abelian(factors), homo};
    }
    if (kind == "extraspecial") {
      const std::size_t p = positive();
      expect(':');
      bool exponent_p;
      if (accept("p2")) {
        exponent_p = false;
      } else if (accept("p")) {
        exponent_p = true;
      } else {
        const std::size_t e = positive();
        if (e != p && e != p * p) error("exponent must be p or p2");
        exponent_p = e == p;
      }
      return {extraspecial(p, exponent_p), std::nullopt};
    }
    if (kind == "dihedral") return {dihedral(positive()), std::nullopt};
    if (kind == "sym") return {symmetric(positive()), std::nullopt};
    if (kind == "alt") return {alternating(positive()), std::nullopt};
    if (kind == "dp") {
      auto [a, b] = operand_pair();
      return {direct_product(a.group, b.group), std::nullopt};
    }
    if (kind == "sdp") {
      auto [a, b] = operand_pair();
      expect(':');
      std::vector<std::vector<long long>> matrices;
      do {
        if (!accept("matrix=")) error("expected 'matrix='");
        matrices.push_back(integer_list());
      } while (peek(';') && (++pos_, true));
      return {semidirect(a, b.group, matrices), std::nullopt};
    }
    error("unknown constructor '" + kind + "'");
  }

  static Group dihedral(std::size_t n) {
    require(n >= 4 && n % 2 == 0, ErrorKind::InvalidParameter, "dihedral order must be even and at least 4");
    const std::size_t m = n / 2;
    Perm rot(m), refl(m);
    for (std::size_t i = 0; i < m; ++i) {
      rot[i] = static_cast<Elem>((i + 1) % m);
      refl[i] = static_cast<Elem>((m - i) % m);
    }
    if (m == 2) {  // Klein four-group acting on four points
      return permutation_group(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, "D4");
    }
    return permutation_group(m, {rot, refl}, "D" + std::to_string(n));
  }

  static Group symmetric(std::size_t n) {
    require(n >= 1 && n <= 7, ErrorKind::InvalidParameter, "sym:n needs 1 <= n <= 7");
    if (n == 1) return cyclic(1).renamed("S1");
    Perm swap = identity_perm(n), cycle(n);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Elem>((i + 1) % n);
    return permutation_group(n, {swap, cycle}, "S" + std::to_string(n));
  }

  static Group alternating(std::size_t n) {
    require(n >= 3 && n <= 7, ErrorKind::InvalidParameter, "alt:n needs 3 <= n <= 7");
    std::vector<Perm> gens;
    for (std::size_t k = 2; k < n; ++k) {  // 3-cycles (0 1 k) generate A_n
      Perm c = identity_perm(n);
      c[0] = 1;
      c[1] = static_cast<Elem>(k);
      c[k] = 0;
      gens.push_back(c);
    }
    return permutation_group(n, gens, "A" + std::to_string(n));
  }

  static Group quaternion() {
    // Left-regular representation on {±1, ±i, ±j, ±k} numbered 1,-1,i,-i,j,-j,k,-k.
    const Perm i_mul{2, 3, 1, 0, 6, 7, 5, 4};  // x -> x*i
    const Perm j_mul{4, 5, 7, 6, 1, 0, 2, 3};  // x -> x*j
    return permutation_group(8, {i_mul, j_mul}, "Q8");
  }

  [[noreturn]] void bad_matrix(const std::string& what) const { fail(ErrorKind::InvalidParameter, "sdp matrix: " + what); }

  Group semidirect(const Built& a, const Group& b, const std::vector<std::vector<long long>>& raw) {
    const std::vector<Elem> gens = simple_generating_set(b);
    if (raw.size() != gens.size()) {
      bad_matrix("B has " + std::to_string(gens.size()) + " generators but " + std::to_string(raw.size()) +
                 " matrices were given");
    }
    std::vector<Perm> maps;
    for (const auto& entries : raw) {
      if (entries.size() < 2 || entries[0] < 2 || entries[1] < 1) bad_matrix("expected m,n,entries");
      const auto m = static_cast<std::size_t>(entries[0]);
      const auto n = static_cast<std::size_t>(entries[1]);
      if (entries.size() != 2 + n * n) bad_matrix("expected " + std::to_string(n * n) + " entries");
      std::vector<long long> cells(entries.begin() + 2, entries.end());
      if (a.homocyclic && a.homocyclic->first == m && a.homocyclic->second == n) {
        maps.push_back(coordinate_map(m, n, cells));
      } else {
        if (!is_prime(m)) bad_matrix("modulus " + std::to_string(m) + " does not match A and is not prime");
        const auto lift = lift_matrix(a.group, FpMatrix(static_cast<std::uint32_t>(m), n, cells));
        if (!lift) fail(ErrorKind::NoSolution, "no automorphism of " + a.group.name() + " lifts the given matrix");
        maps.push_back(*lift);
      }
    }
    const ActionSpec action = action_from_generators(b, a.group, gens, maps);
    return semidirect_product(a.group, b, action);
  }

  /// x -> x M on C_m^n with coordinates in mixed radix, first factor most significant.
  static Perm coordinate_map(std::size_t m, std::size_t n, const std::vector<long long>& cells) {
    const std::size_t size = static_cast<std::size_t>(ipow(m, n));
    const auto reduce = [m](long long v) {
      const long long r = v % static_cast<long long>(m);
      return static_cast<std::size_t>(r < 0 ? r + static_cast<long long>(m) : r);
    };
    Perm out(size);
    std::vector<std::size_t> coords(n), image(n);
    for (std::size_t x = 0; x < size; ++x) {
      std::size_t rest = x;
      for (std::size_t i = n; i-- > 0;) {
        coords[i] = rest % m;
        rest /= m;
      }
      std::size_t index = 0;
      for (std::size_t j = 0; j < n; ++j) {
        long long acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += static_cast<long long>(coords[i]) * (cells[i * n + j] % static_cast<long long>(m));
        index = index * m + reduce(acc);
      }
      out[x] = static_cast<Elem>(index);
    }
    if (!is_bijection(out)) fail(ErrorKind::InvalidParameter, "sdp matrix is not invertible mod " + std::to_string(m));
    return out;
  }
};

}  // namespace

Group make_group(const std::string& spec) { return SpecParser(spec).parse_all().group; }

}  // namespace oddaut
