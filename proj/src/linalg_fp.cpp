#include "oddaut/linalg_fp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "oddaut/numtheory.hpp"

namespace oddaut {
namespace {

std::uint32_t reduce(long long v, std::uint32_t p) {
  const long long r = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(mod_inverse(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p)));
}

/// Row-reduced set of vectors supporting incremental insertion.
class Echelon {
 public:
  Echelon(std::uint32_t p, std::size_t n) : p_(p), n_(n) {}

  std::size_t size() const noexcept { return rows_.size(); }

  /// Reduces v against the stored rows; true if it was independent.
  bool insert(Vec v) {
    reduce_vector(v);
    std::size_t c = 0;
    while (c < n_ && v[c] == 0) ++c;
    if (c == n_) return false;
    const std::uint64_t s = inv_mod(v[c], p_);
    for (auto& x : v) x = static_cast<std::uint32_t>(x * s % p_);
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    return true;
  }

  bool contains(Vec v) const {
    reduce_vector(v);
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
  }

 private:
  void reduce_vector(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint32_t f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(p_ - f) * rows_[r][j]) % p_);
      }
    }
  }

  std::uint32_t p_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Independent spanning set of the submodule generated by v.
std::vector<Vec> cyclic_submodule(const Vec& v, std::span<const FpMatrix> gens) {
  const std::uint32_t p = gens.front().p();
  Echelon e(p, v.size());
  std::vector<Vec> basis;
  if (!e.insert(v)) return basis;
  basis.push_back(v);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const FpMatrix& g : gens) {
      Vec w = apply_matrix(basis[i], g);
      if (e.insert(w)) basis.push_back(std::move(w));
    }
  }
  return basis;
}

constexpr std::uint64_t kVectorLimit = 2'000'000;

/// Cyclic submodule of least dimension over all non-zero vectors (up to
/// scalars); it is irreducible.
std::vector<Vec> minimal_submodule(std::span<const FpMatrix> gens) {
  const std::uint32_t p = gens.front().p();
  const std::size_t d = gens.front().n();
  require(std::pow(static_cast<double>(p), static_cast<double>(d)) <= static_cast<double>(kVectorLimit),
          ErrorKind::InvalidParameter, "vector space too large for exhaustive submodule search");
  std::vector<Vec> best;
  Vec v(d, 0);
  // Vectors whose first non-zero coordinate is 1, in lexicographic order.
  for (std::size_t lead = d; lead-- > 0;) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      auto sub = cyclic_submodule(v, gens);
      if (best.empty() || sub.size() < best.size()) {
        best = std::move(sub);
        if (best.size() == 1) return best;
      }
      std::size_t j = lead + 1;
      while (j < d && v[j] == p - 1) v[j++] = 0;
      if (j >= d) break;
      ++v[j];
    }
  }
  return best;
}

FpMatrix restrict_to(const FpMatrix& m, const std::vector<Vec>& basis) {
  std::vector<Vec> rows;
  for (const Vec& b : basis) {
    auto c = coordinates(m.p(), basis, apply_matrix(b, m));
    require(c.has_value(), ErrorKind::InvariantViolation, "subspace is not invariant");
    rows.push_back(std::move(*c));
  }
  return FpMatrix::from_rows(m.p(), rows);
}

Vec combine(std::uint32_t p, const Vec& coeffs, const std::vector<Vec>& basis) {
  Vec out(basis.front().size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = static_cast<std::uint32_t>((out[j] + static_cast<std::uint64_t>(coeffs[i]) * basis[i][j]) % p);
    }
  }
  return out;
}

/// Invariant complement of the invariant subspace W via the averaged projection.
std::vector<Vec> invariant_complement(std::span<const FpMatrix> gens, const std::vector<Vec>& w,
                                      const std::vector<FpMatrix>& group) {
  const std::uint32_t p = gens.front().p();
  const std::size_t d = gens.front().n();
  std::vector<Vec> full = w;
  Echelon e(p, d);
  for (const Vec& x : w) e.insert(x);
  for (std::size_t i = 0; i < d && full.size() < d; ++i) {
    Vec ei(d, 0);
    ei[i] = 1;
    if (e.insert(ei)) full.push_back(ei);
  }
  const FpMatrix pm = FpMatrix::from_rows(p, full);
  FpMatrix diag = FpMatrix::zero(p, d);
  for (std::size_t i = 0; i < w.size(); ++i) diag.set(i, i, 1);
  const FpMatrix proj0 = pm.inverse() * diag * pm;
  FpMatrix sum = FpMatrix::zero(p, d);
  for (const FpMatrix& h : group) {
    const FpMatrix t = h.inverse() * proj0 * h;
    std::vector<long long> s(d * d);
    for (std::size_t k = 0; k < d * d; ++k) s[k] = static_cast<long long>(sum.entries()[k]) + t.entries()[k];
    sum = FpMatrix(p, d, std::move(s));
  }
  auto u = left_kernel(sum);
  require(u.size() + w.size() == d, ErrorKind::InvariantViolation, "averaged projection has wrong rank");
  return u;
}

std::vector<std::vector<Vec>> decompose_local(std::span<const FpMatrix> gens) {
  const std::size_t d = gens.front().n();
  if (d == 0) return {};
  std::vector<Vec> w = minimal_submodule(gens);
  if (w.size() == d) return {w};
  const std::vector<FpMatrix> group = matrix_group(gens);
  const std::vector<Vec> u = invariant_complement(gens, w, group);
  std::vector<FpMatrix> on_u;
  for (const FpMatrix& m : gens) on_u.push_back(restrict_to(m, u));
  std::vector<std::vector<Vec>> out{w};
  for (const auto& sub : decompose_local(on_u)) {
    std::vector<Vec> lifted;
    for (const Vec& c : sub) lifted.push_back(combine(gens.front().p(), c, u));
    out.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace

FpMatrix::FpMatrix(std::uint32_t p, std::size_t n, std::vector<long long> entries) : p_(p), n_(n) {
  require(is_prime(p), ErrorKind::InvalidParameter, "modulus " + std::to_string(p) + " is not prime");
  require(entries.size() == n * n, ErrorKind::InvalidParameter, "matrix needs n*n entries");
  a_.resize(n * n);
  for (std::size_t i = 0; i < entries.size(); ++i) a_[i] = reduce(entries[i], p);
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m = zero(p, n);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::zero(std::uint32_t p, std::size_t n) { return FpMatrix(p, n, std::vector<long long>(n * n, 0)); }

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<Vec>& rows) {
  const std::size_t n = rows.size();
  std::vector<long long> e;
  e.reserve(n * n);
  for (const Vec& r : rows) {
    require(r.size() == n, ErrorKind::InvalidParameter, "rows do not form a square matrix");
    e.insert(e.end(), r.begin(), r.end());
  }
  return FpMatrix(p, n, std::move(e));
}

void FpMatrix::set(std::size_t i, std::size_t j, long long v) { a_[i * n_ + j] = reduce(v, p_); }

Vec FpMatrix::row(std::size_t i) const { return Vec(a_.begin() + i * n_, a_.begin() + (i + 1) * n_); }

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  require(p_ == o.p_ && n_ == o.n_, ErrorKind::InvalidParameter, "matrix shape mismatch");
  FpMatrix r = zero(p_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const std::uint64_t a = a_[i * n_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        r.a_[i * n_ + j] = static_cast<std::uint32_t>((r.a_[i * n_ + j] + a * o.a_[k * n_ + j]) % p_);
      }
    }
  }
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  require(p_ == o.p_ && n_ == o.n_, ErrorKind::InvalidParameter, "matrix shape mismatch");
  FpMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
  return r;
}

FpMatrix FpMatrix::power(std::uint64_t k) const {
  FpMatrix result = identity(p_, n_), base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix r = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) r.a_[j * n_ + i] = a_[i * n_ + j];
  }
  return r;
}

std::uint32_t FpMatrix::det() const {
  std::vector<std::uint64_t> m(a_.begin(), a_.end());
  std::uint64_t d = 1;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * n_ + c] == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m[piv * n_ + j], m[c * n_ + j]);
      d = (p_ - d) % p_;
    }
    d = d * m[c * n_ + c] % p_;
    const std::uint64_t iv = inv_mod(static_cast<std::uint32_t>(m[c * n_ + c]), p_);
    for (std::size_t r = c + 1; r < n_; ++r) {
      const std::uint64_t f = m[r * n_ + c] * iv % p_;
      if (f == 0) continue;
      for (std::size_t j = c; j < n_; ++j) m[r * n_ + j] = (m[r * n_ + j] + (p_ - f) * m[c * n_ + j]) % p_;
    }
  }
  return static_cast<std::uint32_t>(d);
}

FpMatrix FpMatrix::inverse() const {
  const std::size_t w = 2 * n_;
  std::vector<std::uint64_t> m(n_ * w, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m[i * w + j] = a_[i * n_ + j];
    m[i * w + n_ + i] = 1;
  }
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t piv = c;
    while (piv < n_ && m[piv * w + c] == 0) ++piv;
    if (piv == n_) fail(ErrorKind::NotInvertible, "singular matrix over F_" + std::to_string(p_));
    for (std::size_t j = 0; j < w; ++j) std::swap(m[piv * w + j], m[c * w + j]);
    const std::uint64_t iv = inv_mod(static_cast<std::uint32_t>(m[c * w + c]), p_);
    for (std::size_t j = 0; j < w; ++j) m[c * w + j] = m[c * w + j] * iv % p_;
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == c) continue;
      const std::uint64_t f = m[r * w + c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < w; ++j) m[r * w + j] = (m[r * w + j] + (p_ - f) * m[c * w + j]) % p_;
    }
  }
  FpMatrix r = zero(p_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) r.a_[i * n_ + j] = static_cast<std::uint32_t>(m[i * w + n_ + j]);
  }
  return r;
}

bool FpMatrix::is_identity() const { return *this == identity(p_, n_); }

Vec apply_matrix(const Vec& v, const FpMatrix& m) {
  require(v.size() == m.n(), ErrorKind::InvalidParameter, "vector length does not match matrix");
  Vec out(m.n(), 0);
  const std::uint64_t p = m.p();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.n(); ++j) {
      out[j] = static_cast<std::uint32_t>((out[j] + static_cast<std::uint64_t>(v[i]) * m.at(i, j)) % p);
    }
  }
  return out;
}

std::size_t rank(std::uint32_t p, const std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  Echelon e(p, rows.front().size());
  for (const Vec& r : rows) e.insert(r);
  return e.size();
}

std::optional<Vec> coordinates(std::uint32_t p, const std::vector<Vec>& basis, const Vec& v) {
  // Solve c * B = v by eliminating on the augmented transpose.
  const std::size_t k = basis.size(), n = v.size();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) m[j][i] = basis[i][j];
    m[j][k] = v[j];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t iv = inv_mod(static_cast<std::uint32_t>(m[r][c]), p);
    for (auto& x : m[r]) x = x * iv % p;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == r || m[q][c] == 0) continue;
      const std::uint64_t f = m[q][c];
      for (std::size_t j = 0; j <= k; ++j) m[q][j] = (m[q][j] + (p - f) * m[r][j]) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t q = r; q < n; ++q) {
    if (m[q][k] != 0) return std::nullopt;
  }
  require(r == k, ErrorKind::InvalidParameter, "basis rows are dependent");
  Vec c(k, 0);
  for (std::size_t i = 0; i < r; ++i) c[pivot_col[i]] = static_cast<std::uint32_t>(m[i][k]);
  return c;
}

std::vector<Vec> left_kernel(const FpMatrix& mat) {
  // v*M = 0  <=>  M^T v^T = 0: reduce M^T and read off the free columns.
  const std::uint32_t p = mat.p();
  const std::size_t n = mat.n();
  const FpMatrix t = mat.transpose();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = t.at(i, j);
  }
  std::vector<std::size_t> pivot_col;
  std::vector<std::uint8_t> is_pivot(n, 0);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t iv = inv_mod(static_cast<std::uint32_t>(m[r][c]), p);
    for (auto& x : m[r]) x = x * iv % p;
    for (std::size_t q = 0; q < n; ++q) {
      if (q == r || m[q][c] == 0) continue;
      const std::uint64_t f = m[q][c];
      for (std::size_t j = 0; j < n; ++j) m[q][j] = (m[q][j] + (p - f) * m[r][j]) % p;
    }
    pivot_col.push_back(c);
    is_pivot[c] = 1;
    ++r;
  }
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = static_cast<std::uint32_t>((p - m[i][free]) % p);
    out.push_back(std::move(v));
  }
  return out;
}

boost::multiprecision::cpp_int gl_order(unsigned n, std::uint64_t q) {
  require(n >= 1, ErrorKind::InvalidParameter, "dimension must be at least 1");
  require(q >= 2 && prime_power_base(q) != 0, ErrorKind::InvalidParameter,
          std::to_string(q) + " is not a prime power");
  using boost::multiprecision::cpp_int;
  const cpp_int qn = boost::multiprecision::pow(cpp_int(q), n);
  cpp_int result = 1, qi = 1;
  for (unsigned i = 0; i < n; ++i) {
    result *= qn - qi;
    qi *= q;
  }
  return result;
}

std::uint64_t matrix_order(const FpMatrix& m) {
  require(m.is_invertible(), ErrorKind::NotInvertible, "matrix order of a singular matrix");
  const FpMatrix id = FpMatrix::identity(m.p(), m.n());
  const boost::multiprecision::cpp_int bound = gl_order(static_cast<unsigned>(std::max<std::size_t>(m.n(), 1)), m.p());
  FpMatrix x = m;
  for (std::uint64_t k = 1;; ++k) {
    if (x == id) return k;
    require(bound > k, ErrorKind::InvariantViolation, "matrix order exceeds |GL|");
    x = x * m;
  }
}

std::vector<FpMatrix> matrix_group(std::span<const FpMatrix> generators, std::size_t limit) {
  require(!generators.empty(), ErrorKind::InvalidParameter, "no generators");
  std::set<FpMatrix> seen;
  std::vector<FpMatrix> queue{FpMatrix::identity(generators.front().p(), generators.front().n())};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const FpMatrix& g : generators) {
      FpMatrix y = queue[i] * g;
      if (seen.insert(y).second) {
        require(queue.size() < limit, ErrorKind::InvalidParameter, "matrix group exceeds the size limit");
        queue.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_irreducible(std::span<const FpMatrix> matrices) {
  require(!matrices.empty(), ErrorKind::InvalidParameter, "no matrices");
  return minimal_submodule(matrices).size() == matrices.front().n();
}

BlockDecomposition decompose(std::span<const FpMatrix> matrices) {
  require(!matrices.empty(), ErrorKind::InvalidParameter, "no matrices");
  const std::uint32_t p = matrices.front().p();
  const std::size_t n = matrices.front().n();
  for (const FpMatrix& m : matrices) {
    require(m.p() == p && m.n() == n, ErrorKind::InvalidParameter, "matrix shape mismatch");
    require(m.is_invertible(), ErrorKind::NotInvertible, "action matrix is singular");
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      require(matrices[i] * matrices[j] == matrices[j] * matrices[i], ErrorKind::NotCommuting,
              "action matrices do not commute");
    }
  }
  const std::size_t group_order = matrix_group(matrices).size();
  require(group_order % p != 0, ErrorKind::NotCoprime,
          "matrix group of order " + std::to_string(group_order) + " is not prime to " + std::to_string(p));

  BlockDecomposition out{{}, FpMatrix::identity(p, n)};
  std::vector<Vec> all_rows;
  for (auto& basis : decompose_local(matrices)) {
    Block b;
    b.dimension = basis.size();
    for (const FpMatrix& m : matrices) b.restricted.push_back(restrict_to(m, basis));
    b.trivial = std::all_of(b.restricted.begin(), b.restricted.end(), [](const FpMatrix& r) { return r.is_identity(); });
    b.restricted_order = matrix_group(b.restricted).size();
    for (std::size_t i = 0; i < b.restricted.size(); ++i) {
      if (matrix_order(b.restricted[i]) == b.restricted_order) {
        b.generator_index = i;
        break;
      }
    }
    if (!b.generator_index) {
      const auto group = matrix_group(b.restricted);
      const bool cyclic = std::any_of(group.begin(), group.end(),
                                      [&](const FpMatrix& g) { return matrix_order(g) == b.restricted_order; });
      require(cyclic, ErrorKind::ConditionViolated, "block action is not cyclic");
    }
    all_rows.insert(all_rows.end(), basis.begin(), basis.end());
    b.basis = std::move(basis);
    out.blocks.push_back(std::move(b));
  }
  out.change_of_basis = FpMatrix::from_rows(p, all_rows);
  require(out.change_of_basis.is_invertible(), ErrorKind::InvariantViolation, "block bases do not span");
  return out;
}

FpMatrix companion(std::uint32_t p, const Vec& k) {
  const std::size_t n = k.size();
  FpMatrix m = FpMatrix::zero(p, n);
  for (std::size_t j = 0; j + 1 < n; ++j) m.set(j, j + 1, 1);
  for (std::size_t j = 0; j < n; ++j) m.set(n - 1, j, k[j]);
  return m;
}

CyclicBasis cyclic_basis(const FpMatrix& m) {
  const std::uint32_t p = m.p();
  const std::size_t n = m.n();
  require(!m.is_identity(), ErrorKind::NotIrreducible, "identity action has no cyclic basis");
  const FpMatrix single[] = {m};
  require(is_irreducible(single), ErrorKind::NotIrreducible, "matrix action is reducible");
  CyclicBasis cb;
  // Irreducibility makes every non-zero vector cyclic; take e_1.
  Vec a(n, 0);
  a[0] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    cb.basis.push_back(a);
    a = apply_matrix(a, m);
  }
  auto k = coordinates(p, cb.basis, a);
  require(k.has_value(), ErrorKind::InvariantViolation, "cyclic vector does not span");
  cb.k = std::move(*k);
  std::uint64_t sum = 0;
  for (std::uint32_t x : cb.k) sum += x;
  require(sum % p != 1 % p, ErrorKind::ConditionViolated, "sum of companion coefficients is 1 mod p");
  return cb;
}

}  // namespace oddaut
