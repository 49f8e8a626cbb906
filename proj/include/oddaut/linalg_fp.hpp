#pragma once

// Linear algebra over prime fields F_p. Vectors are rows; a matrix acts by
// v -> v*M, so row i of M holds the image of the i-th basis vector and the
// matrix of "first M1, then M2" is M1*M2.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "oddaut/error.hpp"

namespace oddaut {

using Vec = std::vector<std::uint32_t>;

class FpMatrix {
 public:
  /// Entries are reduced mod p; p must be prime.
  FpMatrix(std::uint32_t p, std::size_t n, std::vector<long long> entries);
  static FpMatrix identity(std::uint32_t p, std::size_t n);
  static FpMatrix zero(std::uint32_t p, std::size_t n);
  static FpMatrix from_rows(std::uint32_t p, const std::vector<Vec>& rows);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t n() const noexcept { return n_; }
  std::uint32_t at(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, long long v);
  Vec row(std::size_t i) const;
  const std::vector<std::uint32_t>& entries() const noexcept { return a_; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix power(std::uint64_t k) const;
  FpMatrix transpose() const;
  std::uint32_t det() const;
  bool is_invertible() const { return det() != 0; }
  /// Throws NotInvertible.
  FpMatrix inverse() const;
  bool is_identity() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::uint32_t> a_;
};

/// v * M.
Vec apply_matrix(const Vec& v, const FpMatrix& m);
/// Rank of a list of row vectors.
std::size_t rank(std::uint32_t p, const std::vector<Vec>& rows);
/// Coefficients c with sum c_i basis_i = v, if v lies in the span. The basis
/// rows must be linearly independent.
std::optional<Vec> coordinates(std::uint32_t p, const std::vector<Vec>& basis, const Vec& v);
/// Basis of {v : v*M = 0}.
std::vector<Vec> left_kernel(const FpMatrix& m);

/// prod_{i<n} (q^n - q^i). Throws InvalidParameter unless n >= 1 and q is a prime power.
boost::multiprecision::cpp_int gl_order(unsigned n, std::uint64_t q);

/// Least k >= 1 with M^k = I. Throws NotInvertible.
std::uint64_t matrix_order(const FpMatrix& m);

/// Group generated by the matrices, sorted. Throws InvalidParameter past `limit`.
std::vector<FpMatrix> matrix_group(std::span<const FpMatrix> generators, std::size_t limit = 1'000'000);

struct Block {
  /// Rows spanning the block, in the coordinates of the input.
  std::vector<Vec> basis;
  std::size_t dimension = 0;
  /// Every input matrix acts as the identity on the block.
  bool trivial = false;
  /// Each input matrix restricted to the block, in block coordinates.
  std::vector<FpMatrix> restricted;
  /// Order of the group generated by the restrictions; it is cyclic.
  std::uint64_t restricted_order = 1;
  /// Index of an input matrix whose restriction generates that group.
  std::optional<std::size_t> generator_index;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  /// Rows are the block bases concatenated; conjugating an input matrix by
  /// it gives a block-diagonal matrix.
  FpMatrix change_of_basis = FpMatrix::identity(2, 0);
};

/// Complete reduction of a commuting family of invertible matrices whose
/// group has order prime to p. Each block is the submodule generated by a
/// vector of least cyclic dimension, which makes it irreducible; its
/// complement comes from the averaged projection.
/// Throws NotInvertible, NotCommuting, NotCoprime; ConditionViolated if a
/// block group turns out not cyclic.
BlockDecomposition decompose(std::span<const FpMatrix> matrices);

/// True when no proper non-zero subspace is invariant under all matrices,
/// decided by checking the cyclic submodule of every non-zero vector.
bool is_irreducible(std::span<const FpMatrix> matrices);

/// Companion form: row j < n-1 is e_{j+1}, the last row is k.
FpMatrix companion(std::uint32_t p, const Vec& k);

struct CyclicBasis {
  /// alpha_1 and alpha_{j+1} = alpha_j * M, in the input coordinates.
  std::vector<Vec> basis;
  /// alpha_n * M = sum k_j alpha_j.
  Vec k;
};
/// For M irreducible and not the identity. Throws NotIrreducible, and
/// ConditionViolated if sum k = 1 mod p.
CyclicBasis cyclic_basis(const FpMatrix& m);

}  // namespace oddaut
