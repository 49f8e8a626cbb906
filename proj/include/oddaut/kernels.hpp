#pragma once

// Index-gather kernels behind every table-level check (associativity,
// homomorphism law, map composition). Each kernel has a scalar reference
// and, on x86-64, an AVX2 variant; the variant is picked once at runtime.

#include <cstdint>
#include <span>
#include <string_view>

namespace oddaut {

using Elem = std::uint32_t;

namespace kernels {

/// expected[i] == src[idx[i]] for every i.
using GatherEqualsFn = bool (*)(const Elem* expected, const Elem* src, const Elem* idx, std::size_t n);
/// src1[idx1[i]] == src2[idx2[i]] for every i.
using Gather2EqualsFn = bool (*)(const Elem* src1, const Elem* idx1, const Elem* src2, const Elem* idx2,
                                 std::size_t n);
/// dst[i] = src[idx[i]].
using GatherFn = void (*)(Elem* dst, const Elem* src, const Elem* idx, std::size_t n);

struct KernelTable {
  std::string_view name;
  GatherEqualsFn gather_equals;
  Gather2EqualsFn gather2_equals;
  GatherFn gather;
};

const KernelTable& scalar_kernels();
/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// The table used by the library. AVX2 when available unless the
/// environment variable ODDAUT_SIMD is set to "scalar".
const KernelTable& active();

inline bool gather_equals(std::span<const Elem> expected, std::span<const Elem> src, std::span<const Elem> idx) {
  return active().gather_equals(expected.data(), src.data(), idx.data(), idx.size());
}

inline bool gather2_equals(std::span<const Elem> src1, std::span<const Elem> idx1, std::span<const Elem> src2,
                           std::span<const Elem> idx2) {
  return active().gather2_equals(src1.data(), idx1.data(), src2.data(), idx2.data(), idx1.size());
}

inline void gather(std::span<Elem> dst, std::span<const Elem> src, std::span<const Elem> idx) {
  active().gather(dst.data(), src.data(), idx.data(), idx.size());
}

}  // namespace kernels
}  // namespace oddaut
