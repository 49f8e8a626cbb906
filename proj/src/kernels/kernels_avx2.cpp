// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "oddaut/kernels.hpp"

namespace oddaut::kernels {
namespace detail {

// Indices are below the order cap (far under 2^31), so the signed 32-bit
// gather offsets are safe.

bool gather_equals_avx2(const Elem* expected, const Elem* src, const Elem* idx, std::size_t n) {
  std::size_t i = 0;
  const auto* base = reinterpret_cast<const int*>(src);
  for (; i + 8 <= n; i += 8) {
    __m256i offsets = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    __m256i got = _mm256_i32gather_epi32(base, offsets, 4);
    __m256i want = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(expected + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(got, want)) != -1) return false;
  }
  for (; i < n; ++i) {
    if (expected[i] != src[idx[i]]) return false;
  }
  return true;
}

bool gather2_equals_avx2(const Elem* src1, const Elem* idx1, const Elem* src2, const Elem* idx2,
                         std::size_t n) {
  std::size_t i = 0;
  const auto* base1 = reinterpret_cast<const int*>(src1);
  const auto* base2 = reinterpret_cast<const int*>(src2);
  for (; i + 8 <= n; i += 8) {
    __m256i o1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx1 + i));
    __m256i o2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx2 + i));
    __m256i a = _mm256_i32gather_epi32(base1, o1, 4);
    __m256i b = _mm256_i32gather_epi32(base2, o2, 4);
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(a, b)) != -1) return false;
  }
  for (; i < n; ++i) {
    if (src1[idx1[i]] != src2[idx2[i]]) return false;
  }
  return true;
}

void gather_avx2(Elem* dst, const Elem* src, const Elem* idx, std::size_t n) {
  std::size_t i = 0;
  const auto* base = reinterpret_cast<const int*>(src);
  for (; i + 8 <= n; i += 8) {
    __m256i offsets = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_i32gather_epi32(base, offsets, 4));
  }
  for (; i < n; ++i) dst[i] = src[idx[i]];
}

}  // namespace detail

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2", detail::gather_equals_avx2, detail::gather2_equals_avx2,
                                 detail::gather_avx2};
  return table;
}

}  // namespace oddaut::kernels
