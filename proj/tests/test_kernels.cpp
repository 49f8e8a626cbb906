#include <gtest/gtest.h>

#include <random>

#include "oddaut/kernels.hpp"

using namespace oddaut;

namespace {

struct Case {
  std::vector<Elem> src, src2, idx, idx2, expected;
};

Case random_case(std::mt19937& rng, std::size_t n, std::size_t src_size) {
  std::uniform_int_distribution<Elem> value(0, 1000), pick(0, static_cast<Elem>(src_size - 1));
  Case c;
  c.src.resize(src_size);
  c.src2.resize(src_size);
  for (auto& x : c.src) x = value(rng);
  for (auto& x : c.src2) x = value(rng);
  c.idx.resize(n);
  c.idx2.resize(n);
  for (auto& x : c.idx) x = pick(rng);
  for (auto& x : c.idx2) x = pick(rng);
  c.expected.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.expected[i] = c.src[c.idx[i]];
  return c;
}

}  // namespace

TEST(Kernels, ScalarMatchesDefinition) {
  std::mt19937 rng(7);
  const auto& k = kernels::scalar_kernels();
  for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 63u, 1000u}) {
    Case c = random_case(rng, n, 97);
    EXPECT_TRUE(k.gather_equals(c.expected.data(), c.src.data(), c.idx.data(), n));
    std::vector<Elem> dst(n);
    k.gather(dst.data(), c.src.data(), c.idx.data(), n);
    EXPECT_EQ(dst, c.expected);
    if (n > 0) {
      c.expected[n - 1] ^= 1;
      EXPECT_FALSE(k.gather_equals(c.expected.data(), c.src.data(), c.idx.data(), n));
    }
  }
}

TEST(Kernels, Avx2AgreesWithScalar) {
  const auto* avx = kernels::avx2_kernels();
  if (avx == nullptr) GTEST_SKIP() << "AVX2 not available";
  const auto& s = kernels::scalar_kernels();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 37);
    Case c = random_case(rng, n, 1 + trial % 50);
    if (n > 0 && trial % 3 == 0) c.expected[trial % n] += 1;  // mismatch at an arbitrary lane
    EXPECT_EQ(s.gather_equals(c.expected.data(), c.src.data(), c.idx.data(), n),
              avx->gather_equals(c.expected.data(), c.src.data(), c.idx.data(), n));
    if (trial % 2 == 0) c.idx2 = c.idx, c.src2 = c.src;
    EXPECT_EQ(s.gather2_equals(c.src.data(), c.idx.data(), c.src2.data(), c.idx2.data(), n),
              avx->gather2_equals(c.src.data(), c.idx.data(), c.src2.data(), c.idx2.data(), n));
    std::vector<Elem> a(n), b(n);
    s.gather(a.data(), c.src.data(), c.idx.data(), n);
    avx->gather(b.data(), c.src.data(), c.idx.data(), n);
    EXPECT_EQ(a, b);
  }
}

TEST(Kernels, ActiveTableIsOneOfTheVariants) {
  const auto& a = kernels::active();
  EXPECT_TRUE(a.name == kernels::scalar_kernels().name ||
              (kernels::avx2_kernels() != nullptr && a.name == kernels::avx2_kernels()->name));
}
