#include <gtest/gtest.h>

#include <map>

#include "oddaut/abelian.hpp"
#include "oddaut/group_spec.hpp"
#include "oddaut/property_suites.hpp"
#include "oddaut/structure.hpp"
#include "test_helpers.hpp"

using namespace oddaut;

namespace {

using F = std::vector<std::uint64_t>;

/// Invariant factors from the element-order census: the number of elements
/// with x^k = 1 is prod gcd(k, d_i), which determines the d_i.
std::map<std::size_t, std::size_t> census(const Group& g) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t k = 1; k <= g.order(); ++k) {
    if (g.order() % k) continue;
    std::size_t c = 0;
    for (Elem x = 0; x < g.order(); ++x) c += g.power(x, static_cast<long long>(k)) == 0;
    out[k] = c;
  }
  return out;
}

}  // namespace

TEST(Abelian, InvariantFactorExamples) {
  EXPECT_EQ(abelian_invariants(cyclic(6)).factors, F{6});
  EXPECT_EQ(abelian_invariants(abelian({2, 4})).factors, (F{2, 4}));
  EXPECT_EQ(abelian_invariants(abelian({6, 4})).factors, (F{2, 12}));
  EXPECT_TRUE(abelian_invariants(cyclic(1)).factors.empty());
  EXPECT_TRUE(oddaut::testing::throws_kind(ErrorKind::NotAbelian, [] { abelian_invariants(make_group("sym:3")); }));
}

TEST(Abelian, InvariantsAgreeWithCensus) {
  for (const auto& factors : std::vector<std::vector<std::size_t>>{
           {2, 2, 3}, {4, 6}, {3, 9, 3}, {5, 25}, {2, 3, 4, 5}, {8, 2, 2}, {27, 3}}) {
    const Group g = abelian(factors);
    const auto inv = abelian_invariants(g);
    EXPECT_EQ(census(g), census(abelian({inv.factors.begin(), inv.factors.end()})));
    for (std::size_t i = 1; i < inv.factors.size(); ++i) EXPECT_EQ(inv.factors[i] % inv.factors[i - 1], 0u);
    std::vector<std::uint64_t> orders(factors.begin(), factors.end());
    EXPECT_EQ(invariants_from_cyclic_orders(orders), inv);
  }
}

TEST(Abelian, HomCountExamples) {
  EXPECT_EQ(hom_count(cyclic(1), cyclic(5)), 1);
  EXPECT_EQ(hom_count(cyclic(6), cyclic(4)), 2);
  EXPECT_EQ(hom_count(abelian({3, 3}), cyclic(3)), 9);
}

TEST(Abelian, HomCountMatchesBruteForceAndIsSymmetric) {
  const std::vector<std::vector<std::size_t>> types{{2}, {4}, {2, 2}, {6}, {3, 3}, {2, 4}, {9}, {12}};
  for (const auto& ta : types) {
    for (const auto& tb : types) {
      const Group a = abelian(ta), b = abelian(tb);
      const BigInt formula = hom_count(a, b);
      EXPECT_EQ(formula, BigInt(brute_hom_count_to_abelian(a, b)));
      EXPECT_EQ(formula, hom_count(b, a));
    }
  }
}

TEST(Abelian, DirectFactorExamples) {
  const Group c3s3 = make_group("dp:(cyclic:3)x(sym:3)");
  const auto d = abelian_direct_factor(c3s3);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->size(), 3u);
  EXPECT_EQ(d->members(), center(c3s3).members());
  EXPECT_FALSE(abelian_direct_factor(extraspecial(3, true)));
  EXPECT_FALSE(abelian_direct_factor(make_group("sym:3")));
  EXPECT_TRUE(abelian_direct_factor(cyclic(5)));
}

TEST(Abelian, CentralAutomorphismExamples) {
  const Group c12 = cyclic(12);
  const auto a12 = automorphism_group(c12);
  EXPECT_EQ(central_automorphism_count(c12, a12).via_enumeration, a12.order);

  const Group d8 = make_group("dihedral:8");
  const auto c = central_automorphism_count(d8, automorphism_group(d8));
  ASSERT_TRUE(c.via_hom);
  EXPECT_EQ(*c.via_hom, 4);
  EXPECT_EQ(c.via_enumeration, 4);
  EXPECT_TRUE(c.central_inner_is_center_of_inner);

  const Group s3 = make_group("sym:3");
  const auto cs = central_automorphism_count(s3, automorphism_group(s3));
  EXPECT_EQ(cs.via_enumeration, 1);
  EXPECT_TRUE(cs.central_inner_is_center_of_inner);

  const Group c3s3 = make_group("dp:(cyclic:3)x(sym:3)");
  EXPECT_FALSE(central_automorphism_count(c3s3, automorphism_group(c3s3)).via_hom);
}

TEST(Abelian, CentralCountAgreesWithHomFormulaOnExtraspecials) {
  for (const char* spec : {"extraspecial:3:p", "extraspecial:3:p2", "quaternion", "extraspecial:5:p"}) {
    const Group g = make_group(spec);
    const auto c = central_automorphism_count(g, automorphism_group(g));
    ASSERT_TRUE(c.via_hom) << spec;
    EXPECT_EQ(*c.via_hom, c.via_enumeration) << spec;
  }
}
