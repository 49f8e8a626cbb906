#include <gtest/gtest.h>

#include "oddaut/aut.hpp"
#include "oddaut/group_spec.hpp"
#include "oddaut/structure.hpp"
#include "test_helpers.hpp"

using namespace oddaut;
using oddaut::testing::brute_center;
using oddaut::testing::throws_kind;

namespace {

std::vector<Elem> brute_derived(const Group& g) {
  std::vector<Elem> comms;
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) comms.push_back(g.commutator(x, y));
  }
  return generated_subgroup(g, comms).members();
}

std::vector<Perm> all_automorphisms(const Group& g) {
  return enumerate_automorphisms(g, [](Elem, Elem) { return true; });
}

}  // namespace

TEST(Structure, CenterMatchesCommutingOracle) {
  for (const char* spec : {"cyclic:6", "sym:3", "extraspecial:3:p", "extraspecial:3:p2", "quaternion", "sym:4",
                           "dp:(cyclic:3)x(sym:3)"}) {
    const Group g = make_group(spec);
    EXPECT_EQ(center(g).members(), brute_center(g)) << spec;
  }
  EXPECT_EQ(center(make_group("sym:3")).size(), 1u);
  EXPECT_EQ(center(extraspecial(3, true)).size(), 3u);
  EXPECT_EQ(center(abelian({3, 3})).size(), 9u);
}

TEST(Structure, DerivedSubgroupMatchesCommutatorOracle) {
  for (const char* spec : {"abelian:2,4", "sym:3", "sym:4", "alt:4", "sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2",
                           "extraspecial:5:p"}) {
    const Group g = make_group(spec);
    EXPECT_EQ(derived_subgroup(g).members(), brute_derived(g)) << spec;
  }
  EXPECT_EQ(derived_subgroup(make_group("sym:3")).size(), 3u);
  EXPECT_EQ(derived_subgroup(make_group("sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2")).size(), 7u);
  EXPECT_TRUE(derived_subgroup(cyclic(10)).is_trivial());
}

TEST(Structure, SylowExamples) {
  const auto c12 = sylow(cyclic(12), 2);
  EXPECT_EQ(c12.subgroup.size(), 4u);
  EXPECT_EQ(c12.conjugate_count, 1u);
  EXPECT_TRUE(c12.is_normal);

  const Group a4 = make_group("alt:4");
  const auto s3 = sylow(a4, 3);
  EXPECT_EQ(s3.subgroup.size(), 3u);
  // Oracle: count subgroups of order 3 directly.
  std::set<std::vector<Elem>> order3;
  for (Elem x = 0; x < 12; ++x) {
    if (a4.element_order(x) == 3) order3.insert(generated_subgroup(a4, {x}).members());
  }
  EXPECT_EQ(s3.conjugate_count, order3.size());
  EXPECT_EQ(s3.conjugate_count, 4u);
  EXPECT_FALSE(s3.is_normal);

  const auto s7 = sylow(make_group("sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2"), 7);
  EXPECT_EQ(s7.subgroup.size(), 7u);
  EXPECT_TRUE(s7.is_normal);

  EXPECT_TRUE(throws_kind(ErrorKind::PrimeDoesNotDivide, [&] { sylow(a4, 5); }));
}

TEST(Structure, SylowInS4) {
  const Group s4 = make_group("sym:4");
  const auto p2 = sylow(s4, 2);
  EXPECT_EQ(p2.subgroup.size(), 8u);
  EXPECT_EQ(p2.conjugate_count, 3u);
  const auto p3 = sylow(s4, 3);
  EXPECT_EQ(p3.conjugate_count, 4u);
}

TEST(Structure, ComplementExamples) {
  const Group c6 = cyclic(6);
  const auto r = find_complement(c6, generated_subgroup(c6, {3}));
  ASSERT_TRUE(r.complement);
  EXPECT_EQ(r.complement->size(), 3u);

  const Group c4 = cyclic(4);
  const auto none = find_complement(c4, generated_subgroup(c4, {2}));
  EXPECT_FALSE(none.complement);
  EXPECT_FALSE(none.budget_exhausted);

  const Group he = extraspecial(3, true);
  EXPECT_FALSE(find_complement(he, center(he)).complement);

  const Group s3 = make_group("sym:3");
  std::vector<Elem> inv;
  for (Elem x = 1; x < 6; ++x) {
    if (s3.element_order(x) == 2) inv.push_back(x);
  }
  EXPECT_TRUE(throws_kind(ErrorKind::NotNormal, [&] { find_complement(s3, generated_subgroup(s3, {inv[0]})); }));
}

TEST(Structure, ComplementBudgetIsReportedDistinctly) {
  const Group g = make_group("sdp:(abelian:5,5)x(cyclic:3):matrix=5,2,0,1,4,4");
  const auto r = find_complement(g, sylow(g, 5).subgroup, 1);
  EXPECT_TRUE(r.budget_exhausted || r.complement);
}

TEST(Structure, CharacteristicElementaryAbelian) {
  const Group c9 = cyclic(9);
  const auto a9 = all_automorphisms(c9);
  const Subgroup s = characteristic_elementary_abelian(c9, a9);
  EXPECT_EQ(s.members(), generated_subgroup(c9, {3}).members());

  const Group f21 = make_group("sdp:(cyclic:7)x(cyclic:3):matrix=7,1,2");
  const auto a21 = all_automorphisms(f21);
  EXPECT_EQ(a21.size(), 42u);
  const Subgroup s21 = characteristic_elementary_abelian(f21, a21);
  EXPECT_EQ(s21.size(), 7u);
  EXPECT_TRUE(is_invariant(s21, a21));

  const Group c15 = abelian({3, 5});
  const Subgroup s15 = characteristic_elementary_abelian(c15, all_automorphisms(c15));
  EXPECT_EQ(s15.size(), 3u);  // smallest prime first

  EXPECT_TRUE(throws_kind(ErrorKind::NotOddOrder, [] {
    const Group g = cyclic(4);
    characteristic_elementary_abelian(g, std::vector<Perm>{});
  }));
  EXPECT_TRUE(throws_kind(ErrorKind::TrivialGroup, [] {
    const Group g = cyclic(1);
    characteristic_elementary_abelian(g, std::vector<Perm>{});
  }));
}

TEST(Structure, CentralQuotientProfile) {
  const auto ab = central_quotient_profile(cyclic(12));
  EXPECT_EQ(ab.quotient_order, 1u);
  EXPECT_TRUE(ab.rank_condition_holds);

  const auto he = central_quotient_profile(extraspecial(3, true));
  EXPECT_EQ(he.quotient_order, 9u);
  EXPECT_TRUE(he.is_p_group);
  EXPECT_TRUE(he.abelian);
  ASSERT_TRUE(he.exponents);
  EXPECT_EQ(*he.exponents, (std::vector<unsigned>{1, 1}));
  EXPECT_TRUE(he.rank_condition_holds);

  const auto s3 = central_quotient_profile(make_group("sym:3"));
  EXPECT_EQ(s3.quotient_order, 6u);
  EXPECT_FALSE(s3.is_p_group);
}

TEST(Structure, CentralCharacteristicSubgroup) {
  const Group c99 = abelian({9, 9});
  const auto aut99 = automorphism_group(c99);
  const Subgroup k = central_characteristic_subgroup(c99, aut99.generators);
  EXPECT_EQ(k.size(), 9u);
  for (Elem x : k.members()) EXPECT_EQ(c99.power(x, 3), 0u);

  const Group he = extraspecial(3, true);
  const auto autHe = automorphism_group(he);
  const Subgroup z = central_characteristic_subgroup(he, autHe.generators);
  EXPECT_EQ(z.members(), center(he).members());

  EXPECT_TRUE(throws_kind(ErrorKind::IsElementaryAbelian, [] {
    const Group g = abelian({3, 3});
    central_characteristic_subgroup(g, std::vector<Perm>{});
  }));
}

TEST(Structure, NormalityHelpers) {
  const Group s4 = make_group("sym:4");
  EXPECT_TRUE(is_normal(s4, derived_subgroup(s4)));
  EXPECT_FALSE(is_normal(s4, sylow(s4, 3).subgroup));
  EXPECT_EQ(normalizer(s4, sylow(s4, 3).subgroup).size(), 6u);
}
