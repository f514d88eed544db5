#include "ksphere/catalogue.hpp"
#include "ksphere/errors.hpp"
#include "ksphere/group.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ksphere;

namespace {

std::vector<std::size_t> sizes(const ConjugacyClasses& cc) { return cc.class_sizes; }

} // namespace

TEST(BuildGroup, TrivialGroup) {
  auto g = build_group(GroupSpec::cyclic(1));
  EXPECT_EQ(g.order, 1u);
  EXPECT_EQ(g.product, std::vector<Element>{0});
  EXPECT_EQ(check_group_axioms(g), "");
}

TEST(BuildGroup, CyclicFourIsAdditionModFour) {
  auto g = build_group(GroupSpec::cyclic(4));
  ASSERT_EQ(g.order, 4u);
  for (Element i = 0; i < 4; ++i)
    for (Element j = 0; j < 4; ++j) EXPECT_EQ(g.mul(i, j), (i + j) % 4);
}

TEST(BuildGroup, PermutationGeneratorsGiveS3) {
  auto g = build_group(GroupSpec::permutations(3, {{1, 0, 2}, {1, 2, 0}}));
  EXPECT_EQ(g.order, 6u);
  EXPECT_FALSE(g.is_abelian());
  auto s3 = build_group(GroupSpec::symmetric(3));
  EXPECT_EQ(conjugacy_classes(g).class_sizes, conjugacy_classes(s3).class_sizes);
}

TEST(BuildGroup, FamilyOrders) {
  EXPECT_EQ(build_group(GroupSpec::dihedral(4)).order, 8u);
  EXPECT_EQ(build_group(GroupSpec::quaternion()).order, 8u);
  EXPECT_EQ(build_group(GroupSpec::symmetric(4)).order, 24u);
  EXPECT_EQ(build_group(GroupSpec::alternating(5)).order, 60u);
  EXPECT_EQ(build_group(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::dihedral(3))).order, 12u);
}

TEST(BuildGroup, QuaternionHasSingleInvolution) {
  auto g = build_group(GroupSpec::quaternion());
  std::size_t involutions = 0;
  for (Element x = 0; x < g.order; ++x) involutions += oracle::element_order(g, x) == 2;
  EXPECT_EQ(involutions, 1u);
}

TEST(BuildGroup, Errors) {
  EXPECT_THROW(build_group(GroupSpec::permutations(3, {{0, 0, 1}})), InputError);
  EXPECT_THROW(build_group(GroupSpec::permutations(3, {{0, 1, 3}})), InputError);
  EXPECT_THROW(build_group(GroupSpec::symmetric(7)), InputError);
  EXPECT_THROW(build_group(GroupSpec::cyclic(0)), InputError);
  EXPECT_THROW(build_group(GroupSpec::cyclic(100), 50), InputError);
  EXPECT_THROW(build_group(GroupSpec::symmetric(6), 100), InputError);
}

TEST(BuildGroup, Deterministic) {
  for (const auto& spec : builtin_groups(24)) EXPECT_EQ(build_group(spec), build_group(spec));
}

TEST(BuildGroup, AxiomsForCatalogue) {
  for (const auto& spec : builtin_groups(64)) {
    auto g = build_group(spec);
    EXPECT_EQ(g.order, spec_order(spec)) << spec.label();
    EXPECT_EQ(check_group_axioms(g), "") << spec.label();
  }
}

TEST(BuildGroup, AxiomCheckCatchesCorruption) {
  auto g = build_group(GroupSpec::cyclic(5));
  g.product[2 * 5 + 3] = 1;
  EXPECT_NE(check_group_axioms(g), "");
}

TEST(Classes, Examples) {
  EXPECT_EQ(sizes(conjugacy_classes(build_group(GroupSpec::symmetric(3)))),
            (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(sizes(conjugacy_classes(build_group(GroupSpec::dihedral(4)))),
            (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  auto ab = conjugacy_classes(build_group(GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(6))));
  for (auto s : ab.class_sizes) EXPECT_EQ(s, 1u);
}

TEST(Classes, MatchBruteForceAndOrdering) {
  for (const auto& spec : builtin_groups(64)) {
    auto g = build_group(spec);
    auto cc = conjugacy_classes(g);
    std::set<std::set<Element>> got;
    for (const auto& c : cc.classes) got.insert(std::set<Element>(c.begin(), c.end()));
    EXPECT_EQ(got, oracle::classes(g)) << spec.label();
    ASSERT_EQ(cc.classes[0], std::vector<Element>{0});
    for (std::size_t l = 0; l < cc.count(); ++l) {
      EXPECT_EQ(cc.representatives[l], cc.classes[l].front());
      EXPECT_EQ(cc.element_orders[l], oracle::element_order(g, cc.representatives[l]));
      for (auto x : cc.classes[l]) EXPECT_EQ(cc.class_of[x], l);
      if (l > 0) {
        auto key = [&](std::size_t i) {
          return std::tuple(cc.element_orders[i], cc.class_sizes[i], cc.representatives[i]);
        };
        EXPECT_LT(key(l - 1), key(l)) << spec.label();
      }
    }
  }
}

TEST(Sign, ValidationAndSurjections) {
  auto g = build_group(GroupSpec::cyclic(4));
  EXPECT_THROW(SignHomomorphism(g, {1, 1, 1, 1}), InputError);
  EXPECT_THROW(SignHomomorphism(g, {1, -1, -1, 1}), InputError);
  EXPECT_THROW(SignHomomorphism(g, {1, -1, 1}), InputError);
  EXPECT_NO_THROW(SignHomomorphism(g, {1, -1, 1, -1}));
  EXPECT_THROW(SignHomomorphism::from_generator_signs(g, {1}), InputError);
  EXPECT_THROW(SignHomomorphism::from_generator_signs(build_group(GroupSpec::cyclic(3)), {-1}),
               InputError);
}

TEST(Sign, CountMatchesIndexTwoSubgroups) {
  // Surjections onto {+1,-1} are the non-zero maps G/S -> F_2, where S is
  // generated by all squares and commutators; so there are [G:S] - 1.
  for (const auto& spec : builtin_groups(48)) {
    auto g = build_group(spec);
    std::set<Element> s{g.identity};
    for (Element x = 0; x < g.order; ++x) {
      s.insert(g.mul(x, x));
      for (Element y = 0; y < g.order; ++y) s.insert(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    }
    for (bool grown = true; grown;) {
      grown = false;
      for (auto a : std::vector<Element>(s.begin(), s.end()))
        for (auto b : std::vector<Element>(s.begin(), s.end()))
          grown |= s.insert(g.mul(a, b)).second;
    }
    EXPECT_EQ(all_sign_homomorphisms(g).size(), g.order / s.size() - 1) << spec.label();
  }
  auto c2cube = build_group(GroupSpec::product(
      GroupSpec::cyclic(2), GroupSpec::product(GroupSpec::cyclic(2), GroupSpec::cyclic(2))));
  EXPECT_EQ(all_sign_homomorphisms(c2cube).size(), 7u);
  EXPECT_TRUE(all_sign_homomorphisms(build_group(GroupSpec::alternating(4))).empty());
}

TEST(Kernel, Examples) {
  auto c2 = build_group(GroupSpec::cyclic(2));
  auto k = kernel_embedding(c2, sign_convention(GroupSpec::cyclic(2), c2, "onto-pm1"));
  EXPECT_EQ(k.subgroup.order, 1u);
  EXPECT_EQ(coset_representatives(c2, SignHomomorphism(c2, {1, -1})), std::vector<Element>{1});

  auto s3 = build_group(GroupSpec::symmetric(3));
  auto sgn = sign_convention(GroupSpec::symmetric(3), s3, "sign");
  auto h = kernel_embedding(s3, sgn);
  EXPECT_EQ(h.subgroup.order, 3u);
  EXPECT_TRUE(h.subgroup.is_abelian());
  auto outside = coset_representatives(s3, sgn);
  ASSERT_EQ(outside.size(), 3u);
  for (auto t : outside) EXPECT_EQ(oracle::element_order(s3, t), 2u);

  auto d4 = build_group(GroupSpec::dihedral(4));
  auto refl = sign_convention(GroupSpec::dihedral(4), d4, "reflection-sign");
  auto c4 = kernel_embedding(d4, refl);
  EXPECT_EQ(c4.subgroup.order, 4u);
  EXPECT_TRUE(c4.subgroup.is_abelian());
  EXPECT_EQ(c4.subgroup.exponent(), 4u);
  auto reflections = coset_representatives(d4, refl);
  ASSERT_EQ(reflections.size(), 4u);
  for (auto s : reflections) EXPECT_EQ(oracle::element_order(d4, s), 2u);
}

TEST(Kernel, EmbeddingInvariants) {
  for (const auto& spec : builtin_groups(32)) {
    auto g = build_group(spec);
    for (const auto& lambda : all_sign_homomorphisms(g)) {
      auto emb = kernel_embedding(g, lambda);
      ASSERT_EQ(emb.subgroup.order * 2, g.order);
      EXPECT_EQ(check_group_axioms(emb.subgroup), "");
      EXPECT_TRUE(std::is_sorted(emb.inclusion.begin(), emb.inclusion.end()));
      for (Element a = 0; a < emb.subgroup.order; ++a) {
        EXPECT_EQ(lambda(emb.inclusion[a]), 1);
        for (Element b = 0; b < emb.subgroup.order; ++b)
          EXPECT_EQ(emb.inclusion[emb.subgroup.mul(a, b)], g.mul(emb.inclusion[a], emb.inclusion[b]));
      }
      auto outside = coset_representatives(g, lambda);
      EXPECT_EQ(outside.size(), emb.subgroup.order);
      for (auto b : outside) EXPECT_EQ(lambda(b), -1);
    }
  }
}

TEST(Kernel, NonSubgroupRejected) {
  auto s3 = build_group(GroupSpec::symmetric(3));
  EXPECT_THROW(subgroup_embedding(s3, {0, 1, 2}), InputError);
}

TEST(Conventions, NamesAndErrors) {
  auto q = GroupSpec::quaternion();
  auto g = build_group(q);
  EXPECT_EQ(sign_conventions(q), (std::vector<std::string>{"i-kernel", "j-kernel", "k-kernel"}));
  for (const auto& name : sign_conventions(q))
    EXPECT_EQ(kernel_embedding(g, sign_convention(q, g, name)).subgroup.exponent(), 4u);
  EXPECT_THROW(sign_convention(q, g, "sign"), InputError);
  auto p = GroupSpec::product(GroupSpec::symmetric(3), GroupSpec::cyclic(2));
  auto pg = build_group(p);
  EXPECT_EQ(p.label(), "S3xC2");
  EXPECT_NO_THROW(sign_convention(p, pg, "left:sign"));
  EXPECT_NO_THROW(sign_convention(p, pg, "right:onto-pm1"));
}

TEST(Catalogue, AbelianGroupCounts) {
  // number of abelian groups of order n up to isomorphism, n = 1..32
  const std::vector<std::size_t> expected = {1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5,
                                             1, 2, 1, 2, 1, 1, 1, 3, 2, 1, 3, 2, 1, 1, 1, 7};
  auto groups = abelian_groups(32);
  std::vector<std::size_t> counts(32, 0);
  for (const auto& spec : groups) ++counts[spec_order(spec) - 1];
  EXPECT_EQ(counts, expected);
  for (const auto& spec : groups) EXPECT_TRUE(build_group(spec).is_abelian()) << spec.label();
}

TEST(Catalogue, SortedAndDistinctLabels) {
  auto groups = builtin_groups(64);
  std::set<std::string> labels;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    EXPECT_TRUE(labels.insert(groups[i].label()).second) << groups[i].label();
    if (i > 0) EXPECT_LE(spec_order(groups[i - 1]), spec_order(groups[i]));
  }
}
