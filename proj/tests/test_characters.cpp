#include "ksphere/catalogue.hpp"
#include "ksphere/characters.hpp"
#include "ksphere/errors.hpp"
#include "ksphere/setting.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ksphere;

namespace {

constexpr double kTol = 1e-9;

TablePtr table_of(const GroupSpec& spec, unsigned modulus = 0) {
  return character_table(std::make_shared<const GroupTable>(build_group(spec)), modulus);
}

std::vector<std::int64_t> unit(std::size_t n, std::size_t i) {
  std::vector<std::int64_t> v(n, 0);
  v[i] = 1;
  return v;
}

} // namespace

TEST(CharacterTable, CyclicThree) {
  auto t = table_of(GroupSpec::cyclic(3));
  ASSERT_EQ(t->size(), 3u);
  auto one = Cyclotomic::integer(3, 1);
  auto w = Cyclotomic::root_of_unity(3, 1);
  auto w2 = Cyclotomic::root_of_unity(3, 2);
  EXPECT_EQ(t->irreducible(0).values, (std::vector<Cyclotomic>{one, one, one}));
  EXPECT_EQ(t->irreducible(1).values, (std::vector<Cyclotomic>{one, w, w2}));
  EXPECT_EQ(t->irreducible(2).values, (std::vector<Cyclotomic>{one, w2, w}));
}

TEST(CharacterTable, SymmetricThree) {
  auto t = table_of(GroupSpec::symmetric(3));
  EXPECT_EQ(t->degrees(), (std::vector<std::int64_t>{1, 1, 2}));
  const auto& cc = t->classes();
  EXPECT_EQ(cc.class_sizes, (std::vector<std::size_t>{1, 3, 2}));
  const auto& chi = t->irreducible(2);
  EXPECT_EQ(chi[0].as_integer(), 2);
  EXPECT_EQ(chi[1].as_integer(), 0);
  EXPECT_EQ(chi[2].as_integer(), -1);
  // trivial first, then the sign character
  EXPECT_EQ(t->irreducible(1)[1].as_integer(), -1);
}

TEST(CharacterTable, QuaternionDegrees) {
  EXPECT_EQ(table_of(GroupSpec::quaternion())->degrees(), (std::vector<std::int64_t>{1, 1, 1, 1, 2}));
}

TEST(CharacterTable, DegreesOfLargerGroups) {
  EXPECT_EQ(table_of(GroupSpec::symmetric(4))->degrees(), (std::vector<std::int64_t>{1, 1, 2, 3, 3}));
  EXPECT_EQ(table_of(GroupSpec::alternating(5))->degrees(),
            (std::vector<std::int64_t>{1, 3, 3, 4, 5}));
  EXPECT_EQ(table_of(GroupSpec::symmetric(5))->degrees(),
            (std::vector<std::int64_t>{1, 1, 4, 4, 5, 5, 6}));
}

TEST(CharacterTable, NumericOrthogonalityAndCounts) {
  for (const auto& spec : builtin_groups(48)) {
    auto t = table_of(spec);
    const auto& g = t->group();
    ASSERT_EQ(t->size(), oracle::class_count(g)) << spec.label();
    std::vector<std::vector<oracle::cplx>> rows;
    std::int64_t squares = 0;
    for (std::size_t i = 0; i < t->size(); ++i) {
      rows.push_back(oracle::pointwise(t->irreducible(i)));
      squares += t->degrees()[i] * t->degrees()[i];
      if (i > 0) EXPECT_LE(t->degrees()[i - 1], t->degrees()[i]);
    }
    EXPECT_EQ(squares, static_cast<std::int64_t>(g.order)) << spec.label();
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j)
        EXPECT_LT(std::abs(oracle::inner(rows[i], rows[j]) - (i == j ? 1.0 : 0.0)), kTol)
            << spec.label() << " " << i << " " << j;
    // chi(x^-1) = conj(chi(x))
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (Element x = 0; x < g.order; ++x)
        EXPECT_LT(std::abs(rows[i][g.inv(x)] - std::conj(rows[i][x])), kTol);
  }
}

TEST(CharacterTable, OrderIndependentOfModulus) {
  for (const auto& spec : {GroupSpec::cyclic(3), GroupSpec::cyclic(5), GroupSpec::dihedral(5),
                           GroupSpec::quaternion(), GroupSpec::cyclic(12)}) {
    auto a = table_of(spec);
    auto b = table_of(spec, a->modulus() * 2);
    ASSERT_EQ(a->size(), b->size());
    for (std::size_t i = 0; i < a->size(); ++i)
      for (std::size_t l = 0; l < a->classes().count(); ++l)
        EXPECT_EQ(a->irreducible(i)[l].embed(b->modulus()), b->irreducible(i)[l]) << spec.label();
  }
  EXPECT_THROW(table_of(GroupSpec::cyclic(4), 6), InputError);
}

TEST(CharacterTable, Deterministic) {
  for (const auto& spec : builtin_groups(24)) {
    auto a = table_of(spec);
    auto b = table_of(spec);
    ASSERT_EQ(a->size(), b->size());
    for (std::size_t i = 0; i < a->size(); ++i)
      EXPECT_EQ(a->irreducible(i).values, b->irreducible(i).values) << spec.label();
  }
}

TEST(InnerProduct, Examples) {
  auto t = table_of(GroupSpec::symmetric(3));
  const auto m = t->modulus();
  for (std::size_t i = 0; i < t->size(); ++i)
    EXPECT_EQ(inner_product(t->irreducible(i), t->irreducible(i)), Cyclotomic::integer(m, 1));
  auto reg = VirtualCharacter::regular(t).values();
  EXPECT_EQ(inner_product(t->irreducible(0), reg), Cyclotomic::integer(m, 1));
  EXPECT_EQ(inner_product(t->irreducible(2), reg), Cyclotomic::integer(m, 2));
  auto other = table_of(GroupSpec::cyclic(6));
  EXPECT_THROW(inner_product(t->irreducible(0), other->irreducible(0)), InputError);
}

TEST(Decompose, RejectsNonCharacters) {
  auto t = table_of(GroupSpec::symmetric(3));
  auto delta = ClassFunction::constant(t->space(), 0);
  delta[0] = Cyclotomic::integer(t->modulus(), 1);
  EXPECT_THROW(t->decompose(delta), InternalError);
}

TEST(Tensor, CachedProductsMatchPointwise) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const auto& spec : {GroupSpec::symmetric(4), GroupSpec::quaternion(), GroupSpec::dihedral(6),
                           GroupSpec::cyclic(10)}) {
    auto t = table_of(spec);
    for (int trial = 0; trial < 20; ++trial) {
      auto a = VirtualCharacter::zero(t), b = VirtualCharacter::zero(t);
      for (std::size_t i = 0; i < t->size(); ++i)
        if (d(rng) > 0) a.coefficients[i] = d(rng);
      b.coefficients[static_cast<std::size_t>(trial) % t->size()] = 1 + trial % 2;
      auto expected = t->decompose(a.values() * b.values());
      EXPECT_EQ(tensor(a, b).coefficients, expected) << spec.label();
      EXPECT_EQ(tensor(b, a).coefficients, expected) << spec.label();
    }
  }
}

class IndexTwo : public ::testing::Test {
protected:
  static IndexTwoSetting s3() { return make_setting(GroupSpec::symmetric(3), "sign"); }
};

TEST_F(IndexTwo, RestrictExamples) {
  auto s = s3();
  auto n = s.kernel_table->size();
  auto triv = restrict(VirtualCharacter::trivial(s.table), s.kernel, s.kernel_table);
  EXPECT_EQ(triv.coefficients, unit(n, 0));
  auto two = restrict(VirtualCharacter::irreducible(s.table, 2), s.kernel, s.kernel_table);
  EXPECT_EQ(two.coefficients, (std::vector<std::int64_t>{0, 1, 1}));
  auto lam = restrict(VirtualCharacter::irreducible(s.table, lambda_character(s)), s.kernel,
                      s.kernel_table);
  EXPECT_EQ(lam.coefficients, unit(n, 0));
}

TEST_F(IndexTwo, KernelCharacterOneIsOmega) {
  auto s = s3();
  const auto& h = s.kernel.subgroup;
  // chi_1 sends the smallest non-identity element of H to omega
  Element c = 1;
  auto value = s.kernel_table->irreducible(1)[s.kernel_table->classes().class_of[c]];
  EXPECT_EQ(value, Cyclotomic::root_of_unity(3, 1).embed(s.kernel_table->modulus()))
      << h.element_labels[c];
}

TEST_F(IndexTwo, InduceExamples) {
  auto s = s3();
  auto lam = lambda_character(s);
  auto ind_triv = induce(VirtualCharacter::trivial(s.kernel_table), s.kernel, s.table);
  auto expected = VirtualCharacter::trivial(s.table) + VirtualCharacter::irreducible(s.table, lam);
  EXPECT_EQ(ind_triv, expected);
  auto ind_w = induce(VirtualCharacter::irreducible(s.kernel_table, 1), s.kernel, s.table);
  EXPECT_EQ(ind_w, VirtualCharacter::irreducible(s.table, 2));
  auto ind_reg = induce(VirtualCharacter::regular(s.kernel_table), s.kernel, s.table);
  EXPECT_EQ(ind_reg, VirtualCharacter::regular(s.table));
}

TEST_F(IndexTwo, TwistExamples) {
  auto s = s3();
  auto w = VirtualCharacter::irreducible(s.kernel_table, 1);
  auto w2 = VirtualCharacter::irreducible(s.kernel_table, 2);
  for (auto h : s.kernel.inclusion) EXPECT_EQ(conjugate_twist(w, *s.group, s.kernel, h), w);
  EXPECT_EQ(conjugate_twist(w, *s.group, s.kernel, s.group->identity), w);
  for (auto t : s.outside) EXPECT_EQ(conjugate_twist(w, *s.group, s.kernel, t), w2);
  EXPECT_THROW(conjugate_twist(w, *s.group, s.kernel, 99), InputError);
}

TEST_F(IndexTwo, OrbitExamples) {
  auto s = s3();
  auto o = g_orbits_on_irr(s);
  EXPECT_EQ(o.orbits, (std::vector<std::vector<std::size_t>>{{0}, {1, 2}}));
  EXPECT_EQ(o.isotropy, (std::vector<Isotropy>{Isotropy::whole_group, Isotropy::kernel}));
  EXPECT_EQ(o.representatives, (std::vector<std::size_t>{0, 1}));

  auto c6 = make_setting(GroupSpec::cyclic(6), "onto-pm1");
  for (auto iso : g_orbits_on_irr(c6).isotropy) EXPECT_EQ(iso, Isotropy::whole_group);

  // D4: reflections fix the characters of C4 with real values and swap the
  // two faithful ones
  auto d4 = make_setting(GroupSpec::dihedral(4), "reflection-sign");
  auto od = g_orbits_on_irr(d4);
  const auto& kt = *d4.kernel_table;
  for (std::size_t o = 0; o < od.orbits.size(); ++o)
    for (auto i : od.orbits[o]) {
      bool real = true;
      for (const auto& v : kt.irreducible(i).values) real &= v.is_rational();
      EXPECT_EQ(real, od.isotropy[o] == Isotropy::whole_group);
    }
  EXPECT_EQ(od.orbits.size(), 3u);
}

TEST_F(IndexTwo, OrbitRequiresOutsideElement) {
  auto s = s3();
  EXPECT_THROW(g_orbits_on_irr(s, s.group->identity), InputError);
}

// Restriction, induction and twist against element-level formulas, for
// every built-in group of order <= 32 and every lambda.
TEST(IndexTwoOracles, AgreeWithElementFormulas) {
  for (const auto& spec : builtin_groups(32)) {
    auto g = build_group(spec);
    auto table = character_table(std::make_shared<const GroupTable>(g));
    for (const auto& lambda : all_sign_homomorphisms(g)) {
      auto s = make_setting(table, lambda);
      const auto& emb = s.kernel;
      const auto& kt = *s.kernel_table;
      // restriction
      for (std::size_t p = 0; p < table->size(); ++p) {
        auto full = oracle::pointwise(table->irreducible(p));
        std::vector<oracle::cplx> sub(emb.subgroup.order);
        for (Element h = 0; h < sub.size(); ++h) sub[h] = full[emb.inclusion[h]];
        auto expected = oracle::decompose(kt, sub);
        auto got = restrict(VirtualCharacter::irreducible(table, p), emb, s.kernel_table);
        EXPECT_EQ(std::vector<long>(got.coefficients.begin(), got.coefficients.end()), expected)
            << spec.label();
      }
      for (std::size_t c = 0; c < kt.size(); ++c) {
        auto chi = oracle::pointwise(kt.irreducible(c));
        // induction by the sum over all of G
        auto ind = oracle::induce(g, emb, chi);
        auto got = induce(VirtualCharacter::irreducible(s.kernel_table, c), emb, table);
        EXPECT_EQ(std::vector<long>(got.coefficients.begin(), got.coefficients.end()),
                  oracle::decompose(*table, ind))
            << spec.label();
        // twist by b: h -> chi(b^-1 h b)
        auto b = s.b();
        std::vector<oracle::cplx> tw(emb.subgroup.order);
        for (Element h = 0; h < tw.size(); ++h) {
          auto y = g.mul(g.mul(g.inv(b), emb.inclusion[h]), b);
          tw[h] = chi[static_cast<std::size_t>(emb.preimage[y])];
        }
        auto twisted = conjugate_twist(VirtualCharacter::irreducible(s.kernel_table, c), g, emb, b);
        EXPECT_EQ(std::vector<long>(twisted.coefficients.begin(), twisted.coefficients.end()),
                  oracle::decompose(kt, tw))
            << spec.label();
        EXPECT_EQ(g_orbits_on_irr(s).twist[c],
                  static_cast<std::size_t>(std::find(twisted.coefficients.begin(),
                                                     twisted.coefficients.end(), 1) -
                                           twisted.coefficients.begin()));
      }
    }
  }
}

TEST(VirtualCharacters, Arithmetic) {
  auto t = table_of(GroupSpec::symmetric(3));
  auto a = VirtualCharacter::irreducible(t, 1);
  auto b = VirtualCharacter::irreducible(t, 2);
  EXPECT_EQ((a + b).degree(), 3);
  EXPECT_EQ((a - b).degree(), -1);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((2 * b).degree(), 4);
  EXPECT_EQ(VirtualCharacter::regular(t).degree(), 6);
  EXPECT_EQ(tensor(b, b).coefficients, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(VirtualCharacter::from_class_function(t, b.values()), b);
  auto other = table_of(GroupSpec::symmetric(3));
  EXPECT_THROW(a + VirtualCharacter::irreducible(other, 1), InputError);
  EXPECT_THROW(VirtualCharacter::irreducible(t, 3), InputError);
}
