#include <gtest/gtest.h>

#include <random>

#include "hk/error.hpp"
#include "hk/monomial.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hk;
using namespace hk::testing;

namespace {

// Every pair, not just generators.
bool brute_force_linear(const ClassFunction& phi) {
  const auto& H = *phi.group();
  if (phi.degree() != Cyclotomic(1)) return false;
  for (std::size_t x = 0; x < H.order(); ++x) {
    for (std::size_t y = 0; y < H.order(); ++y) {
      if (phi.at_element(x) * phi.at_element(y) != phi.at_element(H.mul(x, y))) return false;
    }
  }
  return true;
}

// Independent recomputation with the transversal induction formula.
ClassFunction oracle_sum(const MonomialDecomposition& d) {
  ClassFunction s = ClassFunction::trivial(d.group) * Cyclotomic(d.residual_trivial);
  if (d.leading) s += transversal_induce(d.leading->linear_char, d.group) * Cyclotomic(d.leading->coefficient);
  for (const auto& t : d.terms) {
    EXPECT_TRUE(brute_force_linear(t.linear_char));
    EXPECT_GE(t.coefficient, 0);
    s += transversal_induce(t.linear_char, d.group) * Cyclotomic(t.coefficient);
  }
  return s;
}

std::vector<Rational> coords(const ClassFunction& f) { return decompose(f, *character_table(f.group())).coeffs; }

}  // namespace

TEST(Monomial, UvdwWholeGroupIsEmpty) {
  auto G = s3();
  auto d = decompose_uvdw(G, whole(*G));
  EXPECT_TRUE(d.terms.empty());
  EXPECT_EQ(d.residual_trivial, 1);
}

TEST(Monomial, UvdwS3Regular) {
  auto G = s3();
  auto d = decompose_uvdw(G, trivial_subgroup(*G));
  EXPECT_EQ(d.target, ClassFunction::regular(G));
  EXPECT_EQ(oracle_sum(d), d.target);
  // 1 + sgn + two inductions from A3 that both equal the 2-dim character
  std::size_t from_a3 = 0;
  for (const auto& t : d.terms) from_a3 += t.subgroup->order() == 3;
  EXPECT_EQ(from_a3, 2u);
}

TEST(Monomial, UvdwS4PointStabilizer) {
  auto G = s4();
  auto S3 = generate(*G, {*G->index_of(Perm::from_cycles(4, "(1 2 3)")), *G->index_of(Perm::from_cycles(4, "(1 2)"))});
  auto d = decompose_uvdw(G, S3);
  EXPECT_EQ(oracle_sum(d), d.target);
  EXPECT_EQ(d.target - ClassFunction::trivial(G), fixed_points(G) - ClassFunction::trivial(G));
}

TEST(Monomial, UvdwAllSubgroups) {
  for (auto G : {s4(), sl23(), d6(), q8(), s3xc2()}) {
    for (auto& H : subgroups(*G)) {
      auto d = decompose_uvdw(G, H);
      EXPECT_EQ(d.residual_trivial, 1);
      EXPECT_EQ(inner_product_q(d.target, ClassFunction::trivial(G)), 1);
      EXPECT_EQ(oracle_sum(d), d.target) << G->name() << " |H|=" << H->order();
    }
  }
}

TEST(Monomial, UvdwRejectsNonSolvable) {
  auto G = a5();
  EXPECT_THROW(decompose_uvdw(G, trivial_subgroup(*G)), Error);
}

TEST(Monomial, UvdwLevel) {
  auto G = s3();
  auto d = decompose_uvdw_level(G, trivial_subgroup(*G), 1);
  ASSERT_TRUE(d.leading.has_value());
  EXPECT_EQ(d.leading->subgroup->order(), 3u);
  EXPECT_EQ(coords(induce(d.leading->linear_char, G)), (std::vector<Rational>{1, 1, 0}));
  EXPECT_EQ(oracle_sum(d), d.target);

  auto e = decompose_uvdw_level(G, trivial_subgroup(*G), 5);
  EXPECT_TRUE(e.terms.empty());
  EXPECT_EQ(e.leading->subgroup->order(), 1u);

  auto S4 = s4();
  auto H = generate(*S4, {*S4->index_of(Perm::from_cycles(4, "(1 2)"))});
  EXPECT_TRUE(decompose_uvdw_level(S4, H, 1).verify());
  for (auto& K : subgroups(*S4)) {
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(oracle_sum(decompose_uvdw_level(S4, K, i)), induce(ClassFunction::trivial(K), S4));
  }
}

TEST(Monomial, TwistCertificate) {
  auto G = s3();
  auto t = character_table(G);
  auto A3 = derived_series(*G).term(1);
  auto d = decompose_uvdw(G, A3);
  auto same = twist_certificate(d, (*t)[0]);
  EXPECT_EQ(same.target, d.target);
  EXPECT_EQ(same.residual_trivial, 1);
  auto sgn = (*t)[1];
  auto tw = twist_certificate(d, sgn);
  EXPECT_EQ(tw.target, twist(d.target, sgn));
  EXPECT_EQ(oracle_sum(tw), tw.target);
  EXPECT_THROW(twist_certificate(d, (*t)[2]), Error);

  // term-wise commutation on larger groups
  for (auto H : {s4(), sl23()}) {
    auto tH = character_table(H);
    for (auto& K : subgroups(*H)) {
      auto dk = decompose_uvdw(H, K);
      for (std::size_t l : tH->linear_indices()) EXPECT_TRUE(twist_certificate(dk, (*tH)[l]).verify());
    }
  }
}

TEST(Monomial, PairingLevelsDichotomy) {
  for (auto G : {s3(), s4(), sl23(), q8(), d6()}) {
    auto len = derived_series(*G).length();
    for (auto& H : subgroups(*G)) {
      auto tH = character_table(H);
      for (std::size_t l : tH->linear_indices()) {
        for (std::size_t i = 1; i <= len + 1; ++i) {
          auto r = pairing_levels(G, H, (*tH)[l], i);
          EXPECT_TRUE(r.holds()) << G->name() << " |H|=" << H->order() << " i=" << i;
        }
      }
    }
  }
}

TEST(Monomial, PairingLevelsFallbackBranch) {
  auto G = s3();
  auto A3 = derived_series(*G).term(1);
  auto psi = (*character_table(A3))[1];
  auto r = pairing_levels(G, A3, psi, 1);
  EXPECT_FALSE(r.trivial_on_intersection);
  EXPECT_TRUE(r.fallback_holds);
}

TEST(Monomial, LevelIdentity) {
  auto G = s3();
  auto r1 = level_identity(G, 1);
  EXPECT_EQ(coords(r1.lhs), (std::vector<Rational>{1, 1, 0}));
  EXPECT_TRUE(r1.unweighted_holds);
  EXPECT_TRUE(r1.weighted_holds);
  // Ind_{e}^{S3} 1 is the regular character, in which the 2-dim character has multiplicity 2
  auto r2 = level_identity(G, 2);
  EXPECT_TRUE(r2.weighted_holds);
  EXPECT_FALSE(r2.unweighted_holds);
  for (auto H : {s4(), sl23(), d6(), q8()}) {
    for (std::size_t i = 0; i <= derived_series(*H).length(); ++i) EXPECT_TRUE(level_identity(H, i).weighted_holds);
  }
}

TEST(Monomial, MGroups) {
  EXPECT_TRUE(is_m_group(q8()).is_m_group);
  EXPECT_TRUE(is_m_group(cyclic(6)).is_m_group);
  EXPECT_TRUE(is_m_group(klein()).is_m_group);
  EXPECT_TRUE(is_m_group(s4()).is_m_group);
  auto r = is_m_group(sl23());
  EXPECT_FALSE(r.is_m_group);
  auto t = character_table(sl23());
  std::vector<std::size_t> expect;
  for (std::size_t i = 0; i < t->size(); ++i) {
    if (t->degrees()[i] == 2) expect.push_back(i);
  }
  EXPECT_EQ(r.non_monomial, expect);
  auto Q = q8();
  auto tq = character_table(Q);
  auto w = monomial_witness((*tq)[4]);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->subgroup->order(), 4u);
  EXPECT_EQ(transversal_induce(w->linear_char, Q), (*tq)[4]);
}

TEST(Monomial, BrauerWitnesses) {
  for (auto G : {s3(), s4(), sl23(), q8()}) {
    auto t = character_table(G);
    for (std::size_t c = 0; c < t->size(); ++c) {
      auto w = brauer_witness(G, c);
      EXPECT_TRUE(w.verified);
      ClassFunction sum = ClassFunction::zero(G);
      for (const auto& term : w.terms) {
        EXPECT_TRUE(is_integer(term.coefficient));
        EXPECT_TRUE(brute_force_linear(term.linear_char));
        sum += transversal_induce(term.linear_char, G) * Cyclotomic(term.coefficient);
      }
      EXPECT_EQ(sum, (*t)[c]);
    }
  }
  auto A5 = a5();
  for (std::size_t c = 0; c < 5; ++c) EXPECT_TRUE(brauer_witness(A5, c, 3, 60).verified);
}

TEST(Monomial, ConeSingletonMember) {
  auto G = s4();
  auto fam = monomial_family(G);
  auto res = cone_membership(fam.coords[3], fam);
  EXPECT_TRUE(res.member);
  EXPECT_TRUE(res.verified);
}

TEST(Monomial, ConeRegMinusOne) {
  for (auto G : {s3(), q8(), sl23(), s4()}) {
    auto fam = monomial_family(G);
    auto reg = coords(ClassFunction::regular(G) - ClassFunction::trivial(G));
    EXPECT_TRUE(dual_nonnegative(reg, fam));
    auto res = cone_membership(reg, fam);
    EXPECT_TRUE(res.member);
    std::vector<Rational> sum(reg.size(), 0);
    for (auto& [f, c] : res.certificate) {
      EXPECT_GT(c, 0);
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c * fam.coords[f][i];
    }
    EXPECT_EQ(sum, reg);
  }
}

TEST(Monomial, ConeOneMinusSign) {
  auto G = s3();
  auto fam = monomial_family(G);
  std::vector<Rational> psi{1, -1, 0};
  auto res = cone_membership(psi, fam);
  EXPECT_FALSE(res.member);
  ASSERT_TRUE(res.separating_member.has_value());
  EXPECT_LT(res.separating_value, 0);
  EXPECT_FALSE(dual_nonnegative(psi, fam));
}

TEST(Monomial, ConeAgreesWithDualOnRandomVirtualCharacters) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-2, 4);
  for (auto G : {s3(), d4(), q8(), a4(), d6(), cyclic(6)}) {
    auto fam = monomial_family(G);
    const auto r = character_table(G)->size();
    for (int t = 0; t < 40; ++t) {
      std::vector<Rational> psi(r);
      for (auto& c : psi) c = coeff(rng);
      auto res = cone_membership(psi, fam);
      EXPECT_EQ(res.member, dual_nonnegative(psi, fam));
      EXPECT_TRUE(res.verified);
    }
  }
}

TEST(Monomial, ConeFarkasWhenNoMemberSeparates) {
  // SL(2,3): the 2-dim characters are not monomial, so a 2-dim character
  // has nonnegative pairings with every monomial character yet may lie outside the cone
  auto G = sl23();
  auto fam = monomial_family(G);
  auto t = character_table(G);
  for (std::size_t c = 0; c < t->size(); ++c) {
    std::vector<Rational> psi(t->size(), 0);
    psi[c] = 1;
    auto res = cone_membership(psi, fam);
    EXPECT_TRUE(res.verified);
    EXPECT_EQ(res.member, t->degrees()[c] != 2);
    if (!res.member) {
      EXPECT_FALSE(res.separating_member.has_value());
      EXPECT_EQ(res.farkas.size(), t->size());
    }
  }
}

TEST(Monomial, FergusonIsaacsSpotCheck) {
  for (auto G : {s4(), sl23(), d6(), q8()}) {
    auto fam = monomial_family(G);
    auto t = character_table(G);
    for (std::size_t c = 0; c < t->size(); ++c) {
      std::vector<Rational> psi(t->size(), 0);
      psi[c] = 1;
      if (cone_membership(psi, fam).member) EXPECT_TRUE(monomial_witness((*t)[c]).has_value());
    }
  }
}
