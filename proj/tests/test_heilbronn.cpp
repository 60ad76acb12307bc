#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hk/error.hpp"
#include "hk/heilbronn.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hk;
using namespace hk::testing;

namespace {

ContextPtr ctx_of(const GroupPtr& G, std::size_t cap = kDefaultSubgroupCap) {
  return assignment_context(character_table(G), cap);
}

std::vector<long long> degree_base(const ContextPtr& c) { return {c->degrees.begin(), c->degrees.end()}; }

// n(<g>, phi_k) for every cyclic subgroup generated by an element, computed
// in floating point from the restriction side: (chi|<g>, phi_k) with
// phi_k(g^j) = exp(2 pi i jk/m).
bool oracle_weak(const CharacterTable& t, const std::vector<long long>& base) {
  const auto& G = *t.group();
  for (std::size_t g = 0; g < G.order(); ++g) {
    const std::size_t m = G.element_order(g);
    for (std::size_t k = 0; k < m; ++k) {
      double n = 0;
      for (std::size_t c = 0; c < t.size(); ++c) {
        std::complex<double> ip = 0;
        std::size_t x = 0;
        for (std::size_t j = 0; j < m; ++j) {
          double ang = -2 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(m);
          ip += t[c].at_element(x).to_complex() * std::polar(1.0, ang);
          x = G.mul(x, g);
        }
        n += static_cast<double>(base[c]) * ip.real() / static_cast<double>(m);
      }
      if (std::llround(n) < 0) return false;
    }
  }
  return true;
}

// n(H, phi) from the restriction side of Frobenius reciprocity.
Rational oracle_n(const CharacterTable& t, const std::vector<long long>& base, const ClassFunction& phi) {
  Rational s = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    s += inner_product_q(phi, restrict_to(t[c], phi.group())) * Rational(static_cast<long>(base[c]));
  }
  return s;
}

std::vector<std::vector<long long>> box(std::size_t k, long long b) {
  std::vector<std::vector<long long>> out{{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::vector<long long>> next;
    for (const auto& v : out) {
      for (long long x = -b; x <= b; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Assignment, DegreeBaseGivesInducedDegrees) {
  for (auto G : {s3(), q8(), a4()}) {
    auto c = ctx_of(G);
    auto a = make_assignment(c, degree_base(c), AssignmentMode::Arithmetic);
    EXPECT_TRUE(a.weak);
    EXPECT_TRUE(a.ach3);
    for (const auto& H : c->subgroups) {
      for (const auto& phi : character_table(H)->irreducibles()) {
        Rational expect = phi.degree().rational_value() * Rational(static_cast<long>(G->order() / H->order()));
        EXPECT_EQ(n_value(a, phi), expect);
      }
    }
  }
}

TEST(Assignment, ZeroBase) {
  auto c = ctx_of(s4());
  auto a = make_assignment(c, std::vector<long long>(c->table->size(), 0), AssignmentMode::Arithmetic);
  EXPECT_TRUE(a.weak);
  EXPECT_TRUE(a.ach3);
  for (const auto& H : c->subgroups) EXPECT_TRUE(heilbronn_character(a, H).function().is_zero());
}

TEST(Assignment, S3WeakFlagMatchesOracle) {
  auto c = ctx_of(s3());
  auto a = make_assignment(c, {-1, 0, 1}, AssignmentMode::Weak);
  EXPECT_EQ(a.weak, oracle_weak(*c->table, a.base));
  EXPECT_FALSE(a.weak);  // n(A3, 1) = n(1) + n(sgn) = -1
  for (const auto& base : box(3, 2)) {
    EXPECT_EQ(make_assignment(c, base, AssignmentMode::Weak).weak, oracle_weak(*c->table, base));
  }
}

TEST(Assignment, WeakFlagMatchesOracleOnQ8) {
  auto c = ctx_of(q8());
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> d(-2, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<long long> base(c->table->size());
    for (auto& x : base) x = d(rng);
    EXPECT_EQ(make_assignment(c, base, AssignmentMode::Weak).weak, oracle_weak(*c->table, base));
  }
}

TEST(Assignment, Ach3FlagMatchesRestrictionSide) {
  auto c = ctx_of(s4());
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> d(-1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> base(c->table->size());
    for (auto& x : base) x = d(rng);
    bool expect = true;
    for (const auto& H : c->subgroups) {
      auto tH = character_table(H);
      for (std::size_t p : tH->linear_indices()) expect = expect && oracle_n(*c->table, base, (*tH)[p]) >= 0;
    }
    EXPECT_EQ(make_assignment(c, base, AssignmentMode::Arithmetic).ach3, expect);
  }
}

TEST(Assignment, AdditivityAndInductionInvariance) {
  auto G = s4();
  auto c = ctx_of(G);
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> d(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<long long> base(c->table->size());
    for (auto& x : base) x = d(rng);
    auto a = make_assignment(c, base, AssignmentMode::Arithmetic);
    const auto& H = c->subgroups[rng() % c->subgroups.size()];
    auto tH = character_table(H);
    const auto& p1 = (*tH)[rng() % tH->size()];
    const auto& p2 = (*tH)[rng() % tH->size()];
    EXPECT_EQ(n_value(a, p1 + p2), n_value(a, p1) + n_value(a, p2));
    EXPECT_EQ(n_value(a, induce(p1, G)), n_value(a, p1));
    EXPECT_EQ(n_value(a, p1), oracle_n(*c->table, base, p1));
  }
}

TEST(Assignment, BaseMustCoverIrr) {
  auto c = ctx_of(s3());
  try {
    make_assignment(c, {1, 2}, AssignmentMode::Weak);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(HeilbronnCharacter, TrivialSubgroupCarriesRegular) {
  auto G = s3();
  auto c = ctx_of(G);
  auto a = make_assignment(c, {2, -1, 3}, AssignmentMode::Weak);
  auto th = heilbronn_character(a, trivial_subgroup(*G));
  ASSERT_EQ(th.virtual_char.coeffs.size(), 1u);
  EXPECT_EQ(th.virtual_char.coeffs[0], Rational(static_cast<long>(a.n_regular())));
  EXPECT_EQ(a.n_regular(), 2 - 1 + 6);
}

TEST(HeilbronnCharacter, DegreeBaseIsRegular) {
  for (auto G : {s3(), d4(), sl23()}) {
    auto c = ctx_of(G);
    auto a = make_assignment(c, degree_base(c), AssignmentMode::Weak);
    auto th = heilbronn_character(a, G).function();
    EXPECT_EQ(th, ClassFunction::regular(G));
    EXPECT_EQ(th.degree(), Cyclotomic(a.n_regular()));
  }
}

TEST(HeilbronnCharacter, NotSubgroup) {
  auto a = make_assignment(ctx_of(s3()), {0, 0, 0}, AssignmentMode::Weak);
  try {
    heilbronn_character(a, from_cycles(4, {"(1 4)"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSubgroup);
  }
}

TEST(StarkRestriction, HoldsForEveryAssignment) {
  for (auto G : {s3(), q8(), cyclic(4), a4()}) {
    auto c = ctx_of(G);
    std::mt19937 rng(static_cast<unsigned>(G->order()));
    std::uniform_int_distribution<long long> d(-4, 4);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<long long> base(c->table->size());
      for (auto& x : base) x = d(rng);
      for (auto mode : {AssignmentMode::Weak, AssignmentMode::Arithmetic}) {
        auto r = check_stark_restriction(make_assignment(c, base, mode));
        EXPECT_TRUE(r.holds());
        EXPECT_EQ(r.checked.size(), mode == AssignmentMode::Weak ? c->cyclic.size() : c->subgroups.size());
      }
    }
  }
}

TEST(StarkRestriction, DegreeBaseRestrictsRegular) {
  auto G = s4();
  auto c = ctx_of(G);
  auto a = make_assignment(c, degree_base(c), AssignmentMode::Arithmetic);
  for (const auto& H : c->subgroups) {
    auto lhs = restrict_to(ClassFunction::regular(G), H);
    EXPECT_EQ(lhs, ClassFunction::regular(H) * Cyclotomic(static_cast<long long>(G->order() / H->order())));
    EXPECT_EQ(lhs, heilbronn_character(a, H).function());
  }
}

TEST(FooteMurty, Examples) {
  auto c = ctx_of(s3());
  auto q = foote_murty_gap(make_assignment(c, degree_base(c), AssignmentMode::Weak));
  EXPECT_EQ(q.lhs, 6);
  EXPECT_EQ(q.rhs, 36);
  EXPECT_TRUE(q.holds);
  auto z = foote_murty_gap(make_assignment(c, {0, 0, 0}, AssignmentMode::Weak));
  EXPECT_EQ(z.lhs, 0);
  EXPECT_EQ(z.rhs, 0);
  EXPECT_TRUE(z.holds);
}

TEST(FooteMurty, PreconditionUnverified) {
  auto c = ctx_of(s3());
  auto a = make_assignment(c, {-1, 0, 1}, AssignmentMode::Weak);
  try {
    foote_murty_gap(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionUnverified);
  }
  auto q = foote_murty_gap(a, false);
  EXPECT_FALSE(q.precondition);
  EXPECT_EQ(q.lhs, 2);
  EXPECT_EQ(q.rhs, 1);
}

TEST(StarkLemma, Cases) {
  auto c = ctx_of(s3());
  auto zero = stark_lemma_check(make_assignment(c, {0, 0, 0}, AssignmentMode::Weak));
  EXPECT_TRUE(zero.applicable);
  EXPECT_TRUE(zero.holds);
  auto one = stark_lemma_check(make_assignment(c, {0, 1, 0}, AssignmentMode::Weak));
  EXPECT_TRUE(one.applicable);
  EXPECT_TRUE(one.holds);
  ASSERT_TRUE(one.carrier.has_value());
  EXPECT_EQ(*one.carrier, 1u);
  auto big = stark_lemma_check(make_assignment(c, degree_base(c), AssignmentMode::Weak));
  EXPECT_FALSE(big.applicable);
}

TEST(Truncated, Examples) {
  auto c = ctx_of(s3());
  auto q = truncated_inequality(make_assignment(c, degree_base(c), AssignmentMode::Arithmetic), 0);
  EXPECT_EQ(q.lhs, 5);
  EXPECT_EQ(q.rhs, 25);
  EXPECT_TRUE(q.holds);
  auto z = truncated_inequality(make_assignment(c, {0, 0, 0}, AssignmentMode::Arithmetic), 1);
  EXPECT_EQ(z.lhs, 0);
  EXPECT_EQ(z.rhs, 0);
}

TEST(Truncated, Errors) {
  auto c = ctx_of(s3());
  auto a = make_assignment(c, degree_base(c), AssignmentMode::Arithmetic);
  try {
    truncated_inequality(a, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLinear);
  }
  auto c5 = ctx_of(a5(), 60);
  auto b = make_assignment(c5, degree_base(c5), AssignmentMode::Arithmetic);
  EXPECT_TRUE(b.ach3);
  try {
    truncated_inequality(b, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSolvable);
  }
}

TEST(LevelInequality, S3DegreeBase) {
  auto c = ctx_of(s3());
  auto a = make_assignment(c, degree_base(c), AssignmentMode::Arithmetic);
  // l(sgn) = 1, l(std) = 2; Ind_{A3} 1 = 1 + sgn, Ind_{e} 1 = Reg
  auto q1 = level_inequality(a, 1);
  EXPECT_EQ(q1.lhs, 1);
  EXPECT_EQ(q1.rhs, 1);
  auto q2 = level_inequality(a, 2);
  EXPECT_EQ(q2.lhs, 4);
  EXPECT_EQ(q2.rhs, 16);
  auto q3 = level_inequality(a, 3);
  EXPECT_EQ(q3.lhs, 0);
  EXPECT_EQ(q3.rhs, 0);
  EXPECT_TRUE(q3.holds);
}

TEST(UvdwGap, NonNegativeForDegreeBase) {
  auto G = s4();
  auto c = ctx_of(G);
  auto a = make_assignment(c, degree_base(c), AssignmentMode::Arithmetic);
  for (const auto& H : c->subgroups) {
    EXPECT_EQ(uvdw_gap(a, H), static_cast<long long>(G->order() / H->order()) - 1);
  }
}

TEST(GapNotOne, LevelZeroIsExcluded) {
  auto c = ctx_of(cyclic(4));
  auto a = make_assignment(c, {0, 1, 0, 0}, AssignmentMode::Arithmetic);
  EXPECT_TRUE(a.ach3);
  // at i = 0 the gap is n(Reg) - n(1) = 1
  EXPECT_EQ(a.n_regular() - a.base[0], 1);
  try {
    gap_not_one_check(a, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  auto r = gap_not_one_check(a, 1);
  EXPECT_EQ(r.gap, 0);
  EXPECT_TRUE(r.holds);
}

TEST(ThetaSplit, NonNegativeBaseHasNoTheta2) {
  auto c = ctx_of(s3());
  auto s = theta_split(make_assignment(c, {1, 2, 1}, AssignmentMode::Weak));
  EXPECT_TRUE(std::all_of(s.theta2.coeffs.begin(), s.theta2.coeffs.end(), [](const Rational& r) { return r == 0; }));
  EXPECT_TRUE(s.reconstructs);
  EXPECT_TRUE(s.negative.empty());
}

TEST(ThetaSplit, S3NegativeSignIsNotFaithful) {
  auto c = ctx_of(s3());
  auto s = theta_split(make_assignment(c, {3, -1, 2}, AssignmentMode::Weak));
  EXPECT_EQ(s.theta2.coeffs, (std::vector<Rational>{0, 1, 0}));
  EXPECT_FALSE(s.every_negative_faithful);
  EXPECT_EQ(s.overlap, (std::vector<std::size_t>{1}));
  // sgn sits in both Theta2 and Theta3
  EXPECT_EQ(s.theta2_theta3, Rational(-1));
  EXPECT_FALSE(s.split_orthogonal);
  EXPECT_TRUE(s.reconstructs);
}

TEST(ThetaSplit, Q8TwoDimensionalIsInduced) {
  auto c = ctx_of(q8());
  std::vector<long long> base{2, 1, 1, 1, -1};
  auto s = theta_split(make_assignment(c, base, AssignmentMode::Weak));
  EXPECT_TRUE(s.every_negative_faithful);
  EXPECT_FALSE(s.every_negative_not_induced);
  ASSERT_EQ(s.induced_negatives.size(), 1u);
  EXPECT_EQ(s.induced_negatives[0].subgroup->order(), 4u);
  EXPECT_EQ(transversal_induce(s.induced_negatives[0].source, q8()), (*c->table)[4]);
  EXPECT_TRUE(s.reconstructs);
  EXPECT_TRUE(s.split_orthogonal);
}

TEST(ThetaSplit, ReconstructionOnRandomInputs) {
  auto c = ctx_of(d4());
  std::mt19937 rng(5);
  std::uniform_int_distribution<long long> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long long> base(c->table->size());
    for (auto& x : base) x = d(rng);
    auto s = theta_split(make_assignment(c, base, AssignmentMode::Weak));
    EXPECT_TRUE(s.reconstructs);
    for (std::size_t i = 0; i < base.size(); ++i) {
      EXPECT_EQ(s.theta1.coeffs[i] - s.theta2.coeffs[i] + s.theta3.coeffs[i], Rational(static_cast<long>(base[i])));
    }
  }
}

TEST(Search, S3WeakBoundThree) {
  auto c = ctx_of(s3());
  auto r = search_admissible(c, 3, AssignmentMode::Weak);
  EXPECT_EQ(r.candidates, 343u);
  EXPECT_EQ(r.violations(), 0u);
  std::size_t admissible = 0;
  for (const auto& base : box(3, 3)) {
    if (!oracle_weak(*c->table, base)) continue;
    ++admissible;
  }
  EXPECT_EQ(r.admissible, admissible);
  EXPECT_EQ(r.check("foote_murty")->evaluated, admissible);
}

TEST(Search, S3ArithmeticAgreesWithSingleOps) {
  auto c = ctx_of(s3());
  auto r = search_admissible(c, 3, AssignmentMode::Arithmetic);
  EXPECT_EQ(r.violations(), 0u);
  ASSERT_NE(r.check("gap_not_one"), nullptr);
  std::size_t admissible = 0, truncated = 0, levels = 0, gaps = 0, uvdw = 0;
  for (const auto& base : box(3, 3)) {
    auto a = make_assignment(c, base, AssignmentMode::Arithmetic);
    if (!a.ach3) continue;
    ++admissible;
    EXPECT_TRUE(foote_murty_gap(a).holds);
    for (std::size_t c0 : c->linear) truncated += !truncated_inequality(a, c0).holds;
    for (std::size_t i = 1; i <= 2; ++i) {
      levels += !level_inequality(a, i).holds;
      gaps += !gap_not_one_check(a, i).holds;
    }
    for (const auto& H : c->subgroups) uvdw += uvdw_gap(a, H) < 0;
  }
  EXPECT_EQ(r.admissible, admissible);
  EXPECT_EQ(truncated + levels + gaps + uvdw, 0u);
  EXPECT_EQ(r.check("truncated")->evaluated, admissible * c->linear.size());
}

TEST(Search, BoundZero) {
  auto r = search_admissible(ctx_of(s3()), 0, AssignmentMode::Arithmetic);
  EXPECT_EQ(r.candidates, 1u);
  EXPECT_EQ(r.admissible, 1u);
  EXPECT_EQ(r.violations(), 0u);
  EXPECT_EQ(r.check("foote_murty")->tight, 1u);
}

TEST(Search, C4AndQ8BoundTwo) {
  for (auto G : {cyclic(4), q8()}) {
    auto c = ctx_of(G);
    for (auto mode : {AssignmentMode::Weak, AssignmentMode::Arithmetic}) {
      auto r = search_admissible(c, 2, mode);
      EXPECT_EQ(r.candidates, static_cast<std::size_t>(std::pow(5, c->table->size())));
      EXPECT_EQ(r.violations(), 0u);
      EXPECT_GT(r.admissible, 1u);
    }
  }
}

TEST(Search, JobCountDoesNotChangeOutput) {
  auto c = ctx_of(q8());
  auto one = search_report_to_json(search_admissible(c, 2, AssignmentMode::Weak, 1)).dump();
  auto three = search_report_to_json(search_admissible(c, 2, AssignmentMode::Weak, 3)).dump();
  EXPECT_EQ(one, three);
}

TEST(Search, TooLarge) {
  try {
    search_admissible(ctx_of(sl23()), 10, AssignmentMode::Weak);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SearchSpaceTooLarge);
  }
}

TEST(Structure, HuppertHypothesis) {
  EXPECT_TRUE(structural_predicates(s4()).huppert_hypothesis());
  EXPECT_TRUE(structural_predicates(a4()).huppert_hypothesis());
  EXPECT_TRUE(structural_predicates(q8()).huppert_hypothesis());
  EXPECT_FALSE(structural_predicates(sl23()).huppert_hypothesis());
  auto s = structural_predicates(s3());
  EXPECT_TRUE(s.supersolvable);
  EXPECT_EQ(s.abelian_normal_sylow, (std::vector<long long>{3}));
}

TEST(AssignmentJson, RoundTrip) {
  auto c = ctx_of(s3());
  auto a = make_assignment(c, {1, -2, 3}, AssignmentMode::Arithmetic, "p");
  auto b = assignment_from_json(assignment_to_json(a), c);
  EXPECT_EQ(b.base, a.base);
  EXPECT_EQ(b.mode, a.mode);
  EXPECT_EQ(b.label, "p");
  try {
    assignment_from_json(Json{{"mode", "weak"}, {"base", {{"0", 1}}}}, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SchemaError);
  }
}
