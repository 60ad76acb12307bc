#include <gtest/gtest.h>

#include <random>

#include "hk/cyclotomic.hpp"
#include "hk/error.hpp"

using namespace hk;

namespace {

Cyclotomic random_element(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Rational> pw(order);
  for (auto& c : pw) c = make_rational(coeff(rng), 1 + (rng() % 3));
  return Cyclotomic::from_power_sum(order, pw);
}

}  // namespace

TEST(Cyclotomic, BasicIdentities) {
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 1) * Cyclotomic::root_of_unity(4, 1), Cyclotomic(-1));
  EXPECT_TRUE((Cyclotomic(1) + Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2)).is_zero());
  EXPECT_EQ(Cyclotomic::root_of_unity(5, 1).conjugate(), Cyclotomic::root_of_unity(5, 4));
  EXPECT_THROW(Cyclotomic::root_of_unity(5, 5), Error);
  EXPECT_THROW(Cyclotomic(0).inverse(), Error);
}

TEST(Cyclotomic, CyclotomicPolynomialDegrees) {
  for (int e = 1; e <= 60; ++e) EXPECT_EQ(CyclotomicBasis::get(e)->degree, euler_phi(e));
}

TEST(Cyclotomic, RootsMatchComplexValues) {
  for (int e : {1, 2, 3, 4, 5, 6, 8, 12, 15, 30}) {
    for (int k = 0; k < e; ++k) {
      auto z = Cyclotomic::root_of_unity(e, k).to_complex();
      auto expect = std::polar(1.0, 2 * std::acos(-1.0) * k / e);
      EXPECT_NEAR(std::abs(z - expect), 0.0, 1e-9);
    }
  }
}

TEST(Cyclotomic, CrossOrderArithmeticLifts) {
  auto i = Cyclotomic::root_of_unity(4, 1);
  auto w = Cyclotomic::root_of_unity(3, 1);
  auto prod = i * w;
  EXPECT_EQ(prod.order(), 12);
  EXPECT_EQ(prod, Cyclotomic::root_of_unity(12, 7));
  EXPECT_EQ(Cyclotomic::root_of_unity(6, 2), w);
  EXPECT_EQ(Cyclotomic(1), Cyclotomic::root_of_unity(4, 0));
}

TEST(Cyclotomic, FieldAxiomsRandomTriples) {
  std::mt19937 rng(2024);
  for (int order : {3, 4, 5, 8, 12}) {
    for (int t = 0; t < 20; ++t) {
      auto a = random_element(rng, order);
      auto b = random_element(rng, order);
      auto c = random_element(rng, order);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
      auto n = a * a.conjugate();
      EXPECT_EQ(n.conjugate(), n);
      EXPECT_NEAR(n.to_complex().imag(), 0.0, 1e-9);
      // lifting to a multiple order and comparing is exact
      EXPECT_EQ(a.lifted(order * 2), a);
      EXPECT_EQ(a.lifted(order * 3).lifted(order * 6), a);
    }
  }
}

TEST(Cyclotomic, GaloisActsOnRoots) {
  for (int k = 1; k < 7; ++k) EXPECT_EQ(Cyclotomic::root_of_unity(7, 1).galois(k), Cyclotomic::root_of_unity(7, k));
}

TEST(Cyclotomic, RationalValue) {
  EXPECT_EQ((Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4) + Cyclotomic::root_of_unity(5, 2) +
             Cyclotomic::root_of_unity(5, 3))
                .rational_value(),
            Rational(-1));
  EXPECT_THROW(Cyclotomic::root_of_unity(3, 1).rational_value(), Error);
}
