#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

/// Integer data for the cyclotomic field of order e: the polynomial
/// Phi_e and the reduction of x^k modulo Phi_e for every 0 <= k < e.
struct CyclotomicBasis {
  int order = 1;
  int degree = 1;  // phi(order)
  std::vector<long long> phi_poly;              // low to high, monic
  std::vector<std::vector<long long>> powers;  // powers[k] = x^k mod Phi_e

  static std::shared_ptr<const CyclotomicBasis> get(int order);
};

int euler_phi(int n);
int lcm_int(int a, int b);

/// An element of Q(zeta_e), stored in the power basis 1, z, ..., z^(phi(e)-1)
/// reduced modulo the e-th cyclotomic polynomial. Operands of different
/// orders are lifted to the lcm of their orders; equality is tested after
/// lifting, so 1 in Q(zeta_4) equals 1 in Q.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long long n);        // NOLINT(google-explicit-constructor)

  static Cyclotomic root_of_unity(int order, int k);
  /// Sum of coeffs[k] * zeta_order^k over all k in [0, order).
  static Cyclotomic from_power_sum(int order, const std::vector<Rational>& coeffs);
  /// Takes coordinates already in the reduced basis (length phi(order)).
  static Cyclotomic from_basis(int order, std::vector<Rational> coords);

  int order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRational if the value is irrational.
  Rational rational_value() const;

  /// Re-express in Q(zeta_new_order); new_order must be a multiple of order().
  Cyclotomic lifted(int new_order) const;
  Cyclotomic conjugate() const;
  /// The Galois automorphism zeta -> zeta^k (k coprime to the order).
  Cyclotomic galois(int k) const;
  Cyclotomic inverse() const;

  std::complex<double> to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Total order used only for deterministic sorting: coordinates compared
  /// lexicographically after lifting to a common order.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int order, std::vector<Rational> coords);

  int order_;
  std::vector<Rational> coords_;
};

std::string to_string(const Cyclotomic& c);

}  // namespace hk
