#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hk/cyclotomic.hpp"
#include "hk/group.hpp"

namespace hk {

class CharacterTable;

/// A function constant on conjugacy classes, stored as one value per class
/// of its group (in the group's class order).
class ClassFunction {
 public:
  ClassFunction() = default;
  /// Throws InvalidArgument if values.size() differs from the class count.
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction constant(GroupPtr group, const Cyclotomic& c);
  static ClassFunction trivial(GroupPtr group) { return constant(std::move(group), Cyclotomic(1)); }
  static ClassFunction zero(GroupPtr group) { return constant(std::move(group), Cyclotomic(0)); }
  /// |G| at the identity and 0 elsewhere.
  static ClassFunction regular(GroupPtr group);
  /// Evaluates `f` at each class representative (an element index).
  static ClassFunction from_elements(GroupPtr group, const std::function<Cyclotomic(std::size_t)>& f);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Cyclotomic& operator[](std::size_t cls) const { return values_[cls]; }
  const Cyclotomic& at_element(std::size_t element) const { return values_[group_->class_of(element)]; }
  const Cyclotomic& degree() const { return values_[0]; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_constant() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Cyclotomic& s);
  ClassFunction operator-() const;
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Cyclotomic& s) { return a *= s; }
  friend ClassFunction operator*(const Cyclotomic& s, ClassFunction a) { return a *= s; }

  /// Same group (as an element set) and equal values.
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// Rational coefficients against the rows of a character table.
struct VirtualCharacter {
  std::vector<Rational> coeffs;

  bool is_character() const;  // all coefficients non-negative integers
  bool is_integral() const;
  std::vector<std::size_t> support() const;
};

/// Throws GroupMismatch unless a and b live on the same group.
void require_same_group(const ClassFunction& a, const ClassFunction& b);

/// (1/|G|) sum_g a(g) conj(b(g)).
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
/// Inner product that must be rational (throws NotRational otherwise).
Rational inner_product_q(const ClassFunction& a, const ClassFunction& b);

ClassFunction restrict_to(const ClassFunction& f, const GroupPtr& H);
/// Ind_H^G f by the definitional sum (1/|H|) sum_{g in G} f^(g^-1 x g).
ClassFunction induce(const ClassFunction& f, const GroupPtr& G);
/// f o pi for f a class function of q.group.
ClassFunction inflate(const ClassFunction& f, const Quotient& q);
ClassFunction twist(const ClassFunction& a, const ClassFunction& b);
ClassFunction complex_conjugate(const ClassFunction& f);
/// f^x on x H x^-1, f^x(y) = f(x^-1 y x), where H = f.group() and x an index in G.
ClassFunction conjugate_by(const ClassFunction& f, const PermutationGroup& G, std::size_t x, const GroupPtr& xHx);

GroupPtr kernel(const ClassFunction& chi);
bool is_faithful(const ClassFunction& chi);
bool is_linear(const ClassFunction& chi);
/// Least i with chi restricted to G^i equal to chi(1) 1. Throws NotSolvable.
std::size_t level(const ClassFunction& chi, const DerivedSeries& series);
std::size_t level(const ClassFunction& chi);

/// Coefficients (f, chi_i) against the rows of `table`; throws NotRational
/// if some coefficient is irrational, GroupMismatch on a foreign group.
VirtualCharacter decompose(const ClassFunction& f, const CharacterTable& table);
ClassFunction reconstruct(const VirtualCharacter& v, const CharacterTable& table);

struct CliffordReport {
  bool irreducible_restriction = false;  // branch taken
  std::size_t prime = 0;
  VirtualCharacter restriction;           // chi|_N against Irr(N)
  std::vector<std::size_t> constituents;  // Irr(N) indices
  bool holds = false;
};

/// Clifford dichotomy for N normal of prime index. Throws NotNormal, IndexNotPrime.
CliffordReport clifford_check(const ClassFunction& chi, const GroupPtr& N);

struct MackeyReport {
  std::vector<std::size_t> double_cosets;  // representatives in G
  ClassFunction lhs;                       // Res_K Ind_H^G psi
  ClassFunction rhs;                       // double coset sum
  bool hk_is_g = false;
  bool special_case_holds = true;          // only meaningful when hk_is_g
  bool holds = false;
};

MackeyReport mackey_check(const ClassFunction& psi, const GroupPtr& G, const GroupPtr& K);

}  // namespace hk
