#pragma once

#include <memory>
#include <vector>

#include "hk/chartab.hpp"
#include "hk/heilbronn.hpp"
#include "hk/json_io.hpp"

namespace hk {

using Partition = std::vector<std::vector<std::size_t>>;

/// A supercharacter theory (X, K) of G. X partitions the rows of the
/// character table, K partitions the element indices of G. Parts are kept
/// sorted internally and listed by least member, so the trivial character's
/// part and the identity's part come first.
class SupercharacterTheory {
 public:
  /// Throws NotPartition if X or K is not a partition, VerificationFailed if
  /// the axioms fail.
  SupercharacterTheory(TablePtr table, Partition X, Partition K);

  const GroupPtr& group() const { return table_->group(); }
  const TablePtr& table() const { return table_; }
  const Partition& X() const { return X_; }
  const Partition& K() const { return K_; }
  std::size_t size() const { return X_.size(); }
  const std::vector<ClassFunction>& supercharacters() const { return sup_; }
  std::size_t superclass_of(std::size_t element) const { return superclass_of_[element]; }
  std::size_t superclass_size(std::size_t s) const { return K_[s].size(); }
  /// Superclasses as sets of conjugacy class indices.
  const Partition& class_parts() const { return class_parts_; }

  friend bool operator==(const SupercharacterTheory& a, const SupercharacterTheory& b) {
    return a.X_ == b.X_ && a.K_ == b.K_;
  }

 private:
  TablePtr table_;
  Partition X_;
  Partition K_;
  Partition class_parts_;
  std::vector<ClassFunction> sup_;
  std::vector<std::size_t> superclass_of_;
};

using TheoryPtr = std::shared_ptr<const SupercharacterTheory>;

/// sigma_x = sum_{chi in x} chi(1) chi.
ClassFunction supercharacter(const CharacterTable& table, const std::vector<std::size_t>& part);

struct SctReport {
  bool identity_singleton = false;  // {e} in K
  bool equal_sizes = false;         // |X| = |K|
  bool constant = false;            // each sigma_x constant on each part of K
  bool unions_of_classes = false;
  bool orthogonal = false;          // supercharacters pairwise orthogonal
  bool sums_to_regular = false;     // sum of supercharacters = Reg
  bool valid() const { return identity_singleton && equal_sizes && constant; }
};

/// Checks the axioms and their consequences. Throws NotPartition.
SctReport verify_sct(const CharacterTable& table, const Partition& X, const Partition& K);

TheoryPtr classical_theory(const TablePtr& table);
/// X = {{1_G}, Irr - {1_G}}, K = {{e}, G - {e}}.
TheoryPtr max_theory(const TablePtr& table);

/// All supercharacter theories, ordered by (|K|, K, X). Throws
/// SearchSpaceTooLarge past `max_classes` conjugacy classes.
std::vector<TheoryPtr> enumerate_scts(const TablePtr& table, std::size_t max_classes = 8, unsigned jobs = 1);

/// SCl_H(h) contained in SCl_G(h) for every h in H. Throws NotSubgroup.
bool compatible(const SupercharacterTheory& TH, const SupercharacterTheory& TG);

/// One value per superclass of its theory.
struct SuperclassFunction {
  TheoryPtr theory;
  std::vector<Cyclotomic> values;

  ClassFunction to_class_function() const;
  /// InvalidArgument unless f is constant on the superclasses.
  static SuperclassFunction from_class_function(const TheoryPtr& theory, const ClassFunction& f);
};

/// The averaging formula over superclass representatives. Throws NotCompatible.
SuperclassFunction superinduce(const SuperclassFunction& phi, const TheoryPtr& TG);

struct SuperFrobeniusReport {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  bool holds() const { return failures == 0; }
};

/// (SInd tau, sigma) = (tau, sigma|_H) for every tau in Sup(H), sigma in Sup(G).
SuperFrobeniusReport super_frobenius_check(const TheoryPtr& TH, const TheoryPtr& TG);

/// n(G, sigma) = sum_{chi in sigma} chi(1) n(G, chi).
std::vector<long long> super_orders(const SupercharacterTheory& T, const std::vector<long long>& base);

struct SuperHeilbronn {
  Integer m;                        // lcm of sigma(1) over Sup(G)
  std::vector<Rational> n_G;        // per supercharacter of G
  std::vector<Rational> n_H;        // per supercharacter of H
  ClassFunction theta_G;            // sum n(G,sigma) sigma / sigma(1)
  ClassFunction theta_H;            // sum n(H,tau) tau / tau(1)
  bool restriction_holds = false;   // theta_G|_H = theta_H
};

/// Throws NotCompatible, NonIntegralRestriction.
SuperHeilbronn super_heilbronn(const std::vector<long long>& base, const TheoryPtr& TG, const TheoryPtr& TH);

struct LoReport {
  Rational lhs;   // sum n(G,sigma)^2 / sigma(1)
  long long rhs = 0;
  bool holds = false;
  bool degrees_match = false;  // sigma(1) = sum_{chi in sigma} chi(1)^2
  bool precondition = false;
};

/// Throws PreconditionUnverified (strict) when the assignment is not weak-admissible.
LoReport theorem_lo_check(const OrderAssignment& a, const SupercharacterTheory& T, bool strict = true);

struct SuperStarkReport {
  Rational lhs_literal;     // (|H|/|G|) sum n(H,tau)^2 / tau(1)^2
  Rational lhs_normalized;  // (|H|/|G|) sum n(H,tau)^2 / tau(1) = (|H|/|G|)(Theta_H, Theta_H)
  long long rhs = 0;
  bool holds_literal = false;
  bool holds_normalized = false;
  bool vanishes = true;     // n(G,Reg) = 0 forces every n(H,tau) = 0
  bool precondition = false;
};

SuperStarkReport weak_super_stark(const OrderAssignment& a, const TheoryPtr& TG, const TheoryPtr& TH,
                                  bool strict = true);

/// Product of a G-invariant theory on N with a theory on G/N. Throws
/// NotNormal, NotGInvariant, VerificationFailed.
TheoryPtr hendrickson_product(const GroupPtr& G, const TheoryPtr& TN, const Quotient& q, const TheoryPtr& TQ);
bool is_g_invariant(const GroupPtr& G, const SupercharacterTheory& TN);

/// {"group", "X": [[irr indices]], "K": [[element ids]]}, element ids 0-based
/// in the sorted element order.
Json theory_to_json(const SupercharacterTheory& T);
TheoryPtr theory_from_json(const Json& j, const TablePtr& table);

}  // namespace hk
