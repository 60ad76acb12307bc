#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hk/perm.hpp"

namespace hk {

inline constexpr std::size_t kDefaultOrderCap = 10000;
inline constexpr std::size_t kDefaultSubgroupCap = 48;

class PermutationGroup;
using GroupPtr = std::shared_ptr<const PermutationGroup>;

struct ConjugacyClass {
  std::size_t representative;          // element index, the least member
  std::vector<std::size_t> members;    // sorted element indices
  std::size_t size() const { return members.size(); }
};

/// A finite permutation group with its full element list. Elements are
/// stored sorted lexicographically by image array, so the identity is
/// element 0 and element indices are canonical for a given element set.
/// Conjugacy classes are computed eagerly: identity class first, the rest
/// ordered by size and then by least member.
class PermutationGroup {
 public:
  /// Closes the generators under multiplication. Throws InvalidPermutation
  /// for generators of the wrong degree, OrderCapExceeded past `cap`.
  static GroupPtr closure(std::size_t degree, std::vector<Perm> generators, std::string name = {},
                          std::size_t cap = kDefaultOrderCap);
  /// Builds a group from a complete element list (validated for closure).
  static GroupPtr from_elements(std::size_t degree, std::vector<Perm> elements, std::string name = {});

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::size_t conj(std::size_t x, std::size_t g) const { return mul(mul(inverse_[g], x), g); }  // g^-1 x g
  std::size_t power(std::size_t a, long long k) const;
  std::size_t element_order(std::size_t a) const { return element_order_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  /// Class of rep(c)^k.
  std::size_t power_class(std::size_t cls, long long k) const;
  std::size_t inverse_class(std::size_t cls) const { return power_class(cls, -1); }
  std::size_t centralizer_order(std::size_t cls) const { return order() / classes_[cls].size(); }

  /// Same element set (and degree).
  bool same_as(const PermutationGroup& other) const;

 private:
  PermutationGroup() = default;
  void finish(std::vector<Perm> sorted_elements);
  void choose_generators();

  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<std::uint32_t> table_;  // order^2 entries when order is small
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> element_order_;
  int exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

bool same_group(const GroupPtr& a, const GroupPtr& b);

/// G-indices of the elements of H, in H's order. Throws NotSubgroup.
std::vector<std::size_t> embed(const PermutationGroup& H, const PermutationGroup& G);
bool is_subgroup(const PermutationGroup& H, const PermutationGroup& G);

/// Subgroup of G from a set of element indices already closed under G's product.
GroupPtr subgroup_from_indices(const PermutationGroup& G, std::vector<std::size_t> indices, std::string name = {});
/// Subgroup of G generated by the given element indices.
GroupPtr generate(const PermutationGroup& G, const std::vector<std::size_t>& gens);
/// Subgroup generated by H and K (both subgroups of G).
GroupPtr join(const PermutationGroup& G, const PermutationGroup& H, const PermutationGroup& K);
GroupPtr intersection(const PermutationGroup& G, const PermutationGroup& H, const PermutationGroup& K);
GroupPtr trivial_subgroup(const PermutationGroup& G);
GroupPtr whole(const PermutationGroup& G);
/// x H x^-1 for x an element index of G.
GroupPtr conjugate_subgroup(const PermutationGroup& G, const PermutationGroup& H, std::size_t x);

GroupPtr center(const PermutationGroup& G);
GroupPtr commutator_subgroup(const PermutationGroup& G);
GroupPtr normal_closure(const PermutationGroup& G, const std::vector<std::size_t>& gens);
bool is_normal(const PermutationGroup& G, const PermutationGroup& H);

/// terms[0] = G, terms[i+1] = [terms[i], terms[i]], stopping at the first
/// repeat (the repeated term is not listed twice).
struct DerivedSeries {
  std::vector<GroupPtr> terms;
  bool solvable() const;
  /// Number of steps to reach the trivial group (0 for the trivial group).
  std::size_t length() const { return terms.size() - 1; }
  /// G^i, with G^i = {e} for i past the end of a solvable series.
  const GroupPtr& term(std::size_t i) const;
};

DerivedSeries derived_series(const PermutationGroup& G);
bool is_solvable(const PermutationGroup& G);

/// All subgroups, deduplicated and sorted by (order, element indices).
/// Throws OrderCapExceeded if |G| > cap.
std::vector<GroupPtr> subgroups(const PermutationGroup& G, std::size_t cap = kDefaultSubgroupCap);
/// All cyclic subgroups <g>, sorted by (order, element indices).
std::vector<GroupPtr> cyclic_subgroups(const PermutationGroup& G);
std::vector<GroupPtr> normal_subgroups(const PermutationGroup& G, std::size_t cap = kDefaultSubgroupCap);
/// Minimal normal subgroups, sorted by element set (lexicographically least first).
std::vector<GroupPtr> minimal_normal_subgroups(const PermutationGroup& G);

/// G/N as a permutation group on the right cosets of N.
struct Quotient {
  GroupPtr parent;
  GroupPtr kernel;
  GroupPtr group;
  std::vector<std::size_t> projection;  // element of G -> element of G/N
  std::vector<std::size_t> section;     // element of G/N -> least preimage in G
  /// Full preimage in G of a subgroup of G/N.
  GroupPtr preimage(const PermutationGroup& subgroup_of_quotient) const;
  /// Image in G/N of a subgroup of G.
  GroupPtr image(const PermutationGroup& subgroup_of_parent) const;
};

Quotient quotient(const GroupPtr& G, const PermutationGroup& N);

/// Double coset representatives K x H (least element of each double coset).
std::vector<std::size_t> double_coset_representatives(const PermutationGroup& G, const PermutationGroup& K,
                                                      const PermutationGroup& H);

bool is_supersolvable(const GroupPtr& G);
/// True iff G has a normal Sylow q-subgroup and it is abelian.
bool has_abelian_normal_sylow(const PermutationGroup& G, long long q);
/// A Sylow p-subgroup (the least one in subgroup order).
GroupPtr sylow_subgroup(const PermutationGroup& G, long long p, std::size_t cap = kDefaultSubgroupCap);
std::vector<long long> prime_divisors(long long n);

}  // namespace hk
