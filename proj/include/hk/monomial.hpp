#pragma once

#include <optional>
#include <vector>

#include "hk/chartab.hpp"
#include "hk/json_io.hpp"

namespace hk {

struct MonomialTerm {
  GroupPtr subgroup;
  ClassFunction linear_char;  // on `subgroup`
  Rational coefficient;
};

/// target = residual_trivial * 1_G + [Ind leading] + sum coefficient * Ind(linear_char).
/// `leading` carries the Ind_{HG^i} 1 term of the level variant.
struct MonomialDecomposition {
  GroupPtr group;
  ClassFunction target;
  std::vector<MonomialTerm> terms;
  Rational residual_trivial;
  std::optional<MonomialTerm> leading;

  ClassFunction recompute() const;
  /// Recomputes the sum, checks every linear character is a homomorphism
  /// and every coefficient is non-negative.
  bool verify() const;
};

/// {"target", "residual_trivial": "p/q", "terms": [{"subgroup_gens", "linear_char", "coeff"}]},
/// plus "leading" in the same term shape when present.
Json decomposition_to_json(const MonomialDecomposition& d);

/// Homomorphism check of a degree-one class function.
bool is_linear_character(const ClassFunction& phi);

/// Ind_H^G 1_H = 1_G + sum Ind chi_i with chi_i linear (G solvable).
MonomialDecomposition decompose_uvdw(const GroupPtr& G, const GroupPtr& H);
/// Ind_H^G 1_H = Ind_{HG^i}^G 1 + sum Ind chi_j, i >= 1.
MonomialDecomposition decompose_uvdw_level(const GroupPtr& G, const GroupPtr& H, std::size_t i);
/// Tensors every term and the target with the linear character chi0 of G.
MonomialDecomposition twist_certificate(const MonomialDecomposition& d, const ClassFunction& chi0);

struct PairingReport {
  bool trivial_on_intersection = false;
  std::vector<std::size_t> levels;        // l(chi) per irreducible of G
  std::vector<Rational> induced;          // (chi, Ind_H psi)
  std::vector<Rational> extended;         // (chi, Ind_{HG^i} psi'), empty in the fallback branch
  bool dichotomy_holds = false;           // extended == induced below level i, 0 above
  bool sum_identity_holds = false;        // Ind_{HG^i} psi' = sum_{l <= i} (chi, Ind psi) chi
  bool fallback_holds = false;            // (chi, Ind psi) = 0 for l(chi) <= i
  bool holds() const { return trivial_on_intersection ? dichotomy_holds && sum_identity_holds : fallback_holds; }
};

PairingReport pairing_levels(const GroupPtr& G, const GroupPtr& H, const ClassFunction& psi, std::size_t i);

/// Ind_{G^i}^G 1 compared with sum_{l(chi) <= i} chi (as stated) and with
/// sum_{l(chi) <= i} chi(1) chi (the H = {e} case of the pairing lemma).
struct LevelIdentityReport {
  std::size_t i = 0;
  ClassFunction lhs;
  ClassFunction unweighted_rhs;
  ClassFunction weighted_rhs;
  bool unweighted_holds = false;
  bool weighted_holds = false;
};

LevelIdentityReport level_identity(const GroupPtr& G, std::size_t i);

struct MonomialWitness {
  GroupPtr subgroup;
  ClassFunction linear_char;
};

struct MGroupReport {
  std::vector<std::optional<MonomialWitness>> witnesses;  // per irreducible
  bool is_m_group = true;
  std::vector<std::size_t> non_monomial;
};

MGroupReport is_m_group(const GroupPtr& G, std::size_t subgroup_cap = kDefaultSubgroupCap);
/// Witness that chi is induced from a linear character, if one exists.
std::optional<MonomialWitness> monomial_witness(const ClassFunction& chi, std::size_t subgroup_cap = kDefaultSubgroupCap);

/// All distinct characters Ind_H^G phi with phi linear, as coordinate
/// vectors in Irr(G) together with one (H, phi) producing each.
struct MonomialFamily {
  std::vector<MonomialWitness> members;
  std::vector<std::vector<Rational>> coords;
};

MonomialFamily monomial_family(const GroupPtr& G, bool cyclic_only = false,
                               std::size_t subgroup_cap = kDefaultSubgroupCap);

struct BrauerWitness {
  std::size_t character = 0;
  std::vector<MonomialTerm> terms;  // integer coefficients
  bool cyclic_only = true;          // family that sufficed
  long long max_abs_coefficient = 0;
  bool within_box = false;          // max |n_i| <= box
  bool verified = false;
};

/// Integer combination chi = sum n_i Ind psi_i: exact lattice solve over the
/// cyclic-subgroup family, then over all subgroups.
BrauerWitness brauer_witness(const GroupPtr& G, std::size_t chi_index, long long box = 3,
                             std::size_t subgroup_cap = kDefaultSubgroupCap);

struct ConeResult {
  bool member = false;
  // membership: positive coefficients on family members
  std::vector<std::pair<std::size_t, Rational>> certificate;
  // refutation: a family member with negative pairing, or a Farkas vector
  std::optional<std::size_t> separating_member;
  std::vector<Rational> farkas;  // over Irr(G): (z, f) >= 0 for all f, (z, psi) < 0
  Rational separating_value;
  bool verified = false;
};

/// Decides whether psi (coordinates over Irr(G)) is a non-negative rational
/// combination of the family by an exact phase-one simplex. Throws EmptyFamily.
ConeResult cone_membership(const std::vector<Rational>& psi, const MonomialFamily& family);
/// The dual check: (psi, f) >= 0 for every family member.
bool dual_nonnegative(const std::vector<Rational>& psi, const MonomialFamily& family);

}  // namespace hk
