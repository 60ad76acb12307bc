#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hk/chartab.hpp"
#include "hk/json_io.hpp"

namespace hk {

enum class AssignmentMode { Weak, Arithmetic };

std::string mode_name(AssignmentMode mode);
AssignmentMode parse_mode(const std::string& text);  // InvalidArgument

/// Everything about G that the inequalities need, computed once: the
/// coordinates over Irr(G) of the induced characters whose n-values the
/// admissibility flags and inequalities look at.
struct AssignmentContext {
  TablePtr table;
  std::vector<GroupPtr> subgroups;         // all subgroups, sorted
  std::vector<std::size_t> cyclic;         // positions in `subgroups`
  std::vector<long> degrees;
  std::vector<std::size_t> linear;         // linear rows of the table
  // Ind phi for cyclic H and every phi in Irr(H), deduplicated
  std::vector<std::vector<long long>> weak_rows;
  // Ind phi for every H and every linear phi of H, deduplicated
  std::vector<std::vector<long long>> ach3_rows;
  // (Ind_H phi, chi) pairs with phi linear on H and chi linear on G restricting to phi
  std::vector<std::pair<std::vector<long long>, std::size_t>> linear_pairs;
  // Ind_H 1 per subgroup
  std::vector<std::vector<long long>> uvdw_rows;
  bool solvable = false;
  DerivedSeries series;
  std::vector<std::size_t> levels;               // per irreducible (solvable only)
  std::vector<std::vector<long long>> level_rows;  // Ind_{G^i} 1 for i = 0..length
  std::vector<bool> faithful;

  std::size_t derived_length() const { return series.length(); }
  /// Ind_{G^i} 1 coordinates; i past the derived length gives Reg.
  const std::vector<long long>& level_row(std::size_t i) const;
};

using ContextPtr = std::shared_ptr<const AssignmentContext>;

/// Throws OrderCapExceeded when |G| is above the subgroup cap.
ContextPtr assignment_context(const TablePtr& table, std::size_t subgroup_cap = kDefaultSubgroupCap);

/// Integers n(G, chi), extended to n(H, phi) = sum_chi (Ind phi, chi) n(G, chi).
struct OrderAssignment {
  ContextPtr context;
  std::vector<long long> base;
  std::string label = "s0";
  AssignmentMode mode = AssignmentMode::Weak;
  bool weak = false;  // n >= 0 on cyclic subgroups, all characters
  bool ach3 = false;  // n >= 0 on all subgroups, linear characters

  const CharacterTable& table() const { return *context->table; }
  const GroupPtr& group() const { return context->table->group(); }
  /// The flag the mode asks for.
  bool admissible() const { return mode == AssignmentMode::Weak ? weak : ach3; }
  long long n(const std::vector<long long>& coords) const;
  long long n_regular() const;
};

OrderAssignment make_assignment(const ContextPtr& context, std::vector<long long> base, AssignmentMode mode,
                                std::string label = "s0");
OrderAssignment make_assignment(const TablePtr& table, std::vector<long long> base, AssignmentMode mode,
                                std::string label = "s0");

/// n(H, phi) for a class function phi of a subgroup H (rational in general).
Rational n_value(const OrderAssignment& a, const ClassFunction& phi);

struct HeilbronnCharacter {
  GroupPtr subgroup;
  TablePtr table;  // of the subgroup
  VirtualCharacter virtual_char;
  ClassFunction function() const { return reconstruct(virtual_char, *table); }
};

/// Theta_H = sum n(H, phi) phi over Irr(H). Throws NotSubgroup.
HeilbronnCharacter heilbronn_character(const OrderAssignment& a, const GroupPtr& H);

struct StarkRestrictionReport {
  std::vector<std::size_t> checked;   // positions in context->subgroups
  std::vector<std::size_t> failures;
  bool holds() const { return failures.empty(); }
};

/// Theta_G|_H == Theta_H for every cyclic H (weak) or every H (arithmetic).
StarkRestrictionReport check_stark_restriction(const OrderAssignment& a);

struct Inequality {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
  bool precondition = false;  // hypotheses of the theorem verified
};

/// sum n(G,chi)^2 <= n(G,Reg)^2. With `strict`, throws PreconditionUnverified
/// when the weak flag is false; otherwise the values come back unasserted.
Inequality foote_murty_gap(const OrderAssignment& a, bool strict = true);

struct StarkLemmaReport {
  bool precondition = false;
  bool applicable = false;  // n(G,Reg) <= 1
  long long n_regular = 0;
  bool holds = true;
  std::optional<std::size_t> carrier;  // the linear character when n(G,Reg) = 1
};

StarkLemmaReport stark_lemma_check(const OrderAssignment& a);

/// sum_{chi != chi0} n^2 <= (n(G,Reg) - n(G,chi0))^2. Throws NotSolvable, NotLinear,
/// and PreconditionUnverified (strict, ACH3 false).
Inequality truncated_inequality(const OrderAssignment& a, std::size_t chi0, bool strict = true);
/// sum_{l(chi)=i} n^2 <= (n(Ind_{G^i} 1) - n(Ind_{G^{i-1}} 1))^2, i >= 1.
Inequality level_inequality(const OrderAssignment& a, std::size_t i, bool strict = true);
/// n(G, Ind_H 1) - n(G, 1_G).
long long uvdw_gap(const OrderAssignment& a, const GroupPtr& H, bool strict = true);

struct GapReport {
  std::size_t i = 0;
  long long gap = 0;  // n(G,Reg) - n(G, Ind_{G^i} 1)
  bool holds = false;
  bool precondition = false;
};

/// i >= 1 (at i = 0 the gap is n(G,Reg) - n(G,1) and can be 1).
GapReport gap_not_one_check(const OrderAssignment& a, std::size_t i, bool strict = true);

struct InducedWitness {
  std::size_t character = 0;
  GroupPtr subgroup;
  ClassFunction source;
};

struct ThetaSplit {
  VirtualCharacter theta;
  VirtualCharacter theta1;
  VirtualCharacter theta2;
  VirtualCharacter theta3;
  std::vector<std::size_t> negative;     // chi with n < 0
  std::vector<std::size_t> overlap;      // negative and not faithful
  bool every_negative_faithful = true;
  bool every_negative_not_induced = true;
  std::vector<InducedWitness> induced_negatives;
  Rational theta2_theta3;                // (Theta2, Theta3)
  bool split_orthogonal = true;
  bool reconstructs = false;             // Theta = Theta1 - Theta2 + Theta3
};

ThetaSplit theta_split(const OrderAssignment& a);

/// chi = Ind_H^G psi for a proper subgroup H, if such a pair exists.
std::optional<InducedWitness> induced_from_proper(const ClassFunction& chi, std::size_t subgroup_cap = kDefaultSubgroupCap);

struct CheckTally {
  std::string name;
  std::size_t evaluated = 0;
  std::size_t violations = 0;
  std::size_t tight = 0;
  std::vector<std::vector<long long>> violating;  // first few, in candidate order
  std::vector<std::vector<long long>> extremal;
};

struct SearchReport {
  AssignmentMode mode = AssignmentMode::Weak;
  long long bound = 0;
  std::size_t candidates = 0;
  std::size_t admissible = 0;
  std::vector<CheckTally> checks;
  std::size_t violations() const;
  const CheckTally* check(const std::string& name) const;
};

inline constexpr std::size_t kSearchLimit = 10000000;
inline constexpr std::size_t kWitnessLimit = 8;

/// Every base vector with |n(G,chi)| <= bound, filtered by the mode's flag
/// and run through the inequalities. Throws SearchSpaceTooLarge.
SearchReport search_admissible(const ContextPtr& context, long long bound, AssignmentMode mode, unsigned jobs = 1);

struct StructuralReport {
  bool solvable = false;
  bool supersolvable = false;
  std::vector<long long> primes;
  std::vector<long long> abelian_normal_sylow;  // primes q with an abelian normal Sylow q-subgroup
  GroupPtr huppert_normal;                      // N with G/N supersolvable and abelian Sylows
  bool huppert_hypothesis() const { return huppert_normal != nullptr; }
};

StructuralReport structural_predicates(const GroupPtr& G, std::size_t subgroup_cap = kDefaultSubgroupCap);

Json assignment_to_json(const OrderAssignment& a);
/// {"group", "label", "mode", "base": {"0": n, ...}}; every index is required (SchemaError).
OrderAssignment assignment_from_json(const Json& j, const ContextPtr& context);
Json search_report_to_json(const SearchReport& r);
Json theta_split_to_json(const ThetaSplit& s);

}  // namespace hk
