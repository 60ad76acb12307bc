#pragma once

#include <string>
#include <vector>

#include "hk/chartab.hpp"
#include "hk/json_io.hpp"
#include "hk/monomial.hpp"

namespace hk {

/// The formal product prod_chi L(s, chi)^{a_chi} over Irr(G), stored as one
/// integer exponent per row of the character table.
class FormalLSymbol {
 public:
  FormalLSymbol() = default;
  FormalLSymbol(TablePtr table, std::vector<long long> exponents);
  static FormalLSymbol unit(TablePtr table);
  /// Throws NotRational unless every coordinate of f is an integer.
  static FormalLSymbol of(TablePtr table, const ClassFunction& f);

  const TablePtr& table() const { return table_; }
  const std::vector<long long>& exponents() const { return exponents_; }
  long long operator[](std::size_t chi) const { return exponents_[chi]; }
  ClassFunction character() const;
  bool is_unit() const;

  /// Multiplication of symbols, i.e. exponent addition. GroupMismatch across groups.
  FormalLSymbol& operator+=(const FormalLSymbol& o);
  FormalLSymbol& operator-=(const FormalLSymbol& o);
  friend FormalLSymbol operator+(FormalLSymbol a, const FormalLSymbol& b) { return a += b; }
  friend FormalLSymbol operator-(FormalLSymbol a, const FormalLSymbol& b) { return a -= b; }
  friend bool operator==(const FormalLSymbol& a, const FormalLSymbol& b) {
    return a.table_ == b.table_ && a.exponents_ == b.exponents_;
  }

 private:
  TablePtr table_;
  std::vector<long long> exponents_;
};

enum class Holomorphy { Entire, HolomorphicExceptS1 };
std::string holomorphy_name(Holomorphy h);

struct HolomorphyCertificate {
  FormalLSymbol symbol;
  MonomialDecomposition decomposition;  // target = symbol.character()
  Holomorphy status = Holomorphy::Entire;

  /// Decomposition verifies, its target is the symbol's character, and an
  /// entire status has no trivial constituent anywhere.
  bool verify() const;
};

/// zeta_K: exponent chi(1) on every chi, the symbol of Reg_G.
FormalLSymbol artin_takagi(const TablePtr& table);
/// zeta of the fixed field of H: the symbol of Ind_H^G 1_H. Throws NotSubgroup.
FormalLSymbol dedekind_symbol(const TablePtr& table, const GroupPtr& H);

/// Ind_H^G 1_H - 1_G as a non-negative monomial combination. Throws NotSolvable.
HolomorphyCertificate certify_quotient_uvdw(const GroupPtr& G, const GroupPtr& H);

/// Linear characters of G restricting to psi on H.
std::vector<std::size_t> extensions_of(const TablePtr& table, const ClassFunction& psi);

/// Ind_H^G psi - sum_{chi in S_psi} chi. Throws NotSolvable, NotLinear.
HolomorphyCertificate certify_rr2(const GroupPtr& G, const ClassFunction& psi);

/// Ind_H^G psi - sum_{l(chi) <= i} (chi, Ind psi) chi. Throws NotSolvable, NotLinear.
HolomorphyCertificate certify_level(const GroupPtr& G, const ClassFunction& psi, std::size_t i);

/// {"chi_index": exponent} over the non-zero exponents.
Json symbol_to_json(const FormalLSymbol& s);
/// The monomial certificate plus "status" and "symbol".
Json certificate_to_json(const HolomorphyCertificate& c);

}  // namespace hk
