#pragma once

#include <string>
#include <vector>

#include "hk/group.hpp"

namespace hk::testing {

inline GroupPtr from_cycles(std::size_t degree, const std::vector<std::string>& gens, std::string name = {}) {
  std::vector<Perm> ps;
  for (const auto& g : gens) ps.push_back(Perm::from_cycles(degree, g));
  return PermutationGroup::closure(degree, ps, std::move(name));
}

inline GroupPtr cyclic(std::size_t n) {
  std::string c = "(";
  for (std::size_t i = 1; i <= n; ++i) c += std::to_string(i) + (i < n ? " " : ")");
  if (n == 1) c = "()";
  return from_cycles(n, {c}, "C" + std::to_string(n));
}

inline GroupPtr s3() { return from_cycles(3, {"(1 2 3)", "(1 2)"}, "S3"); }
inline GroupPtr s4() { return from_cycles(4, {"(1 2 3 4)", "(1 2)"}, "S4"); }
inline GroupPtr a4() { return from_cycles(4, {"(1 2 3)", "(2 3 4)"}, "A4"); }
inline GroupPtr d4() { return from_cycles(4, {"(1 2 3 4)", "(1 3)"}, "D4"); }
inline GroupPtr a5() { return from_cycles(5, {"(1 2 3 4 5)", "(1 2 3)"}, "A5"); }
inline GroupPtr klein() { return from_cycles(4, {"(1 2)", "(3 4)"}, "C2xC2"); }
inline GroupPtr s3xc2() { return from_cycles(5, {"(1 2 3)", "(1 2)", "(4 5)"}, "S3xC2"); }
inline GroupPtr d6() { return from_cycles(6, {"(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"}, "D6"); }
// regular representation of Q8 on {1,i,j,k,-1,-i,-j,-k} = points 1..8
inline GroupPtr q8() { return from_cycles(8, {"(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"}, "Q8"); }
// SL(2,3) acting on the 8 nonzero vectors of F_3^2
inline GroupPtr sl23() {
  return PermutationGroup::closure(8, {Perm::from_one_based({4, 8, 3, 7, 2, 6, 1, 5}),
                                       Perm::from_one_based({6, 3, 1, 7, 4, 2, 8, 5})},
                                   "SL(2,3)");
}

}  // namespace hk::testing
