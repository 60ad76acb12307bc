#include "hk/monomial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hk/error.hpp"

namespace hk {

namespace {

std::vector<ClassFunction> linear_characters(const GroupPtr& H) {
  auto t = character_table(H);
  std::vector<ClassFunction> out;
  for (std::size_t i : t->linear_indices()) out.push_back((*t)[i]);
  return out;
}

// phibar on Kbar <= q.group, pulled back to K = preimage of Kbar.
ClassFunction pull_back(const ClassFunction& phibar, const Quotient& q, const GroupPtr& K) {
  const auto& G = *q.parent;
  const auto& Kbar = *phibar.group();
  return ClassFunction::from_elements(K, [&](std::size_t k) {
    std::size_t qk = q.projection[*G.index_of(K->element(k))];
    return phibar.at_element(*Kbar.index_of(q.group->element(qk)));
  });
}

std::vector<MonomialTerm> uvdw_terms(const GroupPtr& G, const GroupPtr& H);

// HA = G with A abelian normal and H meeting A trivially.
std::vector<MonomialTerm> lemma_terms(const GroupPtr& G, const GroupPtr& H, const GroupPtr& A) {
  auto tG = character_table(G);
  auto tA = character_table(A);
  auto dec = decompose(induce(ClassFunction::trivial(H), G), *tG);
  auto a_idx = embed(*A, *G);
  std::vector<bool> in_a(G->order(), false);
  for (std::size_t a : a_idx) in_a[a] = true;

  std::vector<MonomialTerm> terms;
  for (std::size_t i = 1; i < tG->size(); ++i) {
    if (dec.coeffs[i] == 0) continue;
    if (dec.coeffs[i] != 1) throw Error(ErrorCode::InternalVerificationFailed, "multiplicity above one in Ind_H 1");
    const ClassFunction& chi = (*tG)[i];
    auto res = restrict_to(chi, A);
    const ClassFunction* eps = nullptr;
    for (const auto& e : tA->irreducibles()) {
      if (!inner_product(res, e).is_zero()) {
        eps = &e;
        break;
      }
    }
    if (eps == nullptr) throw Error(ErrorCode::InternalVerificationFailed, "restriction to A vanished");
    // inertia group of eps
    std::vector<std::size_t> stab;
    for (std::size_t g = 0; g < G->order(); ++g) {
      bool fixes = true;
      for (std::size_t k = 0; k < a_idx.size() && fixes; ++k) {
        std::size_t moved = *A->index_of(G->element(G->conj(a_idx[k], g)));
        fixes = eps->at_element(moved) == eps->at_element(k);
      }
      if (fixes) stab.push_back(g);
    }
    auto T = subgroup_from_indices(*G, stab);
    auto He = intersection(*G, *H, *T);
    if (!join(*G, *He, *A)->same_as(*T)) {
      throw Error(ErrorCode::InternalVerificationFailed, "inertia group is not H_eps A");
    }
    auto he_idx = embed(*He, *G);
    // eps^(x a) = eps(a) for x in H_eps, a in A
    auto ext = ClassFunction::from_elements(T, [&](std::size_t t) {
      std::size_t gt = *G->index_of(T->element(t));
      std::optional<Cyclotomic> value;
      for (std::size_t x : he_idx) {
        std::size_t a = G->mul(G->inv(x), gt);
        if (!in_a[a]) continue;
        Cyclotomic v = eps->at_element(*A->index_of(G->element(a)));
        if (value && *value != v) throw Error(ErrorCode::InternalVerificationFailed, "extension not well defined");
        value = v;
      }
      if (!value) throw Error(ErrorCode::InternalVerificationFailed, "element outside H_eps A");
      return *value;
    });
    if (!is_linear_character(ext)) throw Error(ErrorCode::InternalVerificationFailed, "extension not multiplicative");
    if (induce(ext, G) != chi) throw Error(ErrorCode::InternalVerificationFailed, "induced extension differs from chi");
    terms.push_back({T, ext, Rational(1)});
  }
  return terms;
}

std::vector<MonomialTerm> uvdw_terms(const GroupPtr& G, const GroupPtr& H) {
  if (H->order() == G->order()) return {};
  auto mins = minimal_normal_subgroups(*G);
  for (const auto& N : mins) {
    if (!is_subgroup(*N, *H)) continue;
    auto q = quotient(G, *N);
    auto sub = uvdw_terms(q.group, q.image(*H));
    std::vector<MonomialTerm> lifted;
    for (auto& t : sub) {
      auto K = q.preimage(*t.subgroup);
      lifted.push_back({K, pull_back(t.linear_char, q, K), t.coefficient});
    }
    return lifted;
  }
  const GroupPtr& A = mins.front();
  auto HA = join(*G, *H, *A);
  if (HA->order() == G->order()) return lemma_terms(G, H, A);
  auto lower = uvdw_terms(HA, H);
  auto upper = uvdw_terms(G, HA);
  std::vector<MonomialTerm> out;
  for (auto& t : lower) out.push_back({subgroup_from_indices(*G, embed(*t.subgroup, *G)), t.linear_char, t.coefficient});
  out.insert(out.end(), upper.begin(), upper.end());
  return out;
}

void require_solvable(const GroupPtr& G) {
  if (!is_solvable(*G)) throw Error(ErrorCode::NotSolvable, G->name() + " is not solvable");
}

MonomialDecomposition checked(MonomialDecomposition d) {
  if (!d.verify()) throw Error(ErrorCode::VerificationFailed, "monomial certificate does not recompute to its target");
  return d;
}

}  // namespace

bool is_linear_character(const ClassFunction& phi) {
  if (phi.degree() != Cyclotomic(1)) return false;
  const auto& H = *phi.group();
  for (const Perm& gen : H.generators()) {
    std::size_t g = *H.index_of(gen);
    for (std::size_t y = 0; y < H.order(); ++y) {
      if (phi.at_element(g) * phi.at_element(y) != phi.at_element(H.mul(g, y))) return false;
    }
  }
  return true;
}

ClassFunction MonomialDecomposition::recompute() const {
  ClassFunction sum = ClassFunction::trivial(group) * Cyclotomic(residual_trivial);
  if (leading) sum += induce(leading->linear_char, group) * Cyclotomic(leading->coefficient);
  for (const auto& t : terms) sum += induce(t.linear_char, group) * Cyclotomic(t.coefficient);
  return sum;
}

bool MonomialDecomposition::verify() const {
  auto ok_term = [](const MonomialTerm& t) { return t.coefficient >= 0 && is_linear_character(t.linear_char); };
  if (leading && !ok_term(*leading)) return false;
  if (!std::all_of(terms.begin(), terms.end(), ok_term)) return false;
  return residual_trivial >= 0 && recompute() == target;
}

Json decomposition_to_json(const MonomialDecomposition& d) {
  auto term = [](const MonomialTerm& t) {
    return Json{{"subgroup_gens", group_to_json(*t.subgroup)["generators"]},
                {"linear_char", class_function_to_json(t.linear_char)},
                {"coeff", to_string(t.coefficient)}};
  };
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back(term(t));
  Json j{{"target", class_function_to_json(d.target)},
         {"residual_trivial", to_string(d.residual_trivial)},
         {"terms", terms}};
  if (d.leading) j["leading"] = term(*d.leading);
  return j;
}

MonomialDecomposition decompose_uvdw(const GroupPtr& G, const GroupPtr& H) {
  require_solvable(G);
  if (!is_subgroup(*H, *G)) throw Error(ErrorCode::NotSubgroup, "H is not a subgroup of G");
  MonomialDecomposition d;
  d.group = G;
  d.target = induce(ClassFunction::trivial(H), G);
  d.residual_trivial = 1;
  d.terms = uvdw_terms(G, H);
  return checked(std::move(d));
}

MonomialDecomposition decompose_uvdw_level(const GroupPtr& G, const GroupPtr& H, std::size_t i) {
  require_solvable(G);
  if (i < 1) throw Error(ErrorCode::InvalidArgument, "level index must be at least 1");
  if (!is_subgroup(*H, *G)) throw Error(ErrorCode::NotSubgroup, "H is not a subgroup of G");
  auto series = derived_series(*G);
  auto L = join(*G, *H, *series.term(i));
  MonomialDecomposition d;
  d.group = G;
  d.target = induce(ClassFunction::trivial(H), G);
  d.residual_trivial = 0;
  d.leading = MonomialTerm{L, ClassFunction::trivial(L), Rational(1)};
  // Ind_H^L 1 = 1_L + sum Ind chi_j inside L, then induce everything to G
  for (auto& t : uvdw_terms(L, H)) {
    d.terms.push_back({subgroup_from_indices(*G, embed(*t.subgroup, *G)), t.linear_char, t.coefficient});
  }
  return checked(std::move(d));
}

MonomialDecomposition twist_certificate(const MonomialDecomposition& d, const ClassFunction& chi0) {
  if (!same_group(chi0.group(), d.group)) throw Error(ErrorCode::GroupMismatch, "twist by a character of another group");
  if (!is_linear_character(chi0)) throw Error(ErrorCode::NotLinear, "twisting character is not linear");
  const bool trivial = chi0 == ClassFunction::trivial(d.group);
  auto tw = [&](const MonomialTerm& t) {
    return MonomialTerm{t.subgroup, twist(t.linear_char, restrict_to(chi0, t.subgroup)), t.coefficient};
  };
  MonomialDecomposition out;
  out.group = d.group;
  out.target = twist(d.target, chi0);
  out.residual_trivial = trivial ? d.residual_trivial : Rational(0);
  if (d.leading) out.leading = tw(*d.leading);
  for (const auto& t : d.terms) out.terms.push_back(tw(t));
  if (!trivial && d.residual_trivial != 0) out.terms.push_back({d.group, chi0, d.residual_trivial});
  return checked(std::move(out));
}

PairingReport pairing_levels(const GroupPtr& G, const GroupPtr& H, const ClassFunction& psi, std::size_t i) {
  require_solvable(G);
  if (!same_group(psi.group(), H)) throw Error(ErrorCode::GroupMismatch, "psi is not a character of H");
  if (!is_linear_character(psi)) throw Error(ErrorCode::NotLinear, "psi is not linear");
  auto series = derived_series(*G);
  auto tG = character_table(G);
  const auto& Gi = series.term(i);
  PairingReport r;
  auto ind = induce(psi, G);
  for (const auto& chi : tG->irreducibles()) {
    r.levels.push_back(level(chi, series));
    r.induced.push_back(inner_product_q(ind, chi));
  }
  auto meet = intersection(*G, *H, *Gi);
  r.trivial_on_intersection = true;
  for (const Perm& x : meet->elements()) {
    if (psi.at_element(*H->index_of(x)) != Cyclotomic(1)) {
      r.trivial_on_intersection = false;
      break;
    }
  }
  if (!r.trivial_on_intersection) {
    r.fallback_holds = true;
    for (std::size_t c = 0; c < tG->size(); ++c) {
      if (r.levels[c] <= i && r.induced[c] != 0) r.fallback_holds = false;
    }
    return r;
  }
  auto L = join(*G, *H, *Gi);
  std::vector<bool> in_gi(G->order(), false);
  for (std::size_t x : embed(*Gi, *G)) in_gi[x] = true;
  auto h_idx = embed(*H, *G);
  auto ext = ClassFunction::from_elements(L, [&](std::size_t x) {
    std::size_t gx = *G->index_of(L->element(x));
    for (std::size_t k = 0; k < h_idx.size(); ++k) {
      if (in_gi[G->mul(G->inv(h_idx[k]), gx)]) return psi.at_element(k);
    }
    throw Error(ErrorCode::InternalVerificationFailed, "element of HG^i without a factorization");
  });
  auto ind_ext = induce(ext, G);
  ClassFunction partial = ClassFunction::zero(G);
  r.dichotomy_holds = true;
  for (std::size_t c = 0; c < tG->size(); ++c) {
    r.extended.push_back(inner_product_q(ind_ext, (*tG)[c]));
    const Rational expect = r.levels[c] <= i ? r.induced[c] : Rational(0);
    if (r.extended.back() != expect) r.dichotomy_holds = false;
    if (r.levels[c] <= i) partial += (*tG)[c] * Cyclotomic(r.induced[c]);
  }
  r.sum_identity_holds = partial == ind_ext;
  return r;
}

LevelIdentityReport level_identity(const GroupPtr& G, std::size_t i) {
  require_solvable(G);
  auto series = derived_series(*G);
  auto tG = character_table(G);
  LevelIdentityReport r;
  r.i = i;
  r.lhs = induce(ClassFunction::trivial(series.term(i)), G);
  r.unweighted_rhs = ClassFunction::zero(G);
  r.weighted_rhs = ClassFunction::zero(G);
  for (std::size_t c = 0; c < tG->size(); ++c) {
    if (level((*tG)[c], series) > i) continue;
    r.unweighted_rhs += (*tG)[c];
    r.weighted_rhs += (*tG)[c] * Cyclotomic(static_cast<long long>(tG->degrees()[c]));
  }
  r.unweighted_holds = r.lhs == r.unweighted_rhs;
  r.weighted_holds = r.lhs == r.weighted_rhs;
  return r;
}

std::optional<MonomialWitness> monomial_witness(const ClassFunction& chi, std::size_t subgroup_cap) {
  const GroupPtr& G = chi.group();
  const Rational deg = chi.degree().rational_value();
  for (const auto& H : subgroups(*G, subgroup_cap)) {
    if (Rational(static_cast<long>(G->order() / H->order())) != deg) continue;
    auto res = restrict_to(chi, H);
    for (const auto& phi : linear_characters(H)) {
      if (inner_product(phi, res) == Cyclotomic(1)) return MonomialWitness{H, phi};
    }
  }
  return std::nullopt;
}

MGroupReport is_m_group(const GroupPtr& G, std::size_t subgroup_cap) {
  auto tG = character_table(G);
  MGroupReport r;
  for (std::size_t c = 0; c < tG->size(); ++c) {
    r.witnesses.push_back(monomial_witness((*tG)[c], subgroup_cap));
    if (!r.witnesses.back()) {
      r.is_m_group = false;
      r.non_monomial.push_back(c);
    }
  }
  return r;
}

MonomialFamily monomial_family(const GroupPtr& G, bool cyclic_only, std::size_t subgroup_cap) {
  auto tG = character_table(G);
  MonomialFamily fam;
  std::set<std::vector<Rational>> seen;
  auto subs = cyclic_only ? cyclic_subgroups(*G) : subgroups(*G, subgroup_cap);
  for (const auto& H : subs) {
    std::vector<ClassFunction> res;
    for (const auto& chi : tG->irreducibles()) res.push_back(restrict_to(chi, H));
    for (const auto& phi : linear_characters(H)) {
      std::vector<Rational> v;
      for (const auto& rc : res) v.push_back(inner_product_q(phi, rc));
      if (!seen.insert(v).second) continue;
      fam.members.push_back({H, phi});
      fam.coords.push_back(std::move(v));
    }
  }
  return fam;
}

namespace {

// Integer solution x of sum x_f rows[f] = target, if the target lies in the row lattice.
std::optional<std::vector<Integer>> solve_integer(const std::vector<std::vector<Integer>>& rows,
                                                  const std::vector<Integer>& target) {
  const std::size_t m = rows.size();
  const std::size_t r = target.size();
  std::vector<std::vector<Integer>> a = rows;
  std::vector<std::vector<Integer>> u(m, std::vector<Integer>(m, 0));
  for (std::size_t f = 0; f < m; ++f) u[f][f] = 1;
  auto sub_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < r; ++c) a[dst][c] -= q * a[src][c];
    for (std::size_t c = 0; c < m; ++c) u[dst][c] -= q * u[src][c];
  };
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t p = 0;
  for (std::size_t c = 0; c < r && p < m; ++c) {
    while (true) {
      std::size_t best = m;
      for (std::size_t f = p; f < m; ++f) {
        if (a[f][c] != 0 && (best == m || abs(a[f][c]) < abs(a[best][c]))) best = f;
      }
      if (best == m) break;
      std::swap(a[p], a[best]);
      std::swap(u[p], u[best]);
      bool clean = true;
      for (std::size_t f = p + 1; f < m; ++f) {
        if (a[f][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[f][c].get_mpz_t(), a[p][c].get_mpz_t());
        sub_row(f, p, q);
        if (a[f][c] != 0) clean = false;
      }
      if (clean) {
        pivots.emplace_back(p, c);
        ++p;
        break;
      }
    }
  }
  std::vector<Integer> t = target;
  std::vector<Integer> x(m, 0);
  for (auto [row, col] : pivots) {
    if (t[col] == 0) continue;
    if (t[col] % a[row][col] != 0) return std::nullopt;
    Integer q = t[col] / a[row][col];
    for (std::size_t c = 0; c < r; ++c) t[c] -= q * a[row][c];
    for (std::size_t f = 0; f < m; ++f) x[f] += q * u[row][f];
  }
  for (const auto& v : t) {
    if (v != 0) return std::nullopt;
  }
  return x;
}

std::vector<Integer> to_integers(const std::vector<Rational>& v) {
  std::vector<Integer> out;
  for (const auto& q : v) {
    if (!is_integer(q)) throw Error(ErrorCode::InternalVerificationFailed, "non-integral multiplicity");
    out.push_back(q.get_num());
  }
  return out;
}

}  // namespace

BrauerWitness brauer_witness(const GroupPtr& G, std::size_t chi_index, long long box, std::size_t subgroup_cap) {
  auto tG = character_table(G);
  if (chi_index >= tG->size()) throw Error(ErrorCode::InvalidArgument, "character index out of range");
  BrauerWitness w;
  w.character = chi_index;
  std::vector<Integer> target(tG->size(), 0);
  target[chi_index] = 1;
  for (bool cyclic : {true, false}) {
    auto fam = monomial_family(G, cyclic, subgroup_cap);
    std::vector<std::vector<Integer>> rows;
    for (const auto& c : fam.coords) rows.push_back(to_integers(c));
    auto x = solve_integer(rows, target);
    if (!x) continue;
    w.cyclic_only = cyclic;
    ClassFunction sum = ClassFunction::zero(G);
    for (std::size_t f = 0; f < x->size(); ++f) {
      if ((*x)[f] == 0) continue;
      Rational n((*x)[f]);
      w.terms.push_back({fam.members[f].subgroup, fam.members[f].linear_char, n});
      w.max_abs_coefficient = std::max<long long>(w.max_abs_coefficient, Integer(abs((*x)[f])).get_si());
      sum += induce(fam.members[f].linear_char, G) * Cyclotomic(n);
    }
    w.within_box = w.max_abs_coefficient <= box;
    w.verified = sum == (*tG)[chi_index];
    return w;
  }
  throw Error(ErrorCode::InternalVerificationFailed, "no integral induction formula found");
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

bool dual_nonnegative(const std::vector<Rational>& psi, const MonomialFamily& family) {
  return std::all_of(family.coords.begin(), family.coords.end(), [&](const auto& f) { return dot(psi, f) >= 0; });
}

ConeResult cone_membership(const std::vector<Rational>& psi, const MonomialFamily& family) {
  if (family.members.empty()) throw Error(ErrorCode::EmptyFamily, "monomial family is empty");
  const std::size_t r = psi.size();
  const std::size_t n = family.coords.size();
  const std::size_t cols = n + r;  // originals then artificials; rhs kept separately
  std::vector<std::vector<Rational>> tab(r, std::vector<Rational>(cols, 0));
  std::vector<Rational> rhs(r);
  std::vector<int> sign(r, 1);
  for (std::size_t i = 0; i < r; ++i) {
    if (psi[i] < 0) sign[i] = -1;
    for (std::size_t f = 0; f < n; ++f) tab[i][f] = sign[i] * family.coords[f][i];
    tab[i][n + i] = 1;
    rhs[i] = sign[i] * psi[i];
  }
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) basis[i] = n + i;
  // reduced costs of the phase-one objective (sum of artificials)
  std::vector<Rational> cost(cols, 0);
  Rational objective = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= tab[i][j];
    objective += rhs[i];
  }
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = r;
    Rational best;
    for (std::size_t i = 0; i < r; ++i) {
      if (tab[i][enter] <= 0) continue;
      Rational ratio = rhs[i] / tab[i][enter];
      if (leave == r || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == r) throw Error(ErrorCode::InternalVerificationFailed, "phase-one objective unbounded");
    const Rational piv = tab[leave][enter];
    for (auto& v : tab[leave]) v /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == leave || tab[i][enter] == 0) continue;
      const Rational f = tab[i][enter];
      for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * tab[leave][j];
    objective += f * rhs[leave];
    basis[leave] = enter;
  }

  ConeResult res;
  if (objective == 0) {
    res.member = true;
    std::vector<Rational> coeff(n, 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (basis[i] < n) coeff[basis[i]] = rhs[i];
    }
    std::vector<Rational> sum(r, 0);
    bool positive = true;
    for (std::size_t f = 0; f < n; ++f) {
      if (coeff[f] == 0) continue;
      if (coeff[f] < 0) positive = false;
      res.certificate.emplace_back(f, coeff[f]);
      for (std::size_t i = 0; i < r; ++i) sum[i] += coeff[f] * family.coords[f][i];
    }
    res.verified = positive && sum == psi;
  } else {
    for (std::size_t f = 0; f < n; ++f) {
      Rational v = dot(psi, family.coords[f]);
      if (v < 0) {
        res.separating_member = f;
        res.separating_value = v;
        break;
      }
    }
    if (res.separating_member) {
      res.verified = true;
    } else {
      // y_i = 1 - reduced cost of artificial i; z = -sign * y
      res.farkas.resize(r);
      for (std::size_t i = 0; i < r; ++i) res.farkas[i] = -sign[i] * (1 - cost[n + i]);
      res.separating_value = dot(res.farkas, psi);
      res.verified = res.separating_value < 0 && dual_nonnegative(res.farkas, family);
    }
  }
  if (!res.verified) throw Error(ErrorCode::InternalVerificationFailed, "cone certificate failed to verify");
  return res;
}

}  // namespace hk
