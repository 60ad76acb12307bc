#include "hk/classfun.hpp"

#include <algorithm>

#include "hk/chartab.hpp"
#include "hk/error.hpp"

namespace hk {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->num_classes()) {
    throw Error(ErrorCode::InvalidArgument, "class function has " + std::to_string(values_.size()) +
                                                " values for " + std::to_string(group_->num_classes()) + " classes");
  }
}

ClassFunction ClassFunction::constant(GroupPtr group, const Cyclotomic& c) {
  std::vector<Cyclotomic> v(group->num_classes(), c);
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::regular(GroupPtr group) {
  std::vector<Cyclotomic> v(group->num_classes(), Cyclotomic(0));
  v[0] = Cyclotomic(static_cast<long long>(group->order()));
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::from_elements(GroupPtr group, const std::function<Cyclotomic(std::size_t)>& f) {
  std::vector<Cyclotomic> v;
  v.reserve(group->num_classes());
  for (const auto& c : group->classes()) v.push_back(f(c.representative));
  return ClassFunction(std::move(group), std::move(v));
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool ClassFunction::is_rational() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& c) { return c.is_rational(); });
}

bool ClassFunction::is_constant() const {
  return std::all_of(values_.begin(), values_.end(), [&](const Cyclotomic& c) { return c == values_[0]; });
}

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (!same_group(a.group(), b.group())) {
    throw Error(ErrorCode::GroupMismatch, "class functions live on different groups");
  }
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_group(*this, o);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += o.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_group(*this, o);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= o.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

ClassFunction ClassFunction::operator-() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return same_group(a.group_, b.group_) && a.values_ == b.values_;
}

bool VirtualCharacter::is_integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return is_integer(r); });
}

bool VirtualCharacter::is_character() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& r) { return is_integer(r) && r >= 0; });
}

std::vector<std::size_t> VirtualCharacter::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out.push_back(i);
  }
  return out;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  const auto& G = *a.group();
  Cyclotomic sum(0);
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    Cyclotomic term = a[c] * b[c].conjugate();
    term *= Cyclotomic(static_cast<long long>(G.classes()[c].size()));
    sum += term;
  }
  sum *= Cyclotomic(make_rational(1, static_cast<long long>(G.order())));
  return sum;
}

Rational inner_product_q(const ClassFunction& a, const ClassFunction& b) {
  return inner_product(a, b).rational_value();
}

ClassFunction restrict_to(const ClassFunction& f, const GroupPtr& H) {
  const auto& G = *f.group();
  if (!is_subgroup(*H, G)) throw Error(ErrorCode::NotSubgroup, "restriction target is not a subgroup");
  return ClassFunction::from_elements(H, [&](std::size_t h) {
    return f.at_element(*G.index_of(H->element(h)));
  });
}

ClassFunction induce(const ClassFunction& f, const GroupPtr& G) {
  const auto& H = *f.group();
  if (!is_subgroup(H, *G)) throw Error(ErrorCode::NotSubgroup, "induction source is not a subgroup");
  constexpr std::size_t kOutside = static_cast<std::size_t>(-1);
  std::vector<std::size_t> hclass(G->order(), kOutside);
  auto emb = embed(H, *G);
  for (std::size_t i = 0; i < emb.size(); ++i) hclass[emb[i]] = H.class_of(i);
  const Rational inv_h = make_rational(1, static_cast<long long>(H.order()));
  return ClassFunction::from_elements(G, [&](std::size_t x) {
    std::vector<long long> counts(H.num_classes(), 0);
    for (std::size_t g = 0; g < G->order(); ++g) {
      std::size_t c = hclass[G->conj(x, g)];
      if (c != kOutside) ++counts[c];
    }
    Cyclotomic v(0);
    for (std::size_t c = 0; c < counts.size(); ++c) {
      if (counts[c] != 0) v += f[c] * Cyclotomic(counts[c]);
    }
    return v * Cyclotomic(inv_h);
  });
}

ClassFunction inflate(const ClassFunction& f, const Quotient& q) {
  if (!same_group(f.group(), q.group)) {
    throw Error(ErrorCode::GroupMismatch, "inflation expects a class function of the quotient");
  }
  return ClassFunction::from_elements(q.parent, [&](std::size_t x) { return f.at_element(q.projection[x]); });
}

ClassFunction twist(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  std::vector<Cyclotomic> v(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) v[c] = a[c] * b[c];
  return ClassFunction(a.group(), std::move(v));
}

ClassFunction complex_conjugate(const ClassFunction& f) {
  std::vector<Cyclotomic> v;
  v.reserve(f.size());
  for (const auto& x : f.values()) v.push_back(x.conjugate());
  return ClassFunction(f.group(), std::move(v));
}

ClassFunction conjugate_by(const ClassFunction& f, const PermutationGroup& G, std::size_t x, const GroupPtr& xHx) {
  const auto& H = *f.group();
  return ClassFunction::from_elements(xHx, [&](std::size_t y) {
    std::size_t gy = *G.index_of(xHx->element(y));
    auto h = H.index_of(G.element(G.conj(gy, x)));
    if (!h) throw Error(ErrorCode::NotSubgroup, "conjugated subgroup does not match");
    return f.at_element(*h);
  });
}

GroupPtr kernel(const ClassFunction& chi) {
  const auto& G = *chi.group();
  std::vector<std::size_t> k;
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (chi.at_element(x) == chi.degree()) k.push_back(x);
  }
  return subgroup_from_indices(G, k);
}

bool is_faithful(const ClassFunction& chi) { return kernel(chi)->order() == 1; }

bool is_linear(const ClassFunction& chi) { return chi.degree() == Cyclotomic(1); }

std::size_t level(const ClassFunction& chi, const DerivedSeries& series) {
  if (!series.solvable()) throw Error(ErrorCode::NotSolvable, "level needs a solvable group");
  const auto& G = *chi.group();
  for (std::size_t i = 0; i < series.terms.size(); ++i) {
    bool trivial = true;
    for (std::size_t x : embed(*series.terms[i], G)) {
      if (chi.at_element(x) != chi.degree()) {
        trivial = false;
        break;
      }
    }
    if (trivial) return i;
  }
  throw Error(ErrorCode::InternalVerificationFailed, "character nontrivial on the identity");
}

std::size_t level(const ClassFunction& chi) { return level(chi, derived_series(*chi.group())); }

VirtualCharacter decompose(const ClassFunction& f, const CharacterTable& table) {
  if (!same_group(f.group(), table.group())) {
    throw Error(ErrorCode::GroupMismatch, "table belongs to a different group");
  }
  VirtualCharacter v;
  v.coeffs.reserve(table.size());
  for (const auto& chi : table.irreducibles()) v.coeffs.push_back(inner_product_q(f, chi));
  return v;
}

ClassFunction reconstruct(const VirtualCharacter& v, const CharacterTable& table) {
  ClassFunction out = ClassFunction::zero(table.group());
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
    if (v.coeffs[i] != 0) out += table[i] * Cyclotomic(v.coeffs[i]);
  }
  return out;
}

CliffordReport clifford_check(const ClassFunction& chi, const GroupPtr& N) {
  const auto& G = chi.group();
  if (!is_normal(*G, *N)) throw Error(ErrorCode::NotNormal, "Clifford check needs a normal subgroup");
  const std::size_t p = G->order() / N->order();
  if (prime_divisors(static_cast<long long>(p)) != std::vector<long long>{static_cast<long long>(p)}) {
    throw Error(ErrorCode::IndexNotPrime, "index " + std::to_string(p) + " is not prime");
  }
  CliffordReport r;
  r.prime = p;
  auto res = restrict_to(chi, N);
  auto tN = character_table(N);
  r.restriction = decompose(res, *tN);
  r.constituents = r.restriction.support();
  Rational norm = inner_product_q(res, res);
  if (norm == 1) {
    r.irreducible_restriction = true;
    r.holds = true;
    return r;
  }
  r.holds = norm == static_cast<long>(p) && r.constituents.size() == p;
  for (std::size_t i : r.constituents) {
    if (!r.holds) break;
    r.holds = r.restriction.coeffs[i] == 1 && induce((*tN)[i], G) == chi;
  }
  return r;
}

MackeyReport mackey_check(const ClassFunction& psi, const GroupPtr& G, const GroupPtr& K) {
  const GroupPtr& H = psi.group();
  MackeyReport r;
  r.lhs = restrict_to(induce(psi, G), K);
  r.rhs = ClassFunction::zero(K);
  r.double_cosets = double_coset_representatives(*G, *K, *H);
  for (std::size_t x : r.double_cosets) {
    auto xHx = conjugate_subgroup(*G, *H, x);
    auto meet = intersection(*G, *K, *xHx);
    r.rhs += induce(restrict_to(conjugate_by(psi, *G, x, xHx), meet), K);
  }
  auto hk = intersection(*G, *H, *K);
  r.hk_is_g = H->order() * K->order() == G->order() * hk->order();
  if (r.hk_is_g) r.special_case_holds = r.lhs == induce(restrict_to(psi, hk), K);
  r.holds = r.lhs == r.rhs && r.special_case_holds;
  return r;
}

}  // namespace hk
