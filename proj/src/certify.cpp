#include "hk/certify.hpp"

#include "hk/error.hpp"

namespace hk {

namespace {

void require_solvable(const GroupPtr& G) {
  if (!is_solvable(*G)) throw Error(ErrorCode::NotSolvable, G->name() + " is not solvable");
}

void require_linear(const ClassFunction& psi) {
  if (!is_linear_character(psi)) throw Error(ErrorCode::NotLinear, "psi is not a linear character");
}

void require_subgroup(const GroupPtr& H, const GroupPtr& G) {
  if (!is_subgroup(*H, *G)) throw Error(ErrorCode::NotSubgroup, "H is not a subgroup of G");
}

bool has_trivial_constituent(const MonomialTerm& t) {
  return t.coefficient != 0 && t.linear_char == ClassFunction::trivial(t.subgroup);
}

HolomorphyCertificate finish(const TablePtr& table, MonomialDecomposition d) {
  HolomorphyCertificate c;
  c.symbol = FormalLSymbol::of(table, d.target);
  const bool pole = inner_product_q(d.target, ClassFunction::trivial(d.group)) != 0;
  c.status = pole ? Holomorphy::HolomorphicExceptS1 : Holomorphy::Entire;
  c.decomposition = std::move(d);
  if (!c.verify()) throw Error(ErrorCode::InternalVerificationFailed, "holomorphy certificate does not verify");
  return c;
}

// Re-expresses a subgroup of an intermediate group as a subgroup of G.
GroupPtr rehome(const GroupPtr& K, const GroupPtr& G) { return subgroup_from_indices(*G, embed(*K, *G)); }

}  // namespace

FormalLSymbol::FormalLSymbol(TablePtr table, std::vector<long long> exponents)
    : table_(std::move(table)), exponents_(std::move(exponents)) {
  if (exponents_.size() != table_->size()) throw Error(ErrorCode::InvalidArgument, "one exponent per irreducible");
}

FormalLSymbol FormalLSymbol::unit(TablePtr table) {
  std::vector<long long> zero(table->size(), 0);
  return FormalLSymbol(std::move(table), std::move(zero));
}

FormalLSymbol FormalLSymbol::of(TablePtr table, const ClassFunction& f) {
  auto v = decompose(f, *table);
  std::vector<long long> e;
  for (const auto& c : v.coeffs) e.push_back(to_int64(c));
  return FormalLSymbol(std::move(table), std::move(e));
}

ClassFunction FormalLSymbol::character() const {
  ClassFunction f = ClassFunction::zero(table_->group());
  for (std::size_t c = 0; c < exponents_.size(); ++c) {
    if (exponents_[c] != 0) f += (*table_)[c] * Cyclotomic(exponents_[c]);
  }
  return f;
}

bool FormalLSymbol::is_unit() const {
  for (long long e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

FormalLSymbol& FormalLSymbol::operator+=(const FormalLSymbol& o) {
  if (!same_group(table_->group(), o.table_->group())) throw Error(ErrorCode::GroupMismatch, "symbols of different groups");
  for (std::size_t c = 0; c < exponents_.size(); ++c) exponents_[c] += o.exponents_[c];
  return *this;
}

FormalLSymbol& FormalLSymbol::operator-=(const FormalLSymbol& o) {
  if (!same_group(table_->group(), o.table_->group())) throw Error(ErrorCode::GroupMismatch, "symbols of different groups");
  for (std::size_t c = 0; c < exponents_.size(); ++c) exponents_[c] -= o.exponents_[c];
  return *this;
}

std::string holomorphy_name(Holomorphy h) { return h == Holomorphy::Entire ? "entire" : "holomorphic-except-s1"; }

bool HolomorphyCertificate::verify() const {
  const auto& d = decomposition;
  if (!d.verify() || !(d.target == symbol.character())) return false;
  const auto one = ClassFunction::trivial(d.group);
  const bool pole = inner_product_q(d.target, one) != 0;
  if (status == Holomorphy::HolomorphicExceptS1) return true;
  if (pole || d.residual_trivial != 0) return false;
  if (d.leading && has_trivial_constituent(*d.leading)) return false;
  for (const auto& t : d.terms) {
    if (has_trivial_constituent(t)) return false;
  }
  return true;
}

FormalLSymbol artin_takagi(const TablePtr& table) {
  std::vector<long long> e(table->degrees().begin(), table->degrees().end());
  return FormalLSymbol(table, std::move(e));
}

FormalLSymbol dedekind_symbol(const TablePtr& table, const GroupPtr& H) {
  require_subgroup(H, table->group());
  return FormalLSymbol::of(table, induce(ClassFunction::trivial(H), table->group()));
}

HolomorphyCertificate certify_quotient_uvdw(const GroupPtr& G, const GroupPtr& H) {
  require_solvable(G);
  auto d = decompose_uvdw(G, H);
  d.target -= ClassFunction::trivial(G);
  d.residual_trivial -= 1;
  return finish(character_table(G), std::move(d));
}

std::vector<std::size_t> extensions_of(const TablePtr& table, const ClassFunction& psi) {
  const auto& H = psi.group();
  std::vector<std::size_t> out;
  for (std::size_t c : table->linear_indices()) {
    if (restrict_to((*table)[c], H) == psi) out.push_back(c);
  }
  return out;
}

HolomorphyCertificate certify_rr2(const GroupPtr& G, const ClassFunction& psi) {
  require_solvable(G);
  require_linear(psi);
  const auto& H = psi.group();
  require_subgroup(H, G);
  auto table = character_table(G);
  auto S = extensions_of(table, psi);
  if (S.empty()) {
    MonomialDecomposition d;
    d.group = G;
    d.target = induce(psi, G);
    d.residual_trivial = 0;
    d.terms.push_back({rehome(H, G), psi, Rational(1)});
    return finish(table, std::move(d));
  }
  const auto& chi0 = (*table)[S.front()];
  auto d = twist_certificate(decompose_uvdw_level(G, H, 1), chi0);
  // the twisted leading term Ind_{HG^1}(chi0|) is exactly the sum over S_psi
  ClassFunction sum = ClassFunction::zero(G);
  for (std::size_t c : S) sum += (*table)[c];
  const auto& L = d.leading->subgroup;
  if (induce(d.leading->linear_char, G) != sum || S.size() * L->order() != G->order()) {
    throw Error(ErrorCode::InternalVerificationFailed, "extensions of psi do not match Ind_{HG^1}");
  }
  d.leading.reset();
  d.target -= sum;
  return finish(table, std::move(d));
}

HolomorphyCertificate certify_level(const GroupPtr& G, const ClassFunction& psi, std::size_t i) {
  require_solvable(G);
  require_linear(psi);
  const auto& H = psi.group();
  require_subgroup(H, G);
  auto table = character_table(G);
  auto series = derived_series(*G);
  const auto& Gi = series.term(i);
  auto ind = induce(psi, G);
  ClassFunction low = ClassFunction::zero(G);
  for (std::size_t c = 0; c < table->size(); ++c) {
    if (level((*table)[c], series) <= i) low += (*table)[c] * Cyclotomic(inner_product_q(ind, (*table)[c]));
  }
  MonomialDecomposition d;
  d.group = G;
  d.target = ind - low;
  d.residual_trivial = 0;

  bool trivial_on_meet = true;
  auto meet = intersection(*G, *H, *Gi);
  for (const Perm& x : meet->elements()) {
    trivial_on_meet = trivial_on_meet && psi.at_element(*H->index_of(x)) == Cyclotomic(1);
  }
  if (!trivial_on_meet) {
    if (!low.is_zero()) throw Error(ErrorCode::InternalVerificationFailed, "low-level constituents in Ind psi");
    d.terms.push_back({rehome(H, G), psi, Rational(1)});
    return finish(table, std::move(d));
  }

  // psi extends to K = HG^i through K/G^i; Ind_H^K psi = psi' (Ind_H^K 1 - 1_K) + psi'
  auto K = join(*G, *H, *Gi);
  auto ext = ClassFunction::from_elements(K, [&](std::size_t k) {
    const Perm& x = K->element(k);
    for (std::size_t h = 0; h < H->order(); ++h) {
      if (Gi->index_of(H->element(h).inverse() * x)) return psi.at_element(h);
    }
    throw Error(ErrorCode::InternalVerificationFailed, "HG^i coset without a representative in H");
  });
  if (induce(ext, G) != low) throw Error(ErrorCode::InternalVerificationFailed, "Ind_{HG^i} psi' differs from the low-level part");
  for (const auto& t : decompose_uvdw(K, H).terms) {
    d.terms.push_back({rehome(t.subgroup, G), twist(t.linear_char, restrict_to(ext, t.subgroup)), t.coefficient});
  }
  return finish(table, std::move(d));
}

Json symbol_to_json(const FormalLSymbol& s) {
  Json j = Json::object();
  for (std::size_t c = 0; c < s.exponents().size(); ++c) {
    if (s[c] != 0) j[std::to_string(c)] = s[c];
  }
  return j;
}

Json certificate_to_json(const HolomorphyCertificate& c) {
  Json j = decomposition_to_json(c.decomposition);
  j["status"] = holomorphy_name(c.status);
  j["symbol"] = symbol_to_json(c.symbol);
  return j;
}

}  // namespace hk
