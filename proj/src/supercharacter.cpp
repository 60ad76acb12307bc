#include "hk/supercharacter.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "hk/error.hpp"

namespace hk {

namespace {

void require_partition(const Partition& p, std::size_t n, const char* what) {
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (const auto& part : p) {
    if (part.empty()) throw Error(ErrorCode::NotPartition, std::string(what) + " has an empty part");
    for (std::size_t x : part) {
      if (x >= n) throw Error(ErrorCode::NotPartition, std::string(what) + " mentions " + std::to_string(x) + " out of range");
      if (seen[x]) throw Error(ErrorCode::NotPartition, std::string(what) + " repeats " + std::to_string(x));
      seen[x] = true;
      ++count;
    }
  }
  if (count != n) throw Error(ErrorCode::NotPartition, std::string(what) + " does not cover everything");
}

Partition normalized(Partition p) {
  for (auto& part : p) std::sort(part.begin(), part.end());
  std::sort(p.begin(), p.end());
  return p;
}

bool constant_on(const ClassFunction& f, const std::vector<std::size_t>& elements) {
  for (std::size_t e : elements) {
    if (f.at_element(e) != f.at_element(elements.front())) return false;
  }
  return true;
}

Rational to_q(long long x) { return Rational(static_cast<long>(x)); }

}  // namespace

ClassFunction supercharacter(const CharacterTable& table, const std::vector<std::size_t>& part) {
  ClassFunction s = ClassFunction::zero(table.group());
  for (std::size_t c : part) s += table[c] * Cyclotomic(static_cast<long long>(table.degrees()[c]));
  return s;
}

SctReport verify_sct(const CharacterTable& table, const Partition& X, const Partition& K) {
  const auto& G = *table.group();
  require_partition(X, table.size(), "X");
  require_partition(K, G.order(), "K");
  SctReport r;
  r.identity_singleton = std::any_of(K.begin(), K.end(), [](const auto& p) { return p.size() == 1 && p[0] == 0; });
  r.equal_sizes = X.size() == K.size();
  std::vector<ClassFunction> sup;
  for (const auto& x : X) sup.push_back(supercharacter(table, x));
  r.constant = std::all_of(sup.begin(), sup.end(), [&](const ClassFunction& s) {
    return std::all_of(K.begin(), K.end(), [&](const auto& k) { return constant_on(s, k); });
  });
  r.unions_of_classes = std::all_of(K.begin(), K.end(), [&](auto k) {
    std::sort(k.begin(), k.end());
    for (std::size_t e : k) {
      for (std::size_t m : G.classes()[G.class_of(e)].members) {
        if (!std::binary_search(k.begin(), k.end(), m)) return false;
      }
    }
    return true;
  });
  r.orthogonal = true;
  ClassFunction total = ClassFunction::zero(table.group());
  for (std::size_t i = 0; i < sup.size(); ++i) {
    total += sup[i];
    for (std::size_t j = i + 1; j < sup.size(); ++j) {
      if (!inner_product(sup[i], sup[j]).is_zero()) r.orthogonal = false;
    }
  }
  r.sums_to_regular = total == ClassFunction::regular(table.group());
  return r;
}

SupercharacterTheory::SupercharacterTheory(TablePtr table, Partition X, Partition K)
    : table_(std::move(table)), X_(normalized(std::move(X))), K_(normalized(std::move(K))) {
  auto rep = verify_sct(*table_, X_, K_);
  if (!rep.valid()) throw Error(ErrorCode::VerificationFailed, "partitions do not form a supercharacter theory");
  if (!rep.unions_of_classes) throw Error(ErrorCode::VerificationFailed, "a superclass is not a union of classes");
  const auto& G = *group();
  superclass_of_.assign(G.order(), 0);
  for (std::size_t s = 0; s < K_.size(); ++s) {
    for (std::size_t e : K_[s]) superclass_of_[e] = s;
  }
  class_parts_.assign(K_.size(), {});
  for (std::size_t c = 0; c < G.num_classes(); ++c) class_parts_[superclass_of_[G.classes()[c].representative]].push_back(c);
  for (const auto& x : X_) sup_.push_back(supercharacter(*table_, x));
}

TheoryPtr classical_theory(const TablePtr& table) {
  const auto& G = *table->group();
  Partition X, K;
  for (std::size_t i = 0; i < table->size(); ++i) X.push_back({i});
  for (const auto& c : G.classes()) K.push_back(c.members);
  return std::make_shared<SupercharacterTheory>(table, X, K);
}

TheoryPtr max_theory(const TablePtr& table) {
  const auto& G = *table->group();
  Partition X{{0}}, K{{0}};
  if (table->size() > 1) {
    X.emplace_back();
    for (std::size_t i = 1; i < table->size(); ++i) X.back().push_back(i);
    K.emplace_back();
    for (std::size_t e = 1; e < G.order(); ++e) K.back().push_back(e);
  }
  return std::make_shared<SupercharacterTheory>(table, X, K);
}

// ---- enumeration

namespace {

// Set partitions of {0..n-1} as restricted growth strings.
void set_partitions(std::size_t n, std::vector<std::size_t>& rgs, std::size_t i, std::size_t blocks,
                    std::vector<Partition>& out) {
  if (i == n) {
    Partition p(blocks);
    for (std::size_t j = 0; j < n; ++j) p[rgs[j]].push_back(j);
    out.push_back(std::move(p));
    return;
  }
  for (std::size_t b = 0; b <= blocks; ++b) {
    rgs[i] = b;
    set_partitions(n, rgs, i + 1, std::max(blocks, b + 1), out);
  }
}

struct Enumerator {
  const CharacterTable& table;
  std::vector<std::vector<Cyclotomic>> weighted;  // chi(1) chi(c)

  bool constant(const std::vector<std::size_t>& part, const Partition& class_parts) const {
    const std::size_t k = weighted[0].size();
    std::vector<Cyclotomic> sum(k, Cyclotomic(0));
    for (std::size_t chi : part) {
      for (std::size_t c = 0; c < k; ++c) sum[c] += weighted[chi][c];
    }
    for (const auto& cp : class_parts) {
      for (std::size_t c : cp) {
        if (sum[c] != sum[cp.front()]) return false;
      }
    }
    return true;
  }

  // Partitions of the unassigned irreducibles into `need` constant blocks.
  void extend(std::vector<bool>& used, Partition& blocks, std::size_t need, const Partition& class_parts,
              std::vector<Partition>& out) const {
    const std::size_t n = used.size();
    std::size_t first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      if (blocks.size() == need) out.push_back(blocks);
      return;
    }
    if (blocks.size() >= need) return;
    std::vector<std::size_t> rest;
    for (std::size_t i = first + 1; i < n; ++i) {
      if (!used[i]) rest.push_back(i);
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size()); ++mask) {
      std::vector<std::size_t> part{first};
      for (std::size_t b = 0; b < rest.size(); ++b) {
        if (mask >> b & 1) part.push_back(rest[b]);
      }
      if (!constant(part, class_parts)) continue;
      for (std::size_t x : part) used[x] = true;
      blocks.push_back(part);
      extend(used, blocks, need, class_parts, out);
      blocks.pop_back();
      for (std::size_t x : part) used[x] = false;
    }
  }
};

}  // namespace

std::vector<TheoryPtr> enumerate_scts(const TablePtr& table, std::size_t max_classes, unsigned jobs) {
  const auto& G = *table->group();
  const std::size_t k = G.num_classes();
  if (k > max_classes) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(k) + " conjugacy classes, enumeration limited to " + std::to_string(max_classes));
  }
  Enumerator en{*table, {}};
  for (std::size_t chi = 0; chi < table->size(); ++chi) {
    en.weighted.emplace_back();
    for (std::size_t c = 0; c < k; ++c) {
      en.weighted.back().push_back((*table)[chi][c] * Cyclotomic(static_cast<long long>(table->degrees()[chi])));
    }
  }

  // class partitions with the identity class alone
  std::vector<Partition> k_parts;
  if (k == 1) {
    k_parts.push_back({{0}});
  } else {
    std::vector<std::size_t> rgs(k - 1);
    std::vector<Partition> rest;
    set_partitions(k - 1, rgs, 0, 0, rest);
    for (auto& p : rest) {
      Partition full{{0}};
      for (auto& part : p) {
        for (auto& c : part) ++c;
        full.push_back(part);
      }
      k_parts.push_back(std::move(full));
    }
  }

  std::vector<std::vector<Partition>> found(k_parts.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(k_parts.size())));
  auto work = [&](unsigned j) {
    for (std::size_t i = j; i < k_parts.size(); i += jobs) {
      std::vector<bool> used(table->size(), false);
      Partition blocks;
      en.extend(used, blocks, k_parts[i].size(), k_parts[i], found[i]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }

  std::vector<TheoryPtr> out;
  for (std::size_t i = 0; i < k_parts.size(); ++i) {
    for (const auto& X : found[i]) {
      Partition K;
      for (const auto& cp : k_parts[i]) {
        K.emplace_back();
        for (std::size_t c : cp) {
          const auto& m = G.classes()[c].members;
          K.back().insert(K.back().end(), m.begin(), m.end());
        }
      }
      out.push_back(std::make_shared<SupercharacterTheory>(table, X, K));
    }
  }
  std::sort(out.begin(), out.end(), [](const TheoryPtr& a, const TheoryPtr& b) {
    if (a->size() != b->size()) return a->size() < b->size();
    if (a->K() != b->K()) return a->K() < b->K();
    return a->X() < b->X();
  });
  return out;
}

bool compatible(const SupercharacterTheory& TH, const SupercharacterTheory& TG) {
  const auto& H = *TH.group();
  auto idx = embed(H, *TG.group());
  for (const auto& part : TH.K()) {
    const std::size_t s = TG.superclass_of(idx[part.front()]);
    for (std::size_t h : part) {
      if (TG.superclass_of(idx[h]) != s) return false;
    }
  }
  return true;
}

ClassFunction SuperclassFunction::to_class_function() const {
  const auto& G = *theory->group();
  std::vector<Cyclotomic> vals;
  for (const auto& c : G.classes()) vals.push_back(values[theory->superclass_of(c.representative)]);
  return ClassFunction(theory->group(), vals);
}

SuperclassFunction SuperclassFunction::from_class_function(const TheoryPtr& theory, const ClassFunction& f) {
  SuperclassFunction out{theory, {}};
  for (const auto& part : theory->K()) {
    if (!constant_on(f, part)) throw Error(ErrorCode::InvalidArgument, "function is not constant on a superclass");
    out.values.push_back(f.at_element(part.front()));
  }
  return out;
}

SuperclassFunction superinduce(const SuperclassFunction& phi, const TheoryPtr& TG) {
  const auto& TH = *phi.theory;
  if (!compatible(TH, *TG)) throw Error(ErrorCode::NotCompatible, "theories are not compatible");
  const auto& G = *TG->group();
  const auto& H = *TH.group();
  auto idx = embed(H, G);
  std::vector<Cyclotomic> sums(TG->size(), Cyclotomic(0));
  for (std::size_t s = 0; s < TH.size(); ++s) {
    const auto& part = TH.K()[s];
    sums[TG->superclass_of(idx[part.front()])] +=
        phi.values[s] * Cyclotomic(static_cast<long long>(part.size()));
  }
  SuperclassFunction out{TG, {}};
  for (std::size_t k = 0; k < TG->size(); ++k) {
    Rational scale = make_rational(static_cast<long long>(G.order()),
                                   static_cast<long long>(H.order() * TG->superclass_size(k)));
    out.values.push_back(sums[k] * Cyclotomic(scale));
  }
  return out;
}

SuperFrobeniusReport super_frobenius_check(const TheoryPtr& TH, const TheoryPtr& TG) {
  SuperFrobeniusReport r;
  const GroupPtr& H = TH->group();
  for (const auto& tau : TH->supercharacters()) {
    auto sind = superinduce(SuperclassFunction::from_class_function(TH, tau), TG).to_class_function();
    for (const auto& sigma : TG->supercharacters()) {
      ++r.pairs;
      if (inner_product(sind, sigma) != inner_product(tau, restrict_to(sigma, H))) ++r.failures;
    }
  }
  return r;
}

std::vector<long long> super_orders(const SupercharacterTheory& T, const std::vector<long long>& base) {
  if (base.size() != T.table()->size()) throw Error(ErrorCode::InvalidArgument, "base does not cover Irr(G)");
  std::vector<long long> out;
  for (const auto& x : T.X()) {
    long long s = 0;
    for (std::size_t chi : x) s += T.table()->degrees()[chi] * base[chi];
    out.push_back(s);
  }
  return out;
}

SuperHeilbronn super_heilbronn(const std::vector<long long>& base, const TheoryPtr& TG, const TheoryPtr& TH) {
  if (!compatible(*TH, *TG)) throw Error(ErrorCode::NotCompatible, "theories are not compatible");
  const GroupPtr& H = TH->group();
  const auto& supG = TG->supercharacters();
  const auto& supH = TH->supercharacters();
  for (const auto& sigma : supG) {
    auto res = restrict_to(sigma, H);
    for (const auto& tau : supH) {
      Rational a = inner_product_q(res, tau) / inner_product_q(tau, tau);
      if (!is_integer(a)) throw Error(ErrorCode::NonIntegralRestriction, "restriction is not an integral combination");
    }
  }
  SuperHeilbronn out;
  out.m = 1;
  for (const auto& sigma : supG) {
    Integer d = sigma.degree().rational_value().get_num();
    mpz_lcm(out.m.get_mpz_t(), out.m.get_mpz_t(), d.get_mpz_t());
  }
  for (long long v : super_orders(*TG, base)) out.n_G.push_back(to_q(v));
  out.theta_G = ClassFunction::zero(TG->group());
  for (std::size_t s = 0; s < supG.size(); ++s) {
    out.theta_G += supG[s] * Cyclotomic(out.n_G[s] / supG[s].degree().rational_value());
  }
  const Rational m(out.m);
  out.theta_H = ClassFunction::zero(H);
  for (const auto& tau : supH) {
    auto sind = superinduce(SuperclassFunction::from_class_function(TH, tau), TG).to_class_function();
    Rational total = 0;
    for (std::size_t s = 0; s < supG.size(); ++s) {
      Rational c = m * inner_product_q(sind, supG[s]) / inner_product_q(supG[s], supG[s]);
      total += c * out.n_G[s];
    }
    out.n_H.push_back(total / m);
    out.theta_H += tau * Cyclotomic(out.n_H.back() / tau.degree().rational_value());
  }
  out.restriction_holds = restrict_to(out.theta_G, H) == out.theta_H;
  return out;
}

LoReport theorem_lo_check(const OrderAssignment& a, const SupercharacterTheory& T, bool strict) {
  if (strict && !a.weak) throw Error(ErrorCode::PreconditionUnverified, "assignment is not weak-admissible");
  LoReport r;
  r.precondition = a.weak;
  auto n = super_orders(T, a.base);
  r.degrees_match = true;
  for (std::size_t s = 0; s < T.size(); ++s) {
    long long squares = 0;
    for (std::size_t chi : T.X()[s]) squares += a.context->degrees[chi] * a.context->degrees[chi];
    const Rational deg = T.supercharacters()[s].degree().rational_value();
    if (deg != to_q(squares)) r.degrees_match = false;
    r.lhs += to_q(n[s]) * to_q(n[s]) / deg;
  }
  long long reg = a.n_regular();
  r.rhs = reg * reg;
  r.holds = r.lhs <= to_q(r.rhs);
  return r;
}

SuperStarkReport weak_super_stark(const OrderAssignment& a, const TheoryPtr& TG, const TheoryPtr& TH, bool strict) {
  if (strict && !a.weak) throw Error(ErrorCode::PreconditionUnverified, "assignment is not weak-admissible");
  auto sh = super_heilbronn(a.base, TG, TH);
  SuperStarkReport r;
  r.precondition = a.weak;
  const Rational ratio = make_rational(static_cast<long long>(TH->group()->order()),
                                       static_cast<long long>(TG->group()->order()));
  for (std::size_t t = 0; t < sh.n_H.size(); ++t) {
    const Rational d = TH->supercharacters()[t].degree().rational_value();
    const Rational sq = sh.n_H[t] * sh.n_H[t];
    r.lhs_literal += ratio * sq / (d * d);
    r.lhs_normalized += ratio * sq / d;
  }
  long long reg = a.n_regular();
  r.rhs = reg * reg;
  r.holds_literal = r.lhs_literal <= to_q(r.rhs);
  r.holds_normalized = r.lhs_normalized <= to_q(r.rhs);
  if (reg == 0) {
    r.vanishes = std::all_of(sh.n_H.begin(), sh.n_H.end(), [](const Rational& x) { return x == 0; });
  }
  return r;
}

bool is_g_invariant(const GroupPtr& G, const SupercharacterTheory& TN) {
  const auto& N = *TN.group();
  auto idx = embed(N, *G);
  for (std::size_t n = 0; n < N.order(); ++n) {
    for (std::size_t g = 0; g < G->order(); ++g) {
      auto m = N.index_of(G->element(G->conj(idx[n], g)));
      if (!m || TN.superclass_of(*m) != TN.superclass_of(n)) return false;
    }
  }
  return true;
}

TheoryPtr hendrickson_product(const GroupPtr& G, const TheoryPtr& TN, const Quotient& q, const TheoryPtr& TQ) {
  const GroupPtr& N = TN->group();
  if (!is_normal(*G, *N)) throw Error(ErrorCode::NotNormal, "N is not normal in G");
  if (!q.kernel->same_as(*N) || !same_group(q.parent, G)) {
    throw Error(ErrorCode::InvalidArgument, "quotient does not match G/N");
  }
  if (!TQ->group()->same_as(*q.group)) throw Error(ErrorCode::GroupMismatch, "theory is not on G/N");
  if (!is_g_invariant(G, *TN)) throw Error(ErrorCode::NotGInvariant, "theory on N is not G-invariant");

  auto tG = character_table(G);
  Partition X;
  auto constituents = [&](const ClassFunction& f) {
    auto v = decompose(f, *tG);
    return v.support();
  };
  for (std::size_t x = 0; x < TN->size(); ++x) {
    if (std::find(TN->X()[x].begin(), TN->X()[x].end(), 0) != TN->X()[x].end()) continue;
    X.push_back(constituents(induce(TN->supercharacters()[x], G)));
  }
  for (const auto& sigma : TQ->supercharacters()) {
    // inflate expects a function on q.group itself
    X.push_back(constituents(inflate(ClassFunction(q.group, sigma.values()), q)));
  }

  Partition K;
  auto idx = embed(*N, *G);
  for (const auto& part : TN->K()) {
    K.emplace_back();
    for (std::size_t n : part) K.back().push_back(idx[n]);
  }
  for (const auto& part : TQ->K()) {
    if (part.size() == 1 && part[0] == 0) continue;
    K.emplace_back();
    for (std::size_t g = 0; g < G->order(); ++g) {
      if (std::binary_search(part.begin(), part.end(), q.projection[g])) K.back().push_back(g);
    }
  }
  return std::make_shared<SupercharacterTheory>(tG, X, K);
}

Json theory_to_json(const SupercharacterTheory& T) {
  return Json{{"group", T.group()->name()}, {"X", T.X()}, {"K", T.K()}};
}

TheoryPtr theory_from_json(const Json& j, const TablePtr& table) {
  try {
    auto X = j.at("X").get<Partition>();
    auto K = j.at("K").get<Partition>();
    return std::make_shared<SupercharacterTheory>(table, X, K);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

}  // namespace hk
