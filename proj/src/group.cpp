#include "hk/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "hk/error.hpp"

namespace hk {

namespace {

constexpr std::size_t kTableLimit = 1024;

std::vector<Perm> close_under(std::size_t degree, const std::vector<Perm>& gens, std::size_t cap) {
  std::set<Perm> seen;
  std::deque<Perm> todo;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm x = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : gens) {
      Perm y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw Error(ErrorCode::OrderCapExceeded, "group order exceeds cap " + std::to_string(cap));
        }
        todo.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

GroupPtr PermutationGroup::closure(std::size_t degree, std::vector<Perm> generators, std::string name,
                                   std::size_t cap) {
  if (degree == 0) throw Error(ErrorCode::InvalidPermutation, "degree must be positive");
  std::vector<Perm> gens;
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::InvalidPermutation, "generator of degree " + std::to_string(g.degree()) +
                                                     " in a group of degree " + std::to_string(degree));
    }
    if (g.is_identity()) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(std::move(g));
  }
  auto elems = close_under(degree, gens, cap);
  std::shared_ptr<PermutationGroup> G(new PermutationGroup());
  G->degree_ = degree;
  G->name_ = std::move(name);
  G->generators_ = std::move(gens);
  G->finish(std::move(elems));
  return G;
}

GroupPtr PermutationGroup::from_elements(std::size_t degree, std::vector<Perm> elements, std::string name) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || !elements.front().is_identity() || elements.front().degree() != degree) {
    throw Error(ErrorCode::InvalidPermutation, "element list must contain the identity of the stated degree");
  }
  std::shared_ptr<PermutationGroup> G(new PermutationGroup());
  G->degree_ = degree;
  G->name_ = std::move(name);
  G->elements_ = std::move(elements);
  G->choose_generators();
  G->finish(std::move(G->elements_));
  return G;
}

void PermutationGroup::choose_generators() {
  // Greedy: walk the elements in order, keep any element outside the
  // subgroup generated so far. Also validates closure of elements_.
  const std::size_t n = elements_.size();
  std::vector<bool> in(n, false);
  in[0] = true;
  std::vector<std::size_t> members{0};
  auto find = [&](const Perm& p) -> std::size_t {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) {
      throw Error(ErrorCode::InvalidPermutation, "element list is not closed under multiplication");
    }
    return static_cast<std::size_t>(it - elements_.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (in[i]) continue;
    generators_.push_back(elements_[i]);
    // re-close: BFS from current members using all generators
    std::deque<std::size_t> todo(members.begin(), members.end());
    while (!todo.empty()) {
      std::size_t x = todo.front();
      todo.pop_front();
      for (const Perm& g : generators_) {
        std::size_t y = find(elements_[x] * g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
          todo.push_back(y);
        }
      }
    }
  }
}

void PermutationGroup::finish(std::vector<Perm> sorted_elements) {
  elements_ = std::move(sorted_elements);
  const std::size_t n = elements_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto idx = index_of(elements_[a] * elements_[b]);
        if (!idx) throw Error(ErrorCode::InvalidPermutation, "element list is not closed under multiplication");
        table_[a * n + b] = static_cast<std::uint32_t>(*idx);
      }
    }
  }
  inverse_.resize(n);
  element_order_.resize(n);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    inverse_[a] = *index_of(elements_[a].inverse());
    element_order_[a] = elements_[a].order();
    exponent_ = std::lcm(exponent_, static_cast<int>(element_order_[a]));
  }

  class_of_.assign(n, static_cast<std::size_t>(-1));
  std::vector<ConjugacyClass> found;
  std::vector<std::size_t> gen_idx;
  for (const auto& g : generators_) gen_idx.push_back(*index_of(g));
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != static_cast<std::size_t>(-1)) continue;
    ConjugacyClass cls;
    cls.representative = x;
    const std::size_t id = found.size();
    class_of_[x] = id;
    cls.members.push_back(x);
    for (std::size_t pos = 0; pos < cls.members.size(); ++pos) {
      std::size_t y = cls.members[pos];
      for (std::size_t g : gen_idx) {
        std::size_t z = conj(y, g);
        if (class_of_[z] == static_cast<std::size_t>(-1)) {
          class_of_[z] = id;
          cls.members.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    found.push_back(std::move(cls));
  }
  // identity class first (it is found first), then by size, then by least member
  std::stable_sort(found.begin() + 1, found.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.representative < b.representative;
  });
  classes_ = std::move(found);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (std::size_t m : classes_[c].members) class_of_[m] = c;
  }
}

std::optional<std::size_t> PermutationGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t PermutationGroup::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elements_.size() + b];
  return *index_of(elements_[a] * elements_[b]);
}

std::size_t PermutationGroup::power(std::size_t a, long long k) const {
  const long long ord = static_cast<long long>(element_order_[a]);
  k %= ord;
  if (k < 0) k += ord;
  std::size_t r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

std::size_t PermutationGroup::power_class(std::size_t cls, long long k) const {
  return class_of_[power(classes_[cls].representative, k)];
}

bool PermutationGroup::same_as(const PermutationGroup& other) const {
  return this == &other || (degree_ == other.degree_ && elements_ == other.elements_);
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || a->same_as(*b); }

std::vector<std::size_t> embed(const PermutationGroup& H, const PermutationGroup& G) {
  if (H.degree() != G.degree()) throw Error(ErrorCode::NotSubgroup, "degree mismatch");
  std::vector<std::size_t> out;
  out.reserve(H.order());
  for (const Perm& h : H.elements()) {
    auto idx = G.index_of(h);
    if (!idx) throw Error(ErrorCode::NotSubgroup, "element " + h.cycle_string() + " is not in the group");
    out.push_back(*idx);
  }
  return out;
}

bool is_subgroup(const PermutationGroup& H, const PermutationGroup& G) {
  if (H.degree() != G.degree() || G.order() % H.order() != 0) return false;
  for (const Perm& h : H.generators()) {
    if (!G.contains(h)) return false;
  }
  return true;
}

GroupPtr subgroup_from_indices(const PermutationGroup& G, std::vector<std::size_t> indices, std::string name) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  std::vector<Perm> elems;
  elems.reserve(indices.size());
  for (std::size_t i : indices) elems.push_back(G.element(i));
  return PermutationGroup::from_elements(G.degree(), std::move(elems), std::move(name));
}

namespace {

std::vector<std::size_t> closure_indices(const PermutationGroup& G, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (std::size_t pos = 0; pos < members.size(); ++pos) {
    std::size_t x = members[pos];
    for (std::size_t g : gens) {
      std::size_t y = G.mul(x, g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::size_t> generator_indices(const PermutationGroup& H, const PermutationGroup& G) {
  std::vector<std::size_t> out;
  for (const Perm& h : H.generators()) {
    auto idx = G.index_of(h);
    if (!idx) throw Error(ErrorCode::NotSubgroup, "generator not in the ambient group");
    out.push_back(*idx);
  }
  return out;
}

}  // namespace

GroupPtr generate(const PermutationGroup& G, const std::vector<std::size_t>& gens) {
  return subgroup_from_indices(G, closure_indices(G, gens));
}

GroupPtr join(const PermutationGroup& G, const PermutationGroup& H, const PermutationGroup& K) {
  auto gens = generator_indices(H, G);
  auto more = generator_indices(K, G);
  gens.insert(gens.end(), more.begin(), more.end());
  return generate(G, gens);
}

GroupPtr intersection(const PermutationGroup& G, const PermutationGroup& H, const PermutationGroup& K) {
  std::vector<bool> inK(G.order(), false);
  for (std::size_t k : embed(K, G)) inK[k] = true;
  std::vector<std::size_t> both;
  for (std::size_t h : embed(H, G)) {
    if (inK[h]) both.push_back(h);
  }
  return subgroup_from_indices(G, both);
}

GroupPtr trivial_subgroup(const PermutationGroup& G) { return subgroup_from_indices(G, {0}); }

GroupPtr whole(const PermutationGroup& G) {
  std::vector<std::size_t> all(G.order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return subgroup_from_indices(G, all, G.name());
}

GroupPtr conjugate_subgroup(const PermutationGroup& G, const PermutationGroup& H, std::size_t x) {
  const std::size_t xinv = G.inv(x);
  std::vector<std::size_t> out;
  for (std::size_t h : embed(H, G)) out.push_back(G.conj(h, xinv));  // x h x^-1
  return subgroup_from_indices(G, out);
}

GroupPtr center(const PermutationGroup& G) {
  std::vector<std::size_t> gens;
  for (const Perm& g : G.generators()) gens.push_back(*G.index_of(g));
  std::vector<std::size_t> z;
  for (std::size_t x = 0; x < G.order(); ++x) {
    bool central = true;
    for (std::size_t g : gens) {
      if (G.mul(x, g) != G.mul(g, x)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return subgroup_from_indices(G, z);
}

GroupPtr normal_closure(const PermutationGroup& G, const std::vector<std::size_t>& gens) {
  std::vector<std::size_t> conj_gens;
  std::vector<bool> used(G.num_classes(), false);
  for (std::size_t g : gens) {
    std::size_t c = G.class_of(g);
    if (used[c]) continue;
    used[c] = true;
    const auto& m = G.classes()[c].members;
    conj_gens.insert(conj_gens.end(), m.begin(), m.end());
  }
  return generate(G, conj_gens);
}

GroupPtr commutator_subgroup(const PermutationGroup& G) {
  std::vector<std::size_t> gens;
  for (const Perm& g : G.generators()) gens.push_back(*G.index_of(g));
  std::vector<std::size_t> comms;
  for (std::size_t a : gens) {
    for (std::size_t b : gens) {
      std::size_t c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
      if (c != 0) comms.push_back(c);
    }
  }
  return normal_closure(G, comms);
}

bool is_normal(const PermutationGroup& G, const PermutationGroup& H) {
  if (!is_subgroup(H, G)) throw Error(ErrorCode::NotSubgroup, "is_normal needs a subgroup");
  for (const Perm& g : G.generators()) {
    Perm gi = g.inverse();
    for (const Perm& h : H.generators()) {
      if (!H.contains(gi * h * g)) return false;
    }
  }
  return true;
}

bool DerivedSeries::solvable() const { return terms.back()->order() == 1; }

const GroupPtr& DerivedSeries::term(std::size_t i) const {
  return i < terms.size() ? terms[i] : terms.back();
}

DerivedSeries derived_series(const PermutationGroup& G) {
  DerivedSeries s;
  s.terms.push_back(whole(G));
  while (true) {
    auto next = commutator_subgroup(*s.terms.back());
    if (next->order() == s.terms.back()->order()) break;
    s.terms.push_back(next);
  }
  return s;
}

bool is_solvable(const PermutationGroup& G) { return derived_series(G).solvable(); }

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(std::size_t n, const std::vector<std::size_t>& idx) {
  Bits b((n + 63) / 64, 0);
  for (std::size_t i : idx) b[i / 64] |= (std::uint64_t{1} << (i % 64));
  return b;
}

bool has_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

std::vector<std::size_t> from_bits(std::size_t n, const Bits& b) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (has_bit(b, i)) out.push_back(i);
  }
  return out;
}

std::vector<GroupPtr> sorted_groups(const PermutationGroup& G, const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<std::vector<std::size_t>> s = sets;
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<GroupPtr> out;
  out.reserve(s.size());
  for (auto& idx : s) out.push_back(subgroup_from_indices(G, idx));
  return out;
}

}  // namespace

std::vector<GroupPtr> cyclic_subgroups(const PermutationGroup& G) {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t g = 0; g < G.order(); ++g) seen.insert(closure_indices(G, {g}));
  return sorted_groups(G, {seen.begin(), seen.end()});
}

std::vector<GroupPtr> subgroups(const PermutationGroup& G, std::size_t cap) {
  if (G.order() > cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "subgroup enumeration needs |G| <= " + std::to_string(cap) + ", got " + std::to_string(G.order()));
  }
  const std::size_t n = G.order();
  struct Node {
    Bits bits;
    std::vector<std::size_t> gens;
  };
  std::set<Bits> seen;
  std::vector<Node> nodes;
  // cyclic seeds, one generator each
  std::vector<std::pair<std::size_t, Bits>> cyclic;
  std::set<Bits> cyc_seen;
  for (std::size_t g = 0; g < n; ++g) {
    Bits b = to_bits(n, closure_indices(G, {g}));
    if (cyc_seen.insert(b).second) cyclic.emplace_back(g, b);
  }
  for (auto& [g, b] : cyclic) {
    seen.insert(b);
    nodes.push_back({b, g == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{g}});
  }
  for (std::size_t pos = 0; pos < nodes.size(); ++pos) {
    for (const auto& [g, cb] : cyclic) {
      if (has_bit(nodes[pos].bits, g)) continue;
      std::vector<std::size_t> gens = nodes[pos].gens;
      gens.push_back(g);
      Bits b = to_bits(n, closure_indices(G, gens));
      if (seen.insert(b).second) nodes.push_back({std::move(b), std::move(gens)});
    }
  }
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(nodes.size());
  for (const auto& node : nodes) sets.push_back(from_bits(n, node.bits));
  return sorted_groups(G, sets);
}

std::vector<GroupPtr> normal_subgroups(const PermutationGroup& G, std::size_t cap) {
  std::vector<GroupPtr> out;
  for (auto& H : subgroups(G, cap)) {
    if (is_normal(G, *H)) out.push_back(H);
  }
  return out;
}

std::vector<GroupPtr> minimal_normal_subgroups(const PermutationGroup& G) {
  std::vector<std::vector<std::size_t>> cands;
  for (std::size_t c = 1; c < G.num_classes(); ++c) {
    auto N = normal_closure(G, {G.classes()[c].representative});
    auto idx = embed(*N, G);
    if (std::find(cands.begin(), cands.end(), idx) == cands.end()) cands.push_back(idx);
  }
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& a : cands) {
    bool is_min = true;
    for (const auto& b : cands) {
      if (b.size() < a.size() && std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(a);
  }
  std::sort(minimal.begin(), minimal.end());
  std::vector<GroupPtr> out;
  for (auto& idx : minimal) out.push_back(subgroup_from_indices(G, idx));
  return out;
}

GroupPtr Quotient::preimage(const PermutationGroup& subgroup_of_quotient) const {
  std::vector<bool> in(group->order(), false);
  for (std::size_t q : embed(subgroup_of_quotient, *group)) in[q] = true;
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < parent->order(); ++x) {
    if (in[projection[x]]) out.push_back(x);
  }
  return subgroup_from_indices(*parent, out);
}

GroupPtr Quotient::image(const PermutationGroup& subgroup_of_parent) const {
  std::vector<std::size_t> out;
  for (std::size_t x : embed(subgroup_of_parent, *parent)) out.push_back(projection[x]);
  return subgroup_from_indices(*group, out);
}

Quotient quotient(const GroupPtr& G, const PermutationGroup& N) {
  if (!is_normal(*G, N)) throw Error(ErrorCode::NotNormal, "quotient needs a normal subgroup");
  const std::size_t n = G->order();
  auto nidx = embed(N, *G);
  std::vector<std::size_t> coset_of(n, static_cast<std::size_t>(-1));
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < n; ++g) {
    if (coset_of[g] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = reps.size();
    reps.push_back(g);
    for (std::size_t m : nidx) coset_of[G->mul(m, g)] = id;
  }
  const std::size_t k = reps.size();
  auto action = [&](std::size_t x) {
    std::vector<Perm::Point> im(k);
    for (std::size_t c = 0; c < k; ++c) im[c] = static_cast<Perm::Point>(coset_of[G->mul(reps[c], x)]);
    return Perm(std::move(im));
  };
  std::vector<Perm> gens;
  for (const Perm& g : G->generators()) gens.push_back(action(*G->index_of(g)));
  Quotient q;
  q.parent = G;
  q.kernel = subgroup_from_indices(*G, nidx);
  std::string qname = G->name().empty() ? std::string{} : G->name() + "/N";
  q.group = PermutationGroup::closure(k, std::move(gens), qname, kDefaultOrderCap);
  if (q.group->order() * N.order() != n) {
    throw Error(ErrorCode::InternalVerificationFailed, "quotient order mismatch");
  }
  q.projection.resize(n);
  q.section.assign(q.group->order(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t img = *q.group->index_of(action(x));
    q.projection[x] = img;
    if (q.section[img] == static_cast<std::size_t>(-1)) q.section[img] = x;
  }
  return q;
}

std::vector<std::size_t> double_coset_representatives(const PermutationGroup& G, const PermutationGroup& K,
                                                      const PermutationGroup& H) {
  auto kidx = embed(K, G);
  auto hidx = embed(H, G);
  std::vector<bool> done(G.order(), false);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (done[x]) continue;
    reps.push_back(x);
    for (std::size_t k : kidx) {
      std::size_t kx = G.mul(k, x);
      for (std::size_t h : hidx) done[G.mul(kx, h)] = true;
    }
  }
  return reps;
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

long long prime_part(long long n, long long p) {
  long long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(long long n, long long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

bool is_supersolvable(const GroupPtr& G) {
  if (G->order() == 1) return true;
  auto mins = minimal_normal_subgroups(*G);
  const auto& N = mins.front();
  if (!is_prime(static_cast<long long>(N->order()))) return false;
  return is_supersolvable(quotient(G, *N).group);
}

bool has_abelian_normal_sylow(const PermutationGroup& G, long long q) {
  const long long target = prime_part(static_cast<long long>(G.order()), q);
  std::vector<std::size_t> qelems;
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (is_power_of(static_cast<long long>(G.element_order(x)), q)) qelems.push_back(x);
  }
  if (static_cast<long long>(qelems.size()) != target) return false;
  auto P = generate(G, qelems);
  if (static_cast<long long>(P->order()) != target) return false;
  return P->is_abelian();
}

GroupPtr sylow_subgroup(const PermutationGroup& G, long long p, std::size_t cap) {
  const long long target = prime_part(static_cast<long long>(G.order()), p);
  for (auto& H : subgroups(G, cap)) {
    if (static_cast<long long>(H->order()) == target) return H;
  }
  throw Error(ErrorCode::InternalVerificationFailed, "no Sylow subgroup found");
}

}  // namespace hk
