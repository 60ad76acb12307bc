#pragma once

#include <algorithm>
#include <complex>
#include <set>
#include <vector>

#include "hk/classfun.hpp"
#include "hk/supercharacter.hpp"

namespace hk::testing {

// Element-by-element sums in floating point, independent of the class
// bookkeeping used by the library.
inline std::complex<double> float_inner_product(const ClassFunction& a, const ClassFunction& b) {
  const auto& G = *a.group();
  std::complex<double> s = 0;
  for (std::size_t g = 0; g < G.order(); ++g) s += a.at_element(g).to_complex() * std::conj(b.at_element(g).to_complex());
  return s / static_cast<double>(G.order());
}

// Ind_H^G f via a left transversal: sum over t in G/H of f^(t^-1 x t).
inline ClassFunction transversal_induce(const ClassFunction& f, const GroupPtr& G) {
  const auto& H = *f.group();
  std::vector<bool> covered(G->order(), false);
  std::vector<std::size_t> reps;
  auto hidx = embed(H, *G);
  for (std::size_t t = 0; t < G->order(); ++t) {
    if (covered[t]) continue;
    reps.push_back(t);
    for (std::size_t h : hidx) covered[G->mul(t, h)] = true;
  }
  std::vector<Cyclotomic> vals;
  for (const auto& cls : G->classes()) {
    Cyclotomic v(0);
    for (std::size_t t : reps) {
      std::size_t y = G->mul(G->mul(G->inv(t), cls.representative), t);
      if (auto hy = H.index_of(G->element(y))) v += f.at_element(*hy);
    }
    vals.push_back(v);
  }
  return ClassFunction(G, vals);
}

inline ClassFunction fixed_points(const GroupPtr& G) {
  return ClassFunction::from_elements(G, [&](std::size_t x) {
    long long n = 0;
    const Perm& p = G->element(x);
    for (std::size_t i = 0; i < p.degree(); ++i) n += p[i] == i;
    return Cyclotomic(n);
  });
}

// Independent enumeration straight from the axioms: every partition K of
// the elements with {e} a part (no class structure used), every partition X
// of Irr(G) with |X| = |K|, constancy checked element by element.
using Key = std::pair<Partition, Partition>;

inline void all_partitions(const std::vector<std::size_t>& items, std::size_t i, Partition& cur, std::vector<Partition>& out) {
  if (i == items.size()) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(items[i]);
    all_partitions(items, i + 1, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({items[i]});
  all_partitions(items, i + 1, cur, out);
  cur.pop_back();
}

inline Partition canon(Partition p) {
  for (auto& part : p) std::sort(part.begin(), part.end());
  std::sort(p.begin(), p.end());
  return p;
}

inline std::set<Key> oracle_scts(const CharacterTable& t) {
  const auto& G = *t.group();
  std::vector<std::size_t> nonid, irr;
  for (std::size_t e = 1; e < G.order(); ++e) nonid.push_back(e);
  for (std::size_t c = 0; c < t.size(); ++c) irr.push_back(c);
  std::vector<Partition> ks, xs;
  Partition cur;
  all_partitions(nonid, 0, cur, ks);
  all_partitions(irr, 0, cur, xs);
  std::set<Key> out;
  for (auto K : ks) {
    K.push_back({0});
    for (const auto& X : xs) {
      if (X.size() != K.size()) continue;
      bool ok = true;
      for (const auto& x : X) {
        for (const auto& k : K) {
          Cyclotomic first(0);
          for (std::size_t c : x) first += t[c].at_element(k[0]) * Cyclotomic(static_cast<long long>(t.degrees()[c]));
          for (std::size_t e : k) {
            Cyclotomic v(0);
            for (std::size_t c : x) v += t[c].at_element(e) * Cyclotomic(static_cast<long long>(t.degrees()[c]));
            ok = ok && v == first;
          }
        }
      }
      if (ok) out.insert({canon(X), canon(K)});
    }
  }
  return out;
}

}  // namespace hk::testing
