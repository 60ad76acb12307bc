#include "hk/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "hk/json_io.hpp"

namespace hk {

namespace {

using i64 = long long;

i64 mod_pow(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 mod_inv(i64 a, i64 p) { return mod_pow(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

i64 dixon_prime(i64 exponent, i64 order) {
  for (i64 p = exponent + 1;; p += exponent) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

i64 primitive_root(i64 p) {
  auto qs = prime_divisors(p - 1);
  for (i64 g = 2;; ++g) {
    bool ok = true;
    for (i64 q : qs) {
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

// Basis of the right nullspace of the rows x cols matrix m over F_p.
std::vector<Vec> nullspace(Mat m, i64 p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    i64 inv = mod_inv(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      i64 f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[r][k]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - m[i][f]) % p;
    basis.push_back(v);
  }
  return basis;
}

std::vector<std::vector<Cyclotomic>> dixon_rows(const PermutationGroup& G) {
  const std::size_t r = G.num_classes();
  const i64 n = static_cast<i64>(G.order());
  const i64 e = G.exponent();
  const i64 p = dixon_prime(e, n);
  const i64 z = mod_pow(primitive_root(p), (p - 1) / e, p);

  Vec h(r);
  std::vector<std::size_t> inv_class(r);
  for (std::size_t j = 0; j < r; ++j) {
    h[j] = static_cast<i64>(G.classes()[j].size());
    inv_class[j] = G.inverse_class(j);
  }
  // a[j][l][m] = #{x in C_j : x^-1 z_m in C_l}
  std::vector<Mat> a(r, Mat(r, Vec(r, 0)));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t m = 0; m < r; ++m) {
      const std::size_t zm = G.classes()[m].representative;
      for (std::size_t x : G.classes()[j].members) ++a[j][G.class_of(G.mul(G.inv(x), zm))][m];
    }
  }

  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      full.push_back(v);
    }
    spaces.push_back(full);
  }
  for (std::size_t j = 1; j < r; ++j) {
    std::vector<std::vector<Vec>> next;
    for (auto& V : spaces) {
      if (V.size() == 1) {
        next.push_back(V);
        continue;
      }
      const std::size_t k = V.size();
      std::size_t found = 0;
      for (i64 lambda = 0; lambda < p && found < k; ++lambda) {
        Mat m(r, Vec(k, 0));
        for (std::size_t c = 0; c < k; ++c) {
          for (std::size_t l = 0; l < r; ++l) {
            i64 s = (p - lambda) * V[c][l] % p;
            for (std::size_t mm = 0; mm < r; ++mm) s += a[j][l][mm] % p * V[c][mm] % p;
            m[l][c] = s % p;
          }
        }
        auto ns = nullspace(m, p);
        if (ns.empty()) continue;
        std::vector<Vec> piece;
        for (const auto& coeffs : ns) {
          Vec w(r, 0);
          for (std::size_t c = 0; c < k; ++c) {
            if (coeffs[c] == 0) continue;
            for (std::size_t l = 0; l < r; ++l) w[l] = (w[l] + coeffs[c] * V[c][l]) % p;
          }
          piece.push_back(w);
        }
        found += piece.size();
        next.push_back(std::move(piece));
      }
      if (found != k) throw Error(ErrorCode::InternalVerificationFailed, "eigenspace split incomplete");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error(ErrorCode::InternalVerificationFailed, "class sums do not separate characters");

  // power maps: class of rep^l
  std::vector<std::vector<std::size_t>> pc(r, std::vector<std::size_t>(e));
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t g = G.classes()[j].representative;
    std::size_t x = 0;
    for (i64 l = 0; l < e; ++l) {
      pc[j][l] = G.class_of(x);
      x = G.mul(x, g);
    }
  }
  Vec zpow(e);
  for (i64 k = 0; k < e; ++k) zpow[k] = mod_pow(z, k, p);

  std::vector<std::vector<Cyclotomic>> rows;
  for (auto& V : spaces) {
    Vec w = V[0];
    if (w[0] == 0) throw Error(ErrorCode::InternalVerificationFailed, "eigenvector vanishes at identity");
    i64 s0 = mod_inv(w[0], p);
    for (auto& x : w) x = x * s0 % p;
    i64 sum = 0;
    for (std::size_t j = 0; j < r; ++j) sum = (sum + w[j] * w[inv_class[j]] % p * mod_inv(h[j] % p, p)) % p;
    if (sum == 0) throw Error(ErrorCode::InternalVerificationFailed, "degree equation degenerate");
    const i64 target = n % p * mod_inv(sum, p) % p;
    i64 d = 0;
    for (i64 c = 1; c * c <= n; ++c) {
      if (n % c == 0 && c * c % p == target) {
        d = c;
        break;
      }
    }
    if (d == 0) throw Error(ErrorCode::InternalVerificationFailed, "no degree matches");
    Vec theta(r);
    for (std::size_t j = 0; j < r; ++j) theta[j] = w[j] * d % p * mod_inv(h[j] % p, p) % p;
    const i64 inv_e = mod_inv(e % p, p);
    std::vector<Cyclotomic> row(r);
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Rational> mult(e);
      i64 total = 0;
      for (i64 k = 0; k < e; ++k) {
        i64 s = 0;
        for (i64 l = 0; l < e; ++l) s = (s + theta[pc[j][l]] * zpow[(e - (k * l) % e) % e]) % p;
        i64 mk = s * inv_e % p;
        if (mk > d) throw Error(ErrorCode::InternalVerificationFailed, "eigenvalue multiplicity out of range");
        mult[k] = Rational(static_cast<long>(mk));
        total += mk;
      }
      if (total != d) throw Error(ErrorCode::InternalVerificationFailed, "multiplicities do not sum to degree");
      row[j] = Cyclotomic::from_power_sum(static_cast<int>(e), mult);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Homomorphisms G -> <zeta_e>, found by trying generator images.
std::optional<std::vector<std::vector<Cyclotomic>>> abelian_rows(const PermutationGroup& G) {
  const std::size_t n = G.order();
  const int e = G.exponent();
  std::vector<std::size_t> gens;
  for (const Perm& g : G.generators()) gens.push_back(*G.index_of(g));
  std::vector<int> ords;
  double tuples = 1;
  for (std::size_t g : gens) {
    ords.push_back(static_cast<int>(G.element_order(g)));
    tuples *= ords.back();
  }
  if (tuples > 64.0 * static_cast<double>(n)) return std::nullopt;

  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    // exponent of zeta_e at each element
    std::vector<int> val(n, -1);
    val[0] = 0;
    std::vector<std::size_t> todo{0};
    bool ok = true;
    for (std::size_t pos = 0; pos < todo.size() && ok; ++pos) {
      std::size_t x = todo[pos];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::size_t y = G.mul(x, gens[i]);
        int v = (val[x] + choice[i] * (e / ords[i])) % e;
        if (val[y] < 0) {
          val[y] = v;
          todo.push_back(y);
        } else if (val[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      std::vector<Cyclotomic> row(G.num_classes());
      for (std::size_t c = 0; c < G.num_classes(); ++c) {
        row[c] = Cyclotomic::root_of_unity(e, val[G.classes()[c].representative]);
      }
      rows.push_back(std::move(row));
    }
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == ords[i]) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  if (rows.size() != n) throw Error(ErrorCode::InternalVerificationFailed, "dual group has the wrong size");
  return rows;
}

bool is_trivial_row(const std::vector<Cyclotomic>& row) {
  return std::all_of(row.begin(), row.end(), [](const Cyclotomic& c) { return c == Cyclotomic(1); });
}

struct CacheKey {
  std::size_t degree;
  std::vector<Perm> elements;
  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

std::mutex g_cache_mutex;
std::map<CacheKey, TablePtr> g_cache;

}  // namespace

void verify_table(const GroupPtr& G, const std::vector<std::vector<Cyclotomic>>& rows, ErrorCode failure) {
  const std::size_t r = G->num_classes();
  const long long n = static_cast<long long>(G->order());
  auto fail = [&](const std::string& why) { throw Error(failure, "character table of " + G->name() + ": " + why); };
  if (rows.size() != r) fail("row count differs from class count");
  std::vector<ClassFunction> chars;
  long long degree_sum = 0;
  for (const auto& row : rows) {
    if (row.size() != r) fail("row length differs from class count");
    for (const auto& v : row) {
      if (!v.is_rational() && G->exponent() % v.order() != 0) fail("value outside the cyclotomic field of the exponent");
    }
    if (!row[0].is_rational() || !is_integer(row[0].rational_value()) || row[0].rational_value() <= 0) {
      fail("degree is not a positive integer");
    }
    long long d = to_int64(row[0].rational_value());
    if (n % d != 0) fail("degree " + std::to_string(d) + " does not divide the group order");
    degree_sum += d * d;
    chars.emplace_back(G, row);
  }
  if (degree_sum != n) fail("sum of squared degrees is " + std::to_string(degree_sum));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      if (inner_product(chars[i], chars[j]) != Cyclotomic(i == j ? 1 : 0)) fail("rows are not orthonormal");
    }
  }
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic s(0);
      for (std::size_t i = 0; i < r; ++i) s += rows[i][a] * rows[i][b].conjugate();
      Cyclotomic expect(a == b ? static_cast<long long>(G->centralizer_order(a)) : 0LL);
      if (s != expect) fail("columns are not orthogonal");
    }
  }
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<std::vector<Cyclotomic>> rows, ErrorCode failure)
    : group_(std::move(group)) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    bool tx = is_trivial_row(x), ty = is_trivial_row(y);
    if (tx != ty) return tx;
    int c = Cyclotomic::compare(x[0], y[0]);
    if (c != 0) return c < 0;
    for (std::size_t k = 1; k < x.size(); ++k) {
      c = Cyclotomic::compare(x[k], y[k]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  verify_table(group_, rows, failure);
  for (auto& row : rows) {
    degrees_.push_back(static_cast<long>(to_int64(row[0].rational_value())));
    irreducibles_.emplace_back(group_, std::move(row));
  }
}

std::vector<std::size_t> CharacterTable::linear_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (degrees_[i] == 1) out.push_back(i);
  }
  return out;
}

ClassFunction CharacterTable::regular() const {
  ClassFunction reg = ClassFunction::zero(group_);
  for (std::size_t i = 0; i < size(); ++i) reg += irreducibles_[i] * Cyclotomic(static_cast<long long>(degrees_[i]));
  return reg;
}

std::optional<std::size_t> CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (irreducibles_[i] == chi) return i;
  }
  return std::nullopt;
}

CharacterTable compute_character_table(const GroupPtr& G) {
  if (G->is_abelian()) {
    if (auto rows = abelian_rows(*G)) return CharacterTable(G, std::move(*rows));
  }
  return CharacterTable(G, dixon_rows(*G));
}

CharacterTable compute_character_table_dixon(const GroupPtr& G) { return CharacterTable(G, dixon_rows(*G)); }

TablePtr character_table(const GroupPtr& G) {
  CacheKey key{G->degree(), G->elements()};
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) {
      if (it->second->group() == G) return it->second;
      // same element set: rebind the verified values to this group object
      std::vector<std::vector<Cyclotomic>> rows;
      for (const auto& chi : it->second->irreducibles()) rows.push_back(chi.values());
      auto t = std::make_shared<CharacterTable>(G, std::move(rows));
      it->second = t;
      return t;
    }
  }
  auto t = std::make_shared<const CharacterTable>(compute_character_table(G));
  std::lock_guard lock(g_cache_mutex);
  g_cache.emplace(std::move(key), t);
  return t;
}

TablePtr seed_table_cache(const GroupPtr& G, const CharacterTable& table) {
  if (!G->same_as(*table.group())) throw Error(ErrorCode::GroupMismatch, "table belongs to another group");
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& chi : table.irreducibles()) rows.push_back(chi.values());
  auto t = std::make_shared<const CharacterTable>(G, std::move(rows));
  std::lock_guard lock(g_cache_mutex);
  g_cache.insert_or_assign(CacheKey{G->degree(), G->elements()}, t);
  return t;
}

void clear_table_cache() {
  std::lock_guard lock(g_cache_mutex);
  g_cache.clear();
}

Json table_to_json(const CharacterTable& table) {
  const auto& G = *table.group();
  Json classes = Json::array();
  for (const auto& c : G.classes()) {
    classes.push_back(Json{{"rep", G.element(c.representative).one_based()}, {"size", c.size()}});
  }
  Json irr = Json::array();
  for (const auto& chi : table.irreducibles()) {
    Json row = Json::array();
    for (const auto& v : chi.values()) row.push_back(cyclotomic_to_json(v.lifted(G.exponent())));
    irr.push_back(row);
  }
  return Json{{"group", group_to_json(G)}, {"exponent", table.exponent()}, {"classes", classes}, {"irreducibles", irr}};
}

void save_table(const CharacterTable& table, const std::filesystem::path& path) {
  write_json_file(path, table_to_json(table));
}

CharacterTable load_table(const std::filesystem::path& path) { return table_from_json(read_json_file(path)); }

CharacterTable table_from_json(const Json& j) {
  try {
    auto G = group_from_json(j.at("group"));
    if (j.at("exponent").get<int>() != G->exponent()) {
      throw Error(ErrorCode::VerificationFailed, "stored exponent differs from the group exponent");
    }
    const auto& cls = j.at("classes");
    if (cls.size() != G->num_classes()) throw Error(ErrorCode::VerificationFailed, "class count mismatch");
    std::vector<std::size_t> column(cls.size());
    std::vector<bool> used(G->num_classes(), false);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      auto rep = Perm::from_one_based(cls[i].at("rep").get<std::vector<long long>>());
      auto idx = G->index_of(rep);
      if (!idx) throw Error(ErrorCode::VerificationFailed, "class representative not in the group");
      std::size_t c = G->class_of(*idx);
      if (used[c] || G->classes()[c].size() != cls[i].at("size").get<std::size_t>()) {
        throw Error(ErrorCode::VerificationFailed, "class list does not match the group");
      }
      used[c] = true;
      column[i] = c;
    }
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& jr : j.at("irreducibles")) {
      if (jr.size() != cls.size()) throw Error(ErrorCode::VerificationFailed, "row length mismatch");
      std::vector<Cyclotomic> row(cls.size());
      for (std::size_t i = 0; i < cls.size(); ++i) row[column[i]] = cyclotomic_from_json(jr[i]);
      rows.push_back(std::move(row));
    }
    return CharacterTable(G, std::move(rows), ErrorCode::VerificationFailed);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
}

}  // namespace hk
