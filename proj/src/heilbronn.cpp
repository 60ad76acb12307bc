#include "hk/heilbronn.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "hk/error.hpp"

namespace hk {

namespace {

std::vector<long long> int_coords(const ClassFunction& f, const CharacterTable& t) {
  auto v = decompose(f, t);
  std::vector<long long> out;
  out.reserve(v.coeffs.size());
  for (const auto& c : v.coeffs) {
    if (!is_integer(c)) throw Error(ErrorCode::InternalVerificationFailed, "induced character with fractional multiplicity");
    out.push_back(to_int64(c));
  }
  return out;
}

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void push_unique(std::vector<std::vector<long long>>& rows, std::set<std::vector<long long>>& seen,
                 std::vector<long long> row) {
  if (seen.insert(row).second) rows.push_back(std::move(row));
}

void require_solvable(const AssignmentContext& ctx) {
  if (!ctx.solvable) throw Error(ErrorCode::NotSolvable, "group is not solvable");
}

void require_flag(bool flag, bool strict, const char* what) {
  if (strict && !flag) throw Error(ErrorCode::PreconditionUnverified, what);
}

Rational vc_dot(const VirtualCharacter& a, const VirtualCharacter& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) s += a.coeffs[i] * b.coeffs[i];
  return s;
}

VirtualCharacter from_ints(const std::vector<long long>& v) {
  VirtualCharacter out;
  for (long long x : v) out.coeffs.push_back(Rational(static_cast<long>(x)));
  return out;
}

}  // namespace

std::string mode_name(AssignmentMode mode) { return mode == AssignmentMode::Weak ? "weak" : "arithmetic"; }

AssignmentMode parse_mode(const std::string& text) {
  if (text == "weak") return AssignmentMode::Weak;
  if (text == "arithmetic") return AssignmentMode::Arithmetic;
  throw Error(ErrorCode::InvalidArgument, "mode must be weak or arithmetic, got '" + text + "'");
}

const std::vector<long long>& AssignmentContext::level_row(std::size_t i) const {
  return level_rows[std::min(i, level_rows.size() - 1)];
}

ContextPtr assignment_context(const TablePtr& table, std::size_t subgroup_cap) {
  auto ctx = std::make_shared<AssignmentContext>();
  const GroupPtr& G = table->group();
  const CharacterTable& t = *table;
  ctx->table = table;
  ctx->subgroups = subgroups(*G, subgroup_cap);
  ctx->degrees = t.degrees();
  ctx->linear = t.linear_indices();

  std::set<std::vector<long long>> weak_seen, ach3_seen;
  std::set<std::pair<std::vector<long long>, std::size_t>> pair_seen;
  for (std::size_t s = 0; s < ctx->subgroups.size(); ++s) {
    const GroupPtr& H = ctx->subgroups[s];
    auto tH = character_table(H);
    bool cyclic = false;
    for (std::size_t h = 0; h < H->order() && !cyclic; ++h) cyclic = H->element_order(h) == H->order();
    if (cyclic) ctx->cyclic.push_back(s);
    for (std::size_t p = 0; p < tH->size(); ++p) {
      const ClassFunction& phi = (*tH)[p];
      bool lin = tH->degrees()[p] == 1;
      if (!cyclic && !lin) continue;
      auto row = int_coords(induce(phi, G), t);
      if (cyclic) push_unique(ctx->weak_rows, weak_seen, row);
      if (!lin) continue;
      push_unique(ctx->ach3_rows, ach3_seen, row);
      for (std::size_t c : ctx->linear) {
        if (restrict_to(t[c], H) == phi) pair_seen.insert({row, c});
      }
    }
    ctx->uvdw_rows.push_back(int_coords(induce(ClassFunction::trivial(H), G), t));
  }
  ctx->linear_pairs.assign(pair_seen.begin(), pair_seen.end());

  ctx->series = derived_series(*G);
  ctx->solvable = ctx->series.solvable();
  for (const auto& chi : t.irreducibles()) {
    ctx->faithful.push_back(is_faithful(chi));
    if (ctx->solvable) ctx->levels.push_back(level(chi, ctx->series));
  }
  for (const auto& term : ctx->series.terms) ctx->level_rows.push_back(int_coords(induce(ClassFunction::trivial(term), G), t));
  return ctx;
}

long long OrderAssignment::n(const std::vector<long long>& coords) const { return dot(coords, base); }

long long OrderAssignment::n_regular() const {
  long long s = 0;
  for (std::size_t i = 0; i < base.size(); ++i) s += context->degrees[i] * base[i];
  return s;
}

OrderAssignment make_assignment(const ContextPtr& context, std::vector<long long> base, AssignmentMode mode,
                                std::string label) {
  if (base.size() != context->table->size()) {
    throw Error(ErrorCode::InvalidArgument, "base has " + std::to_string(base.size()) + " entries, table has " +
                                                std::to_string(context->table->size()));
  }
  OrderAssignment a;
  a.context = context;
  a.base = std::move(base);
  a.label = std::move(label);
  a.mode = mode;
  a.weak = std::all_of(context->weak_rows.begin(), context->weak_rows.end(),
                       [&](const auto& r) { return dot(r, a.base) >= 0; });
  a.ach3 = std::all_of(context->ach3_rows.begin(), context->ach3_rows.end(),
                       [&](const auto& r) { return dot(r, a.base) >= 0; });
  return a;
}

OrderAssignment make_assignment(const TablePtr& table, std::vector<long long> base, AssignmentMode mode,
                                std::string label) {
  return make_assignment(assignment_context(table), std::move(base), mode, std::move(label));
}

Rational n_value(const OrderAssignment& a, const ClassFunction& phi) {
  auto v = decompose(induce(phi, a.group()), a.table());
  Rational s = 0;
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) s += v.coeffs[i] * Rational(static_cast<long>(a.base[i]));
  return s;
}

HeilbronnCharacter heilbronn_character(const OrderAssignment& a, const GroupPtr& H) {
  if (!is_subgroup(*H, *a.group())) throw Error(ErrorCode::NotSubgroup, "H is not a subgroup of G");
  HeilbronnCharacter out;
  out.subgroup = H;
  out.table = character_table(H);
  for (const auto& phi : out.table->irreducibles()) out.virtual_char.coeffs.push_back(n_value(a, phi));
  return out;
}

StarkRestrictionReport check_stark_restriction(const OrderAssignment& a) {
  const auto& ctx = *a.context;
  auto theta_g = reconstruct(from_ints(a.base), a.table());
  StarkRestrictionReport r;
  for (std::size_t s = 0; s < ctx.subgroups.size(); ++s) {
    if (a.mode == AssignmentMode::Weak && !std::binary_search(ctx.cyclic.begin(), ctx.cyclic.end(), s)) continue;
    const GroupPtr& H = ctx.subgroups[s];
    r.checked.push_back(s);
    if (restrict_to(theta_g, H) != heilbronn_character(a, H).function()) r.failures.push_back(s);
  }
  return r;
}

Inequality foote_murty_gap(const OrderAssignment& a, bool strict) {
  require_flag(a.weak, strict, "assignment is not weak-admissible");
  Inequality q;
  q.precondition = a.weak;
  for (long long x : a.base) q.lhs += x * x;
  long long reg = a.n_regular();
  q.rhs = reg * reg;
  q.holds = q.lhs <= q.rhs;
  return q;
}

StarkLemmaReport stark_lemma_check(const OrderAssignment& a) {
  StarkLemmaReport r;
  r.precondition = a.weak;
  r.n_regular = a.n_regular();
  r.applicable = r.precondition && r.n_regular <= 1;
  if (!r.applicable) return r;
  for (long long x : a.base) {
    if (x < 0) r.holds = false;
  }
  if (r.n_regular == 1) {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < a.base.size(); ++i) {
      if (a.base[i] != 0) nonzero.push_back(i);
    }
    if (nonzero.size() == 1 && a.base[nonzero[0]] == 1 && a.context->degrees[nonzero[0]] == 1) {
      r.carrier = nonzero[0];
    } else {
      r.holds = false;
    }
  } else if (r.holds) {
    r.holds = std::all_of(a.base.begin(), a.base.end(), [](long long x) { return x == 0; });
  }
  return r;
}

Inequality truncated_inequality(const OrderAssignment& a, std::size_t chi0, bool strict) {
  require_solvable(*a.context);
  if (chi0 >= a.base.size() || a.context->degrees[chi0] != 1) {
    throw Error(ErrorCode::NotLinear, "chi0 is not a linear character");
  }
  require_flag(a.ach3, strict, "assignment does not satisfy ACH3");
  Inequality q;
  q.precondition = a.ach3;
  for (std::size_t i = 0; i < a.base.size(); ++i) {
    if (i != chi0) q.lhs += a.base[i] * a.base[i];
  }
  long long d = a.n_regular() - a.base[chi0];
  q.rhs = d * d;
  q.holds = q.lhs <= q.rhs;
  return q;
}

Inequality level_inequality(const OrderAssignment& a, std::size_t i, bool strict) {
  const auto& ctx = *a.context;
  require_solvable(ctx);
  if (i == 0) throw Error(ErrorCode::InvalidArgument, "level inequality needs i >= 1");
  require_flag(a.ach3, strict, "assignment does not satisfy ACH3");
  Inequality q;
  q.precondition = a.ach3;
  for (std::size_t c = 0; c < a.base.size(); ++c) {
    if (ctx.levels[c] == i) q.lhs += a.base[c] * a.base[c];
  }
  long long d = a.n(ctx.level_row(i)) - a.n(ctx.level_row(i - 1));
  q.rhs = d * d;
  q.holds = q.lhs <= q.rhs;
  return q;
}

long long uvdw_gap(const OrderAssignment& a, const GroupPtr& H, bool strict) {
  require_solvable(*a.context);
  if (!is_subgroup(*H, *a.group())) throw Error(ErrorCode::NotSubgroup, "H is not a subgroup of G");
  require_flag(a.ach3, strict, "assignment does not satisfy ACH3");
  return to_int64(n_value(a, ClassFunction::trivial(H))) - a.base[0];
}

GapReport gap_not_one_check(const OrderAssignment& a, std::size_t i, bool strict) {
  const auto& ctx = *a.context;
  require_solvable(ctx);
  if (i == 0) throw Error(ErrorCode::InvalidArgument, "gap check needs i >= 1");
  require_flag(a.ach3, strict, "assignment does not satisfy ACH3");
  GapReport r;
  r.i = i;
  r.precondition = a.ach3;
  r.gap = a.n_regular() - a.n(ctx.level_row(i));
  r.holds = r.gap != 1;
  return r;
}

namespace {

std::optional<InducedWitness> induced_from(const ClassFunction& chi, const std::vector<GroupPtr>& candidates) {
  const GroupPtr& G = chi.group();
  const Rational deg = chi.degree().rational_value();
  for (const auto& H : candidates) {
    if (H->order() == G->order()) continue;
    Rational want = deg / Rational(static_cast<long>(G->order() / H->order()));
    if (!is_integer(want)) continue;
    auto tH = character_table(H);
    auto res = restrict_to(chi, H);
    for (const auto& psi : tH->irreducibles()) {
      if (psi.degree() != Cyclotomic(want) || inner_product(res, psi).is_zero()) continue;
      if (induce(psi, G) == chi) return InducedWitness{0, H, psi};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<InducedWitness> induced_from_proper(const ClassFunction& chi, std::size_t subgroup_cap) {
  return induced_from(chi, subgroups(*chi.group(), subgroup_cap));
}

ThetaSplit theta_split(const OrderAssignment& a) {
  const auto& ctx = *a.context;
  const std::size_t k = a.base.size();
  ThetaSplit s;
  s.theta = from_ints(a.base);
  s.theta2.coeffs.assign(k, Rational(0));
  s.theta3.coeffs.assign(k, Rational(0));
  for (std::size_t c = 0; c < k; ++c) {
    const Rational n(static_cast<long>(a.base[c]));
    if (!ctx.faithful[c]) s.theta3.coeffs[c] = n;
    if (a.base[c] < 0) {
      s.theta2.coeffs[c] = -n;
      s.negative.push_back(c);
      if (!ctx.faithful[c]) {
        s.overlap.push_back(c);
        s.every_negative_faithful = false;
      }
      if (auto w = induced_from(a.table()[c], ctx.subgroups)) {
        w->character = c;
        s.induced_negatives.push_back(*w);
        s.every_negative_not_induced = false;
      }
    }
  }
  s.theta1.coeffs.resize(k);
  for (std::size_t c = 0; c < k; ++c) s.theta1.coeffs[c] = s.theta.coeffs[c] + s.theta2.coeffs[c] - s.theta3.coeffs[c];
  s.theta2_theta3 = vc_dot(s.theta2, s.theta3);
  s.split_orthogonal = s.theta2_theta3 == 0;
  s.reconstructs = true;
  for (std::size_t c = 0; c < k; ++c) {
    if (s.theta1.coeffs[c] - s.theta2.coeffs[c] + s.theta3.coeffs[c] != s.theta.coeffs[c]) s.reconstructs = false;
  }
  return s;
}

// ---- exhaustive search

namespace {

struct Tallies {
  std::vector<CheckTally> checks;

  CheckTally& at(std::size_t i) { return checks[i]; }
  void merge(const Tallies& o) {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      auto& c = checks[i];
      const auto& d = o.checks[i];
      c.evaluated += d.evaluated;
      c.violations += d.violations;
      c.tight += d.tight;
      for (const auto& w : d.violating) {
        if (c.violating.size() < kWitnessLimit) c.violating.push_back(w);
      }
      for (const auto& w : d.extremal) {
        if (c.extremal.size() < kWitnessLimit) c.extremal.push_back(w);
      }
    }
  }
};

// one outcome per candidate and check: counts plus at most one witness each
struct Outcome {
  std::size_t evaluated = 0, violations = 0, tight = 0;
  void record(bool ok, bool eq) {
    ++evaluated;
    if (!ok) ++violations;
    if (eq) ++tight;
  }
  void flush(CheckTally& t, const std::vector<long long>& base) const {
    t.evaluated += evaluated;
    t.violations += violations;
    t.tight += tight;
    if (violations > 0 && t.violating.size() < kWitnessLimit) t.violating.push_back(base);
    if (tight > 0 && t.extremal.size() < kWitnessLimit) t.extremal.push_back(base);
  }
};

std::vector<std::string> check_names(const AssignmentContext& ctx, AssignmentMode mode) {
  std::vector<std::string> names{"foote_murty", "stark_lemma"};
  if (mode == AssignmentMode::Arithmetic && ctx.solvable) {
    for (const char* n : {"truncated", "linear_induction_bound", "uvdw_gap", "level_inequality", "gap_not_one"}) {
      names.emplace_back(n);
    }
  }
  return names;
}

void evaluate(const AssignmentContext& ctx, const std::vector<long long>& base, AssignmentMode mode, Tallies& out) {
  const std::size_t k = base.size();
  long long reg = 0, sq = 0;
  for (std::size_t i = 0; i < k; ++i) {
    reg += ctx.degrees[i] * base[i];
    sq += base[i] * base[i];
  }
  {
    Outcome o;
    o.record(sq <= reg * reg, sq == reg * reg);
    o.flush(out.at(0), base);
  }
  {
    Outcome o;
    if (reg <= 1) {
      bool ok = std::all_of(base.begin(), base.end(), [](long long x) { return x >= 0; });
      if (reg == 1) {
        std::size_t nz = 0, where = 0;
        for (std::size_t i = 0; i < k; ++i) {
          if (base[i] != 0) ++nz, where = i;
        }
        ok = ok && nz == 1 && base[where] == 1 && ctx.degrees[where] == 1;
      }
      o.record(ok, false);
    }
    o.flush(out.at(1), base);
  }
  if (out.checks.size() == 2) return;
  (void)mode;

  {
    Outcome o;
    for (std::size_t c0 : ctx.linear) {
      long long d = reg - base[c0];
      long long lhs = sq - base[c0] * base[c0];
      o.record(lhs <= d * d, lhs == d * d);
    }
    o.flush(out.at(2), base);
  }
  {
    Outcome o;
    for (const auto& [row, c] : ctx.linear_pairs) {
      long long lhs = dot(row, base);
      o.record(lhs >= base[c], lhs == base[c]);
    }
    o.flush(out.at(3), base);
  }
  {
    Outcome o;
    for (const auto& row : ctx.uvdw_rows) {
      long long g = dot(row, base) - base[0];
      o.record(g >= 0, g == 0);
    }
    o.flush(out.at(4), base);
  }
  const std::size_t len = ctx.derived_length();
  {
    Outcome o;
    for (std::size_t i = 1; i <= len; ++i) {
      long long lhs = 0;
      for (std::size_t c = 0; c < k; ++c) {
        if (ctx.levels[c] == i) lhs += base[c] * base[c];
      }
      long long d = dot(ctx.level_row(i), base) - dot(ctx.level_row(i - 1), base);
      o.record(lhs <= d * d, lhs == d * d);
    }
    o.flush(out.at(5), base);
  }
  {
    Outcome o;
    for (std::size_t i = 1; i <= len; ++i) {
      long long gap = reg - dot(ctx.level_row(i), base);
      o.record(gap != 1, false);
    }
    o.flush(out.at(6), base);
  }
}

struct Chunk {
  Tallies tallies;
  std::size_t admissible = 0;
};

}  // namespace

std::size_t SearchReport::violations() const {
  std::size_t v = 0;
  for (const auto& c : checks) v += c.violations;
  return v;
}

const CheckTally* SearchReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

SearchReport search_admissible(const ContextPtr& context, long long bound, AssignmentMode mode, unsigned jobs) {
  const auto& ctx = *context;
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "bound must be non-negative");
  const std::size_t k = ctx.table->size();
  const std::size_t width = static_cast<std::size_t>(2 * bound + 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > kSearchLimit / width) {
      throw Error(ErrorCode::SearchSpaceTooLarge, "more than " + std::to_string(kSearchLimit) + " candidates");
    }
    total *= width;
  }

  auto names = check_names(ctx, mode);
  auto blank = [&] {
    Chunk c;
    for (const auto& n : names) c.tallies.checks.push_back(CheckTally{n, 0, 0, 0, {}, {}});
    return c;
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  std::vector<Chunk> chunks(jobs, blank());
  auto work = [&](unsigned j) {
    const std::size_t lo = total * j / jobs, hi = total * (j + 1) / jobs;
    std::vector<long long> base(k);
    for (std::size_t idx = lo; idx < hi; ++idx) {
      std::size_t rest = idx;
      for (std::size_t i = k; i-- > 0;) {
        base[i] = static_cast<long long>(rest % width) - bound;
        rest /= width;
      }
      const auto& rows = mode == AssignmentMode::Weak ? ctx.weak_rows : ctx.ach3_rows;
      bool ok = std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return dot(r, base) >= 0; });
      if (!ok) continue;
      ++chunks[j].admissible;
      evaluate(ctx, base, mode, chunks[j].tallies);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }

  SearchReport r;
  r.mode = mode;
  r.bound = bound;
  r.candidates = total;
  Chunk merged = blank();
  for (const auto& c : chunks) {
    merged.tallies.merge(c.tallies);
    merged.admissible += c.admissible;
  }
  r.admissible = merged.admissible;
  r.checks = std::move(merged.tallies.checks);
  return r;
}

StructuralReport structural_predicates(const GroupPtr& G, std::size_t subgroup_cap) {
  StructuralReport r;
  r.solvable = is_solvable(*G);
  r.supersolvable = is_supersolvable(G);
  r.primes = prime_divisors(static_cast<long long>(G->order()));
  for (long long q : r.primes) {
    if (has_abelian_normal_sylow(*G, q)) r.abelian_normal_sylow.push_back(q);
  }
  if (!r.solvable) return r;
  for (const auto& N : normal_subgroups(*G, subgroup_cap)) {
    auto q = quotient(G, *N);
    if (!is_supersolvable(q.group)) continue;
    bool abelian = true;
    for (long long p : prime_divisors(static_cast<long long>(N->order()))) {
      abelian = abelian && sylow_subgroup(*N, p, subgroup_cap)->is_abelian();
    }
    if (abelian) {
      r.huppert_normal = N;
      break;
    }
  }
  return r;
}

Json assignment_to_json(const OrderAssignment& a) {
  Json base = Json::object();
  for (std::size_t i = 0; i < a.base.size(); ++i) base[std::to_string(i)] = a.base[i];
  return Json{{"group", a.group()->name()},
              {"label", a.label},
              {"mode", mode_name(a.mode)},
              {"base", base},
              {"weak", a.weak},
              {"ach3", a.ach3}};
}

OrderAssignment assignment_from_json(const Json& j, const ContextPtr& context) {
  try {
    const std::size_t k = context->table->size();
    const auto& b = j.at("base");
    std::vector<long long> base(k, 0);
    std::vector<bool> seen(k, false);
    if (b.is_array()) {
      if (b.size() != k) throw Error(ErrorCode::SchemaError, "base array has the wrong length");
      for (std::size_t i = 0; i < k; ++i) base[i] = b[i].get<long long>(), seen[i] = true;
    } else {
      for (const auto& [key, val] : b.items()) {
        std::size_t i = std::stoul(key);
        if (i >= k) throw Error(ErrorCode::SchemaError, "base index " + key + " out of range");
        base[i] = val.get<long long>();
        seen[i] = true;
      }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
      throw Error(ErrorCode::SchemaError, "base does not cover every irreducible");
    }
    auto mode = parse_mode(j.value("mode", std::string("weak")));
    return make_assignment(context, std::move(base), mode, j.value("label", std::string("s0")));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::SchemaError, "bad base index");
  }
}

Json search_report_to_json(const SearchReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"evaluated", c.evaluated},
                          {"violations", c.violations},
                          {"tight", c.tight},
                          {"violating", c.violating},
                          {"extremal", c.extremal}});
  }
  return Json{{"mode", mode_name(r.mode)},
              {"bound", r.bound},
              {"candidates", r.candidates},
              {"admissible", r.admissible},
              {"violations", r.violations()},
              {"checks", checks}};
}

Json theta_split_to_json(const ThetaSplit& s) {
  Json induced = Json::array();
  for (const auto& w : s.induced_negatives) {
    induced.push_back(Json{{"character", w.character},
                           {"subgroup", group_to_json(*w.subgroup)},
                           {"source", class_function_to_json(w.source)}});
  }
  return Json{{"theta", rational_vector_to_json(s.theta.coeffs)},
              {"theta1", rational_vector_to_json(s.theta1.coeffs)},
              {"theta2", rational_vector_to_json(s.theta2.coeffs)},
              {"theta3", rational_vector_to_json(s.theta3.coeffs)},
              {"negative", s.negative},
              {"overlap", s.overlap},
              {"every_negative_faithful", s.every_negative_faithful},
              {"every_negative_not_induced", s.every_negative_not_induced},
              {"induced_negatives", induced},
              {"theta2_theta3", to_string(s.theta2_theta3)},
              {"split_orthogonal", s.split_orthogonal},
              {"reconstructs", s.reconstructs}};
}

}  // namespace hk
