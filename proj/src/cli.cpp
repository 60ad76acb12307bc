#include "hk/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "hk/certify.hpp"
#include "hk/chartab.hpp"
#include "hk/corpus.hpp"
#include "hk/error.hpp"
#include "hk/heilbronn.hpp"
#include "hk/monomial.hpp"
#include "hk/supercharacter.hpp"

namespace hk::cli {

namespace {

struct Options {
  std::string input;
  std::string extra;
  std::string out;
  std::string cache_dir;
  std::string subgroup;
  std::string chr;
  std::string by;
  std::string base;
  std::string values;
  std::string theory = "classical";
  std::string sub_theory = "classical";
  std::string mode = "weak";
  unsigned jobs = 1;
  long long bound = 2;
  std::size_t level = 1;
  std::size_t max_order = kDefaultSubgroupCap;
  std::size_t max_classes = 8;
};

struct Result {
  Json json;
  std::string summary;
  bool violation = false;
};

using Handler = std::function<Result(const Options&)>;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The table cache file is named after a hash of the group file's bytes.
GroupPtr load(const Options& o) {
  auto G = load_group(o.input);
  if (o.cache_dir.empty()) return G;
  char name[40];
  std::snprintf(name, sizeof name, "%016llx.table.json", static_cast<unsigned long long>(fnv1a(read_bytes(o.input))));
  std::filesystem::path path = std::filesystem::path(o.cache_dir) / name;
  if (std::filesystem::exists(path)) {
    seed_table_cache(G, load_table(path));
  } else {
    std::filesystem::create_directories(o.cache_dir);
    save_table(*character_table(G), path);
  }
  return G;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  }
  return out;
}

long long parse_int(const std::string& s) {
  auto r = parse_rational(s);
  if (!is_integer(r)) throw Error(ErrorCode::InvalidArgument, "expected an integer: " + s);
  return to_int64(r);
}

// Comma-separated generators in cycle notation; an empty list is the trivial subgroup.
GroupPtr parse_subgroup(const GroupPtr& G, const std::string& spec) {
  std::vector<std::size_t> gens;
  for (const auto& item : split(spec, ',')) {
    auto idx = G->index_of(Perm::from_cycles(G->degree(), item));
    if (!idx) throw Error(ErrorCode::NotSubgroup, "generator " + item + " is not in G");
    gens.push_back(*idx);
  }
  return generate(*G, gens);
}

GroupPtr subgroup_option(const GroupPtr& G, const Options& o) {
  if (o.subgroup.empty()) throw Error(ErrorCode::InvalidArgument, "--subgroup is required");
  return parse_subgroup(G, o.subgroup);
}

// "reg", "reg-1", a row index, or comma-separated coordinates over Irr.
ClassFunction parse_char(const TablePtr& t, const std::string& spec) {
  if (spec == "reg") return t->regular();
  if (spec == "reg-1") return t->regular() - ClassFunction::trivial(t->group());
  auto parts = split(spec, ',');
  if (parts.size() == 1 && spec.find(',') == std::string::npos) {
    long long k = parse_int(parts[0]);
    if (k < 0 || static_cast<std::size_t>(k) >= t->size()) {
      throw Error(ErrorCode::InvalidArgument, "character index out of range: " + spec);
    }
    return (*t)[k];
  }
  if (parts.size() != t->size()) throw Error(ErrorCode::InvalidArgument, "need one coordinate per irreducible");
  ClassFunction f = ClassFunction::zero(t->group());
  for (std::size_t c = 0; c < parts.size(); ++c) f += (*t)[c] * Cyclotomic(parse_rational(parts[c]));
  return f;
}

ClassFunction char_option(const TablePtr& t, const Options& o) {
  if (o.chr.empty()) throw Error(ErrorCode::InvalidArgument, "--char is required");
  return parse_char(t, o.chr);
}

std::vector<long long> parse_base(const std::string& s) {
  std::vector<long long> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_int(p));
  return out;
}

TheoryPtr parse_theory(const TablePtr& t, const std::string& spec) {
  if (spec == "classical") return classical_theory(t);
  if (spec == "max") return max_theory(t);
  return theory_from_json(read_json_file(spec), t);
}

Json gens(const GroupPtr& H) { return group_to_json(*H)["generators"]; }

Json coords(const ClassFunction& f) { return rational_vector_to_json(decompose(f, *character_table(f.group())).coeffs); }

Json inequality(const Inequality& q) {
  return Json{{"lhs", q.lhs}, {"rhs", q.rhs}, {"holds", q.holds}, {"precondition", q.precondition}};
}

std::string yes(bool b) { return b ? "yes" : "no"; }

// ---- grp

Result grp_info(const Options& o) {
  auto G = load(o);
  const bool solvable = is_solvable(*G);
  Json sizes = Json::array(), reps = Json::array();
  for (const auto& c : G->classes()) {
    sizes.push_back(c.size());
    reps.push_back(G->element(c.representative).one_based());
  }
  Json j{{"name", G->name()},
         {"order", G->order()},
         {"degree", G->degree()},
         {"classes", G->num_classes()},
         {"class_sizes", sizes},
         {"class_representatives", reps},
         {"abelian", G->is_abelian()},
         {"solvable", solvable},
         {"supersolvable", is_supersolvable(G)},
         {"exponent", G->exponent()},
         {"center_order", center(*G)->order()}};
  std::string s = G->name() + ": order " + std::to_string(G->order()) + ", " + std::to_string(G->num_classes()) +
                  " classes, " + (solvable ? "solvable" : "not solvable");
  if (solvable) {
    j["derived_length"] = derived_series(*G).length();
    s += ", derived length " + std::to_string(derived_series(*G).length());
  }
  return {j, s};
}

Result grp_subgroups(const Options& o) {
  auto G = load(o);
  Json list = Json::array();
  auto subs = subgroups(*G, o.max_order);
  for (const auto& H : subs) {
    bool cyclic = false;
    for (std::size_t x = 0; x < H->order() && !cyclic; ++x) cyclic = H->element_order(x) == H->order();
    list.push_back(Json{{"order", H->order()}, {"generators", gens(H)}, {"normal", is_normal(*G, *H)}, {"cyclic", cyclic}});
  }
  return {Json{{"count", subs.size()}, {"subgroups", list}}, std::to_string(subs.size()) + " subgroups"};
}

// ---- chartab

Result chartab_compute(const Options& o) {
  auto G = load(o);
  auto t = character_table(G);
  return {table_to_json(*t), std::to_string(t->size()) + "x" + std::to_string(t->size()) + " table, verified"};
}

Result chartab_verify(const Options& o) {
  auto G = load(o);
  auto t = load_table(o.extra);
  if (!t.group()->same_as(*G)) throw Error(ErrorCode::VerificationFailed, "table belongs to another group");
  return {Json{{"valid", true}, {"characters", t.size()}}, "table verified"};
}

// ---- cf

Result cf_induce(const Options& o) {
  auto G = load(o);
  auto H = subgroup_option(G, o);
  auto phi = char_option(character_table(H), o);
  auto ind = induce(phi, G);
  return {Json{{"subgroup", gens(H)}, {"source", class_function_to_json(phi)}, {"induced", class_function_to_json(ind)},
               {"decomposition", coords(ind)}},
          "induced from order " + std::to_string(H->order())};
}

Result cf_restrict(const Options& o) {
  auto G = load(o);
  auto H = subgroup_option(G, o);
  auto chi = char_option(character_table(G), o);
  auto res = restrict_to(chi, H);
  return {Json{{"subgroup", gens(H)}, {"restricted", class_function_to_json(res)}, {"decomposition", coords(res)}},
          "restricted to order " + std::to_string(H->order())};
}

Result cf_inflate(const Options& o) {
  auto G = load(o);
  auto N = subgroup_option(G, o);
  auto q = quotient(G, *N);
  auto f = char_option(character_table(q.group), o);
  auto inf = inflate(f, q);
  return {Json{{"kernel", gens(N)}, {"inflated", class_function_to_json(inf)}, {"decomposition", coords(inf)}},
          "inflated from a quotient of order " + std::to_string(q.group->order())};
}

Result cf_twist(const Options& o) {
  auto G = load(o);
  auto t = character_table(G);
  if (o.by.empty()) throw Error(ErrorCode::InvalidArgument, "--by is required");
  auto f = twist(char_option(t, o), parse_char(t, o.by));
  return {Json{{"twist", class_function_to_json(f)}, {"decomposition", coords(f)}}, "twisted"};
}

Result cf_decompose(const Options& o) {
  auto G = load(o);
  auto t = character_table(G);
  auto f = o.values.empty() ? char_option(t, o) : class_function_from_json(read_json_file(o.values), G);
  auto v = decompose(f, *t);
  return {Json{{"coefficients", rational_vector_to_json(v.coeffs)},
               {"is_character", v.is_character()},
               {"support", v.support()},
               {"norm", to_string(inner_product_q(f, f))}},
          std::to_string(v.support().size()) + " constituents"};
}

Result cf_level(const Options& o) {
  auto G = load(o);
  if (!is_solvable(*G)) throw Error(ErrorCode::NotSolvable, G->name() + " is not solvable");
  auto t = character_table(G);
  auto series = derived_series(*G);
  Json levels = Json::array(), faithful = Json::array(), orders = Json::array();
  for (const auto& chi : t->irreducibles()) {
    levels.push_back(level(chi, series));
    faithful.push_back(is_faithful(chi));
  }
  for (const auto& term : series.terms) orders.push_back(term->order());
  return {Json{{"derived_length", series.length()}, {"series_orders", orders}, {"levels", levels}, {"faithful", faithful}},
          "derived length " + std::to_string(series.length())};
}

// ---- mono

Result mono_uvdw(const Options& o) {
  auto G = load(o);
  auto d = decompose_uvdw(G, subgroup_option(G, o));
  return {decomposition_to_json(d), std::to_string(d.terms.size()) + " monomial terms, verified"};
}

Result mono_level(const Options& o) {
  auto G = load(o);
  auto d = decompose_uvdw_level(G, subgroup_option(G, o), o.level);
  return {decomposition_to_json(d), std::to_string(d.terms.size()) + " monomial terms beside Ind_{HG^i} 1, verified"};
}

Result mono_mgroup(const Options& o) {
  auto G = load(o);
  auto r = is_m_group(G, o.max_order);
  Json w = Json::array();
  for (const auto& x : r.witnesses) {
    if (!x) {
      w.push_back(nullptr);
    } else {
      w.push_back(Json{{"subgroup_gens", gens(x->subgroup)}, {"linear_char", class_function_to_json(x->linear_char)}});
    }
  }
  return {Json{{"m_group", r.is_m_group}, {"non_monomial", r.non_monomial}, {"witnesses", w}},
          "M-group: " + yes(r.is_m_group)};
}

Result mono_cone(const Options& o) {
  auto G = load(o);
  auto t = character_table(G);
  auto psi = decompose(o.chr.empty() ? parse_char(t, "reg-1") : char_option(t, o), *t).coeffs;
  auto family = monomial_family(G, false, o.max_order);
  auto r = cone_membership(psi, family);
  auto member = [&](std::size_t m) {
    return Json{{"member", m},
                {"subgroup_gens", gens(family.members[m].subgroup)},
                {"linear_char", class_function_to_json(family.members[m].linear_char)}};
  };
  Json j{{"psi", rational_vector_to_json(psi)}, {"member", r.member}, {"verified", r.verified}, {"family_size", family.members.size()}};
  if (r.member) {
    Json cert = Json::array();
    for (const auto& [m, c] : r.certificate) {
      Json e = member(m);
      e["coeff"] = to_string(c);
      cert.push_back(e);
    }
    j["certificate"] = cert;
  } else {
    if (r.separating_member) j["separating_member"] = member(*r.separating_member);
    if (!r.farkas.empty()) j["farkas"] = rational_vector_to_json(r.farkas);
    j["separating_value"] = to_string(r.separating_value);
  }
  return {j, std::string(r.member ? "in" : "outside") + " the monomial cone", !r.verified};
}

// ---- heilbronn

OrderAssignment assignment(const Options& o) {
  auto G = load(o);
  auto ctx = assignment_context(character_table(G), o.max_order);
  return make_assignment(ctx, parse_base(o.base), parse_mode(o.mode));
}

Result heilbronn_verify(const Options& o) {
  auto a = assignment(o);
  bool bad = false;
  Json j{{"assignment", assignment_to_json(a)}};
  auto sr = check_stark_restriction(a);
  bad = bad || !sr.holds();
  j["stark_restriction"] = Json{{"checked", sr.checked.size()}, {"failures", sr.failures}};
  auto fm = foote_murty_gap(a, false);
  bad = bad || (fm.precondition && !fm.holds);
  j["foote_murty"] = inequality(fm);
  auto sl = stark_lemma_check(a);
  bad = bad || (sl.precondition && sl.applicable && !sl.holds);
  j["stark_lemma"] = Json{{"precondition", sl.precondition}, {"applicable", sl.applicable}, {"n_regular", sl.n_regular},
                          {"holds", sl.holds}, {"carrier", sl.carrier ? Json(*sl.carrier) : Json(nullptr)}};
  const auto& ctx = *a.context;
  if (a.mode == AssignmentMode::Arithmetic && ctx.solvable) {
    Json trunc = Json::array(), levels = Json::array(), gaps = Json::array();
    for (std::size_t c : a.table().linear_indices()) {
      auto q = truncated_inequality(a, c, false);
      bad = bad || (q.precondition && !q.holds);
      Json e = inequality(q);
      e["chi0"] = c;
      trunc.push_back(e);
    }
    for (std::size_t i = 1; i <= ctx.derived_length(); ++i) {
      auto q = level_inequality(a, i, false);
      bad = bad || (q.precondition && !q.holds);
      Json e = inequality(q);
      e["i"] = i;
      levels.push_back(e);
      auto g = gap_not_one_check(a, i, false);
      bad = bad || (g.precondition && !g.holds);
      gaps.push_back(Json{{"i", i}, {"gap", g.gap}, {"holds", g.holds}, {"precondition", g.precondition}});
    }
    j["truncated"] = trunc;
    j["level_inequality"] = levels;
    j["gap_not_one"] = gaps;
  }
  return {j, "admissible: " + yes(a.admissible()) + ", violation: " + yes(bad), bad};
}

Result heilbronn_search(const Options& o) {
  auto G = load(o);
  auto ctx = assignment_context(character_table(G), o.max_order);
  auto r = search_admissible(ctx, o.bound, parse_mode(o.mode), o.jobs);
  return {search_report_to_json(r),
          std::to_string(r.candidates) + " candidates, " + std::to_string(r.admissible) + " admissible, " +
              std::to_string(r.violations()) + " violations",
          r.violations() != 0};
}

Result heilbronn_split(const Options& o) {
  auto a = assignment(o);
  auto s = theta_split(a);
  return {theta_split_to_json(s), std::to_string(s.negative.size()) + " negative orders", !s.reconstructs};
}

// ---- sct

Partition parse_partition(const Json& j) {
  Partition p;
  for (const auto& part : j) p.push_back(part.get<std::vector<std::size_t>>());
  return p;
}

Result sct_verify(const Options& o) {
  auto G = load(o);
  auto t = character_table(G);
  Json tj = read_json_file(o.extra);
  Partition X, K;
  try {
    X = parse_partition(tj.at("X"));
    K = parse_partition(tj.at("K"));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }
  auto r = verify_sct(*t, X, K);
  return {Json{{"valid", r.valid()},
               {"identity_singleton", r.identity_singleton},
               {"equal_sizes", r.equal_sizes},
               {"constant", r.constant},
               {"unions_of_classes", r.unions_of_classes},
               {"orthogonal", r.orthogonal},
               {"sums_to_regular", r.sums_to_regular}},
          "supercharacter theory: " + yes(r.valid()), !r.valid()};
}

Result sct_enumerate(const Options& o) {
  auto G = load(o);
  auto all = enumerate_scts(character_table(G), o.max_classes, o.jobs);
  Json list = Json::array();
  for (const auto& T : all) list.push_back(theory_to_json(*T));
  return {Json{{"count", all.size()}, {"theories", list}}, std::to_string(all.size()) + " supercharacter theories"};
}

Result sct_product(const Options& o) {
  auto G = load(o);
  auto N = subgroup_option(G, o);
  auto q = quotient(G, *N);
  auto T = hendrickson_product(G, parse_theory(character_table(N), o.sub_theory), q,
                               parse_theory(character_table(q.group), o.theory));
  auto r = verify_sct(*T->table(), T->X(), T->K());
  Json j = theory_to_json(*T);
  j["valid"] = r.valid();
  return {j, std::to_string(T->size()) + " supercharacters", !r.valid()};
}

Result sct_superinduce(const Options& o) {
  auto G = load(o);
  auto H = subgroup_option(G, o);
  auto TG = parse_theory(character_table(G), o.theory);
  auto TH = parse_theory(character_table(H), o.sub_theory);
  std::size_t k = o.chr.empty() ? 0 : static_cast<std::size_t>(parse_int(o.chr));
  if (k >= TH->size()) throw Error(ErrorCode::InvalidArgument, "supercharacter index out of range");
  auto phi = SuperclassFunction::from_class_function(TH, TH->supercharacters()[k]);
  auto s = superinduce(phi, TG);
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(cyclotomic_to_json(v));
  auto f = s.to_class_function();
  auto rec = super_frobenius_check(TH, TG);
  return {Json{{"values", values},
               {"class_function", class_function_to_json(f)},
               {"decomposition", coords(f)},
               {"super_frobenius", Json{{"pairs", rec.pairs}, {"failures", rec.failures}}}},
          "superinduced to " + std::to_string(TG->size()) + " superclasses", !rec.holds()};
}

// ---- certify

Result certificate(const HolomorphyCertificate& c) {
  return {certificate_to_json(c), "certificate " + holomorphy_name(c.status) + ", verified", !c.verify()};
}

Result certify_uvdw_cmd(const Options& o) {
  auto G = load(o);
  return certificate(certify_quotient_uvdw(G, subgroup_option(G, o)));
}

Result certify_rr2_cmd(const Options& o) {
  auto G = load(o);
  auto H = subgroup_option(G, o);
  auto psi = char_option(character_table(H), o);
  auto r = certificate(certify_rr2(G, psi));
  r.json["extensions"] = extensions_of(character_table(G), psi);
  return r;
}

Result certify_level_cmd(const Options& o) {
  auto G = load(o);
  auto H = subgroup_option(G, o);
  return certificate(certify_level(G, char_option(character_table(H), o), o.level));
}

Result certify_takagi(const Options& o) {
  auto G = load(o);
  auto t = character_table(G);
  Json j{{"zeta_K", symbol_to_json(artin_takagi(t))}};
  if (!o.subgroup.empty()) j["zeta_fixed_field"] = symbol_to_json(dedekind_symbol(t, parse_subgroup(G, o.subgroup)));
  return {j, "formal symbols over " + std::to_string(t->size()) + " irreducibles"};
}

// ---- corpus

Result corpus_run(const Options& o) {
  auto spec = load_corpus(o.input);
  auto j = run_corpus(spec, o.jobs);
  std::size_t v = j["violations"].get<std::size_t>();
  return {j, std::to_string(spec.entries.size()) + " groups, " + std::to_string(v) + " violations", v != 0};
}

enum Flag : unsigned {
  kSub = 1, kChar = 2, kLevel = 4, kBase = 8, kMode = 16, kBound = 32, kTheory = 64, kExtra = 128, kBy = 256, kValues = 512,
  kJobs = 1024, kCap = 2048, kClasses = 4096
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact character theory of finite permutation groups", "hk"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::pair<CLI::App*, Handler>> leaves;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& about, unsigned flags, Handler h,
                  const std::string& input = "group") {
    auto* c = parent->add_subcommand(name, about);
    c->add_option(input, o.input, input == "group" ? "group file (JSON or cycle notation)" : "manifest file")->required();
    if (flags & kExtra) c->add_option("file", o.extra, "second input file")->required();
    c->add_option("--out", o.out, "write JSON here instead of stdout");
    c->add_option("--cache-dir", o.cache_dir, "character table cache directory");
    if (flags & kJobs) c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    if (flags & kCap) c->add_option("--max-order", o.max_order, "largest group order for subgroup enumeration");
    if (flags & kSub) c->add_option("--subgroup", o.subgroup, "generators in cycle notation, comma separated");
    if (flags & kChar) c->add_option("--char", o.chr, "row index, reg, reg-1, or coordinates over Irr");
    if (flags & kBy) c->add_option("--by", o.by, "second character")->required();
    if (flags & kValues) c->add_option("--values", o.values, "class function JSON file");
    if (flags & kLevel) c->add_option("--level", o.level, "derived series index");
    if (flags & kBase) c->add_option("--base", o.base, "n(G, chi) per irreducible, comma separated")->required();
    if (flags & kMode) c->add_option("--mode", o.mode, "weak or arithmetic");
    if (flags & kBound) c->add_option("--bound", o.bound, "search box |n(G, chi)| <= bound");
    if (flags & kClasses) c->add_option("--max-classes", o.max_classes, "enumeration limit on conjugacy classes");
    if (flags & kTheory) {
      c->add_option("--theory", o.theory, "theory on G (or G/N): classical, max, or a JSON file");
      c->add_option("--sub-theory", o.sub_theory, "theory on the subgroup: classical, max, or a JSON file");
    }
    leaves.emplace_back(c, std::move(h));
  };
  auto group = [&](const std::string& name, const std::string& about) {
    auto* g = app.add_subcommand(name, about);
    g->require_subcommand(1);
    return g;
  };

  auto* grp = group("grp", "group structure");
  leaf(grp, "info", "order, classes, solvability", 0, grp_info);
  leaf(grp, "subgroups", "all subgroups", kCap, grp_subgroups);
  auto* ct = group("chartab", "character tables");
  leaf(ct, "compute", "compute and verify the table", 0, chartab_compute);
  leaf(ct, "verify", "re-verify a stored table", kExtra, chartab_verify);
  auto* cf = group("cf", "class functions");
  leaf(cf, "induce", "induce a character of a subgroup", kSub | kChar, cf_induce);
  leaf(cf, "restrict", "restrict to a subgroup", kSub | kChar, cf_restrict);
  leaf(cf, "inflate", "inflate from G/N (N given by --subgroup)", kSub | kChar, cf_inflate);
  leaf(cf, "twist", "pointwise product", kChar | kBy, cf_twist);
  leaf(cf, "decompose", "coordinates over Irr(G)", kChar | kValues, cf_decompose);
  leaf(cf, "level", "levels of the irreducibles", 0, cf_level);
  auto* mono = group("mono", "monomial characters");
  leaf(mono, "uvdw", "Ind_H 1 = 1 + sum of monomial inductions", kSub, mono_uvdw);
  leaf(mono, "level", "level-i variant", kSub | kLevel, mono_level);
  leaf(mono, "mgroup", "monomiality of every irreducible", kCap, mono_mgroup);
  leaf(mono, "cone", "monomial cone membership (default Reg - 1)", kChar | kCap, mono_cone);
  auto* hb = group("heilbronn", "order assignments and Heilbronn characters");
  leaf(hb, "verify", "check one assignment", kBase | kMode | kCap, heilbronn_verify);
  leaf(hb, "search", "exhaustive bounded search", kMode | kBound | kJobs | kCap, heilbronn_search);
  leaf(hb, "split", "Theta = Theta1 - Theta2 + Theta3", kBase | kMode | kCap, heilbronn_split);
  auto* sct = group("sct", "supercharacter theories");
  leaf(sct, "verify", "check a theory file {X, K}", kExtra, sct_verify);
  leaf(sct, "enumerate", "all theories", kJobs | kClasses, sct_enumerate);
  leaf(sct, "product", "product over a normal subgroup", kSub | kTheory, sct_product);
  leaf(sct, "superinduce", "superinduce a supercharacter of H (--char index)", kSub | kChar | kTheory, sct_superinduce);
  auto* cert = group("certify", "holomorphy certificates");
  leaf(cert, "uvdw", "zeta quotient for a subgroup", kSub, certify_uvdw_cmd);
  leaf(cert, "rr2", "Ind psi minus its linear extensions", kSub | kChar, certify_rr2_cmd);
  leaf(cert, "level", "Ind psi minus its low-level part", kSub | kChar | kLevel, certify_level_cmd);
  leaf(cert, "takagi", "formal zeta symbols", kSub, certify_takagi);
  auto* corpus = group("corpus", "corpus runs");
  leaf(corpus, "run", "every check over a manifest", kJobs, corpus_run, "manifest");

  std::vector<std::string> argv_store{"hk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    for (const auto& [cmd, handler] : leaves) {
      if (!cmd->parsed()) continue;
      Result r = handler(o);
      std::string text = r.json.dump(2) + "\n";
      if (o.out.empty()) {
        out << text;
      } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!(f << text)) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out);
      }
      err << r.summary << "\n";
      return r.violation ? 1 : 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_verification_failure() ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace hk::cli
