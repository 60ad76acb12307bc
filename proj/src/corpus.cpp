#include "hk/corpus.hpp"

#include "hk/certify.hpp"
#include "hk/chartab.hpp"
#include "hk/error.hpp"
#include "hk/heilbronn.hpp"
#include "hk/monomial.hpp"
#include "hk/supercharacter.hpp"

namespace hk {

namespace {

Json reciprocity(const GroupPtr& G, const std::vector<GroupPtr>& subs, std::size_t& violations) {
  auto tG = character_table(G);
  std::size_t pairs = 0, frobenius = 0, mackey = 0;
  for (const auto& H : subs) {
    for (const auto& phi : character_table(H)->irreducibles()) {
      auto ind = induce(phi, G);
      for (const auto& chi : tG->irreducibles()) {
        ++pairs;
        frobenius += inner_product(ind, chi) != inner_product(phi, restrict_to(chi, H));
      }
      for (const auto& K : subs) mackey += !mackey_check(phi, G, K).holds;
    }
  }
  violations += frobenius + mackey;
  return Json{{"pairs", pairs}, {"frobenius_failures", frobenius}, {"mackey_failures", mackey}};
}

Json uvdw(const GroupPtr& G, const std::vector<GroupPtr>& subs, std::size_t& violations) {
  std::size_t verified = 0, unit_trivial = 0, entire = 0;
  for (const auto& H : subs) {
    auto d = decompose_uvdw(G, H);
    verified += d.verify();
    unit_trivial += d.residual_trivial == 1;
    auto c = certify_quotient_uvdw(G, H);
    entire += c.verify() && c.status == Holomorphy::Entire;
  }
  violations += 3 * subs.size() - verified - unit_trivial - entire;
  return Json{{"subgroups", subs.size()},
              {"verified", verified},
              {"trivial_coefficient_one", unit_trivial},
              {"certificates_entire", entire}};
}

Json levels(const GroupPtr& G, std::size_t& violations) {
  Json out = Json::array();
  auto len = derived_series(*G).length();
  for (std::size_t i = 0; i <= len; ++i) {
    auto r = level_identity(G, i);
    violations += !r.weighted_holds;
    out.push_back(Json{{"i", i}, {"literal", r.unweighted_holds}, {"weighted", r.weighted_holds}});
  }
  return out;
}

Json cone(const GroupPtr& G, std::size_t cap, std::size_t& violations) {
  auto t = character_table(G);
  std::vector<Rational> psi;
  for (long d : t->degrees()) psi.emplace_back(d);
  psi[0] -= 1;
  auto r = cone_membership(psi, monomial_family(G, false, cap));
  violations += !(r.member && r.verified);
  return Json{{"member", r.member}, {"verified", r.verified}, {"terms", r.certificate.size()}};
}

Json scts(const TablePtr& t, std::size_t max_classes, unsigned jobs, std::size_t& violations) {
  auto all = enumerate_scts(t, max_classes, jobs);
  bool valid = true, classical = false, max = false;
  auto c = classical_theory(t), m = max_theory(t);
  for (const auto& T : all) {
    valid = valid && verify_sct(*t, T->X(), T->K()).valid();
    classical = classical || *T == *c;
    max = max || *T == *m;
  }
  violations += !valid + !classical + !max;
  return Json{{"count", all.size()}, {"all_valid", valid}, {"classical", classical}, {"max", max}};
}

}  // namespace

const CorpusEntry& CorpusSpec::entry(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw Error(ErrorCode::InvalidArgument, "no corpus group named " + name);
}

CorpusSpec load_corpus(const std::filesystem::path& manifest) {
  Json j = read_json_file(manifest);
  CorpusSpec spec;
  try {
    if (j.contains("caps")) {
      const auto& c = j["caps"];
      spec.max_order = c.value("max_order", spec.max_order);
      spec.subgroup_cap = c.value("subgroup_cap", spec.subgroup_cap);
      spec.frobenius_max_order = c.value("frobenius_max_order", spec.frobenius_max_order);
      spec.uvdw_max_order = c.value("uvdw_max_order", spec.uvdw_max_order);
      spec.sct_max_classes = c.value("sct_max_classes", spec.sct_max_classes);
    }
    for (const auto& g : j.at("groups")) {
      CorpusEntry e{g.at("name").get<std::string>(), manifest.parent_path() / g.at("file").get<std::string>(), nullptr};
      e.group = load_group(e.file, spec.max_order);
      spec.entries.push_back(std::move(e));
    }
    for (const auto& s : j.value("searches", Json::array())) {
      spec.searches.push_back({s.at("group").get<std::string>(), s.at("bound").get<long long>()});
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("manifest: ") + e.what());
  }
  for (const auto& s : spec.searches) spec.entry(s.group);
  return spec;
}

Json run_corpus(const CorpusSpec& spec, unsigned jobs) {
  std::size_t violations = 0;
  Json groups = Json::array();
  for (const auto& e : spec.entries) {
    const auto& G = e.group;
    auto t = character_table(G);
    const bool solvable = is_solvable(*G);
    Json g{{"name", e.name},
           {"order", G->order()},
           {"classes", G->num_classes()},
           {"degrees", t->degrees()},
           {"solvable", solvable},
           {"supersolvable", is_supersolvable(G)}};
    if (solvable) g["derived_length"] = derived_series(*G).length();
    // tables are rebuilt by Dixon's method and must agree with the cached one
    auto dixon = compute_character_table_dixon(G);
    bool agree = dixon.size() == t->size();
    for (std::size_t c = 0; agree && c < t->size(); ++c) agree = dixon[c] == (*t)[c];
    g["table_verified"] = agree;
    violations += !agree;

    const bool small = G->order() <= spec.frobenius_max_order;
    std::vector<GroupPtr> subs;
    if (small || (solvable && G->order() <= spec.uvdw_max_order)) subs = subgroups(*G, spec.subgroup_cap);
    if (small) g["reciprocity"] = reciprocity(G, subs, violations);
    if (solvable && G->order() <= spec.uvdw_max_order) g["uvdw"] = uvdw(G, subs, violations);
    if (solvable) g["level_identity"] = levels(G, violations);

    auto m = is_m_group(G, spec.subgroup_cap);
    g["m_group"] = m.is_m_group;
    g["non_monomial"] = m.non_monomial;
    auto s = structural_predicates(G, spec.subgroup_cap);
    g["huppert_hypothesis"] = s.huppert_hypothesis();
    // Huppert's hypothesis forces every irreducible to be monomial
    violations += s.huppert_hypothesis() && !m.is_m_group;
    g["cone_reg_minus_one"] = cone(G, spec.subgroup_cap, violations);
    if (G->num_classes() <= spec.sct_max_classes) g["scts"] = scts(t, spec.sct_max_classes, jobs, violations);
    groups.push_back(std::move(g));
  }

  Json searches = Json::array();
  for (const auto& s : spec.searches) {
    auto ctx = assignment_context(character_table(spec.entry(s.group).group), spec.subgroup_cap);
    for (auto mode : {AssignmentMode::Weak, AssignmentMode::Arithmetic}) {
      auto r = search_admissible(ctx, s.bound, mode, jobs);
      violations += r.violations();
      Json j = search_report_to_json(r);
      j["group"] = s.group;
      searches.push_back(std::move(j));
    }
  }
  return Json{{"groups", groups}, {"searches", searches}, {"violations", violations}};
}

}  // namespace hk
