#include "cgt/suite.hpp"

#include <optional>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

// G meet H, where the pair gives it a home (squares, overgroup pairs).
std::optional<GroupRef> intersection_group(const MutualActionPair& pair) {
  if (pair.square) return pair.g;
  if (pair.provenance) {
    Subgroup gs{pair.provenance->overgroup, pair.provenance->g_elements};
    Subgroup hs{pair.provenance->overgroup, pair.provenance->h_elements};
    return subgroup_as_group(subgroup_intersection(gs, hs));
  }
  return std::nullopt;
}

std::string unmet_hypothesis(const MutualActionPair& pair, const GroupClass& cls) {
  CompatibilityReport compat = check_compatibility(pair);
  if (!compat.ok) return compat.describe();
  if (!cls.contains(pair.g)) return "G is not " + cls.name();
  if (!cls.contains(pair.h)) return "H is not " + cls.name();
  if (auto meet = intersection_group(pair)) {
    AbelianGroup gamma = gamma_whitehead(abelianization(*meet).invariants);
    if (!cls.contains(realize_abelian(gamma)))
      return "Gamma((G meet H)^ab) = " + gamma.to_string() + " is not " + cls.name();
  }
  return "";
}

InstanceReport evaluate_instance(const MutualActionPair& pair, const GroupClass& cls,
                                 const TensorRealization* t, const std::string& skip_reason) {
  InstanceReport rep;
  rep.class_name = cls.name();
  rep.hypothesis_failure = unmet_hypothesis(pair, cls);
  rep.hypotheses_met = rep.hypothesis_failure.empty();
  if (!rep.hypotheses_met) return rep;
  if (!t) {
    rep.computed = false;
    rep.skip_reason = skip_reason;
    return rep;
  }
  rep.computed = true;
  rep.tensor_order = t->tensor_group->order();
  rep.tensor_in_class = cls.contains(t->tensor_group);
  rep.commutator_in_class = cls.contains(subgroup_as_group(t->kappa.image()));
  return rep;
}

}  // namespace

InstanceReport verify_main_theorem_instance(const MutualActionPair& pair, const GroupClass& cls,
                                            const TensorOptions& opts) {
  std::string unmet = unmet_hypothesis(pair, cls);
  if (!unmet.empty()) {
    InstanceReport rep;
    rep.class_name = cls.name();
    rep.hypothesis_failure = unmet;
    return rep;
  }
  try {
    TensorRealization t = tensor_product(pair, opts);
    return evaluate_instance(pair, cls, &t, "");
  } catch (const resource_error& e) {
    return evaluate_instance(pair, cls, nullptr, e.what());
  }
}

InstanceReport verify_corollary(GroupRef g, const GroupClass& cls, const TensorOptions& opts) {
  return verify_main_theorem_instance(MutualActionPair::conjugation_square(std::move(g)), cls,
                                      opts);
}

SuiteReport run_closure_suite(int max_order, const std::vector<GroupClass>& classes,
                              const TensorOptions& opts) {
  SuiteReport rep;
  rep.max_order = max_order;
  for (const GroupClass& c : classes) rep.class_names.push_back(c.name());

  std::vector<CatalogEntry> entries = catalog(max_order);
  std::vector<GroupRef> groups;
  groups.reserve(entries.size());
  for (const CatalogEntry& e : entries) groups.push_back(realize_entry(e).group);

  struct PendingPair {
    std::string name;
    std::string kind;
    MutualActionPair pair;
  };
  std::vector<PendingPair> pairs;
  for (size_t i = 0; i < entries.size(); ++i)
    pairs.push_back({"sq:" + entries[i].name, "square",
                     MutualActionPair::conjugation_square(groups[i])});
  for (size_t i = 0; i < entries.size(); ++i)
    for (size_t j = i + 1; j < entries.size(); ++j)
      pairs.push_back({"cross:" + entries[i].name + "|" + entries[j].name, "cross-trivial",
                       MutualActionPair::trivial(groups[i], groups[j])});
  for (const OvergroupConfig& cfg : overgroup_configs()) {
    const CatalogEntry* e = nullptr;
    for (const CatalogEntry& c : catalog_all())
      if (c.name == cfg.overgroup) e = &c;
    if (!e || e->expected_order > max_order) continue;
    RealizedConfig rc = realize_config(cfg);
    pairs.push_back({"ov:" + cfg.name, "overgroup-conjugation",
                     MutualActionPair::from_overgroup(rc.overgroup, rc.g, rc.h)});
  }

  for (PendingPair& pp : pairs) {
    SuiteCase sc;
    sc.pair_name = pp.name;
    sc.kind = pp.kind;
    sc.g_order = pp.pair.g->order();
    sc.h_order = pp.pair.h->order();

    bool needed = false;
    for (const GroupClass& cls : classes)
      if (unmet_hypothesis(pp.pair, cls).empty()) needed = true;

    std::optional<TensorRealization> t;
    std::string skip_reason;
    if (needed) {
      try {
        t = tensor_product(pp.pair, opts);
        sc.tensor_order = t->tensor_group->order();
      } catch (const resource_error& e) {
        skip_reason = e.what();
      }
    }

    for (const GroupClass& cls : classes) {
      InstanceReport ir = evaluate_instance(pp.pair, cls, t ? &*t : nullptr, skip_reason);
      ir.pair_name = pp.name;
      ++rep.cases;
      if (!ir.hypotheses_met)
        ++rep.hypotheses_unmet;
      else if (!ir.computed)
        ++rep.skipped;
      else if (ir.tensor_in_class)
        ++rep.passes;
      else {
        ++rep.contradictions;
        SuiteWitness w;
        w.pair_name = pp.name;
        w.class_name = cls.name();
        w.g_table = pp.pair.g->table();
        w.h_table = pp.pair.h->table();
        w.tensor_table = t->tensor_group->table();
        w.act_g_on_h = pp.pair.act_g_on_h;
        w.act_h_on_g = pp.pair.act_h_on_g;
        rep.witnesses.push_back(std::move(w));
      }
      sc.outcomes.push_back(std::move(ir));
    }
    rep.case_reports.push_back(std::move(sc));
  }
  return rep;
}

}  // namespace cgt
