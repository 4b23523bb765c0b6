#include "cgt/json_io.hpp"

namespace cgt {

ojson json_of(const AbelianGroup& a) {
  ojson j;
  j["free_rank"] = a.free_rank;
  j["invariant_factors"] = a.invariant_factors;
  return j;
}

ojson json_of(const IsoFingerprint& f) {
  ojson j;
  j["order"] = f.order;
  j["abelian_invariants"] = f.abelian_invariants;
  j["center_order"] = f.center_order;
  j["derived_series_orders"] = f.derived_series_orders;
  j["lower_central_orders"] = f.lower_central_orders;
  j["exponent"] = f.exponent;
  j["conjugacy_class_sizes"] = f.conjugacy_class_sizes;
  ojson oc = ojson::array();
  for (auto [ord, cnt] : f.order_counts) oc.push_back({{"order", ord}, {"count", cnt}});
  j["element_order_counts"] = oc;
  return j;
}

ojson json_of(const InstanceReport& r) {
  ojson j;
  j["pair"] = r.pair_name;
  j["class"] = r.class_name;
  if (!r.hypotheses_met) {
    j["status"] = "hypotheses-not-satisfied";
    j["detail"] = r.hypothesis_failure;
    return j;
  }
  if (!r.computed) {
    j["status"] = "skipped";
    j["detail"] = r.skip_reason;
    return j;
  }
  j["status"] = r.tensor_in_class ? "pass" : "CONTRADICTION";
  j["tensor_order"] = r.tensor_order;
  j["commutator_in_class"] = r.commutator_in_class;
  return j;
}

ojson json_of(const SuiteReport& r) {
  ojson j;
  j["max_order"] = r.max_order;
  j["classes"] = r.class_names;
  ojson counts;
  counts["cases"] = r.cases;
  counts["passes"] = r.passes;
  counts["hypotheses_unmet"] = r.hypotheses_unmet;
  counts["skipped"] = r.skipped;
  counts["contradictions"] = r.contradictions;
  j["counts"] = counts;
  ojson cases = ojson::array();
  for (const SuiteCase& c : r.case_reports) {
    ojson cj;
    cj["pair"] = c.pair_name;
    cj["kind"] = c.kind;
    cj["g_order"] = c.g_order;
    cj["h_order"] = c.h_order;
    if (c.tensor_order > 0) cj["tensor_order"] = c.tensor_order;
    ojson outs = ojson::array();
    for (const InstanceReport& ir : c.outcomes) outs.push_back(json_of(ir));
    cj["outcomes"] = outs;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  ojson witnesses = ojson::array();
  for (const SuiteWitness& w : r.witnesses) {
    ojson wj;
    wj["pair"] = w.pair_name;
    wj["class"] = w.class_name;
    wj["g_table"] = w.g_table;
    wj["h_table"] = w.h_table;
    wj["tensor_table"] = w.tensor_table;
    wj["act_g_on_h"] = w.act_g_on_h;
    wj["act_h_on_g"] = w.act_h_on_g;
    witnesses.push_back(wj);
  }
  j["witnesses"] = witnesses;
  return j;
}

ojson make_report(const std::string& command, ojson inputs, ojson results, ojson diagnostics) {
  ojson j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["diagnostics"] = std::move(diagnostics);
  j["version"] = kReportVersion;
  return j;
}

}  // namespace cgt
