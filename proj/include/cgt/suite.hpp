#ifndef CGT_SUITE_HPP
#define CGT_SUITE_HPP

#include "cgt/catalog.hpp"
#include "cgt/classes.hpp"
#include "cgt/tensor.hpp"

namespace cgt {

struct InstanceReport {
  std::string pair_name;
  std::string class_name;
  bool hypotheses_met = false;
  std::string hypothesis_failure;
  bool computed = false;
  std::string skip_reason;
  // Valid when computed and hypotheses met:
  bool tensor_in_class = false;
  bool commutator_in_class = false;  // Remark-1 data: [G,H] membership
  long long tensor_order = 0;

  bool contradicts_theorem() const { return hypotheses_met && computed && !tensor_in_class; }
};

/// Checks one Main-Theorem instance: if G, H and Gamma((G meet H)^ab) lie
/// in the class, G (x) H must too.  Unmet hypotheses make the instance
/// vacuous, not a failure.
InstanceReport verify_main_theorem_instance(const MutualActionPair& pair, const GroupClass& cls,
                                            const TensorOptions& opts = {});

/// The G = H specialization: hypotheses G and Gamma(G^ab) in the class.
InstanceReport verify_corollary(GroupRef g, const GroupClass& cls,
                                const TensorOptions& opts = {});

struct SuiteWitness {
  std::string pair_name;
  std::string class_name;
  std::vector<std::vector<int>> g_table, h_table, tensor_table;
  std::vector<std::vector<int>> act_g_on_h, act_h_on_g;
};

struct SuiteCase {
  std::string pair_name;
  std::string kind;  // square | cross-trivial | overgroup-conjugation
  long long g_order = 0, h_order = 0;
  long long tensor_order = 0;  // 0 when not computed
  std::vector<InstanceReport> outcomes;
};

struct SuiteReport {
  int max_order = 0;
  std::vector<std::string> class_names;
  long long cases = 0;
  long long passes = 0;
  long long hypotheses_unmet = 0;
  long long skipped = 0;
  long long contradictions = 0;
  std::vector<SuiteCase> case_reports;
  std::vector<SuiteWitness> witnesses;

  bool ok() const { return contradictions == 0; }
};

/// Iterates catalog pairs — tensor squares always, cross pairs with
/// trivial actions, and the shipped overgroup conjugation configurations —
/// and runs every applicable class instance.  Resource caps surface as
/// skipped entries, counted apart from failures.
SuiteReport run_closure_suite(int max_order, const std::vector<GroupClass>& classes,
                              const TensorOptions& opts = {});

}  // namespace cgt

#endif
