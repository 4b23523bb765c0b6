#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cgt/errors.hpp"
#include "cgt/json_io.hpp"

namespace {

using cgt::ojson;

struct Caps {
  long long max_cosets = cgt::kDefaultMaxCosets;
  long long max_order = 256;
  cgt::TensorOptions tensor() const { return {max_cosets, max_order}; }
  ojson diagnostics() const {
    ojson d;
    d["max_cosets"] = max_cosets;
    d["max_order"] = max_order;
    return d;
  }
};

struct EnumeratedInput {
  cgt::Presentation presentation;
  cgt::EnumerationResult enumeration;
};

EnumeratedInput enumerate_text(const std::string& text, const Caps& caps) {
  EnumeratedInput in;
  in.presentation = cgt::parse_presentation(text);
  in.enumeration = cgt::todd_coxeter(in.presentation, caps.max_cosets);
  return in;
}

// Action file: one line per generator of A (a permutation of B's elements,
// as indices in canonical order), then one line per generator of B acting
// on A's elements.  '#' starts a comment; blank lines are ignored.
cgt::MutualActionPair pair_from_inputs(const EnumeratedInput& a, const EnumeratedInput& b,
                                       const std::string& actions_path) {
  if (actions_path.empty())
    return cgt::MutualActionPair::trivial(a.enumeration.group, b.enumeration.group);
  std::ifstream f(actions_path);
  if (!f) throw cgt::validation_error("cannot open actions file " + actions_path);
  std::vector<std::vector<int>> lines;
  std::string line;
  while (std::getline(f, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::vector<int> vals;
    long long v;
    while (ss >> v) vals.push_back(static_cast<int>(v));
    if (!ss.eof()) throw cgt::validation_error("bad token in actions file");
    if (!vals.empty()) lines.push_back(std::move(vals));
  }
  size_t na = a.presentation.generator_names.size();
  size_t nb = b.presentation.generator_names.size();
  if (lines.size() != na + nb)
    throw cgt::validation_error("actions file: expected " + std::to_string(na + nb) +
                                " permutation lines, found " + std::to_string(lines.size()));
  std::vector<std::pair<int, std::vector<int>>> gens_a, gens_b;
  for (size_t i = 0; i < na; ++i) {
    if (lines[i].size() != static_cast<size_t>(b.enumeration.group->order()))
      throw cgt::validation_error("actions file: line " + std::to_string(i + 1) +
                                  " must list all " +
                                  std::to_string(b.enumeration.group->order()) + " elements");
    gens_a.emplace_back(a.enumeration.generator_images[i], lines[i]);
  }
  for (size_t i = 0; i < nb; ++i) {
    if (lines[na + i].size() != static_cast<size_t>(a.enumeration.group->order()))
      throw cgt::validation_error("actions file: line " + std::to_string(na + i + 1) +
                                  " must list all " +
                                  std::to_string(a.enumeration.group->order()) + " elements");
    gens_b.emplace_back(b.enumeration.generator_images[i], lines[na + i]);
  }
  return cgt::MutualActionPair::from_generator_actions(a.enumeration.group, b.enumeration.group,
                                                       gens_a, gens_b);
}

void emit(bool json, const ojson& report, const std::string& text) {
  if (json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

std::string class_field(const std::optional<int>& v, const char* absent) {
  return v ? std::to_string(*v) : std::string(absent);
}

ojson null_or(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

int run(int argc, char** argv) {
  CLI::App app{"gtensor: nonabelian tensor products, exterior products and "
               "Pfeiffer products of finite groups"};
  app.require_subcommand(1);
  bool json = false;
  Caps caps;
  std::string pres_a, pres_b, actions_path, gamma_input;
  int closure_order = 8;
  std::vector<std::string> class_names;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "emit a JSON report");
    sub->add_option("--max-cosets", caps.max_cosets, "coset cap for enumerations");
    sub->add_option("--max-order", caps.max_order, "cap on |G|*|H| in tensor presentations");
  };

  CLI::App* c_square = app.add_subcommand("tensor-square", "tensor square of a presented group");
  c_square->add_option("presentation", pres_a, "group presentation, e.g. \"<a | a^5>\"")
      ->required();
  add_common(c_square);

  CLI::App* c_product =
      app.add_subcommand("tensor-product", "tensor product of two presented groups");
  c_product->add_option("presentation_a", pres_a)->required();
  c_product->add_option("presentation_b", pres_b)->required();
  c_product->add_option("--actions", actions_path, "mutual action file (default: trivial)");
  add_common(c_product);

  CLI::App* c_ext =
      app.add_subcommand("exterior", "exterior square of a presented group");
  c_ext->add_option("presentation", pres_a)->required();
  add_common(c_ext);

  CLI::App* c_gamma =
      app.add_subcommand("gamma", "Whitehead quadratic functor of an abelian group");
  c_gamma->add_option("invariant_factors", gamma_input, "e.g. \"(2,4)\"")->required();
  add_common(c_gamma);

  CLI::App* c_schur = app.add_subcommand("schur", "Schur multiplier of a presented group");
  c_schur->add_option("presentation", pres_a)->required();
  add_common(c_schur);

  CLI::App* c_pf =
      app.add_subcommand("pfeiffer", "Pfeiffer product of two presented groups");
  c_pf->add_option("presentation_a", pres_a)->required();
  c_pf->add_option("presentation_b", pres_b)->required();
  c_pf->add_option("--actions", actions_path, "mutual action file (default: trivial)");
  add_common(c_pf);

  CLI::App* c_compat =
      app.add_subcommand("check-compatible", "check the action coherence identities");
  c_compat->add_option("presentation_a", pres_a)->required();
  c_compat->add_option("presentation_b", pres_b)->required();
  c_compat->add_option("--actions", actions_path, "mutual action file (default: trivial)");
  add_common(c_compat);

  CLI::App* c_closure =
      app.add_subcommand("verify-closure", "run the class-closure suite over the catalog");
  c_closure->add_option("max_order", closure_order, "catalog order bound (<= 16)")->required();
  c_closure->add_option("classes", class_names, "finite|abelian|nilpotent|soluble|<p>-group")
      ->required();
  add_common(c_closure);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // command-line validation shares the parse-error exit code
  }

  if (c_square->parsed() || c_ext->parsed()) {
    EnumeratedInput in = enumerate_text(pres_a, caps);
    cgt::TensorRealization t = cgt::tensor_square(in.enumeration.group, caps.tensor());
    cgt::ExteriorResult ext = cgt::exterior_product(t);
    cgt::AbelianGroup multiplier =
        cgt::abelian_invariants(cgt::subgroup_as_group(ext.kappa_prime.kernel()));
    cgt::Abelianization ab = cgt::abelianization(t.tensor_group);
    auto nil = cgt::nilpotency_class(t.tensor_group);
    auto der = cgt::derived_length(t.tensor_group);
    long long kappa_image = t.kappa.image().order();

    ojson results;
    results["group_order"] = in.enumeration.group->order();
    results["order"] = t.tensor_group->order();
    results["abelianization"] = cgt::json_of(ab.invariants);
    results["nilpotency_class"] = null_or(nil);
    results["derived_length"] = null_or(der);
    results["d_order"] = ext.d.d.order();
    results["exterior_order"] = ext.exterior->order();
    results["schur_multiplier"] = cgt::json_of(multiplier);
    results["kappa_image_order"] = kappa_image;
    ojson inputs;
    inputs["presentation"] = pres_a;
    std::ostringstream text;
    text << "|G| = " << in.enumeration.group->order() << "\n"
         << "|G (x) G| = " << t.tensor_group->order() << "\n"
         << "abelianization = " << ab.invariants.to_string() << "\n"
         << "nilpotency class = " << class_field(nil, "not nilpotent") << "\n"
         << "derived length = " << class_field(der, "not soluble") << "\n"
         << "|D| = " << ext.d.d.order() << "\n"
         << "|G ^ G| = " << ext.exterior->order() << "\n"
         << "Schur multiplier = " << multiplier.to_string() << "\n"
         << "|Im kappa| = " << kappa_image << "\n";
    emit(json, cgt::make_report(c_square->parsed() ? "tensor-square" : "exterior", inputs,
                                results, caps.diagnostics()),
         text.str());
    return 0;
  }

  if (c_product->parsed()) {
    EnumeratedInput a = enumerate_text(pres_a, caps);
    EnumeratedInput b = enumerate_text(pres_b, caps);
    cgt::MutualActionPair pair = pair_from_inputs(a, b, actions_path);
    cgt::TensorRealization t = cgt::tensor_product(pair, caps.tensor());
    cgt::Abelianization ab = cgt::abelianization(t.tensor_group);
    ojson results;
    results["g_order"] = a.enumeration.group->order();
    results["h_order"] = b.enumeration.group->order();
    results["order"] = t.tensor_group->order();
    results["abelian"] = t.tensor_group->is_abelian();
    results["abelianization"] = cgt::json_of(ab.invariants);
    results["kappa_image_order"] = t.kappa.image().order();
    results["pfeiffer_order"] = t.pfeiffer.p->order();
    results["ker_mu_order"] = t.pfeiffer.mu.kernel().order();
    results["ker_nu_order"] = t.pfeiffer.nu.kernel().order();
    ojson inputs;
    inputs["presentation_a"] = pres_a;
    inputs["presentation_b"] = pres_b;
    inputs["actions"] = actions_path.empty() ? "trivial" : actions_path;
    std::ostringstream text;
    text << "|G| = " << a.enumeration.group->order() << ", |H| = "
         << b.enumeration.group->order() << "\n"
         << "|G (x) H| = " << t.tensor_group->order() << "\n"
         << "abelianization = " << ab.invariants.to_string() << "\n"
         << "|Im kappa| = " << t.kappa.image().order() << "\n"
         << "|P| = " << t.pfeiffer.p->order() << " (ker mu " << t.pfeiffer.mu.kernel().order()
         << ", ker nu " << t.pfeiffer.nu.kernel().order() << ")\n";
    emit(json, cgt::make_report("tensor-product", inputs, results, caps.diagnostics()),
         text.str());
    return 0;
  }

  if (c_gamma->parsed()) {
    std::string cleaned;
    for (char c : gamma_input)
      cleaned += (c == '(' || c == ')' || c == ',') ? ' ' : c;
    std::istringstream ss(cleaned);
    std::vector<long long> factors;
    long long v;
    while (ss >> v) factors.push_back(v);
    if (!ss.eof()) throw cgt::validation_error("bad invariant factor list");
    cgt::AbelianGroup a = cgt::abelian_group(0, factors);
    cgt::AbelianGroup g = cgt::gamma_whitehead(a);
    ojson results;
    results["input"] = cgt::json_of(a);
    results["gamma"] = cgt::json_of(g);
    ojson inputs;
    inputs["invariant_factors"] = gamma_input;
    emit(json, cgt::make_report("gamma", inputs, results, caps.diagnostics()),
         g.to_string() + "\n");
    return 0;
  }

  if (c_schur->parsed()) {
    EnumeratedInput in = enumerate_text(pres_a, caps);
    cgt::AbelianGroup m = cgt::schur_multiplier(in.enumeration.group, caps.tensor());
    ojson results;
    results["group_order"] = in.enumeration.group->order();
    results["schur_multiplier"] = cgt::json_of(m);
    ojson inputs;
    inputs["presentation"] = pres_a;
    emit(json, cgt::make_report("schur", inputs, results, caps.diagnostics()),
         m.to_string() + "\n");
    return 0;
  }

  if (c_pf->parsed()) {
    EnumeratedInput a = enumerate_text(pres_a, caps);
    EnumeratedInput b = enumerate_text(pres_b, caps);
    cgt::MutualActionPair pair = pair_from_inputs(a, b, actions_path);
    cgt::OvergroupEmbedding pf = cgt::pfeiffer_product(pair, caps.tensor());
    ojson results;
    results["g_order"] = a.enumeration.group->order();
    results["h_order"] = b.enumeration.group->order();
    results["p_order"] = pf.p->order();
    results["mu_image_order"] = pf.mu.image().order();
    results["nu_image_order"] = pf.nu.image().order();
    results["ker_mu_order"] = pf.mu.kernel().order();
    results["ker_nu_order"] = pf.nu.kernel().order();
    ojson inputs;
    inputs["presentation_a"] = pres_a;
    inputs["presentation_b"] = pres_b;
    inputs["actions"] = actions_path.empty() ? "trivial" : actions_path;
    std::ostringstream text;
    text << "|P| = " << pf.p->order() << "\n"
         << "|Im mu| = " << pf.mu.image().order() << ", |ker mu| = "
         << pf.mu.kernel().order() << "\n"
         << "|Im nu| = " << pf.nu.image().order() << ", |ker nu| = "
         << pf.nu.kernel().order() << "\n";
    emit(json, cgt::make_report("pfeiffer", inputs, results, caps.diagnostics()), text.str());
    return 0;
  }

  if (c_compat->parsed()) {
    EnumeratedInput a = enumerate_text(pres_a, caps);
    EnumeratedInput b = enumerate_text(pres_b, caps);
    cgt::MutualActionPair pair = pair_from_inputs(a, b, actions_path);
    cgt::CompatibilityReport rep = cgt::check_compatibility(pair);
    ojson results;
    results["compatible"] = rep.ok;
    if (!rep.ok) {
      results["identity"] = rep.identity;
      results["triple"] = {rep.x, rep.y, rep.z};
    }
    ojson inputs;
    inputs["presentation_a"] = pres_a;
    inputs["presentation_b"] = pres_b;
    inputs["actions"] = actions_path.empty() ? "trivial" : actions_path;
    emit(json, cgt::make_report("check-compatible", inputs, results, caps.diagnostics()),
         rep.ok ? "ok\n" : rep.describe() + "\n");
    return 0;
  }

  if (c_closure->parsed()) {
    std::vector<cgt::GroupClass> classes;
    for (const std::string& n : class_names) classes.push_back(cgt::parse_class(n));
    cgt::SuiteReport rep = cgt::run_closure_suite(closure_order, classes, caps.tensor());
    ojson inputs;
    inputs["max_order"] = closure_order;
    inputs["classes"] = class_names;
    std::ostringstream text;
    text << "cases " << rep.cases << ", passes " << rep.passes << ", hypotheses unmet "
         << rep.hypotheses_unmet << ", skipped " << rep.skipped << ", contradictions "
         << rep.contradictions << "\n";
    for (const cgt::SuiteWitness& w : rep.witnesses)
      text << "CONTRADICTION: " << w.pair_name << " for class " << w.class_name << "\n";
    emit(json, cgt::make_report("verify-closure", inputs, cgt::json_of(rep),
                                caps.diagnostics()),
         text.str());
    return rep.ok() ? 0 : 5;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cgt::internal_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 4;
  } catch (const cgt::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const cgt::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const cgt::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
