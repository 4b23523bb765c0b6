#include "cgt/tensor.hpp"

#include <algorithm>
#include <map>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

// Multiplication-table presentation of a group on one generator per
// element: x_a x_b = x_{ab}.
void append_table_relators(const FiniteGroup& g, int base, std::vector<FreeWord>& out) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      FreeWord w;
      w.letters = {base + a + 1, base + b + 1, -(base + g.mul(a, b) + 1)};
      out.push_back(std::move(w));
    }
}

Subgroup product_set(const FiniteGroup& p, const Subgroup& a, const Subgroup& b) {
  std::vector<char> in(p.order(), 0);
  for (int x : a.elements)
    for (int y : b.elements) in[p.mul(x, y)] = 1;
  std::vector<int> elems;
  for (int x = 0; x < p.order(); ++x)
    if (in[x]) elems.push_back(x);
  return Subgroup{a.parent, std::move(elems)};
}

}  // namespace

OvergroupEmbedding pfeiffer_product(const MutualActionPair& pair, const TensorOptions& opts) {
  const FiniteGroup& g = *pair.g;
  const FiniteGroup& h = *pair.h;
  CompatibilityReport compat = check_compatibility(pair);
  if (!compat.ok)
    throw validation_error("actions are not compatible: " + compat.describe());

  Presentation pres;
  for (int a = 0; a < g.order(); ++a) pres.generator_names.push_back("g" + std::to_string(a));
  for (int b = 0; b < h.order(); ++b) pres.generator_names.push_back("h" + std::to_string(b));
  int hbase = g.order();
  append_table_relators(g, 0, pres.relators);
  append_table_relators(h, hbase, pres.relators);
  // I family: (^h g) h g^-1 h^-1, and J family: (^g h) g h^-1 g^-1.
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b) {
      FreeWord i_rel;
      i_rel.letters = {pair.apply_h(b, a) + 1, hbase + b + 1, -(a + 1), -(hbase + b + 1)};
      pres.relators.push_back(std::move(i_rel));
      FreeWord j_rel;
      j_rel.letters = {hbase + pair.apply_g(a, b) + 1, a + 1, -(hbase + b + 1), -(a + 1)};
      pres.relators.push_back(std::move(j_rel));
    }

  EnumerationResult enumr = todd_coxeter(pres, opts.max_cosets);
  GroupRef p = enumr.group;

  std::vector<std::pair<int, int>> mu_images, nu_images;
  for (int a = 0; a < g.order(); ++a) mu_images.emplace_back(a, enumr.generator_images[a]);
  for (int b = 0; b < h.order(); ++b)
    nu_images.emplace_back(b, enumr.generator_images[hbase + b]);
  Homomorphism mu, nu;
  try {
    mu = homomorphism_from_images(pair.g, p, mu_images);
    nu = homomorphism_from_images(pair.h, p, nu_images);
  } catch (const validation_error& e) {
    throw internal_error(std::string("Pfeiffer inclusions fail to be homomorphisms: ") +
                         e.what());
  }

  if ((static_cast<long long>(g.order()) * h.order()) % p->order() != 0)
    throw internal_error("|P| does not divide |G||H|");
  Subgroup im_mu = mu.image(), im_nu = nu.image();
  if (!is_normal(im_mu)) throw internal_error("Im mu is not normal in P");
  if (!is_normal(im_nu)) throw internal_error("Im nu is not normal in P");
  if (product_set(*p, im_mu, im_nu).order() != p->order())
    throw internal_error("P != (Im mu)(Im nu)");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b) {
      if (mu(pair.apply_h(b, a)) != p->conj(nu(b), mu(a)))
        throw internal_error("conjugation in P does not reproduce the action of H on G");
      if (nu(pair.apply_g(a, b)) != p->conj(mu(a), nu(b)))
        throw internal_error("conjugation in P does not reproduce the action of G on H");
    }
  return OvergroupEmbedding{p, std::move(mu), std::move(nu)};
}

TensorRealization tensor_product(const MutualActionPair& pair, const TensorOptions& opts) {
  const FiniteGroup& g = *pair.g;
  const FiniteGroup& h = *pair.h;
  CompatibilityReport compat = check_compatibility(pair);
  if (!compat.ok)
    throw validation_error("actions are not compatible: " + compat.describe());
  long long pairs = static_cast<long long>(g.order()) * h.order();
  if (pairs > opts.max_order)
    throw resource_error("|G|*|H| = " + std::to_string(pairs) +
                         " exceeds the tensor generator cap " + std::to_string(opts.max_order));

  OvergroupEmbedding pf = pfeiffer_product(pair, opts);

  auto t = [&](int ge, int he) { return static_cast<int>(ge) * h.order() + he + 1; };
  Presentation pres;
  for (int ge = 0; ge < g.order(); ++ge)
    for (int he = 0; he < h.order(); ++he)
      pres.generator_names.push_back("t" + std::to_string(ge) + "_" + std::to_string(he));
  // Row-major over G x G x H, then G x H x H.
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int y = 0; y < h.order(); ++y) {
        FreeWord w;  // (ab (x) y)^-1 (^a b (x) ^a y)(a (x) y)
        w.letters = {-t(g.mul(a, b), y), t(g.conj(a, b), pair.apply_g(a, y)), t(a, y)};
        pres.relators.push_back(std::move(w));
      }
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < h.order(); ++x)
      for (int y = 0; y < h.order(); ++y) {
        FreeWord w;  // (a (x) xy)^-1 (a (x) x)(^x a (x) ^x y)
        w.letters = {-t(a, h.mul(x, y)), t(a, x), t(pair.apply_h(x, a), h.conj(x, y))};
        pres.relators.push_back(std::move(w));
      }

  EnumerationResult enumr = todd_coxeter(pres, opts.max_cosets);

  TensorRealization real;
  real.tensor_group = enumr.group;
  real.pair = pair;
  real.pair_generator = enumr.generator_images;
  real.pfeiffer = std::move(pf);

  std::vector<std::pair<int, int>> kappa_images;
  for (int ge = 0; ge < g.order(); ++ge)
    for (int he = 0; he < h.order(); ++he)
      kappa_images.emplace_back(real.generator(ge, he),
                                real.pfeiffer.p->commutator(real.pfeiffer.mu(ge),
                                                            real.pfeiffer.nu(he)));
  try {
    real.kappa = homomorphism_from_images(real.tensor_group, real.pfeiffer.p, kappa_images);
  } catch (const validation_error& e) {
    throw internal_error(std::string("kappa fails to be a homomorphism: ") + e.what());
  }
  Subgroup expected =
      commutator_subgroup(real.pfeiffer.p, real.pfeiffer.mu.image(), real.pfeiffer.nu.image());
  if (!(real.kappa.image() == expected))
    throw internal_error("Im kappa != [Im mu, Im nu]");
  return real;
}

TensorRealization tensor_square(GroupRef g, const TensorOptions& opts) {
  return tensor_product(MutualActionPair::conjugation_square(std::move(g)), opts);
}

NablaResult nabla(const TensorRealization& t) {
  NablaResult res;
  std::vector<int> seeds;
  if (t.pair.square) {
    for (int a = 0; a < t.pair.g->order(); ++a) seeds.push_back(t.generator(a, a));
    res.intersection = t.pair.g;
  } else if (t.pair.provenance) {
    const OvergroupProvenance& prov = *t.pair.provenance;
    Subgroup gs{prov.overgroup, prov.g_elements};
    Subgroup hs{prov.overgroup, prov.h_elements};
    Subgroup meet = subgroup_intersection(gs, hs);
    std::vector<int> gpos(prov.overgroup->order(), -1), hpos(prov.overgroup->order(), -1);
    for (size_t i = 0; i < prov.g_elements.size(); ++i) gpos[prov.g_elements[i]] = i;
    for (size_t i = 0; i < prov.h_elements.size(); ++i) hpos[prov.h_elements[i]] = i;
    for (int z : meet.elements) seeds.push_back(t.generator(gpos[z], hpos[z]));
    res.intersection = subgroup_as_group(meet);
  } else {
    throw validation_error(
        "D is only defined for tensor squares or pairs built from a common overgroup");
  }
  res.d = subgroup_generated(t.tensor_group, seeds);
  res.gamma = gamma_whitehead(abelianization(res.intersection).invariants);
  res.gamma_order = res.gamma.order();
  res.divides = res.gamma_order % res.d.order() == 0;
  return res;
}

ExteriorResult exterior_product(const TensorRealization& t) {
  ExteriorResult res;
  res.d = nabla(t);
  const FiniteGroup& tg = *t.tensor_group;
  for (int d : res.d.d.elements)
    if (t.kappa(d) != FiniteGroup::kIdentity)
      throw internal_error("kappa does not kill D; kappa' would be ill-defined");
  auto [ext, proj] = quotient(t.tensor_group, res.d.d);
  res.exterior = ext;
  res.projection = std::move(proj);

  // kappa' on a coset is kappa of any representative.
  std::vector<int> map(ext->order(), -1);
  for (int x = 0; x < tg.order(); ++x) {
    int c = res.projection(x);
    if (map[c] < 0)
      map[c] = t.kappa(x);
    else if (map[c] != t.kappa(x))
      throw internal_error("kappa is not constant on D-cosets");
  }
  for (int a = 0; a < ext->order(); ++a)
    for (int b = 0; b < ext->order(); ++b)
      if (map[ext->mul(a, b)] != t.pfeiffer.p->mul(map[a], map[b]))
        throw internal_error("kappa' fails to be a homomorphism");
  res.kappa_prime = Homomorphism{ext, t.pfeiffer.p, std::move(map)};

  if (static_cast<long long>(ext->order()) * res.d.d.order() != tg.order())
    throw internal_error("|G^H| * |D| != |G(x)H|");
  return res;
}

AbelianGroup schur_multiplier(GroupRef g, const TensorOptions& opts) {
  TensorRealization t = tensor_square(std::move(g), opts);
  ExteriorResult ext = exterior_product(t);
  Subgroup ker = ext.kappa_prime.kernel();
  GroupRef kg = subgroup_as_group(ker);
  if (!kg->is_abelian()) throw internal_error("ker kappa' of a tensor square is not abelian");
  return abelian_invariants(kg);
}

Homomorphism induced_action(const TensorRealization& t, int x_in_p) {
  const FiniteGroup& p = *t.pfeiffer.p;
  const FiniteGroup& g = *t.pair.g;
  const FiniteGroup& h = *t.pair.h;
  if (x_in_p < 0 || x_in_p >= p.order()) throw validation_error("element outside P");
  // Decompose x = mu(a) nu(b); any decomposition acts identically because
  // the kernel of the free product's action is absorbed by compatibility.
  std::vector<int> nu_pre(p.order(), -1);
  for (int b = h.order() - 1; b >= 0; --b) nu_pre[t.pfeiffer.nu(b)] = b;
  int ea = -1, eb = -1;
  for (int a = 0; a < g.order(); ++a) {
    int rest = p.mul(p.inv(t.pfeiffer.mu(a)), x_in_p);
    if (nu_pre[rest] >= 0) {
      ea = a;
      eb = nu_pre[rest];
      break;
    }
  }
  if (ea < 0) throw internal_error("P != (Im mu)(Im nu): no decomposition found");

  std::vector<std::pair<int, int>> images;
  for (int ge = 0; ge < g.order(); ++ge)
    for (int he = 0; he < h.order(); ++he) {
      int gg = g.conj(ea, t.pair.apply_h(eb, ge));
      int hh = t.pair.apply_g(ea, h.conj(eb, he));
      images.emplace_back(t.generator(ge, he), t.generator(gg, hh));
    }
  Homomorphism phi;
  try {
    phi = homomorphism_from_images(t.tensor_group, t.tensor_group, images);
  } catch (const validation_error& e) {
    throw internal_error(std::string("induced action fails to be a homomorphism: ") + e.what());
  }
  if (!phi.is_surjective()) throw internal_error("induced action is not an automorphism");
  return phi;
}

Sequence7Report verify_exact_sequence7(GroupRef k, const Subgroup& g, const Subgroup& h,
                                       const TensorOptions& opts) {
  Sequence7Report rep;
  auto fail = [&rep](const std::string& what) {
    rep.ok = false;
    rep.failures.push_back(what);
  };

  MutualActionPair pair = MutualActionPair::from_overgroup(std::move(k), g, h);
  TensorRealization t = tensor_product(pair, opts);
  const FiniteGroup& tg = *t.tensor_group;
  rep.tensor_order = tg.order();

  Subgroup ker_mu = t.pfeiffer.mu.kernel();
  Subgroup ker_nu = t.pfeiffer.nu.kernel();
  rep.ker_mu_order = ker_mu.order();
  rep.ker_nu_order = ker_nu.order();

  // Im i = <g (x) h' , g' (x) h : h' in ker nu, g' in ker mu>.
  std::vector<int> seeds;
  for (int ge = 0; ge < pair.g->order(); ++ge)
    for (int hp : ker_nu.elements) seeds.push_back(t.generator(ge, hp));
  for (int gp : ker_mu.elements)
    for (int he = 0; he < pair.h->order(); ++he) seeds.push_back(t.generator(gp, he));
  Subgroup im_i = subgroup_generated(t.tensor_group, seeds);
  rep.im_i_order = im_i.order();

  Subgroup z = center(t.tensor_group);
  rep.central_image_ok = true;
  for (int x : im_i.elements)
    if (!z.contains(x)) {
      rep.central_image_ok = false;
      fail("Im i not central: element " + std::to_string(x) + " of the tensor group");
      break;
    }

  // Reduced pair Gbar, Hbar inside P, with conjugation there.
  Subgroup im_mu = t.pfeiffer.mu.image();
  Subgroup im_nu = t.pfeiffer.nu.image();
  MutualActionPair reduced = MutualActionPair::from_overgroup(t.pfeiffer.p, im_mu, im_nu);
  TensorRealization tbar = tensor_product(reduced, opts);
  rep.reduced_tensor_order = tbar.tensor_group->order();

  std::vector<int> mu_pos(t.pfeiffer.p->order(), -1), nu_pos(t.pfeiffer.p->order(), -1);
  for (size_t i = 0; i < im_mu.elements.size(); ++i) mu_pos[im_mu.elements[i]] = i;
  for (size_t i = 0; i < im_nu.elements.size(); ++i) nu_pos[im_nu.elements[i]] = i;
  std::vector<std::pair<int, int>> proj_images;
  for (int ge = 0; ge < pair.g->order(); ++ge)
    for (int he = 0; he < pair.h->order(); ++he)
      proj_images.emplace_back(
          t.generator(ge, he),
          tbar.generator(mu_pos[t.pfeiffer.mu(ge)], nu_pos[t.pfeiffer.nu(he)]));
  try {
    Homomorphism proj = homomorphism_from_images(t.tensor_group, tbar.tensor_group, proj_images);
    if (!proj.is_surjective()) fail("projection onto the reduced tensor is not surjective");
    Subgroup ker = proj.kernel();
    rep.kernel_is_image_ok = ker == im_i;
    if (!rep.kernel_is_image_ok)
      fail("ker(projection) has order " + std::to_string(ker.order()) + ", Im i has order " +
           std::to_string(im_i.order()));
  } catch (const validation_error& e) {
    fail(std::string("projection fails to be a homomorphism: ") + e.what());
  }

  // Reductions: trivial mutual actions collapse to Z-tensors.
  auto reduction = [&](GroupRef big, const Subgroup& small_sub, bool g_side) {
    GroupRef small = subgroup_as_group(small_sub);
    MutualActionPair triv = g_side ? MutualActionPair::trivial(big, small)
                                   : MutualActionPair::trivial(small, big);
    TensorRealization tt = tensor_product(triv, opts);
    if (!tt.tensor_group->is_abelian()) {
      fail("trivial-action tensor factor is not abelian");
      return false;
    }
    AbelianGroup got = abelian_invariants(tt.tensor_group);
    AbelianGroup want = z_tensor(abelianization(big).invariants, abelian_invariants(small));
    if (!(got == want)) {
      fail("trivial-action reduction mismatch: " + got.to_string() + " vs " + want.to_string());
      return false;
    }
    return true;
  };
  rep.reduction_g_ok = reduction(pair.g, ker_nu, /*g_side=*/true);
  rep.reduction_h_ok = reduction(pair.h, ker_mu, /*g_side=*/false);
  return rep;
}

}  // namespace cgt
