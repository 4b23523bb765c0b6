#ifndef CGT_TENSOR_HPP
#define CGT_TENSOR_HPP

#include "cgt/action.hpp"
#include "cgt/todd_coxeter.hpp"

namespace cgt {

struct TensorOptions {
  long long max_cosets = kDefaultMaxCosets;
  /// Cap on |G|*|H|, the generator count of the defining presentation.
  long long max_order = 256;
};

/// The common ambient group for a compatible pair: P is the quotient of
/// the free product forcing both actions to become conjugation, with the
/// two inclusions.  Im(mu) and Im(nu) are normal, P = Im(mu) Im(nu), and
/// conjugation inside P reproduces the original actions (all verified at
/// construction).
struct OvergroupEmbedding {
  GroupRef p;
  Homomorphism mu;  // G -> P
  Homomorphism nu;  // H -> P
};

OvergroupEmbedding pfeiffer_product(const MutualActionPair& pair,
                                    const TensorOptions& opts = {});

/// A finite realization of the tensor product of a compatible pair.
struct TensorRealization {
  GroupRef tensor_group;
  MutualActionPair pair;
  /// Element of tensor_group realizing the generator (g,h), at g*|H| + h.
  std::vector<int> pair_generator;
  OvergroupEmbedding pfeiffer;
  /// g (x) h  |->  [mu g, nu h], into pfeiffer.p.
  Homomorphism kappa;

  int generator(int ge, int he) const {
    return pair_generator[static_cast<size_t>(ge) * pair.h->order() + he];
  }
};

/// Builds the defining presentation (one generator per pair, relators
///   g g' (x) h = (^g g' (x) ^g h)(g (x) h),
///   g (x) h h' = (g (x) h)(^h g (x) ^h h'))
/// and enumerates it.  Compatibility is enforced first.
TensorRealization tensor_product(const MutualActionPair& pair, const TensorOptions& opts = {});

/// tensor_product with H = G and both actions conjugation.
TensorRealization tensor_square(GroupRef g, const TensorOptions& opts = {});

struct NablaResult {
  Subgroup d;  // <g (x) g : g in G meet H> inside the tensor group
  /// The intersection G meet H realized as a group, and |Gamma| of its
  /// abelianization; |d| divides it (the psi-image constraint).
  GroupRef intersection;
  AbelianGroup gamma;
  long long gamma_order = 0;
  bool divides = false;
};

/// The subgroup D.  For squares the intersection defaults to all of G;
/// otherwise the pair must carry common-overgroup provenance.
NablaResult nabla(const TensorRealization& t);

struct ExteriorResult {
  GroupRef exterior;        // (G (x) H) / D
  Homomorphism projection;  // tensor_group -> exterior
  Homomorphism kappa_prime; // exterior -> P, image [Im mu, Im nu]
  NablaResult d;
};

ExteriorResult exterior_product(const TensorRealization& t);

/// ker kappa' of the tensor square, as an abelian group.
AbelianGroup schur_multiplier(GroupRef g, const TensorOptions& opts = {});

/// The automorphism of the tensor group determined on generators by
/// ^x(g (x) h) = (^x g) (x) (^x h), x acting through conjugation in P
/// pulled back along mu and nu.
Homomorphism induced_action(const TensorRealization& t, int x_in_p);

struct Sequence7Report {
  bool ok = true;
  std::vector<std::string> failures;

  bool central_image_ok = false;  // Im i lies in Z(G (x) H)
  bool kernel_is_image_ok = false;  // ker(G(x)H -> Gbar(x)Hbar) = Im i
  bool reduction_g_ok = false;  // G (x) ker nu  ~  G^ab (x)_Z ker nu
  bool reduction_h_ok = false;  // ker mu (x) H  ~  ker mu (x)_Z H^ab
  long long im_i_order = 0;
  long long tensor_order = 0;
  long long reduced_tensor_order = 0;
  long long ker_mu_order = 0, ker_nu_order = 0;
};

/// Checks exactness of
///   (G (x) ker nu) x (ker mu (x) H) -> G (x) H -> Gbar (x) Hbar -> 1
/// for normal subgroups G, H of an explicit overgroup, with conjugation
/// actions, plus the trivial-action reductions of the two end factors.
/// Failures are reported with witnesses, not thrown.
Sequence7Report verify_exact_sequence7(GroupRef k, const Subgroup& g, const Subgroup& h,
                                       const TensorOptions& opts = {});

}  // namespace cgt

#endif
