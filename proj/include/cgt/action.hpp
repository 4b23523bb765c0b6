#ifndef CGT_ACTION_HPP
#define CGT_ACTION_HPP

#include <optional>

#include "cgt/group.hpp"

namespace cgt {

/// Where a mutual-action pair came from, when it came from subgroups of a
/// common group: needed to give G meet H a concrete home.
struct OvergroupProvenance {
  GroupRef overgroup;
  std::vector<int> g_elements;  // sorted element sets inside the overgroup
  std::vector<int> h_elements;
};

/// A pair of left actions, G on H and H on G, stored as one automorphism
/// of the target per acting element.  Self-actions are always conjugation
/// and never stored.  Construction validates that every permutation is an
/// automorphism of its target and that each map is a homomorphism into the
/// automorphism group.
struct MutualActionPair {
  GroupRef g;
  GroupRef h;
  std::vector<std::vector<int>> act_g_on_h;  // [g][h]
  std::vector<std::vector<int>> act_h_on_g;  // [h][g]
  bool square = false;
  std::optional<OvergroupProvenance> provenance;

  int apply_g(int ge, int he) const { return act_g_on_h[ge][he]; }
  int apply_h(int he, int ge) const { return act_h_on_g[he][ge]; }

  static MutualActionPair trivial(GroupRef g, GroupRef h);
  /// G = H acting on itself by conjugation (the tensor-square setup).
  static MutualActionPair conjugation_square(GroupRef g);
  /// Normal subgroups of k acting on each other by conjugation in k.
  static MutualActionPair from_overgroup(GroupRef k, const Subgroup& g, const Subgroup& h);
  /// Full element-wise action tables.
  static MutualActionPair from_actions(GroupRef g, GroupRef h,
                                       std::vector<std::vector<int>> g_on_h,
                                       std::vector<std::vector<int>> h_on_g);
  /// Extends permutations given on generating sets; gen_of_g lists
  /// (element of G, permutation of H's elements), and symmetrically.
  static MutualActionPair from_generator_actions(
      GroupRef g, GroupRef h,
      const std::vector<std::pair<int, std::vector<int>>>& gens_of_g,
      const std::vector<std::pair<int, std::vector<int>>>& gens_of_h);
};

struct CompatibilityReport {
  bool ok = true;
  /// On failure: which of the two coherence identities broke (1 or 2) and
  /// the violating triple, (g, h, g') for the first, (h, g, h') for the
  /// second.
  int identity = 0;
  int x = 0, y = 0, z = 0;
  std::string describe() const;
};

/// Checks, for all g,g' in G and h,h' in H, the coherence identities
///   ^(^g h) g' = ^g(^h(^(g^-1) g'))      and
///   ^(^h g) h' = ^h(^g(^(h^-1) h')),
/// same-group actions being conjugation.  A violation is a report, not an
/// error.
CompatibilityReport check_compatibility(const MutualActionPair& pair);

}  // namespace cgt

#endif
