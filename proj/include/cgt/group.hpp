#ifndef CGT_GROUP_HPP
#define CGT_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgt/abelian.hpp"

namespace cgt {

class FiniteGroup;
using GroupRef = std::shared_ptr<const FiniteGroup>;

/// A concrete finite group as a Cayley table.  Element 0 is the identity.
/// Instances are immutable after construction; construction validates the
/// Latin-square, identity and inverse axioms, and associativity
/// (exhaustively up to order 256, by 10,000 seeded random triples above).
class FiniteGroup {
 public:
  static constexpr int kIdentity = 0;
  static constexpr int kMaxOrder = 20000;

  static GroupRef from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> labels = {});

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  /// a b a^{-1}
  int conj(int a, int b) const { return mul(mul(a, b), inv(a)); }
  /// [a,b] = a b a^{-1} b^{-1}
  int commutator(int a, int b) const { return mul(conj(a, b), inv(b)); }
  int power(int a, long long e) const;
  int element_order(int a) const;
  long long exponent() const;
  bool is_abelian() const;
  const std::string& label(int a) const { return labels_[a]; }
  /// Full table as rows, for serialization.
  std::vector<std::vector<int>> table() const;

 private:
  FiniteGroup(std::vector<int> flat, std::vector<int> inverse, std::vector<std::string> labels,
              int n)
      : table_(std::move(flat)), inverse_(std::move(inverse)), labels_(std::move(labels)), n_(n) {}
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  int n_;
};

/// A subgroup as a sorted element set of a parent group.
struct Subgroup {
  GroupRef parent;
  std::vector<int> elements;  // sorted ascending; always contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
};

struct Homomorphism {
  GroupRef source;
  GroupRef target;
  std::vector<int> map;  // source index -> target index

  int operator()(int x) const { return map[x]; }
  Subgroup kernel() const;
  Subgroup image() const;
  bool is_injective() const;
  bool is_surjective() const;
};

struct IsoFingerprint {
  long long order = 0;
  std::vector<long long> abelian_invariants;
  long long center_order = 0;
  std::vector<long long> derived_series_orders;
  std::vector<long long> lower_central_orders;
  long long exponent = 0;
  std::vector<long long> conjugacy_class_sizes;               // sorted
  std::vector<std::pair<long long, long long>> order_counts;  // (element order, count)
  bool operator==(const IsoFingerprint&) const = default;
  std::string to_string() const;
};

/// Closure of a set of permutations on {0..m-1} under composition,
/// returned as a Cayley table.  Element 0 is the identity.
GroupRef group_from_permutations(const std::vector<std::vector<int>>& generators,
                                 int cap = FiniteGroup::kMaxOrder);

Subgroup trivial_subgroup(GroupRef g);
Subgroup whole_group(GroupRef g);
Subgroup subgroup_generated(GroupRef g, const std::vector<int>& seeds);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);
Subgroup commutator_subgroup(GroupRef g, const Subgroup& a, const Subgroup& b);
Subgroup center(GroupRef g);

/// First (g, n) with g n g^{-1} outside the subgroup, if any.
std::optional<std::pair<int, int>> normality_violation(const Subgroup& s);
bool is_normal(const Subgroup& s);

/// Coset group G/N plus the canonical projection.  N must be normal
/// (verified; a violating conjugation is named otherwise).  Cosets are
/// numbered by ascending minimal representative, so the identity coset is
/// element 0.
std::pair<GroupRef, Homomorphism> quotient(GroupRef g, const Subgroup& n);

/// The subgroup as a group in its own right.  elements_out[i], when
/// requested, is the parent index of the new group's element i.
GroupRef subgroup_as_group(const Subgroup& s, std::vector<int>* elements_out = nullptr);

/// Invariant factors of an abelian group given by its Cayley table.
AbelianGroup abelian_invariants(GroupRef g);

struct Abelianization {
  AbelianGroup invariants;
  GroupRef quotient_group;
  Homomorphism projection;
};
Abelianization abelianization(GroupRef g);

/// Strictly descending series, first entry the whole group, stopping at
/// stabilization.
std::vector<Subgroup> derived_series(GroupRef g);
std::vector<Subgroup> lower_central_series(GroupRef g);

/// Total homomorphism from images on a generating set; validated
/// multiplicative on all pairs.  gen_images maps source elements to target
/// elements.
Homomorphism homomorphism_from_images(GroupRef source, GroupRef target,
                                      const std::vector<std::pair<int, int>>& gen_images);

IsoFingerprint fingerprint(GroupRef g);

/// Direct product of cyclic groups 0 <= x < d_i with componentwise
/// addition; realizes a finite AbelianGroup as a Cayley table.
GroupRef realize_abelian(const AbelianGroup& a);

}  // namespace cgt

#endif
