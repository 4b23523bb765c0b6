#ifndef CGT_CLASSES_HPP
#define CGT_CLASSES_HPP

#include <optional>
#include <string>

#include "cgt/group.hpp"

namespace cgt {

/// Concrete group classes the closure theorem is exercised against.
/// Membership is decidable from a Cayley table; each of these is closed
/// under subgroups, quotients, extensions, H2, H3 and abelian tensor
/// products at finite scale.
enum class ClassKind { kFinite, kAbelian, kNilpotent, kSoluble, kPGroup };

struct GroupClass {
  ClassKind kind = ClassKind::kFinite;
  long long p = 0;  // for kPGroup

  std::string name() const;
  bool contains(const GroupRef& g) const;
  /// Membership witness where one exists: the nilpotency class for the
  /// nilpotent class, the derived length for the soluble one.
  std::optional<long long> witness(const GroupRef& g) const;

  static GroupClass finite() { return {ClassKind::kFinite, 0}; }
  static GroupClass abelian() { return {ClassKind::kAbelian, 0}; }
  static GroupClass nilpotent() { return {ClassKind::kNilpotent, 0}; }
  static GroupClass soluble() { return {ClassKind::kSoluble, 0}; }
  static GroupClass p_group(long long p) { return {ClassKind::kPGroup, p}; }
};

/// "finite" | "abelian" | "nilpotent" | "soluble" | "<p>-group".
GroupClass parse_class(const std::string& name);

/// Nilpotency class from the lower central series; empty for
/// non-nilpotent groups.
std::optional<int> nilpotency_class(const GroupRef& g);
/// Derived length; empty for insoluble groups.
std::optional<int> derived_length(const GroupRef& g);

}  // namespace cgt

#endif
