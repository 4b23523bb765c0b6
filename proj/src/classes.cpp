#include "cgt/classes.hpp"

#include "cgt/errors.hpp"

namespace cgt {

std::string GroupClass::name() const {
  switch (kind) {
    case ClassKind::kFinite: return "finite";
    case ClassKind::kAbelian: return "abelian";
    case ClassKind::kNilpotent: return "nilpotent";
    case ClassKind::kSoluble: return "soluble";
    case ClassKind::kPGroup: return std::to_string(p) + "-group";
  }
  return "?";
}

bool GroupClass::contains(const GroupRef& g) const {
  switch (kind) {
    case ClassKind::kFinite:
      return true;  // every Cayley-table group is finite by construction
    case ClassKind::kAbelian:
      return g->is_abelian();
    case ClassKind::kNilpotent:
      return nilpotency_class(g).has_value();
    case ClassKind::kSoluble:
      return derived_length(g).has_value();
    case ClassKind::kPGroup: {
      long long n = g->order();
      while (n % p == 0) n /= p;
      return n == 1;
    }
  }
  return false;
}

std::optional<long long> GroupClass::witness(const GroupRef& g) const {
  switch (kind) {
    case ClassKind::kNilpotent:
      if (auto c = nilpotency_class(g)) return *c;
      return std::nullopt;
    case ClassKind::kSoluble:
      if (auto l = derived_length(g)) return *l;
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

GroupClass parse_class(const std::string& name) {
  if (name == "finite") return GroupClass::finite();
  if (name == "abelian") return GroupClass::abelian();
  if (name == "nilpotent") return GroupClass::nilpotent();
  if (name == "soluble" || name == "solvable") return GroupClass::soluble();
  auto dash = name.find("-group");
  if (dash != std::string::npos && dash > 0 && dash + 6 == name.size()) {
    long long p = 0;
    for (char c : name.substr(0, dash)) {
      if (c < '0' || c > '9') throw validation_error("unknown group class '" + name + "'");
      p = p * 10 + (c - '0');
    }
    if (p < 2) throw validation_error("p-group class needs p >= 2");
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw validation_error(std::to_string(p) + " is not prime");
    return GroupClass::p_group(p);
  }
  throw validation_error("unknown group class '" + name + "'");
}

std::optional<int> nilpotency_class(const GroupRef& g) {
  std::vector<Subgroup> series = lower_central_series(g);
  if (series.back().order() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

std::optional<int> derived_length(const GroupRef& g) {
  std::vector<Subgroup> series = derived_series(g);
  if (series.back().order() != 1) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

}  // namespace cgt
