#ifndef CGT_ABELIAN_HPP
#define CGT_ABELIAN_HPP

#include <string>
#include <vector>

#include "cgt/matrix.hpp"

namespace cgt {

/// Finitely generated abelian group in invariant-factor form:
/// Z^free_rank  x  Z_d1 x Z_d2 x ...  with d1 | d2 | ... and each di >= 2.
struct AbelianGroup {
  long long free_rank = 0;
  std::vector<long long> invariant_factors;

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// Order of a finite group; throws for infinite ones.
  long long order() const;
  std::string to_string() const;
  bool operator==(const AbelianGroup&) const = default;
};

/// Normalizes an arbitrary list of cyclic orders (entries >= 0; 0 means a
/// free Z summand, 1s are dropped) into invariant-factor form.
AbelianGroup abelian_group(long long free_rank, std::vector<long long> cyclic_orders);

/// Direct sum.
AbelianGroup abelian_direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Cokernel Z^cols / rowspace(M), in invariant-factor form.
AbelianGroup abelian_from_relations(const IntegerMatrix& m);

/// Streaming variant of abelian_from_relations: rows are folded into an
/// integer row-echelon basis as they arrive, so huge relation families
/// (the Gamma oracle emits ~50k rows) never materialize as one matrix.
class RelationAccumulator {
 public:
  explicit RelationAccumulator(int cols);
  void add_row(const std::vector<long long>& row);
  void add_row(std::vector<mpz_class> row);
  /// Cokernel of everything added so far.
  AbelianGroup cokernel() const;
  int cols() const { return cols_; }

 private:
  int cols_;
  // basis_[i], when present, has its leading nonzero entry in column i.
  std::vector<std::vector<mpz_class>> basis_;
};

/// Z-tensor product A (x) B.
AbelianGroup z_tensor(const AbelianGroup& a, const AbelianGroup& b);

/// Whitehead's quadratic functor, computed by the structural recursion
///   Gamma(X + Y) = Gamma(X) + Gamma(Y) + (X (x) Y)
/// over the invariant-factor decomposition, with Gamma(Z) = Z,
/// Gamma(Z_m) = Z_m for odd m and Z_2m for even m.
AbelianGroup gamma_whitehead(const AbelianGroup& a);

/// Independent realization of Gamma for finite A of order <= cap: the
/// universal quadratic-map presentation, one generator w(a) per element,
/// relations w(-a) = w(a) and
///   w(a+b+c) - w(a+b) - w(b+c) - w(a+c) + w(a) + w(b) + w(c) = 0.
AbelianGroup gamma_oracle(const AbelianGroup& a, long long cap = 64);

/// All abelian groups of order 1..max_order, as invariant-factor lists,
/// in a fixed deterministic order.
std::vector<AbelianGroup> abelian_groups_up_to(long long max_order);

}  // namespace cgt

#endif
