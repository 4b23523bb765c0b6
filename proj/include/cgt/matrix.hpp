#ifndef CGT_MATRIX_HPP
#define CGT_MATRIX_HPP

#include <gmpxx.h>

#include <vector>

namespace cgt {

/// Dense matrix over the integers.  Exact arithmetic everywhere; entries
/// routinely outgrow machine words during elimination.
class IntegerMatrix {
 public:
  IntegerMatrix() : rows_(0), cols_(0) {}
  IntegerMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

  static IntegerMatrix identity(int n);
  static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const mpz_class& at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }

  IntegerMatrix mul(const IntegerMatrix& rhs) const;
  bool operator==(const IntegerMatrix& rhs) const = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[a] += q * row[b]
  void add_row_multiple(int a, int b, const mpz_class& q);
  /// col[a] += q * col[b]
  void add_col_multiple(int a, int b, const mpz_class& q);
  void negate_row(int a);
  void negate_col(int a);

  /// Exact determinant by fraction-free (Bareiss) elimination; square only.
  mpz_class determinant() const;

 private:
  int rows_, cols_;
  std::vector<mpz_class> entries_;
};

/// U * M * V = D with D diagonal, d1 | d2 | ..., U and V unimodular.
struct SmithResult {
  IntegerMatrix d;
  IntegerMatrix u;
  IntegerMatrix v;
  /// Nonzero diagonal entries of d, in divisibility order.
  std::vector<mpz_class> diagonal() const;
};

/// Smith normal form.  The factorization U*M*V = D and |det U| = |det V| = 1
/// are recomputed and checked before returning.
SmithResult smith_normal_form(const IntegerMatrix& m);

}  // namespace cgt

#endif
