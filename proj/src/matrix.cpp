#include "cgt/matrix.hpp"

#include <cstdlib>

#include "cgt/errors.hpp"

namespace cgt {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntegerMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw validation_error("ragged row list for IntegerMatrix");
    for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntegerMatrix IntegerMatrix::mul(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw validation_error("matrix product shape mismatch");
  IntegerMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
    }
  return out;
}

void IntegerMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row_multiple(int a, int b, const mpz_class& q) {
  if (q == 0) return;
  for (int j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
}

void IntegerMatrix::add_col_multiple(int a, int b, const mpz_class& q) {
  if (q == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
}

void IntegerMatrix::negate_row(int a) {
  for (int j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntegerMatrix::negate_col(int a) {
  for (int i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

mpz_class IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw validation_error("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : mpz_class(-a.at(n - 1, n - 1));
}

namespace {

// Position of an entry with minimal nonzero |value| in the trailing
// submatrix starting at (k, k); {-1, -1} if that submatrix is zero.
std::pair<int, int> min_nonzero_pivot(const IntegerMatrix& m, int k) {
  std::pair<int, int> best{-1, -1};
  mpz_class best_abs;
  for (int i = k; i < m.rows(); ++i)
    for (int j = k; j < m.cols(); ++j) {
      if (m.at(i, j) == 0) continue;
      mpz_class a = abs(m.at(i, j));
      if (best.first < 0 || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& m) {
  SmithResult res;
  res.d = m;
  res.u = IntegerMatrix::identity(m.rows());
  res.v = IntegerMatrix::identity(m.cols());
  IntegerMatrix& d = res.d;
  IntegerMatrix& u = res.u;
  IntegerMatrix& v = res.v;

  int n = std::min(m.rows(), m.cols());
  bool done = false;
  for (int k = 0; k < n && !done; ++k) {
    for (;;) {
      auto [pi, pj] = min_nonzero_pivot(d, k);
      if (pi < 0) {
        done = true;  // trailing submatrix is zero
        break;
      }
      d.swap_rows(k, pi);
      u.swap_rows(k, pi);
      d.swap_cols(k, pj);
      v.swap_cols(k, pj);

      bool clean = true;
      for (int i = k + 1; i < d.rows(); ++i) {
        if (d.at(i, k) == 0) continue;
        mpz_class q = d.at(i, k) / d.at(k, k);  // truncated; remainder re-handled next pass
        d.add_row_multiple(i, k, -q);
        u.add_row_multiple(i, k, -q);
        if (d.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < d.cols(); ++j) {
        if (d.at(k, j) == 0) continue;
        mpz_class q = d.at(k, j) / d.at(k, k);
        d.add_col_multiple(j, k, -q);
        v.add_col_multiple(j, k, -q);
        if (d.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any non-multiple of the pivot into row k.
      bool divides = true;
      for (int i = k + 1; i < d.rows() && divides; ++i)
        for (int j = k + 1; j < d.cols() && divides; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            d.add_row_multiple(k, i, 1);
            u.add_row_multiple(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
  }
  for (int k = 0; k < n; ++k)
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      u.negate_row(k);
    }

  if (u.mul(m).mul(v) != d) throw internal_error("smith: U*M*V != D");
  mpz_class du = u.determinant(), dv = v.determinant();
  if (du != 1 && du != -1) throw internal_error("smith: U not unimodular");
  if (dv != 1 && dv != -1) throw internal_error("smith: V not unimodular");
  for (int k = 0; k + 1 < n; ++k) {
    if (d.at(k + 1, k + 1) != 0 && d.at(k, k) == 0)
      throw internal_error("smith: zero before nonzero on diagonal");
    if (d.at(k, k) != 0 && d.at(k + 1, k + 1) % d.at(k, k) != 0)
      throw internal_error("smith: divisibility chain broken");
  }
  return res;
}

std::vector<mpz_class> SmithResult::diagonal() const {
  std::vector<mpz_class> out;
  int n = std::min(d.rows(), d.cols());
  for (int k = 0; k < n; ++k)
    if (d.at(k, k) != 0) out.push_back(d.at(k, k));
  return out;
}

}  // namespace cgt
