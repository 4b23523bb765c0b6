#include "cgt/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

std::map<long long, int> factorize(long long n) {
  std::map<long long, int> f;
  for (long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[n];
  return f;
}

long long checked_mul(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > static_cast<__int128>(1) << 62)
    throw resource_error("abelian group order exceeds supported range");
  return static_cast<long long>(p);
}

}  // namespace

long long AbelianGroup::order() const {
  if (free_rank != 0) throw validation_error("order() of an infinite abelian group");
  long long n = 1;
  for (long long d : invariant_factors) n = checked_mul(n, d);
  return n;
}

std::string AbelianGroup::to_string() const {
  std::string s;
  if (free_rank > 0) s += "Z^" + std::to_string(free_rank) + " x ";
  s += "(";
  for (size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(invariant_factors[i]);
  }
  s += ")";
  return s;
}

AbelianGroup abelian_group(long long free_rank, std::vector<long long> cyclic_orders) {
  if (free_rank < 0) throw validation_error("negative free rank");
  // Per-prime exponent lists, largest first; invariant factor #k (from the
  // top) multiplies together the k-th largest exponent of every prime.
  std::map<long long, std::vector<int>> exps;
  for (long long d : cyclic_orders) {
    if (d < 0) throw validation_error("negative cyclic order");
    if (d == 0) {
      ++free_rank;
      continue;
    }
    if (d == 1) continue;
    for (auto& [p, e] : factorize(d)) exps[p].push_back(e);
  }
  size_t chain_len = 0;
  for (auto& [p, list] : exps) {
    std::sort(list.begin(), list.end(), std::greater<>());
    chain_len = std::max(chain_len, list.size());
  }
  std::vector<long long> factors(chain_len, 1);
  for (auto& [p, list] : exps)
    for (size_t k = 0; k < list.size(); ++k) {
      long long pe = 1;
      for (int i = 0; i < list[k]; ++i) pe = checked_mul(pe, p);
      factors[chain_len - 1 - k] = checked_mul(factors[chain_len - 1 - k], pe);
    }
  return AbelianGroup{free_rank, std::move(factors)};
}

AbelianGroup abelian_direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long long> orders = a.invariant_factors;
  orders.insert(orders.end(), b.invariant_factors.begin(), b.invariant_factors.end());
  return abelian_group(a.free_rank + b.free_rank, std::move(orders));
}

RelationAccumulator::RelationAccumulator(int cols) : cols_(cols), basis_(cols) {}

void RelationAccumulator::add_row(const std::vector<long long>& row) {
  std::vector<mpz_class> r(row.size());
  for (size_t i = 0; i < row.size(); ++i) r[i] = static_cast<long>(row[i]);
  add_row(std::move(r));
}

void RelationAccumulator::add_row(std::vector<mpz_class> row) {
  if (static_cast<int>(row.size()) != cols_)
    throw validation_error("relation row width mismatch");
  for (int c = 0; c < cols_; ++c) {
    if (row[c] == 0) continue;
    if (basis_[c].empty()) {
      if (row[c] < 0)
        for (auto& x : row) x = -x;
      basis_[c] = std::move(row);
      return;
    }
    // Euclidean descent on the leading entries.
    while (row[c] != 0) {
      mpz_class q = row[c] / basis_[c][c];
      if (q != 0)
        for (int j = c; j < cols_; ++j) row[j] -= q * basis_[c][j];
      if (row[c] != 0) std::swap(row, basis_[c]);
    }
  }
}

AbelianGroup RelationAccumulator::cokernel() const {
  std::vector<const std::vector<mpz_class>*> live;
  for (const auto& b : basis_)
    if (!b.empty()) live.push_back(&b);
  IntegerMatrix m(static_cast<int>(live.size()), cols_);
  for (int i = 0; i < static_cast<int>(live.size()); ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = (*live[i])[j];
  SmithResult snf = smith_normal_form(m);
  auto diag = snf.diagonal();
  std::vector<long long> factors;
  for (const mpz_class& d : diag) {
    if (d == 1) continue;
    if (!d.fits_slong_p()) throw resource_error("invariant factor exceeds supported range");
    factors.push_back(d.get_si());
  }
  long long free_rank = cols_ - static_cast<long long>(diag.size());
  return AbelianGroup{free_rank, std::move(factors)};
}

AbelianGroup abelian_from_relations(const IntegerMatrix& m) {
  RelationAccumulator acc(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<mpz_class> row(m.cols());
    for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    acc.add_row(std::move(row));
  }
  return acc.cokernel();
}

AbelianGroup z_tensor(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<long long> orders;
  for (long long d : a.invariant_factors)
    for (long long e : b.invariant_factors) orders.push_back(std::gcd(d, e));
  // Z (x) Z_e = Z_e
  for (long long i = 0; i < a.free_rank; ++i)
    for (long long e : b.invariant_factors) orders.push_back(e);
  for (long long i = 0; i < b.free_rank; ++i)
    for (long long d : a.invariant_factors) orders.push_back(d);
  return abelian_group(a.free_rank * b.free_rank, std::move(orders));
}

AbelianGroup gamma_whitehead(const AbelianGroup& a) {
  // Fold summand by summand: Gamma(S + X) = Gamma(S) + Gamma(X) + S (x) X.
  AbelianGroup acc{0, {}};   // Gamma of the prefix
  AbelianGroup prefix{0, {}};
  auto step = [&](const AbelianGroup& x, const AbelianGroup& gamma_x) {
    acc = abelian_direct_sum(abelian_direct_sum(acc, gamma_x), z_tensor(prefix, x));
    prefix = abelian_direct_sum(prefix, x);
  };
  for (long long d : a.invariant_factors) {
    AbelianGroup x{0, {d}};
    step(x, AbelianGroup{0, {d % 2 == 0 ? 2 * d : d}});
  }
  for (long long i = 0; i < a.free_rank; ++i) {
    AbelianGroup x{1, {}};
    step(x, AbelianGroup{1, {}});
  }
  return acc;
}

AbelianGroup gamma_oracle(const AbelianGroup& a, long long cap) {
  if (!a.is_finite()) throw validation_error("gamma_oracle requires a finite group");
  long long n = a.order();
  if (n > cap)
    throw resource_error("gamma_oracle: order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
  const auto& d = a.invariant_factors;
  int k = static_cast<int>(d.size());

  // Elements as mixed-radix tuples over the invariant factors.
  int N = static_cast<int>(n);
  std::vector<std::vector<int>> tuples(N, std::vector<int>(k));
  for (int idx = 0; idx < N; ++idx) {
    int t = idx;
    for (int i = 0; i < k; ++i) {
      tuples[idx][i] = t % static_cast<int>(d[i]);
      t /= static_cast<int>(d[i]);
    }
  }
  auto index_of = [&](const std::vector<int>& tup) {
    int idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * static_cast<int>(d[i]) + tup[i];
    return idx;
  };
  auto add = [&](int x, int y) {
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = (tuples[x][i] + tuples[y][i]) % static_cast<int>(d[i]);
    return index_of(t);
  };
  auto neg = [&](int x) {
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i)
      t[i] = (static_cast<int>(d[i]) - tuples[x][i]) % static_cast<int>(d[i]);
    return index_of(t);
  };

  RelationAccumulator acc(N);
  std::vector<long long> row(N);
  auto emit = [&]() {
    acc.add_row(row);
    std::fill(row.begin(), row.end(), 0);
  };
  for (int x = 0; x < N; ++x) {
    int y = neg(x);
    if (y == x) continue;
    row[y] += 1;
    row[x] -= 1;
    emit();
  }
  // The cocycle relation is symmetric in (a,b,c): unordered triples suffice.
  for (int x = 0; x < N; ++x)
    for (int y = x; y < N; ++y) {
      int xy = add(x, y);
      for (int z = y; z < N; ++z) {
        row[add(xy, z)] += 1;
        row[xy] -= 1;
        row[add(y, z)] -= 1;
        row[add(x, z)] -= 1;
        row[x] += 1;
        row[y] += 1;
        row[z] += 1;
        emit();
      }
    }
  AbelianGroup result = acc.cokernel();
  if (!result.is_finite())
    throw internal_error("gamma_oracle produced a free summand");
  return result;
}

namespace {

void partitions_of(int e, std::vector<std::vector<int>>& out) {
  // Descending partitions of e, lexicographically largest-first.
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, e, e);
}

}  // namespace

std::vector<AbelianGroup> abelian_groups_up_to(long long max_order) {
  std::vector<AbelianGroup> out;
  for (long long n = 1; n <= max_order; ++n) {
    auto f = factorize(n);
    std::vector<std::vector<std::vector<int>>> choices;  // per prime: partitions
    std::vector<long long> primes;
    for (auto& [p, e] : f) {
      primes.push_back(p);
      choices.emplace_back();
      partitions_of(e, choices.back());
    }
    std::vector<size_t> pick(choices.size(), 0);
    for (;;) {
      std::vector<long long> orders;
      for (size_t i = 0; i < choices.size(); ++i)
        for (int e : choices[i][pick[i]]) {
          long long pe = 1;
          for (int j = 0; j < e; ++j) pe *= primes[i];
          orders.push_back(pe);
        }
      out.push_back(abelian_group(0, std::move(orders)));
      size_t i = 0;
      for (; i < pick.size(); ++i) {
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
      }
      if (i == pick.size()) break;
    }
  }
  return out;
}

}  // namespace cgt
