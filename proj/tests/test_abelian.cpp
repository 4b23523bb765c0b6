#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cgt/abelian.hpp"
#include "cgt/errors.hpp"

using namespace cgt;

namespace {

IntegerMatrix shuffled(const IntegerMatrix& m, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> rp(m.rows()), cp(m.cols());
  for (int i = 0; i < m.rows(); ++i) rp[i] = i;
  for (int j = 0; j < m.cols(); ++j) cp[j] = j;
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  IntegerMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(rp[i], cp[j]);
  return out;
}

std::vector<long long> snf_diag(const IntegerMatrix& m) {
  std::vector<long long> out;
  for (const mpz_class& d : smith_normal_form(m).diagonal()) out.push_back(d.get_si());
  return out;
}

}  // namespace

TEST_CASE("smith normal form on simple matrices") {
  CHECK(snf_diag(IntegerMatrix::identity(3)) == std::vector<long long>{1, 1, 1});
  CHECK(snf_diag(IntegerMatrix::from_rows({{2, 0}, {0, 3}})) == std::vector<long long>{1, 6});
  CHECK(snf_diag(IntegerMatrix(4, 5)).empty());  // zero matrix stays zero
  CHECK(snf_diag(IntegerMatrix::from_rows({{6, 4}, {2, 8}})) == std::vector<long long>{2, 20});
}

TEST_CASE("smith normal form is invariant under row/column shuffles") {
  IntegerMatrix m = IntegerMatrix::from_rows({{4, 6, 0}, {2, 0, 8}, {0, 10, 2}, {6, 6, 6}});
  auto want = snf_diag(m);
  for (unsigned seed = 1; seed <= 8; ++seed) CHECK(snf_diag(shuffled(m, seed)) == want);
}

TEST_CASE("smith normal form factorization is verified on large-entry input") {
  IntegerMatrix m(3, 3);
  long long vals[3][3] = {{1000000007LL, 2, 3}, {4, 999999937LL, 6}, {7, 8, 998244353LL}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = static_cast<long>(vals[i][j]);
  SmithResult r = smith_normal_form(m);  // throws if U*M*V != D or not unimodular
  CHECK(r.d.at(0, 0) == 1);
}

TEST_CASE("abelian_group normalizes to a divisibility chain") {
  AbelianGroup a = abelian_group(0, {6, 4});
  CHECK(a.invariant_factors == std::vector<long long>{2, 12});
  CHECK(abelian_group(0, {2, 3}).invariant_factors == std::vector<long long>{6});
  CHECK(abelian_group(0, {1, 1}).invariant_factors.empty());
  CHECK(abelian_group(2, {}).free_rank == 2);
  CHECK(abelian_group(0, {0, 5}).free_rank == 1);  // 0 means a free summand
}

TEST_CASE("abelian_from_relations") {
  IntegerMatrix none(0, 2);
  CHECK(abelian_from_relations(none) == abelian_group(2, {}));
  CHECK(abelian_from_relations(IntegerMatrix::from_rows({{4}})) == abelian_group(0, {4}));
  CHECK(abelian_from_relations(IntegerMatrix::from_rows({{2, 0}, {0, 6}})) ==
        abelian_group(0, {2, 6}));
  // redundant rows change nothing
  CHECK(abelian_from_relations(IntegerMatrix::from_rows({{2, 0}, {0, 6}, {2, 6}, {4, 0}})) ==
        abelian_group(0, {2, 6}));
}

TEST_CASE("z_tensor basics") {
  AbelianGroup z2 = abelian_group(0, {2});
  AbelianGroup z3 = abelian_group(0, {3});
  AbelianGroup z4 = abelian_group(0, {4});
  AbelianGroup z6 = abelian_group(0, {6});
  AbelianGroup z = abelian_group(1, {});
  AbelianGroup z5 = abelian_group(0, {5});
  CHECK(z_tensor(z2, z3).is_trivial());
  CHECK(z_tensor(z4, z6) == z2);
  CHECK(z_tensor(z, z5) == z5);
  CHECK(z_tensor(z, z) == abelian_group(1, {}));
}

TEST_CASE("z_tensor is symmetric and distributes over direct sums") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 6);
  const long long orders[] = {0, 2, 3, 4, 5, 6, 8};  // 0 = Z
  for (int trial = 0; trial < 60; ++trial) {
    auto sample = [&] {
      std::vector<long long> f;
      int k = 1 + pick(rng) % 3;
      for (int i = 0; i < k; ++i) f.push_back(orders[pick(rng)]);
      return abelian_group(0, f);
    };
    AbelianGroup a = sample(), b = sample(), c = sample();
    CHECK(z_tensor(a, b) == z_tensor(b, a));
    CHECK(z_tensor(abelian_direct_sum(a, b), c) ==
          abelian_direct_sum(z_tensor(a, c), z_tensor(b, c)));
  }
}

TEST_CASE("gamma base cases and structural values") {
  CHECK(gamma_whitehead(abelian_group(0, {})).is_trivial());
  CHECK(gamma_whitehead(abelian_group(0, {2})) == abelian_group(0, {4}));
  CHECK(gamma_whitehead(abelian_group(0, {3})) == abelian_group(0, {3}));
  CHECK(gamma_whitehead(abelian_group(0, {4})) == abelian_group(0, {8}));
  CHECK(gamma_whitehead(abelian_group(0, {2, 2})) == abelian_group(0, {2, 4, 4}));
  CHECK(gamma_whitehead(abelian_group(1, {})) == abelian_group(1, {}));
  // Gamma(Z^2) = Z^3 (two Z summands plus their tensor)
  CHECK(gamma_whitehead(abelian_group(2, {})) == abelian_group(3, {}));
}

TEST_CASE("gamma oracle fixes the small values") {
  CHECK(gamma_oracle(abelian_group(0, {})).is_trivial());
  CHECK(gamma_oracle(abelian_group(0, {3})) == abelian_group(0, {3}));
  CHECK(gamma_oracle(abelian_group(0, {4})) == abelian_group(0, {8}));
  CHECK(gamma_oracle(abelian_group(0, {2, 2})) == abelian_group(0, {2, 4, 4}));
}

TEST_CASE("gamma agrees with the oracle up to order 24") {
  for (const AbelianGroup& a : abelian_groups_up_to(24)) {
    CAPTURE(a.to_string());
    CHECK(gamma_whitehead(a) == gamma_oracle(a));
  }
}

TEST_CASE("|Gamma(A)| matches the structural prediction") {
  for (const AbelianGroup& a : abelian_groups_up_to(32)) {
    long long want = 1;
    const auto& d = a.invariant_factors;
    for (size_t i = 0; i < d.size(); ++i) {
      want *= d[i] % 2 == 0 ? 2 * d[i] : d[i];
      for (size_t j = i + 1; j < d.size(); ++j) want *= std::gcd(d[i], d[j]);
    }
    CHECK(gamma_whitehead(a).order() == want);
  }
}

TEST_CASE("gamma oracle enforces its cap") {
  CHECK_THROWS_AS(gamma_oracle(abelian_group(0, {128}), 64), resource_error);
}

TEST_CASE("abelian_groups_up_to enumerates the right counts") {
  auto all = abelian_groups_up_to(16);
  // 1,1,1,2,1,1,1,3,2,1,1,2,1,1,1,5 partitions-by-order
  CHECK(all.size() == 25);
  int count16 = 0;
  for (const auto& a : all)
    if (a.order() == 16) ++count16;
  CHECK(count16 == 5);
}
