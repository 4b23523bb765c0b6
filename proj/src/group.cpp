#include "cgt/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#include "cgt/errors.hpp"

namespace cgt {

GroupRef FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels) {
  int n = static_cast<int>(table.size());
  if (n == 0) throw validation_error("empty Cayley table");
  if (n > kMaxOrder)
    throw resource_error("group order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(kMaxOrder));
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw validation_error("ragged Cayley table");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw validation_error("Cayley table entry out of range");
      flat[static_cast<size_t>(i) * n + j] = v;
    }
  }
  // Latin square: every row and column a permutation.
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = flat[static_cast<size_t>(i) * n + j];
      if (seen[v]) throw validation_error("row " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = flat[static_cast<size_t>(j) * n + i];
      if (seen[v]) throw validation_error("column " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < n; ++x) {
    if (flat[x] != x || flat[static_cast<size_t>(x) * n] != x)
      throw validation_error("element 0 is not an identity");
  }
  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (flat[static_cast<size_t>(x) * n + y] == 0) {
        inverse[x] = y;
        break;
      }
    if (inverse[x] < 0) throw validation_error("element without inverse");
  }
  auto prod = [&](int a, int b) { return flat[static_cast<size_t>(a) * n + b]; };
  auto check_triple = [&](int a, int b, int c) {
    if (prod(prod(a, b), c) != prod(a, prod(b, c)))
      throw validation_error("associativity fails at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(20240801u);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
  }
  if (labels.empty()) labels.resize(n);
  if (static_cast<int>(labels.size()) != n)
    throw validation_error("label list length mismatch");
  return GroupRef(new FiniteGroup(std::move(flat), std::move(inverse), std::move(labels), n));
}

int FiniteGroup::power(int a, long long e) const {
  long long m = element_order(a);
  e %= m;
  if (e < 0) e += m;
  int r = kIdentity;
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != kIdentity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

long long FiniteGroup::exponent() const {
  long long e = 1;
  for (int x = 0; x < n_; ++x) e = std::lcm(e, static_cast<long long>(element_order(x)));
  return e;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[i][j] = mul(i, j);
  return rows;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup trivial_subgroup(GroupRef g) { return Subgroup{std::move(g), {FiniteGroup::kIdentity}}; }

Subgroup whole_group(GroupRef g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(g), std::move(all)};
}

Subgroup subgroup_generated(GroupRef g, const std::vector<int>& seeds) {
  const FiniteGroup& grp = *g;
  std::vector<char> in(grp.order(), 0);
  in[FiniteGroup::kIdentity] = 1;
  std::queue<int> work;
  work.push(FiniteGroup::kIdentity);
  std::vector<int> gens;
  for (int s : seeds) {
    if (s < 0 || s >= grp.order()) throw validation_error("seed element out of range");
    gens.push_back(s);
    gens.push_back(grp.inv(s));
  }
  for (int s : gens)
    if (!in[s]) {
      in[s] = 1;
      work.push(s);
    }
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (int s : gens) {
      int y = grp.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        work.push(y);
      }
    }
  }
  std::vector<int> elems;
  for (int x = 0; x < grp.order(); ++x)
    if (in[x]) elems.push_back(x);
  return Subgroup{std::move(g), std::move(elems)};
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  if (a.parent != b.parent) throw validation_error("intersection across different parents");
  std::vector<int> elems;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(),
                        b.elements.end(), std::back_inserter(elems));
  return Subgroup{a.parent, std::move(elems)};
}

Subgroup commutator_subgroup(GroupRef g, const Subgroup& a, const Subgroup& b) {
  std::vector<int> seeds;
  std::vector<char> seen(g->order(), 0);
  for (int x : a.elements)
    for (int y : b.elements) {
      int c = g->commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        seeds.push_back(c);
      }
    }
  return subgroup_generated(std::move(g), seeds);
}

Subgroup center(GroupRef g) {
  const FiniteGroup& grp = *g;
  std::vector<int> elems;
  for (int z = 0; z < grp.order(); ++z) {
    bool central = true;
    for (int x = 0; x < grp.order() && central; ++x)
      if (grp.mul(z, x) != grp.mul(x, z)) central = false;
    if (central) elems.push_back(z);
  }
  return Subgroup{std::move(g), std::move(elems)};
}

std::optional<std::pair<int, int>> normality_violation(const Subgroup& s) {
  const FiniteGroup& g = *s.parent;
  for (int x = 0; x < g.order(); ++x)
    for (int n : s.elements)
      if (!s.contains(g.conj(x, n))) return std::make_pair(x, n);
  return std::nullopt;
}

bool is_normal(const Subgroup& s) { return !normality_violation(s).has_value(); }

std::pair<GroupRef, Homomorphism> quotient(GroupRef g, const Subgroup& n) {
  const FiniteGroup& grp = *g;
  if (auto viol = normality_violation(n))
    throw validation_error("subgroup is not normal: conjugate of " +
                           std::to_string(viol->second) + " by " + std::to_string(viol->first) +
                           " falls outside");
  int order = grp.order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : n.elements) coset_of[grp.mul(x, m)] = idx;
  }
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) table[i][j] = coset_of[grp.mul(reps[i], reps[j])];
    labels[i] = grp.label(reps[i]);
  }
  GroupRef qg = FiniteGroup::from_table(std::move(table), std::move(labels));
  Homomorphism proj{g, qg, coset_of};
  return {qg, std::move(proj)};
}

GroupRef subgroup_as_group(const Subgroup& s, std::vector<int>* elements_out) {
  const FiniteGroup& g = *s.parent;
  int m = s.order();
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[s.elements[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g.label(s.elements[i]);
    for (int j = 0; j < m; ++j) {
      int p = pos[g.mul(s.elements[i], s.elements[j])];
      if (p < 0) throw validation_error("element set is not closed under product");
      table[i][j] = p;
    }
  }
  if (elements_out) *elements_out = s.elements;
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

AbelianGroup abelian_invariants(GroupRef g) {
  const FiniteGroup& grp = *g;
  if (!grp.is_abelian()) throw validation_error("abelian_invariants of a nonabelian group");
  int order = grp.order();
  // Greedy generating sequence.
  std::vector<int> gens;
  Subgroup span = trivial_subgroup(g);
  for (int x = 0; x < order; ++x) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    std::vector<int> seeds = gens;
    span = subgroup_generated(g, seeds);
    if (span.order() == order) break;
  }
  int k = static_cast<int>(gens.size());
  if (k == 0) return AbelianGroup{0, {}};
  // Normal forms along a BFS spanning tree of the Cayley graph on gens;
  // each non-tree edge contributes one relation of the presentation lattice.
  std::vector<std::vector<long long>> form(order);
  std::vector<char> known(order, 0);
  form[0].assign(k, 0);
  known[0] = 1;
  std::queue<int> work;
  work.push(0);
  RelationAccumulator acc(k);
  std::vector<long long> row(k);
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (int i = 0; i < k; ++i) {
      int y = grp.mul(x, gens[i]);
      if (!known[y]) {
        known[y] = 1;
        form[y] = form[x];
        ++form[y][i];
        work.push(y);
      } else {
        for (int j = 0; j < k; ++j) row[j] = form[x][j] - form[y][j];
        ++row[i];
        acc.add_row(row);
      }
    }
  }
  return acc.cokernel();
}

Abelianization abelianization(GroupRef g) {
  Subgroup derived = commutator_subgroup(g, whole_group(g), whole_group(g));
  auto [q, proj] = quotient(g, derived);
  AbelianGroup inv = abelian_invariants(q);
  return Abelianization{std::move(inv), q, std::move(proj)};
}

namespace {

std::vector<Subgroup> descending_series(GroupRef g,
                                        const std::function<Subgroup(const Subgroup&)>& next) {
  std::vector<Subgroup> series;
  series.push_back(whole_group(g));
  for (;;) {
    Subgroup n = next(series.back());
    if (n.elements == series.back().elements) break;
    series.push_back(std::move(n));
  }
  return series;
}

}  // namespace

std::vector<Subgroup> derived_series(GroupRef g) {
  return descending_series(
      g, [&](const Subgroup& s) { return commutator_subgroup(g, s, s); });
}

std::vector<Subgroup> lower_central_series(GroupRef g) {
  return descending_series(
      g, [&](const Subgroup& s) { return commutator_subgroup(g, whole_group(g), s); });
}

Homomorphism homomorphism_from_images(GroupRef source, GroupRef target,
                                      const std::vector<std::pair<int, int>>& gen_images) {
  const FiniteGroup& s = *source;
  const FiniteGroup& t = *target;
  std::vector<int> map(s.order(), -1);
  map[0] = 0;
  for (auto [x, y] : gen_images) {
    if (x < 0 || x >= s.order() || y < 0 || y >= t.order())
      throw validation_error("generator image out of range");
  }
  std::queue<int> work;
  work.push(0);
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    for (auto [gen, img] : gen_images) {
      int y = s.mul(x, gen);
      int v = t.mul(map[x], img);
      if (map[y] < 0) {
        map[y] = v;
        work.push(y);
      } else if (map[y] != v) {
        throw validation_error("generator images are inconsistent with relations: pair (" +
                               std::to_string(x) + "," + std::to_string(gen) + ")");
      }
    }
  }
  for (int x = 0; x < s.order(); ++x)
    if (map[x] < 0) throw validation_error("generator images do not span the source group");
  // Multiplicativity on all pairs (sampled only far beyond desk scale).
  auto check_pair = [&](int a, int b) {
    if (map[s.mul(a, b)] != t.mul(map[a], map[b]))
      throw validation_error("map is not multiplicative at pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
  };
  if (s.order() <= 4096) {
    for (int a = 0; a < s.order(); ++a)
      for (int b = 0; b < s.order(); ++b) check_pair(a, b);
  } else {
    std::mt19937 rng(20240802u);
    std::uniform_int_distribution<int> pick(0, s.order() - 1);
    for (int i = 0; i < 1000000; ++i) check_pair(pick(rng), pick(rng));
  }
  return Homomorphism{std::move(source), std::move(target), std::move(map)};
}

Subgroup Homomorphism::kernel() const {
  std::vector<int> elems;
  for (int x = 0; x < source->order(); ++x)
    if (map[x] == FiniteGroup::kIdentity) elems.push_back(x);
  return Subgroup{source, std::move(elems)};
}

Subgroup Homomorphism::image() const {
  std::vector<int> elems(map.begin(), map.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup{target, std::move(elems)};
}

bool Homomorphism::is_injective() const { return kernel().order() == 1; }
bool Homomorphism::is_surjective() const { return image().order() == target->order(); }

GroupRef group_from_permutations(const std::vector<std::vector<int>>& generators, int cap) {
  if (generators.empty()) throw validation_error("no generator permutations given");
  size_t m = generators[0].size();
  for (const auto& p : generators) {
    if (p.size() != m) throw validation_error("permutations act on different point counts");
    std::vector<char> seen(m, 0);
    for (int v : p) {
      if (v < 0 || v >= static_cast<int>(m) || seen[v])
        throw validation_error("generator is not a bijection");
      seen[v] = 1;
    }
  }
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  elems.push_back(id);
  index[id] = 0;
  // product a*b = apply a, then b
  auto compose = [m](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(m);
    for (size_t i = 0; i < m; ++i) r[i] = b[a[i]];
    return r;
  };
  for (size_t at = 0; at < elems.size(); ++at) {
    for (const auto& gen : generators) {
      std::vector<int> p = compose(elems[at], gen);
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        if (static_cast<int>(elems.size()) >= cap)
          throw resource_error("permutation closure exceeds cap " + std::to_string(cap));
        elems.push_back(std::move(p));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    // cycle notation
    std::string s;
    std::vector<char> seen(m, 0);
    for (size_t i = 0; i < m; ++i) {
      if (seen[i] || elems[a][i] == static_cast<int>(i)) continue;
      s += "(";
      size_t j = i;
      bool first = true;
      while (!seen[j]) {
        seen[j] = 1;
        if (!first) s += " ";
        s += std::to_string(j);
        first = false;
        j = elems[a][j];
      }
      s += ")";
    }
    labels[a] = s.empty() ? "()" : s;
  }
  return FiniteGroup::from_table(std::move(table), std::move(labels));
}

IsoFingerprint fingerprint(GroupRef g) {
  const FiniteGroup& grp = *g;
  IsoFingerprint fp;
  fp.order = grp.order();
  fp.abelian_invariants = abelianization(g).invariants.invariant_factors;
  fp.center_order = center(g).order();
  for (const Subgroup& s : derived_series(g)) fp.derived_series_orders.push_back(s.order());
  for (const Subgroup& s : lower_central_series(g)) fp.lower_central_orders.push_back(s.order());
  fp.exponent = grp.exponent();
  std::vector<char> placed(grp.order(), 0);
  for (int x = 0; x < grp.order(); ++x) {
    if (placed[x]) continue;
    long long size = 0;
    for (int y = 0; y < grp.order(); ++y) {
      int c = grp.conj(y, x);
      if (!placed[c]) {
        placed[c] = 1;
        ++size;
      }
    }
    fp.conjugacy_class_sizes.push_back(size);
  }
  std::sort(fp.conjugacy_class_sizes.begin(), fp.conjugacy_class_sizes.end());
  std::map<long long, long long> hist;
  for (int x = 0; x < grp.order(); ++x) ++hist[grp.element_order(x)];
  fp.order_counts.assign(hist.begin(), hist.end());
  return fp;
}

std::string IsoFingerprint::to_string() const {
  auto join = [](const std::vector<long long>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "]";
  };
  std::string s = "order=" + std::to_string(order);
  s += " ab=" + join(abelian_invariants);
  s += " z=" + std::to_string(center_order);
  s += " ds=" + join(derived_series_orders);
  s += " lcs=" + join(lower_central_orders);
  s += " exp=" + std::to_string(exponent);
  s += " ccl=" + join(conjugacy_class_sizes);
  return s;
}

GroupRef realize_abelian(const AbelianGroup& a) {
  if (!a.is_finite()) throw validation_error("cannot realize an infinite abelian group");
  long long order = a.order();
  if (order > FiniteGroup::kMaxOrder)
    throw resource_error("abelian realization order exceeds supported maximum");
  int n = static_cast<int>(order);
  int k = static_cast<int>(a.invariant_factors.size());
  const auto& d = a.invariant_factors;
  std::vector<std::vector<int>> tup(n, std::vector<int>(k));
  for (int x = 0; x < n; ++x) {
    int t = x;
    for (int i = 0; i < k; ++i) {
      tup[x][i] = t % static_cast<int>(d[i]);
      t /= static_cast<int>(d[i]);
    }
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int idx = 0;
      for (int i = k - 1; i >= 0; --i)
        idx = idx * static_cast<int>(d[i]) + (tup[x][i] + tup[y][i]) % static_cast<int>(d[i]);
      table[x][y] = idx;
    }
  return FiniteGroup::from_table(std::move(table));
}

}  // namespace cgt
