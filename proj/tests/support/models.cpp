#include "support/models.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<int>> perm_closure_table(const std::vector<std::vector<int>>& gens,
                                                 int cap) {
  size_t m = gens.at(0).size();
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [m](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(m);
    for (size_t i = 0; i < m; ++i) r[i] = b[a[i]];  // apply a, then b
    return r;
  };
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems{id};
  index[id] = 0;
  for (size_t at = 0; at < elems.size(); ++at)
    for (const auto& g : gens) {
      auto p = compose(elems[at], g);
      if (index.emplace(p, elems.size()).second) {
        if (static_cast<int>(elems.size()) >= cap)
          throw std::runtime_error("oracle closure cap exceeded");
        elems.push_back(std::move(p));
      }
    }
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return table;
}

namespace {

std::vector<int> cycle_perm(int m, const std::vector<int>& pts) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  for (size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

std::vector<int> range(int lo, int hi) {  // [lo, hi)
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

}  // namespace

std::vector<std::vector<int>> dicyclic_table(int n) {
  int order = 4 * n;
  auto idx = [n](int i, int j) { return i + 2 * n * j; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2 * n; ++k)
        for (int l = 0; l < 2; ++l) {
          int a = idx(i, j), b = idx(k, l);
          int pow = j == 0 ? (i + k) % (2 * n) : ((i - k) % (2 * n) + 2 * n) % (2 * n);
          int flips = j + l;
          if (flips == 2) {
            pow = (pow + n) % (2 * n);  // b^2 = a^n
            flips = 0;
          }
          t[a][b] = idx(pow, flips);
        }
  return t;
}

std::vector<std::vector<int>> model_table(const std::string& name) {
  if (name == "1") return perm_closure_table({{0}});
  if (name.size() >= 2 && name[0] == 'Z' && name.find('x') == std::string::npos) {
    int n = std::stoi(name.substr(1));
    return perm_closure_table({cycle_perm(n, range(0, n))});
  }
  if (name == "Z2xZ2")
    return perm_closure_table({cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3})});
  if (name == "Z2xZ2xZ2")
    return perm_closure_table(
        {cycle_perm(6, {0, 1}), cycle_perm(6, {2, 3}), cycle_perm(6, {4, 5})});
  if (name == "Z3xZ3")
    return perm_closure_table({cycle_perm(6, {0, 1, 2}), cycle_perm(6, {3, 4, 5})});
  if (name == "Z4xZ2")
    return perm_closure_table({cycle_perm(6, {0, 1, 2, 3}), cycle_perm(6, {4, 5})});
  if (name == "Z4xZ4")
    return perm_closure_table({cycle_perm(8, {0, 1, 2, 3}), cycle_perm(8, {4, 5, 6, 7})});
  if (name == "Z2xZ6")
    return perm_closure_table({cycle_perm(8, {0, 1}), cycle_perm(8, {2, 3, 4, 5, 6, 7})});
  if (name == "Q8") return dicyclic_table(2);
  if (name == "Q16") return dicyclic_table(4);
  if (name == "Dic12") return dicyclic_table(3);
  if (name[0] == 'D') {
    int n = std::stoi(name.substr(1)) / 2;
    std::vector<int> refl(n);
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    return perm_closure_table({cycle_perm(n, range(0, n)), refl});
  }
  if (name == "S3")
    return perm_closure_table({cycle_perm(3, {0, 1}), cycle_perm(3, {1, 2})});
  if (name == "S4")
    return perm_closure_table({cycle_perm(4, {0, 1, 2, 3}), cycle_perm(4, {0, 1})});
  if (name == "A4") {
    auto dbl = cycle_perm(4, {0, 1});
    auto d2 = cycle_perm(4, {2, 3});
    std::vector<int> prod(4);
    for (int i = 0; i < 4; ++i) prod[i] = d2[dbl[i]];
    return perm_closure_table({cycle_perm(4, {0, 1, 2}), prod});
  }
  throw std::runtime_error("no model for catalog entry " + name);
}

}  // namespace oracle
