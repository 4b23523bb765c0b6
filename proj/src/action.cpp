#include "cgt/action.hpp"

#include <algorithm>
#include <queue>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

void validate_action(const FiniteGroup& actor, const FiniteGroup& target,
                     const std::vector<std::vector<int>>& act, const char* which) {
  if (static_cast<int>(act.size()) != actor.order())
    throw validation_error(std::string(which) + ": one permutation per acting element required");
  for (int a = 0; a < actor.order(); ++a) {
    const auto& perm = act[a];
    if (static_cast<int>(perm.size()) != target.order())
      throw validation_error(std::string(which) + ": permutation length mismatch");
    std::vector<char> seen(target.order(), 0);
    for (int v : perm) {
      if (v < 0 || v >= target.order() || seen[v])
        throw validation_error(std::string(which) + ": image of element " + std::to_string(a) +
                               " is not a bijection");
      seen[v] = 1;
    }
    // automorphism of the target
    for (int x = 0; x < target.order(); ++x)
      for (int y = 0; y < target.order(); ++y)
        if (perm[target.mul(x, y)] != target.mul(perm[x], perm[y]))
          throw validation_error(std::string(which) + ": image of element " + std::to_string(a) +
                                 " is not an automorphism (breaks at " + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
  }
  // homomorphism into Aut: action of xy = action of x after action of y
  for (int x = 0; x < actor.order(); ++x)
    for (int y = 0; y < actor.order(); ++y) {
      int xy = actor.mul(x, y);
      for (int t = 0; t < target.order(); ++t)
        if (act[xy][t] != act[x][act[y][t]])
          throw validation_error(std::string(which) + ": not a homomorphism into Aut at pair (" +
                                 std::to_string(x) + "," + std::to_string(y) + ")");
    }
}

std::vector<std::vector<int>> identity_action(int actor_order, int target_order) {
  std::vector<int> id(target_order);
  for (int i = 0; i < target_order; ++i) id[i] = i;
  return std::vector<std::vector<int>>(actor_order, id);
}

std::vector<std::vector<int>> conjugation_action(const FiniteGroup& g) {
  std::vector<std::vector<int>> act(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x) act[a][x] = g.conj(a, x);
  return act;
}

}  // namespace

MutualActionPair MutualActionPair::from_actions(GroupRef g, GroupRef h,
                                                std::vector<std::vector<int>> g_on_h,
                                                std::vector<std::vector<int>> h_on_g) {
  validate_action(*g, *h, g_on_h, "action of G on H");
  validate_action(*h, *g, h_on_g, "action of H on G");
  MutualActionPair pair;
  pair.g = std::move(g);
  pair.h = std::move(h);
  pair.act_g_on_h = std::move(g_on_h);
  pair.act_h_on_g = std::move(h_on_g);
  return pair;
}

MutualActionPair MutualActionPair::trivial(GroupRef g, GroupRef h) {
  auto gh = identity_action(g->order(), h->order());
  auto hg = identity_action(h->order(), g->order());
  return from_actions(std::move(g), std::move(h), std::move(gh), std::move(hg));
}

MutualActionPair MutualActionPair::conjugation_square(GroupRef g) {
  auto act = conjugation_action(*g);
  MutualActionPair pair = from_actions(g, g, act, act);
  pair.square = true;
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  pair.provenance = OvergroupProvenance{g, all, all};
  return pair;
}

MutualActionPair MutualActionPair::from_overgroup(GroupRef k, const Subgroup& g,
                                                  const Subgroup& h) {
  if (g.parent != k || h.parent != k)
    throw validation_error("subgroups do not live in the given overgroup");
  if (auto v = normality_violation(g))
    throw validation_error("G is not normal in the overgroup (element " +
                           std::to_string(v->second) + " conjugated by " +
                           std::to_string(v->first) + ")");
  if (auto v = normality_violation(h))
    throw validation_error("H is not normal in the overgroup (element " +
                           std::to_string(v->second) + " conjugated by " +
                           std::to_string(v->first) + ")");
  GroupRef gg = subgroup_as_group(g);
  GroupRef hh = subgroup_as_group(h);
  std::vector<int> gpos(k->order(), -1), hpos(k->order(), -1);
  for (size_t i = 0; i < g.elements.size(); ++i) gpos[g.elements[i]] = static_cast<int>(i);
  for (size_t i = 0; i < h.elements.size(); ++i) hpos[h.elements[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> g_on_h(gg->order(), std::vector<int>(hh->order()));
  std::vector<std::vector<int>> h_on_g(hh->order(), std::vector<int>(gg->order()));
  for (int a = 0; a < gg->order(); ++a)
    for (int x = 0; x < hh->order(); ++x)
      g_on_h[a][x] = hpos[k->conj(g.elements[a], h.elements[x])];
  for (int b = 0; b < hh->order(); ++b)
    for (int x = 0; x < gg->order(); ++x)
      h_on_g[b][x] = gpos[k->conj(h.elements[b], g.elements[x])];
  MutualActionPair pair = from_actions(std::move(gg), std::move(hh), std::move(g_on_h),
                                       std::move(h_on_g));
  pair.provenance = OvergroupProvenance{std::move(k), g.elements, h.elements};
  return pair;
}

MutualActionPair MutualActionPair::from_generator_actions(
    GroupRef g, GroupRef h, const std::vector<std::pair<int, std::vector<int>>>& gens_of_g,
    const std::vector<std::pair<int, std::vector<int>>>& gens_of_h) {
  auto extend = [](const FiniteGroup& actor, const FiniteGroup& target,
                   const std::vector<std::pair<int, std::vector<int>>>& gens) {
    std::vector<std::vector<int>> act(actor.order());
    std::vector<int> id(target.order());
    for (int i = 0; i < target.order(); ++i) id[i] = i;
    act[FiniteGroup::kIdentity] = id;
    std::queue<int> work;
    work.push(FiniteGroup::kIdentity);
    int known = 1;
    while (!work.empty()) {
      int x = work.front();
      work.pop();
      for (const auto& [gen, perm] : gens) {
        if (gen < 0 || gen >= actor.order() ||
            static_cast<int>(perm.size()) != target.order())
          throw validation_error("generator action data out of range");
        int y = actor.mul(x, gen);
        // left action: ^(x.gen) t = ^x(^gen t)
        std::vector<int> composed(target.order());
        for (int t = 0; t < target.order(); ++t) composed[t] = act[x][perm[t]];
        if (act[y].empty()) {
          act[y] = std::move(composed);
          work.push(y);
          ++known;
        } else if (act[y] != composed) {
          throw validation_error("generator actions are inconsistent with the group relations");
        }
      }
    }
    if (known != actor.order())
      throw validation_error("action generators do not generate the acting group");
    return act;
  };
  auto g_on_h = extend(*g, *h, gens_of_g);
  auto h_on_g = extend(*h, *g, gens_of_h);
  return from_actions(std::move(g), std::move(h), std::move(g_on_h), std::move(h_on_g));
}

std::string CompatibilityReport::describe() const {
  if (ok) return "compatible";
  return "identity " + std::to_string(identity) + " fails at triple (" + std::to_string(x) +
         "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

CompatibilityReport check_compatibility(const MutualActionPair& pair) {
  const FiniteGroup& g = *pair.g;
  const FiniteGroup& h = *pair.h;
  // ^(^g h) g' = ^g(^h(^(g^-1) g'))
  for (int ge = 0; ge < g.order(); ++ge)
    for (int he = 0; he < h.order(); ++he)
      for (int gp = 0; gp < g.order(); ++gp) {
        int lhs = pair.apply_h(pair.apply_g(ge, he), gp);
        int rhs = g.conj(ge, pair.apply_h(he, g.conj(g.inv(ge), gp)));
        if (lhs != rhs) return CompatibilityReport{false, 1, ge, he, gp};
      }
  // ^(^h g) h' = ^h(^g(^(h^-1) h'))
  for (int he = 0; he < h.order(); ++he)
    for (int ge = 0; ge < g.order(); ++ge)
      for (int hp = 0; hp < h.order(); ++hp) {
        int lhs = pair.apply_g(pair.apply_h(he, ge), hp);
        int rhs = h.conj(he, pair.apply_g(ge, h.conj(h.inv(he), hp)));
        if (lhs != rhs) return CompatibilityReport{false, 2, he, ge, hp};
      }
  return CompatibilityReport{};
}

}  // namespace cgt
