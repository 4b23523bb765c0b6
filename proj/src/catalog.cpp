#include "cgt/catalog.hpp"

#include "cgt/errors.hpp"

namespace cgt {

const std::vector<CatalogEntry>& catalog_all() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({"1", "<a | a>", 1, false});
    for (int n = 2; n <= 16; ++n)
      v.push_back({"Z" + std::to_string(n), "<a | a^" + std::to_string(n) + ">", n, false});
    v.push_back({"Z2xZ2", "<a, b | a^2, b^2, a b = b a>", 4, false});
    v.push_back({"Z2xZ2xZ2", "<a, b, c | a^2, b^2, c^2, a b = b a, a c = c a, b c = c b>", 8,
                 false});
    v.push_back({"Z3xZ3", "<a, b | a^3, b^3, a b = b a>", 9, false});
    v.push_back({"Z4xZ2", "<a, b | a^4, b^2, a b = b a>", 8, false});
    v.push_back({"Z4xZ4", "<a, b | a^4, b^4, a b = b a>", 16, false});
    v.push_back({"Z2xZ6", "<a, b | a^2, b^6, a b = b a>", 12, false});
    for (int n = 3; n <= 8; ++n)
      v.push_back({"D" + std::to_string(2 * n),
                   "<r, s | r^" + std::to_string(n) + ", s^2, (r s)^2>", 2 * n, false});
    v.push_back({"Q8", "<a, b | a^4, a^2 b^-2, b^-1 a b a>", 8, false});
    v.push_back({"Q16", "<a, b | a^8, a^4 b^-2, b^-1 a b a>", 16, false});
    v.push_back({"A4", "<a, b | a^3, b^2, (a b)^3>", 12, false});
    v.push_back({"S3", "<a, b | a^2, b^2, (a b)^3>", 6, false});
    v.push_back({"Dic12", "<a, b | a^6, a^3 b^-2, b^-1 a b a>", 12, false});
    v.push_back({"S4", "<a, b | a^4, b^2, (a b)^3>", 24, true});
    return v;
  }();
  return entries;
}

std::vector<CatalogEntry> catalog(int max_order) {
  if (max_order > 16) throw validation_error("catalog supports max_order <= 16");
  if (max_order < 1) throw validation_error("max_order must be positive");
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : catalog_all())
    if (!e.oversize && e.expected_order <= max_order) out.push_back(e);
  return out;
}

EnumerationResult realize_entry(const CatalogEntry& e, long long max_cosets) {
  EnumerationResult r = todd_coxeter(parse_presentation(e.presentation), max_cosets);
  if (r.group->order() != e.expected_order)
    throw internal_error("catalog entry " + e.name + " enumerated to order " +
                         std::to_string(r.group->order()) + ", expected " +
                         std::to_string(e.expected_order));
  return r;
}

const std::vector<OvergroupConfig>& overgroup_configs() {
  static const std::vector<OvergroupConfig> configs = {
      {"D8:rot4,rot4", "D8", {"r"}, {"r"}},
      {"D8:rot4,whole", "D8", {"r"}, {"r", "s"}},
      {"Q8:i,j", "Q8", {"a"}, {"b"}},
      {"S3:alt3,alt3", "S3", {"a b"}, {"a b"}},
      {"D12:rot6,sub6", "D12", {"r"}, {"r^2", "s"}},
      {"D16:rot8,rot8", "D16", {"r"}, {"r"}},
      {"Q16:rot8,quat8", "Q16", {"a"}, {"a^2", "b"}},
  };
  return configs;
}

RealizedConfig realize_config(const OvergroupConfig& c, long long max_cosets) {
  const CatalogEntry* entry = nullptr;
  for (const CatalogEntry& e : catalog_all())
    if (e.name == c.overgroup) entry = &e;
  if (!entry) throw validation_error("config references unknown catalog entry " + c.overgroup);
  EnumerationResult r = realize_entry(*entry, max_cosets);
  Presentation pres = parse_presentation(entry->presentation);
  auto seeds_of = [&](const std::vector<std::string>& words) {
    std::vector<int> seeds;
    for (const std::string& w : words)
      seeds.push_back(
          evaluate_word(parse_word(w, pres.generator_names), r.generator_images, *r.group));
    return seeds;
  };
  RealizedConfig out;
  out.overgroup = r.group;
  out.g = subgroup_generated(r.group, seeds_of(c.g_seeds));
  out.h = subgroup_generated(r.group, seeds_of(c.h_seeds));
  return out;
}

}  // namespace cgt
