#ifndef CGT_TESTS_MODELS_HPP
#define CGT_TESTS_MODELS_HPP

#include <string>
#include <vector>

namespace oracle {

/// Raw Cayley table (identity = 0) built by plain breadth-first closure of
/// permutations under composition.  Kept apart from the library closure so
/// the two can check each other.
std::vector<std::vector<int>> perm_closure_table(const std::vector<std::vector<int>>& gens,
                                                 int cap = 100000);

/// Hand-built model for a catalog entry name ("Z6", "D8", "Q16", ...).
/// Permutation models where natural, explicit power-relation tables for the
/// dicyclic family.
std::vector<std::vector<int>> model_table(const std::string& catalog_name);

/// Dicyclic group of order 4n: a^i b^j with b^2 = a^n, b a b^-1 = a^-1.
std::vector<std::vector<int>> dicyclic_table(int n);

}  // namespace oracle

#endif
