#ifndef CGT_TODD_COXETER_HPP
#define CGT_TODD_COXETER_HPP

#include "cgt/presentation.hpp"

namespace cgt {

/// Completed coset table over the trivial subgroup: one row per group
/// element, columns alternate generator / inverse (2j, 2j+1), no undefined
/// entries, dead rows compacted away.
struct CosetTable {
  int generator_count = 0;
  std::vector<std::vector<int>> rows;

  int cosets() const { return static_cast<int>(rows.size()); }
  int step(int coset, int signed_letter) const {
    int col = signed_letter > 0 ? 2 * (signed_letter - 1) : 2 * (-signed_letter - 1) + 1;
    return rows[coset][col];
  }
  /// Endpoint of the relator trace starting at `coset`.
  int trace(int coset, const FreeWord& w) const {
    int c = coset;
    for (int l : w.letters) c = step(c, l);
    return c;
  }
};

struct EnumerationResult {
  CosetTable table;
  GroupRef group;
  /// Element of `group` realizing each presentation generator.
  std::vector<int> generator_images;
  long long cosets_defined = 0;
};

inline constexpr long long kDefaultMaxCosets = 1000000;

/// Enumerates the cosets of the trivial subgroup by HLT relator scanning
/// with union-find coincidence handling and a lookahead pass once the
/// table outgrows a fill threshold.  On completion the group is returned
/// as the Cayley table of its regular permutation representation; its
/// order is the number of live cosets.  Exceeding max_cosets raises a
/// resource error reporting live/total counts (the presented group may be
/// infinite or merely large).  lookahead_stride tunes how many rows are
/// allocated between lookahead/compaction passes.
EnumerationResult todd_coxeter(const Presentation& p,
                               long long max_cosets = kDefaultMaxCosets,
                               long long lookahead_stride = 65536);

}  // namespace cgt

#endif
