#ifndef CGT_PRESENTATION_HPP
#define CGT_PRESENTATION_HPP

#include <string>
#include <vector>

#include "cgt/group.hpp"

namespace cgt {

/// Word in a free group: signed generator indices, +k for generator k-1,
/// -k for its inverse.
struct FreeWord {
  std::vector<int> letters;

  static FreeWord generator(int index) { return FreeWord{{index + 1}}; }
  FreeWord inverse() const;
  FreeWord concat(const FreeWord& w) const;
  FreeWord pow(int e) const;
  /// No adjacent x x^{-1}.
  FreeWord reduced() const;
  bool empty() const { return letters.empty(); }
  bool operator==(const FreeWord&) const = default;
};

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;

  int generator_count() const { return static_cast<int>(generator_names.size()); }
};

/// Parses "< names | relators >".  Names match [A-Za-z][A-Za-z0-9_]*;
/// relator syntax: juxtaposition (whitespace-separated), ^ integer powers
/// (negative allowed), parentheses, and w1 = w2 for w1 w2^-1.  Commas
/// separate names and relators.
Presentation parse_presentation(const std::string& text);

/// Canonical text form; parse_presentation round-trips it.
std::string presentation_text(const Presentation& p);

/// Parses one word (same syntax as a relator, '=' not allowed) against the
/// given generator names.
FreeWord parse_word(const std::string& text, const std::vector<std::string>& names);

/// Product of images along w; images has one entry per generator.
int evaluate_word(const FreeWord& w, const std::vector<int>& images, const FiniteGroup& g);

}  // namespace cgt

#endif
