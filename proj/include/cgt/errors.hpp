#ifndef CGT_ERRORS_HPP
#define CGT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cgt {

/// Base class for all toolkit errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed presentation text, non-automorphism action data,
/// a non-normal subgroup passed to quotient(), inconsistent generator
/// images, incompatible action pairs.
struct validation_error : error {
  using error::error;
};

/// A configured cap was exceeded (coset limit, order limit, element cap).
struct resource_error : error {
  using error::error;
};

/// A post-construction self-check failed.  Indicates a bug in the engine,
/// never bad user input.
struct internal_error : error {
  using error::error;
};

/// Parse failure with source position.
struct parse_error : validation_error {
  int line;
  int column;
  parse_error(const std::string& msg, int line_, int col_)
      : validation_error(msg + " (line " + std::to_string(line_) + ", column " +
                         std::to_string(col_) + ")"),
        line(line_),
        column(col_) {}
};

}  // namespace cgt

#endif
