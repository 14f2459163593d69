#ifndef HAUSDORFF_ERRORS_HPP
#define HAUSDORFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hausdorff {

/// Empty face or empty family of faces.
struct EmptyInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two complexes share no face; the empty complex is not representable.
struct EmptyIntersection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInjective : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UndefinedVertex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds a brute-force size bound.
struct TooLarge : std::length_error {
  using std::length_error::length_error;
};

/// Law weights are negative or do not sum to exactly one.
struct InvalidLaw : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hausdorff

#endif  // HAUSDORFF_ERRORS_HPP
