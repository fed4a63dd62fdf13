#ifndef FLAGDT_ERRORS_HPP
#define FLAGDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flagdt {

/// Invalid domain input (bad parameters, wrong weight, malformed config).
struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation applied to a form with vertical (beta) factors where a
/// semibasic form is required.
struct NonSemibasic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation precondition not met (e.g. Omega not basic).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two independent computation routes disagreed, or a constructed object
/// failed its re-verification. Signals a bug, not bad user input.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Default tolerance for float-backend zero tests.
inline constexpr double kDefaultTol = 1e-10;

} // namespace flagdt

#endif
