#pragma once

#include <stdexcept>
#include <string>

namespace vvmf {

/// Invalid operation arguments: non-exact divisors, p | 2N, congruence
/// violations. The CLI maps these to exit code 2.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A table is not known far enough to answer the request.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A linear system had no solution (or no unique one).
class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vvmf
