#pragma once

#include <stdexcept>
#include <string>

namespace pqh {

/// Malformed input (file syntax, rational literal, shape). CLI exit code 2.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (omega not symplectic, relations
/// fail, precondition of an operation not met). CLI exit code 3.
class InvariantError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed. CLI exit code 4.
class CrossCheckError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace pqh
