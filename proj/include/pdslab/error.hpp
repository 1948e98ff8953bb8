#pragma once

#include <stdexcept>
#include <string>

namespace pdslab {

/// Malformed literal, dimension mismatch or out-of-range argument.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A precondition on a mathematical object failed (e.g. a map that is not a homomorphism).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pdslab
