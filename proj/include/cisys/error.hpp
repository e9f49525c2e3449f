#pragma once

#include <stdexcept>
#include <string>

namespace cisys {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported input (bad Cartan type, flag, file).
struct SpecError : Error {
  using Error::Error;
};

/// Argument lies outside the subspace an operation is defined on.
struct DomainError : Error {
  using Error::Error;
};

/// A verification or solve failed; `witness` carries the offending data.
struct WitnessError : Error {
  WitnessError(const std::string& what, std::string witness_text)
      : Error(what), witness(std::move(witness_text)) {}
  std::string witness;
};

}  // namespace cisys
