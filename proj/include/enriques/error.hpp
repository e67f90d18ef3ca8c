#pragma once

#include <stdexcept>
#include <string>

namespace enriques {

enum class ErrorKind {
  invalid_input,    // malformed literal, wrong length, precondition violated
  basis_mismatch,   // vectors from different lattices combined
  infeasible_bound, // enumeration bound too small to produce a result
  degenerate,       // zero class where a geometric class is required
  invariant_failure
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace enriques
