#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Domain refusal: the input is well-formed but the requested operation is
// mathematically unavailable for it (torus has no roots, cone has lineality,
// mismatched ambient ranks, ...).  The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Malformed input (bad JSON shape, dimension mismatch, non-integer where an
// integer is required).  The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace toric
