#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace recomp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class ValidationKind {
  OrderTooSmall,
  LengthMismatch,
  ZeroCoefficient,
  ZeroRoot,
  DegeneratePair,
  DominantRootViolation,
};

// A recurrence datum violates one of its invariants. Indices are 1-based,
// matching the usual a_1..a_d / alpha_1..alpha_d numbering.
class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, std::vector<std::size_t> indices, const std::string& what)
      : Error(what), kind_(kind), indices_(std::move(indices)) {}

  ValidationKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ValidationKind kind_;
  std::vector<std::size_t> indices_;
};

const char* to_string(ValidationKind kind) noexcept;

// Some beta_i^{m0} has no partner among the expansion profiles, so the
// sequence falls into the bounded (S-unit) branch instead of a variety.
class NoMatchingError : public Error {
 public:
  explicit NoMatchingError(std::size_t root_index)
      : Error("no expansion profile matches beta_" + std::to_string(root_index) + "^m0"),
        root_index_(root_index) {}

  std::size_t root_index() const noexcept { return root_index_; }

 private:
  std::size_t root_index_;
};

}  // namespace recomp
