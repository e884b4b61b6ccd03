#pragma once

#include <stdexcept>
#include <string>

namespace parab {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// bad user-facing arguments (non-coprime pair, even p, out-of-range color, ...)
struct invalid_params : error {
  explicit invalid_params(const std::string& what) : error(what) {}
};

// division attempted against a zero divisor; carries the offending gcd as text
struct not_invertible : error {
  std::string gcd_text;
  not_invertible(const std::string& what, std::string gcd)
      : error(what), gcd_text(std::move(gcd)) {}
};

// a value that must be an integer came out fractional
struct integrality_violation : error {
  explicit integrality_violation(const std::string& what) : error(what) {}
};

// limit algebra requested for a matrix whose H-triple fails the squarefree/coprime test
struct condition_h_fails : error {
  explicit condition_h_fails(const std::string& what) : error(what) {}
};

// bivariate triple does not satisfy its defining substitution identity for any pinned sign
struct specialization_mismatch : error {
  explicit specialization_mismatch(const std::string& what) : error(what) {}
};

// an internal cross-check failed; a bug, not a user error
struct internal_inconsistency : error {
  explicit internal_inconsistency(const std::string& what) : error(what) {}
};

// float precision escalation hit its ceiling without meeting the rounding residue bound
struct precision_exhausted : error {
  explicit precision_exhausted(const std::string& what) : error(what) {}
};

}  // namespace parab
