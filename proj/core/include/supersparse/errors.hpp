#ifndef SUPERSPARSE_ERRORS_HPP_
#define SUPERSPARSE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace supersparse {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// family_poly: the degree recurrence exceeds the configured cap.
struct DegreeCapExceeded : Error {
  using Error::Error;
};

// family_matrix et al.: constant polynomials have no companion matrix.
struct NoCompanion : Error {
  NoCompanion() : Error("constant polynomial has no companion") {}
  using Error::Error;
};

struct NotMonic : Error {
  using Error::Error;
};

struct DegreeZero : Error {
  using Error::Error;
};

struct DimensionTooSmall : Error {
  using Error::Error;
};

// Structural invariant breach: entry below the subdiagonal, zero or missing
// subdiagonal entry, bad index. The message names the offending position.
struct HessenbergViolation : Error {
  using Error::Error;
};

// verify_cramer_v: the sample point is a root of b, pick another one.
struct SingularSample : Error {
  using Error::Error;
};

// Exact-oracle dimension cap exceeded.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Dense eigensolver dimension cap exceeded.
struct DenseCapExceeded : Error {
  using Error::Error;
};

// Malformed input file; line is 1-based.
struct ParseError : Error {
  ParseError(int line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

// QR iteration budget exhausted before full deflation.
struct ConvergenceFailure : Error {
  ConvergenceFailure(int index)
      : Error("QR iteration failed to converge; stuck deflation at index " +
              std::to_string(index)),
        stuck_index(index) {}
  int stuck_index;
};

// Floating-point range exceeded in an intermediate quantity.
struct OverflowError : Error {
  using Error::Error;
};

}  // namespace supersparse

#endif  // SUPERSPARSE_ERRORS_HPP_
