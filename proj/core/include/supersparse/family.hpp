#ifndef SUPERSPARSE_FAMILY_HPP_
#define SUPERSPARSE_FAMILY_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "supersparse/poly.hpp"

namespace supersparse {

// The four recursively defined polynomial families:
//   Mandelbrot            p_0 = 0,             p_{n+1} = z p_n^2 + 1
//   Fibonacci-Mandelbrot  q_0 = 0, q_1 = 1,    q_{n+1} = z q_n q_{n-1} + 1
//   Narayana-Mandelbrot   r_0 = 0, r_1=r_2=1,  r_{n+1} = z r_n r_{n-2} + 1
//   QuarticS              s_0 = 0,             s_{n+1} = z^3 s_n^4 + 1
enum class Family {
  kMandelbrot,
  kFibonacciMandelbrot,
  kNarayanaMandelbrot,
  kQuarticS,
};

struct FamilyId {
  Family family;
  int n;  // nonnegative index into the recurrence
};

// Guards accidental expansion of coefficient vectors that would not fit in
// memory; overridable per call (the CLI honors COMPANION_DEGREE_CAP).
inline constexpr long kDefaultDegreeCap = 200000;

// The exact member polynomial, generated by the family recurrence from its
// base cases. Throws DegreeCapExceeded when the degree recurrence exceeds
// degree_cap.
BigPoly family_poly(FamilyId id, long degree_cap = kDefaultDegreeCap);

// Degree by the pure integer recurrence on degrees, never by coefficient
// expansion. Constant members (including the zero polynomial) report 0.
// Arbitrary-precision because quartic degrees overflow 64 bits near n = 33.
Int family_degree(FamilyId id);

// Lowercase CLI token: mandelbrot, fibonacci, narayana, quartics.
std::string family_token(Family f);
std::optional<Family> parse_family(std::string_view token);

}  // namespace supersparse

#endif  // SUPERSPARSE_FAMILY_HPP_
