#ifndef SUPERSPARSE_CHARPOLY_HPP_
#define SUPERSPARSE_CHARPOLY_HPP_

#include <optional>
#include <string>

#include "supersparse/hessenberg.hpp"
#include "supersparse/poly.hpp"

namespace supersparse {

// Exact characteristic-polynomial work is capped by dimension: coefficient
// sizes blow up doubly exponentially for the Mandelbrot family.
inline constexpr int kDefaultOracleDimCap = 128;

// det(zI - m) expanded exactly over the rationals, by the Hessenberg column
// recurrence (Laplace expansion down each last column, exploiting the single
// nonzero subdiagonal). Monic of degree dim(m).
RatPoly char_poly_exact(const SparseHessenberg& m);

struct VerifyReport {
  bool ok = true;
  std::optional<int> first_mismatch_degree;
  std::optional<std::string> expected;  // coefficient at the mismatch
  std::optional<std::string> got;
  std::string context;  // what was compared, for the text rendering
};

std::string report_text(const VerifyReport& r);
// {"ok": bool, "first_mismatch_degree": int|null, "expected": str|null,
//  "got": str|null}
std::string report_json(const VerifyReport& r);

// Checks det(zI - compose(a, b, c0)) == z*a(z)*b(z) + c0 coefficient for
// coefficient; the one-factor overload checks z*a(z) + c0.
VerifyReport verify_composition(const SparseHessenberg& a,
                                const SparseHessenberg& b, const Rational& c0);
VerifyReport verify_composition(const SparseHessenberg& a, const Rational& c0);

// Cramer step of the composition proof: the final entry v of the solution of
// (zI - B)v = e1 must equal prod(subdiag(B)) / b(z) exactly. Solved by exact
// rational back-substitution. Throws SingularSample when b(z) = 0.
bool verify_cramer_v(const SparseHessenberg& b, const Rational& z);

// char_poly_exact(family_matrix(id)) == family_poly(id). Throws
// BudgetExceeded above dim_cap.
VerifyReport verify_family(FamilyId id, int dim_cap = kDefaultOracleDimCap);

}  // namespace supersparse

#endif  // SUPERSPARSE_CHARPOLY_HPP_
