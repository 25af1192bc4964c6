#ifndef SUPERSPARSE_EIG_HPP_
#define SUPERSPARSE_EIG_HPP_

#include <complex>
#include <string>
#include <vector>

#include "supersparse/hessenberg.hpp"

namespace supersparse {

// Dense QR is O(dim^3); beyond this cap the dense path is refused.
inline constexpr int kDefaultDenseEigCap = 4096;

// All eigenvalues of an upper Hessenberg matrix by shifted (Francis
// double-shift) QR iteration with deflation. Deterministic for identical
// input and build. Throws ConvergenceFailure after 40*dim sweeps and
// DenseCapExceeded when dim > dense_cap.
std::vector<std::complex<double>> eigenvalues(const FloatHessenberg& h,
                                              int dense_cap = kDefaultDenseEigCap);

// Backward-error style certificate: |family value at lambda| divided by
// (unit roundoff * Phi), where Phi is the rounding-magnitude bound
// accumulated through the same recurrence. O(1)-ish values certify lambda
// as a backward-stable root. Internal exponent scaling keeps the tracking
// finite; ratios beyond floating range degrade to a log-scale fallback.
double residual(FamilyId id, std::complex<double> lambda);

struct Root {
  double re;
  double im;
  double residual;
};

// Eigenvalues of family_matrix(id) with per-root residuals, sorted by
// (re, im) ascending, ties broken by residual, for reproducible output.
struct RootCloud {
  std::string source;  // family token or "custom"
  int dim = 0;
  std::vector<Root> roots;
};

RootCloud root_cloud(FamilyId id, int dense_cap = kDefaultDenseEigCap);

}  // namespace supersparse

#endif  // SUPERSPARSE_EIG_HPP_
