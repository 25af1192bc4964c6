#ifndef SUPERSPARSE_HESSENBERG_HPP_
#define SUPERSPARSE_HESSENBERG_HPP_

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "supersparse/family.hpp"
#include "supersparse/poly.hpp"

namespace supersparse {

struct MatrixEntry {
  int row;
  int col;
  Rational value;
};

// Sparse upper Hessenberg matrix with exact rational entries. Indices are
// 1-based, matching the a_{j+1,j} subdiagonal convention. Invariants,
// enforced at construction:
//   - every stored (row, col) satisfies col >= row - 1,
//   - every subdiagonal position (j+1, j) is present and nonzero,
//   - stored values are nonzero (zeros in the input are dropped).
// Instances are immutable; safe to share across threads.
class SparseHessenberg {
 public:
  SparseHessenberg(int dim, std::vector<MatrixEntry> entries);

  int dim() const { return dim_; }

  // Entry value, implicit zero when the position is unstored.
  Rational value(int row, int col) const;

  const std::map<std::pair<int, int>, Rational>& entries() const {
    return entries_;
  }

  // The dim-1 subdiagonal values (j+1, j), j = 1..dim-1.
  std::vector<Rational> subdiagonal() const;

 private:
  int dim_;
  std::map<std::pair<int, int>, Rational> entries_;
};

// Reciprocal of the product of all subdiagonal entries; empty products are 1.
Rational alpha(const SparseHessenberg& a);
Rational alpha(const SparseHessenberg& a, const SparseHessenberg& b);

// Companion composition: given companions A of a(z) and B of b(z), builds the
// (d_a + 1 + d_b)-dimensional companion C of c(z) = z*a(z)*b(z) + c0, with A
// in the top-left block, B in the bottom-right block, -1 pivot entries at
// (d_a+1, d_a) and (d_a+2, d_a+1), and -alpha*c0 in the top-right corner.
SparseHessenberg compose(const SparseHessenberg& a, const SparseHessenberg& b,
                         const Rational& c0);

// Degenerate one-factor composition realizing z*a(z) + c0 in dimension
// d_a + 1. The corner entry is +alpha(a)*c0 at (1, d_a+1); the sign flips
// relative to the two-factor corner because the final column is one short.
SparseHessenberg compose_single(const SparseHessenberg& a, const Rational& c0);

// Recursive supersparse companion for family_poly(id). Bottoms out at the
// first degree-1 member as the 1x1 matrix [-1]; factors that are the
// constant polynomial 1 degrade compose into compose_single. Throws
// NoCompanion when the member polynomial is constant.
SparseHessenberg family_matrix(FamilyId id);

// Classical Frobenius companion: unit subdiagonal and negated coefficients
// down the last column. Requires a monic input of degree >= 1.
SparseHessenberg frobenius_companion(const BigPoly& p);

// Max |entry|; 0 for the all-zero pattern.
Rational height(const SparseHessenberg& m);

// Distinct entry values, including the implicit zero whenever any position
// inside the Hessenberg profile (or below it) is unstored.
std::set<Rational> entry_set(const SparseHessenberg& m);

// Dense real double matrix in the same Hessenberg pattern, for members with
// irrational entries (and as the eigensolver input). 1-based accessors.
class FloatHessenberg {
 public:
  explicit FloatHessenberg(int dim);

  int dim() const { return dim_; }
  double at(int row, int col) const;
  // Throws HessenbergViolation when (row, col) lies below the subdiagonal.
  void set(int row, int col, double v);

 private:
  int dim_;
  std::vector<double> data_;  // row-major dim*dim
};

FloatHessenberg to_float(const SparseHessenberg& m);

// Floating-path composition, same block layout as the exact compose.
FloatHessenberg compose(const FloatHessenberg& a, const FloatHessenberg& b,
                        double c0);

std::set<double> entry_set(const FloatHessenberg& m);

}  // namespace supersparse

#endif  // SUPERSPARSE_HESSENBERG_HPP_
