#ifndef SUPERSPARSE_IO_HPP_
#define SUPERSPARSE_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "supersparse/eig.hpp"
#include "supersparse/hessenberg.hpp"
#include "supersparse/poly.hpp"

namespace supersparse {

// Matrix Market coordinate format. Two flavors:
//   - the comment-extended rational variant stores values as exact "p/q"
//     (or plain integer) tokens and marks itself with a "% rational" comment;
//   - the standard real variant stores values as shortest round-trip doubles.
// The reader accepts both but rejects decimal-float values: the exact path
// only admits integer or p/q tokens.
void write_matrix_market(const SparseHessenberg& m, std::ostream& os);
void write_matrix_market_real(const SparseHessenberg& m, std::ostream& os);
SparseHessenberg read_matrix_market(std::istream& is);

// JSON matrix format: {"dim": d, "entries": [[row, col, "p/q"], ...]}.
void write_matrix_json(const SparseHessenberg& m, std::ostream& os);
SparseHessenberg read_matrix_json(std::istream& is);

// JSON polynomial format: {"degree": d|null, "coeffs": [decimal strings,
// ascending]}. Decimal strings are mandatory: coefficients exceed 64-bit
// range at modest n.
void write_poly_json(const BigPoly& p, std::ostream& os);
BigPoly read_poly_json(std::istream& is);

// Root CSV: exact header "re,im,residual", one root per line, shortest
// round-trip decimal formatting.
void write_roots_csv(const RootCloud& cloud, std::ostream& os);
std::vector<Root> read_roots_csv(std::istream& is);

// Renders a double with shortest round-trip decimals.
std::string format_double(double x);

// Parses "p/q" or integer literals; decimal floats are rejected so that the
// exact path stays exact. Throws Error on anything else.
Rational parse_rational(const std::string& text);

}  // namespace supersparse

#endif  // SUPERSPARSE_IO_HPP_
