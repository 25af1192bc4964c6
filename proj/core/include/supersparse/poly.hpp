#ifndef SUPERSPARSE_POLY_HPP_
#define SUPERSPARSE_POLY_HPP_

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supersparse/errors.hpp"

namespace supersparse {

using Int = mpz_class;
using Rational = mpq_class;

// Builds a canonical rational from a possibly non-reduced fraction.
inline Rational make_rational(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Dense univariate polynomial over an exact coefficient ring, ascending
// degree order: coeffs()[k] multiplies z^k. Canonical form: the trailing
// coefficient is nonzero; the zero polynomial is the empty sequence.
// Immutable in practice: all arithmetic returns fresh values.
template <typename Coeff>
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Poly constant(Coeff c) {
    Poly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
  }

  // The polynomial z.
  static Poly variable() { return Poly(std::vector<Coeff>{Coeff(0), Coeff(1)}); }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree, or nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  // Coefficient of z^k; zero outside the stored range.
  Coeff coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Coeff(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const Coeff& leading() const { return coeffs_.back(); }

  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  // Multiplication by z^k (prepend k zeros).
  Poly shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.coeffs_.resize(coeffs_.size() + static_cast<std::size_t>(k), Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      r.coeffs_[i + static_cast<std::size_t>(k)] = coeffs_[i];
    return r;
  }

  Poly operator-() const {
    Poly r(*this);
    for (Coeff& c : r.coeffs_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  // Schoolbook convolution; exact, O(deg a * deg b).
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
  }

  friend Poly operator*(const Poly& a, const Coeff& s) {
    if (s == 0) return Poly();
    Poly r(a);
    for (Coeff& c : r.coeffs_) c *= s;
    return r;
  }

  friend Poly operator*(const Coeff& s, const Poly& a) { return a * s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using BigPoly = Poly<Int>;
using RatPoly = Poly<Rational>;

inline RatPoly to_rational(const BigPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const Int& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

// Integer projection; nullopt when any denominator is nontrivial.
inline std::optional<BigPoly> to_integer(const RatPoly& p) {
  std::vector<Int> c;
  c.reserve(p.coeffs().size());
  for (const Rational& x : p.coeffs()) {
    if (x.get_den() != 1) return std::nullopt;
    c.push_back(x.get_num());
  }
  return BigPoly(std::move(c));
}

// Human-readable rendering, descending powers, e.g. "z^3+2*z^2+z+1".
template <typename Coeff>
std::string to_string(const Poly<Coeff>& p);

struct ComplexEval {
  std::complex<double> value;
  // Running a-priori bound on |computed - exact|; scales with unit roundoff.
  double error_bound;
};

// Horner evaluation in complex double arithmetic with a running error bound.
// Throws OverflowError when an intermediate magnitude leaves floating range.
ComplexEval eval_complex(const BigPoly& p, std::complex<double> z);

// Exact Horner evaluation over the rationals.
Rational eval_rational(const RatPoly& p, const Rational& z);

}  // namespace supersparse

#endif  // SUPERSPARSE_POLY_HPP_
