#pragma once

#include <vector>

#include "milnor/lattice.hpp"

namespace milnor {

// Element of Q(i).
struct GaussRational {
  Rational re{0};
  Rational im{0};

  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRational inverse() const;
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) { return a * b.inverse(); }
};

// Univariate polynomial over Q(i), coefficients from degree 0 upward, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<GaussRational> coeffs);
  static UPoly constant(GaussRational c);
  static UPoly monomial(GaussRational c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  // Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<GaussRational>& coeffs() const { return c_; }
  GaussRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : GaussRational{}; }
  const GaussRational& lead() const { return c_.back(); }

  UPoly derivative() const;
  UPoly monic() const;
  // Divides out the largest power of the variable.
  UPoly strip_variable_power() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const GaussRational& k, const UPoly& a);

 private:
  std::vector<GaussRational> c_;
  void trim();
};

struct UDivision {
  UPoly quotient;
  UPoly remainder;
};

UDivision divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
// u with u * a = gcd(a, m) mod m.
UPoly gcd_cofactor(const UPoly& a, const UPoly& m);
UPoly squarefree_part(const UPoly& a);

// Polynomial in t whose coefficients are polynomials in s; index is the t-degree.
using BPoly = std::vector<UPoly>;

BPoly trim(BPoly p);
long t_degree(const BPoly& p);
BPoly d_ds(const BPoly& p);
BPoly d_dt(const BPoly& p);
// Builds a bivariate polynomial from terms s^i t^j.
BPoly bpoly_from_terms(const std::vector<std::pair<std::pair<Int, Int>, GaussRational>>& terms);
// Resultant with respect to t, as a polynomial in s.
UPoly resultant_t(const BPoly& a, const BPoly& b);

// True when the polynomial has a repeated root in C*.
bool has_repeated_torus_root(const UPoly& f);
// True when {F = dF/ds = dF/dt = 0} has a point in (C*)^2.
bool has_torus_singularity(const BPoly& f);

}  // namespace milnor
