#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cremona/gauss_rational.hpp"

namespace cremona {

/// Dense univariate polynomial over Q(i); coefficient k multiplies x^k.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussRational> coeffs);
  UniPoly(std::initializer_list<GaussRational> coeffs);

  static UniPoly constant(const GaussRational& c);
  static UniPoly monomial(const GaussRational& c, int k);
  static UniPoly x() { return monomial(1, 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<GaussRational>& coeffs() const noexcept { return c_; }
  GaussRational coeff(int k) const;
  const GaussRational& leading() const;
  // exponent of the lowest nonzero term (x-adic valuation); -1 for zero
  int valuation() const noexcept;

  UniPoly monic() const;
  UniPoly scaled(const GaussRational& s) const;
  GaussRational eval(const GaussRational& t) const;
  /// p(q(x))
  UniPoly compose(const UniPoly& q) const;
  UniPoly pow(int e) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const { return scaled(-1); }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Canonical text in the given variable, highest degree first: "x^2 - 2*x + 1".
  std::string to_string(char var = 'x') const;

 private:
  void strip();
  std::vector<GaussRational> c_;
};

/// Quotient and remainder of Euclidean division; throws DomainError for b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Exact quotient a / b; throws DomainError if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Monic greatest common divisor. Throws DomainError when both inputs are zero.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

}  // namespace cremona
