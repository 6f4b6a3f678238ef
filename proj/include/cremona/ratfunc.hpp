#pragma once

#include <optional>
#include <string>

#include "cremona/unipoly.hpp"

namespace cremona {

/// Reduced univariate rational function num/den over Q(i):
/// gcd(num, den) = 1 and den is monic (den = 1 for polynomials and for zero).
class RatFunc {
 public:
  RatFunc() : den_(UniPoly::constant(1)) {}
  RatFunc(UniPoly p);  // NOLINT: polynomials embed implicitly
  RatFunc(const GaussRational& c);  // NOLINT
  RatFunc(long n) : RatFunc(GaussRational(n)) {}  // NOLINT

  static RatFunc x() { return RatFunc(UniPoly::x()); }

  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.degree() == 0; }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  std::optional<GaussRational> constant_value() const;

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  /// r(k*x)
  RatFunc scale_arg(const GaussRational& k) const;
  /// r(p(x)) for a polynomial p
  RatFunc compose(const UniPoly& p) const;
  GaussRational eval(const GaussRational& t) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// Grammar text: "x^2 + 1", "(x + 1)/(x - 2)", "2/x".
  std::string to_string(char var = 'x') const;

 private:
  friend RatFunc reduce_ratfunc(UniPoly num, UniPoly den);
  RatFunc(UniPoly num, UniPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  UniPoly num_;
  UniPoly den_;
};

/// Cancels common factors and makes the denominator monic.
/// Throws DomainError when den = 0.
RatFunc reduce_ratfunc(UniPoly num, UniPoly den);

/// kappa with r = kappa * s when the ratio is constant, otherwise empty.
/// Decided by the polynomial identity r.num*s.den = kappa*s.num*r.den.
/// Throws DomainError when s = 0.
std::optional<GaussRational> is_constant_ratio(const RatFunc& r, const RatFunc& s);

}  // namespace cremona
