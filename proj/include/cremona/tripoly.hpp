#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "cremona/unipoly.hpp"

namespace cremona {

/// Exponent vector of a monomial x^e0 * y^e1 * z^e2.
using Exponents = std::array<std::uint32_t, 3>;

/// Sparse polynomial in x, y, z over Q(i).
///
/// Terms are kept in descending lexicographic order (x > y > z), so the first
/// term is the lex-leading one. Affine bivariate polynomials are the ones with
/// no z; homogeneous ones carry the projective triples of plane maps.
class TriPoly {
 public:
  using TermMap = std::map<Exponents, GaussRational, std::greater<>>;

  TriPoly() = default;
  explicit TriPoly(TermMap terms);

  static TriPoly constant(const GaussRational& c);
  static TriPoly monomial(const GaussRational& c, const Exponents& e);
  static TriPoly var(int v);
  /// Univariate p in the variable v.
  static TriPoly from_uni(const UniPoly& p, int v);
  /// Homogenisation of a univariate p(v) to total degree deg using the variable w.
  static TriPoly homogenize_uni(const UniPoly& p, int v, int w, int deg);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  GaussRational constant_term() const;
  GaussRational coeff(const Exponents& e) const;

  int total_degree() const;
  int degree_in(int v) const;
  bool is_homogeneous() const;
  bool depends_on(int v) const { return degree_in(v) > 0; }
  const std::pair<const Exponents, GaussRational>& leading_term() const;

  /// Componentwise minimum of the exponents of all terms.
  Exponents monomial_content() const;
  TriPoly divide_monomial(const Exponents& e) const;
  TriPoly multiply_monomial(const Exponents& e) const;

  TriPoly scaled(const GaussRational& s) const;
  /// Scaled so the lex-leading coefficient is 1.
  TriPoly normalized() const;
  TriPoly pow(int e) const;
  TriPoly derivative(int v) const;
  /// Substitutes the given polynomials for x, y, z.
  TriPoly substitute(const std::array<TriPoly, 3>& images) const;
  TriPoly swap_vars(int v, int w) const;
  /// z -> 1
  TriPoly dehomogenize() const;
  /// z^deg * p(x/z, y/z) for a z-free p of total degree <= deg.
  TriPoly homogenize(int deg) const;
  GaussRational eval(const std::array<GaussRational, 3>& point) const;
  /// Univariate view when only the variable v occurs.
  UniPoly to_uni(int v) const;

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }
  TriPoly operator-() const { return scaled(-1); }

  friend bool operator==(const TriPoly&, const TriPoly&) = default;

  /// Grammar text with graded-lex term order: "x^2*y - 3*z + 1".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Exact quotient a / b; throws DomainError if the division leaves a remainder.
TriPoly exact_div(const TriPoly& a, const TriPoly& b);

/// Normalized gcd (lex-leading coefficient 1). Throws DomainError when both are zero.
TriPoly gcd(const TriPoly& p, const TriPoly& q);

}  // namespace cremona
