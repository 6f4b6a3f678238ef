#pragma once

#include <optional>
#include <string>

#include "cremona/ratfunc.hpp"
#include "cremona/tripoly.hpp"

namespace cremona {

/// Reduced rational function in the affine coordinates x, y (no z).
/// gcd(num, den) = 1 and the lex-leading coefficient of den is 1.
class BiRatFunc {
 public:
  BiRatFunc() : den_(TriPoly::constant(1)) {}
  BiRatFunc(TriPoly p);  // NOLINT
  BiRatFunc(const GaussRational& c) : BiRatFunc(TriPoly::constant(c)) {}  // NOLINT
  BiRatFunc(TriPoly num, TriPoly den);

  static BiRatFunc var(int v) { return BiRatFunc(TriPoly::var(v)); }
  /// Skips the gcd; the caller guarantees num and den are coprime.
  static BiRatFunc coprime(TriPoly num, TriPoly den);
  /// r(t) for t = x (v = 0) or t = y (v = 1).
  static BiRatFunc from_ratfunc(const RatFunc& r, int v);

  const TriPoly& num() const noexcept { return num_; }
  const TriPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool depends_on(int v) const { return num_.depends_on(v) || den_.depends_on(v); }
  std::optional<GaussRational> constant_value() const;
  /// Univariate view when only the variable v occurs.
  std::optional<RatFunc> to_ratfunc(int v) const;

  BiRatFunc pow(int e) const;
  BiRatFunc derivative(int v) const;
  BiRatFunc swap_xy() const;

  BiRatFunc& operator+=(const BiRatFunc& o);
  BiRatFunc& operator-=(const BiRatFunc& o);
  BiRatFunc& operator*=(const BiRatFunc& o);
  BiRatFunc& operator/=(const BiRatFunc& o);
  friend BiRatFunc operator+(BiRatFunc a, const BiRatFunc& b) { return a += b; }
  friend BiRatFunc operator-(BiRatFunc a, const BiRatFunc& b) { return a -= b; }
  friend BiRatFunc operator*(BiRatFunc a, const BiRatFunc& b) { return a *= b; }
  friend BiRatFunc operator/(BiRatFunc a, const BiRatFunc& b) { return a /= b; }
  BiRatFunc operator-() const;

  friend bool operator==(const BiRatFunc&, const BiRatFunc&) = default;

  /// Grammar text: "2*x*y", "y/x", "(x^2 + y)/(x + 1)".
  std::string to_string() const;

 private:
  struct Reduced {};
  BiRatFunc(TriPoly num, TriPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  TriPoly num_;
  TriPoly den_;
};

}  // namespace cremona
