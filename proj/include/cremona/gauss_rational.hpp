#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace cremona {

/// An element re + im*i of the Gaussian rationals Q(i).
///
/// Both parts are arbitrary-precision rationals kept in lowest terms with
/// positive denominators, so equality is structural.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long n) : re_(n) {}  // NOLINT: integer literals read naturally
  GaussRational(mpq_class re, mpq_class im = 0);

  static GaussRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussRational fraction(long num, long den);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;
  GaussRational pow(long e) const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);
  /// *this += a * b without temporaries; the hot loop of polynomial products.
  void add_product(const GaussRational& a, const GaussRational& b);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  GaussRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Text in the map grammar: "3/2", "-i", "1 + 2*i", "-1/3*i".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& q);

/// True iff q^n = 1 for some n >= 1. In Q(i) these are exactly 1, -1, i, -i.
/// Throws DomainError for q = 0.
bool is_root_of_unity(const GaussRational& q);

/// Multiplicative order of a root of unity (1, 2 or 4); 0 when q has infinite order.
int root_of_unity_order(const GaussRational& q);

}  // namespace cremona
