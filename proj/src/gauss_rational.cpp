#include "cremona/gauss_rational.hpp"

#include <functional>
#include <ostream>

#include "cremona/errors.hpp"

namespace cremona {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::fraction(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return {q, 0};
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (is_real()) return {1 / re_, 0};
  mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussRational GaussRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussRational result(1);
  GaussRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

bool is_integer(const mpq_class& q) { return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0; }

}  // namespace

void GaussRational::add_product(const GaussRational& a, const GaussRational& b) {
  if (!a.is_real() || !b.is_real()) {
    *this += a * b;
    return;
  }
  if (is_integer(a.re_) && is_integer(b.re_) && is_integer(re_)) {
    mpz_addmul(mpq_numref(re_.get_mpq_t()), mpq_numref(a.re_.get_mpq_t()), mpq_numref(b.re_.get_mpq_t()));
    return;
  }
  thread_local mpq_class t;
  mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
  mpq_add(re_.get_mpq_t(), re_.get_mpq_t(), t.get_mpq_t());
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

namespace {

std::string magnitude(const mpq_class& q) {
  mpq_class a = abs(q);
  return a.get_str();
}

}  // namespace

std::string GaussRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();
  std::string imag;
  if (abs(im_) == 1) {
    imag = "i";
  } else {
    imag = magnitude(im_) + "*i";
  }
  if (!has_re) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + imag;
}

std::size_t GaussRational::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str()) * 31 + h(im_.get_str());
}

std::ostream& operator<<(std::ostream& os, const GaussRational& q) { return os << q.to_string(); }

int root_of_unity_order(const GaussRational& q) {
  if (q.is_zero()) throw DomainError("root-of-unity test on zero");
  if (q.is_real()) {
    if (q.re() == 1) return 1;
    if (q.re() == -1) return 2;
    return 0;
  }
  if (sgn(q.re()) == 0 && abs(q.im()) == 1) return 4;
  return 0;
}

bool is_root_of_unity(const GaussRational& q) { return root_of_unity_order(q) != 0; }

}  // namespace cremona
