#include "cremona/ratfunc.hpp"

#include "cremona/errors.hpp"

namespace cremona {

RatFunc::RatFunc(UniPoly p) : num_(std::move(p)), den_(UniPoly::constant(1)) {}

RatFunc::RatFunc(const GaussRational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}

RatFunc reduce_ratfunc(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  if (den.degree() > 0 && num.degree() > 0) {
    UniPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const GaussRational lead = den.leading();
  if (!lead.is_one()) {
    const GaussRational inv = lead.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

std::optional<GaussRational> RatFunc::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  return reduce_ratfunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(e), den_.pow(e), 0);
}

RatFunc RatFunc::scale_arg(const GaussRational& k) const {
  if (k.is_zero()) throw DomainError("scaling argument by zero");
  auto scale = [&k](const UniPoly& p) {
    std::vector<GaussRational> c = p.coeffs();
    GaussRational f(1);
    for (auto& a : c) {
      a *= f;
      f *= k;
    }
    return UniPoly(std::move(c));
  };
  return reduce_ratfunc(scale(num_), scale(den_));
}

RatFunc RatFunc::compose(const UniPoly& p) const {
  return reduce_ratfunc(num_.compose(p), den_.compose(p));
}

GaussRational RatFunc::eval(const GaussRational& t) const {
  GaussRational d = den_.eval(t);
  if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
  return num_.eval(t) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) return *this = reduce_ratfunc(num_ + o.num_, den_);
  return *this = reduce_ratfunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) return *this = reduce_ratfunc(num_ - o.num_, den_);
  return *this = reduce_ratfunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_polynomial() && o.is_polynomial()) return *this = RatFunc(num_ * o.num_);
  return *this = reduce_ratfunc(num_ * o.num_, den_ * o.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  return *this = reduce_ratfunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

std::string RatFunc::to_string(char var) const {
  if (is_polynomial()) return num_.to_string(var);
  auto wrap = [var](const UniPoly& p) {
    std::string s = p.to_string(var);
    int terms = 0;
    for (const auto& c : p.coeffs()) terms += c.is_zero() ? 0 : 1;
    const bool single = terms == 1 && (p.leading().is_real() || sgn(p.leading().re()) == 0);
    return single ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::optional<GaussRational> is_constant_ratio(const RatFunc& r, const RatFunc& s) {
  if (s.is_zero()) throw DomainError("constant-ratio test against the zero function");
  UniPoly lhs = r.num() * s.den();
  UniPoly rhs = s.num() * r.den();
  if (lhs.is_zero()) return GaussRational(0);
  if (lhs.degree() != rhs.degree()) return std::nullopt;
  GaussRational kappa = lhs.leading() / rhs.leading();
  if (lhs - rhs.scaled(kappa) == UniPoly{}) return kappa;
  return std::nullopt;
}

}  // namespace cremona
