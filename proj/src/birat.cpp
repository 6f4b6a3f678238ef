#include "cremona/birat.hpp"

#include "cremona/errors.hpp"

namespace cremona {

BiRatFunc::BiRatFunc(TriPoly p) : num_(std::move(p)), den_(TriPoly::constant(1)) {
  if (num_.depends_on(2)) throw ShapeError("affine rational function may not involve z");
}

BiRatFunc::BiRatFunc(TriPoly num, TriPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.depends_on(2) || den.depends_on(2)) throw ShapeError("affine rational function may not involve z");
  if (num.is_zero()) {
    num_ = TriPoly();
    den_ = TriPoly::constant(1);
    return;
  }
  if (!den.is_constant()) {
    TriPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  const GaussRational lead = den.leading_term().second;
  if (!lead.is_one()) {
    const GaussRational inv = lead.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

BiRatFunc BiRatFunc::coprime(TriPoly num, TriPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) return BiRatFunc();
  const GaussRational lead = den.leading_term().second;
  if (lead.is_one()) return BiRatFunc(std::move(num), std::move(den), Reduced{});
  const GaussRational inv = lead.inverse();
  return BiRatFunc(num.scaled(inv), den.scaled(inv), Reduced{});
}

BiRatFunc BiRatFunc::from_ratfunc(const RatFunc& r, int v) {
  return BiRatFunc(TriPoly::from_uni(r.num(), v), TriPoly::from_uni(r.den(), v), Reduced{});
}

std::optional<GaussRational> BiRatFunc::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_term() / den_.constant_term();
}

std::optional<RatFunc> BiRatFunc::to_ratfunc(int v) const {
  const int other = 1 - v;
  if (depends_on(other)) return std::nullopt;
  return reduce_ratfunc(num_.to_uni(v), den_.to_uni(v));
}

BiRatFunc BiRatFunc::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("negative power of zero");
    return BiRatFunc(den_, num_).pow(-e);
  }
  return BiRatFunc(num_.pow(e), den_.pow(e), Reduced{});
}

BiRatFunc BiRatFunc::derivative(int v) const {
  if (den_.is_constant()) return BiRatFunc(num_.derivative(v).scaled(den_.constant_term().inverse()));
  return BiRatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

BiRatFunc BiRatFunc::swap_xy() const { return BiRatFunc(num_.swap_vars(0, 1), den_.swap_vars(0, 1)); }

BiRatFunc& BiRatFunc::operator+=(const BiRatFunc& o) {
  if (den_ == o.den_) return *this = BiRatFunc(num_ + o.num_, den_);
  return *this = BiRatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BiRatFunc& BiRatFunc::operator-=(const BiRatFunc& o) {
  if (den_ == o.den_) return *this = BiRatFunc(num_ - o.num_, den_);
  return *this = BiRatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BiRatFunc& BiRatFunc::operator*=(const BiRatFunc& o) {
  return *this = BiRatFunc(num_ * o.num_, den_ * o.den_);
}

BiRatFunc& BiRatFunc::operator/=(const BiRatFunc& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  return *this = BiRatFunc(num_ * o.den_, den_ * o.num_);
}

BiRatFunc BiRatFunc::operator-() const { return BiRatFunc(-num_, den_, Reduced{}); }

std::string BiRatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const TriPoly& p) {
    std::string s = p.to_string();
    const bool single = p.is_monomial() &&
                        (p.leading_term().second.is_real() || sgn(p.leading_term().second.re()) == 0);
    return single ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace cremona
