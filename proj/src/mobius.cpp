#include "cremona/mobius.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {

Mobius::Mobius(GaussRational a, GaussRational b, GaussRational c, GaussRational d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (det().is_zero()) throw DomainError("degenerate Mobius matrix");
  for (const auto& e : m_) {
    if (e.is_zero()) continue;
    if (!e.is_one()) {
      const GaussRational inv = e.inverse();
      for (auto& f : m_) f *= inv;
    }
    break;
  }
}

bool Mobius::is_identity() const { return *this == Mobius(); }

std::pair<GaussRational, GaussRational> Mobius::affine_parts() const {
  if (!is_affine()) throw ShapeError("Mobius map is not affine");
  const GaussRational inv = m_[3].inverse();
  return {m_[0] * inv, m_[1] * inv};
}

RatFunc Mobius::as_ratfunc() const {
  return reduce_ratfunc(UniPoly{m_[1], m_[0]}, UniPoly{m_[3], m_[2]});
}

std::string Mobius::to_string(char var) const { return as_ratfunc().to_string(var); }

Mobius compose(const Mobius& m1, const Mobius& m2) {
  return {m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
          m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d()};
}

Mobius invert(const Mobius& m) { return {m.d(), -m.b(), -m.c(), m.a()}; }

RatFunc apply(const Mobius& m, const RatFunc& r) {
  if (r.is_constant()) return r;
  if (m.is_affine()) {
    auto [k, t] = m.affine_parts();
    return r.compose(UniPoly{t, k});
  }
  // Homogenise: p((ax+b)/(cx+d)) * (cx+d)^n for n = max(deg num, deg den).
  const UniPoly top{m.b(), m.a()};
  const UniPoly bottom{m.d(), m.c()};
  const int n = std::max(r.num().degree(), r.den().degree());
  auto homog = [&](const UniPoly& p) {
    UniPoly acc;
    UniPoly top_pow = UniPoly::constant(1);
    for (int k = 0; k <= p.degree(); ++k) {
      const GaussRational& c = p.coeffs()[static_cast<std::size_t>(k)];
      if (!c.is_zero()) acc += (top_pow * bottom.pow(n - k)).scaled(c);
      top_pow *= top;
    }
    return acc;
  };
  return reduce_ratfunc(homog(r.num()), homog(r.den()));
}

RatFunc image(const Mobius& m, const RatFunc& r) {
  // (a*r + b)/(c*r + d) with r = p/q gives (a*p + b*q)/(c*p + d*q)
  const UniPoly& p = r.num();
  const UniPoly& q = r.den();
  return reduce_ratfunc(p.scaled(m.a()) + q.scaled(m.b()), p.scaled(m.c()) + q.scaled(m.d()));
}

std::optional<Mobius> mobius_from_ratfunc(const RatFunc& r) {
  if (r.num().degree() > 1 || r.den().degree() > 1) return std::nullopt;
  const GaussRational a = r.num().coeff(1), b = r.num().coeff(0);
  const GaussRational c = r.den().coeff(1), d = r.den().coeff(0);
  if ((a * d - b * c).is_zero()) return std::nullopt;
  return Mobius(a, b, c, d);
}

}  // namespace cremona
