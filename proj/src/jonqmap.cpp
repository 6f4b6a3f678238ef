#include "cremona/jonqmap.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

using PolyMatrix = std::array<UniPoly, 4>;

// Scales entries to polynomials with gcd 1 and the first nonzero entry monic.
PolyMatrix normalize(PolyMatrix m) {
  UniPoly g;
  for (const auto& e : m) {
    if (e.is_zero()) continue;
    g = g.is_zero() ? e.monic() : gcd(g, e);
    if (g.degree() == 0) break;
  }
  if (g.is_zero()) throw DomainError("zero fibre matrix");
  if (g.degree() > 0)
    for (auto& e : m) e = exact_div(e, g);
  for (const auto& e : m) {
    if (e.is_zero()) continue;
    const GaussRational inv = e.leading().inverse();
    if (!e.leading().is_one())
      for (auto& f : m) f = f.scaled(inv);
    break;
  }
  return m;
}

PolyMatrix clear_denominators(const JonqMap::Matrix& m) {
  UniPoly l = UniPoly::constant(1);
  for (const auto& e : m) {
    if (e.den().degree() == 0) continue;
    l = exact_div(l * e.den(), gcd(l, e.den()));
  }
  PolyMatrix out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = exact_div(m[k].num() * l, m[k].den());
  return out;
}

bool degenerate(const PolyMatrix& m) { return (m[0] * m[3] - m[1] * m[2]).is_zero(); }

// Entries p(eta(u)) over the common denominator (c*u + d)^D.
PolyMatrix substitute(const PolyMatrix& m, const Mobius& eta) {
  if (eta.is_identity()) return m;
  int top = 0;
  for (const auto& e : m) top = std::max(top, e.degree());
  const UniPoly num{eta.b(), eta.a()};
  const UniPoly den{eta.d(), eta.c()};
  std::vector<UniPoly> num_pow{UniPoly::constant(1)};
  std::vector<UniPoly> den_pow{UniPoly::constant(1)};
  for (int k = 1; k <= top; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  PolyMatrix out;
  for (std::size_t i = 0; i < 4; ++i) {
    const UniPoly& p = m[i];
    UniPoly acc;
    for (int k = 0; k <= p.degree(); ++k) {
      const auto& c = p.coeffs()[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      acc += (num_pow[static_cast<std::size_t>(k)] * den_pow[static_cast<std::size_t>(top - k)]).scaled(c);
    }
    out[i] = std::move(acc);
  }
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

JonqMap from_poly(const Mobius& eta, const PolyMatrix& m, Axis base) {
  return JonqMap(eta, {RatFunc(m[0]), RatFunc(m[1]), RatFunc(m[2]), RatFunc(m[3])}, base);
}

}  // namespace

JonqMap::JonqMap(Mobius eta, const Matrix& m, Axis base) : eta_(std::move(eta)), base_(base) {
  PolyMatrix p = clear_denominators(m);
  if (degenerate(p)) throw DomainError("fibre matrix is degenerate");
  m_ = normalize(std::move(p));
}

JonqMap JonqMap::identity(Axis base) { return JonqMap(Mobius(), {RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)}, base); }

JonqMap JonqMap::diagonal(const GaussRational& alpha, const GaussRational& beta, Axis base) {
  const bool x_base = base == Axis::X;
  return fiber_multiplier(Mobius::scaling(x_base ? alpha : beta), RatFunc(x_base ? beta : alpha), base);
}

JonqMap JonqMap::fiber_multiplier(const Mobius& eta, const RatFunc& a, Axis base) {
  return JonqMap(eta, {a, RatFunc(0), RatFunc(0), RatFunc(1)}, base);
}

JonqMap JonqMap::fiber_affine(const Mobius& eta, const RatFunc& a, const RatFunc& b, Axis base) {
  return JonqMap(eta, {a, b, RatFunc(0), RatFunc(1)}, base);
}

bool JonqMap::is_identity() const { return eta_.is_identity() && m_ == normalize({UniPoly{1}, {}, {}, UniPoly{1}}); }

std::optional<RatFunc> JonqMap::multiplier() const {
  if (!m_[1].is_zero() || !m_[2].is_zero()) return std::nullopt;
  return reduce_ratfunc(m_[0], m_[3]);
}

std::optional<std::pair<RatFunc, RatFunc>> JonqMap::fiber_affine_parts() const {
  if (!m_[2].is_zero()) return std::nullopt;
  return std::pair{reduce_ratfunc(m_[0], m_[3]), reduce_ratfunc(m_[1], m_[3])};
}

bool JonqMap::fiber_is_constant() const {
  return std::all_of(m_.begin(), m_.end(), [](const UniPoly& p) { return p.degree() <= 0; });
}

std::pair<BiRatFunc, BiRatFunc> JonqMap::affine() const {
  const int u = base_ == Axis::X ? 0 : 1;
  const int v = 1 - u;
  const BiRatFunc fu = BiRatFunc::from_ratfunc(eta_.as_ratfunc(), u);
  const TriPoly fiber = TriPoly::var(v);
  auto lift = [u](const UniPoly& p) { return TriPoly::from_uni(p, u); };
  // gcd(m11 v + m12, m21 v + m22) = 1 because the entries are coprime and det != 0.
  const BiRatFunc fv = BiRatFunc::coprime(lift(m_[0]) * fiber + lift(m_[1]), lift(m_[2]) * fiber + lift(m_[3]));
  if (base_ == Axis::X) return {fu, fv};
  return {fv, fu};
}

std::string JonqMap::to_string() const {
  auto [fx, fy] = affine();
  return "(" + fx.to_string() + ", " + fy.to_string() + ")";
}

JonqMap compose(const JonqMap& f, const JonqMap& g) {
  if (f.base() != g.base()) throw ShapeError("cannot compose de Jonquieres maps over different base axes");
  const PolyMatrix m = multiply(substitute(f.matrix(), g.eta()), g.matrix());
  return from_poly(compose(f.eta(), g.eta()), m, f.base());
}

JonqMap inverse(const JonqMap& f) {
  const Mobius eta_inv = invert(f.eta());
  const auto& m = f.matrix();
  const PolyMatrix adj{m[3], -m[1], -m[2], m[0]};
  return from_poly(eta_inv, substitute(adj, eta_inv), f.base());
}

ProjMap to_proj(const JonqMap& f) {
  auto [fx, fy] = f.affine();
  return homogenize_affine(fx, fy);
}

int degree(const JonqMap& f) { return to_proj(f).degree(); }

std::optional<JonqMap> rebase(const JonqMap& f, Axis target) {
  if (f.base() == target) return f;
  if (!f.fiber_is_constant()) return std::nullopt;
  const auto& m = f.matrix();
  const Mobius new_eta(m[0].coeff(0), m[1].coeff(0), m[2].coeff(0), m[3].coeff(0));
  const Mobius& e = f.eta();
  return JonqMap(new_eta, {RatFunc(e.a()), RatFunc(e.b()), RatFunc(e.c()), RatFunc(e.d())}, target);
}

namespace {

// fu must be Mobius in the base variable 0; fv of degree <= 1 in variable 1.
std::optional<JonqMap> recognise_x_base(const BiRatFunc& fu, const BiRatFunc& fv, Axis base) {
  auto eta_fn = fu.to_ratfunc(0);
  if (!eta_fn) return std::nullopt;
  auto eta = mobius_from_ratfunc(*eta_fn);
  if (!eta) return std::nullopt;
  if (fv.num().degree_in(1) > 1 || fv.den().degree_in(1) > 1) return std::nullopt;
  auto coeff_in_y = [](const TriPoly& p, std::uint32_t k) {
    TriPoly::TermMap t;
    for (const auto& [e, c] : p.terms())
      if (e[1] == k) t.emplace(Exponents{e[0], 0, 0}, c);
    return TriPoly(std::move(t)).to_uni(0);
  };
  const PolyMatrix m{coeff_in_y(fv.num(), 1), coeff_in_y(fv.num(), 0), coeff_in_y(fv.den(), 1),
                     coeff_in_y(fv.den(), 0)};
  if (degenerate(m)) return std::nullopt;
  return from_poly(*eta, m, base);
}

}  // namespace

std::optional<JonqMap> jonq_from_affine(const BiRatFunc& fx, const BiRatFunc& fy) {
  if (auto f = recognise_x_base(fx, fy, Axis::X)) return f;
  return recognise_x_base(fy.swap_xy(), fx.swap_xy(), Axis::Y);
}

}  // namespace cremona
