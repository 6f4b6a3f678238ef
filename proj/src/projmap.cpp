#include "cremona/projmap.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {

ProjMap::ProjMap(std::array<TriPoly, 3> components) : p_(std::move(components)) {
  int deg = -1;
  for (const auto& c : p_) {
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw ShapeError("projective component is not homogeneous");
    const int d = c.total_degree();
    if (deg >= 0 && d != deg) throw ShapeError("projective components have different degrees");
    deg = d;
  }
  if (deg < 0) throw DomainError("projective map with all components zero");

  if (deg > 0) {
    // Smallest components first: a monomial component makes the gcd cheap.
    std::array<const TriPoly*, 3> order{&p_[0], &p_[1], &p_[2]};
    std::sort(order.begin(), order.end(), [](const TriPoly* a, const TriPoly* b) { return a->size() < b->size(); });
    TriPoly g;
    for (const TriPoly* cp : order) {
      const TriPoly& c = *cp;
      if (c.is_zero()) continue;
      g = g.is_zero() ? c : gcd(g, c);
      if (g.is_constant()) break;
    }
    if (!g.is_constant()) {
      for (auto& c : p_)
        if (!c.is_zero()) c = exact_div(c, g);
      deg -= g.total_degree();
    }
  }
  if (deg < 1) throw DomainError("projective map is constant");
  degree_ = deg;

  for (const auto& c : p_) {
    if (c.is_zero()) continue;
    const GaussRational lead = c.leading_term().second;
    if (!lead.is_one()) {
      const GaussRational inv = lead.inverse();
      for (auto& d : p_) d = d.scaled(inv);
    }
    break;
  }
}

ProjMap ProjMap::identity() { return ProjMap({TriPoly::var(0), TriPoly::var(1), TriPoly::var(2)}); }

std::size_t ProjMap::term_count() const noexcept { return p_[0].size() + p_[1].size() + p_[2].size(); }

std::string ProjMap::to_string() const {
  return "[" + p_[0].to_string() + " : " + p_[1].to_string() + " : " + p_[2].to_string() + "]";
}

ProjMap homogenize_affine(const BiRatFunc& fx, const BiRatFunc& fy) {
  auto homog = [](const BiRatFunc& f) {
    const int e = std::max(f.num().total_degree(), f.den().total_degree());
    return std::pair{f.num().homogenize(std::max(e, 0)), f.den().homogenize(e)};
  };
  auto [a0, b0] = homog(fx);
  auto [a1, b1] = homog(fy);
  // Over the common denominator lcm(b0, b1): (a0*l/b0 : a1*l/b1 : l).
  const TriPoly g = gcd(b0, b1);
  const TriPoly c0 = exact_div(b1, g);
  const TriPoly c1 = exact_div(b0, g);
  return ProjMap({a0 * c0, a1 * c1, b0 * c0});
}

ProjMap proj_from_affine(const BiRatFunc& fx, const BiRatFunc& fy) {
  if (fx.is_constant() && fy.is_constant()) throw DomainError("constant map");
  const BiRatFunc jac = fx.derivative(0) * fy.derivative(1) - fx.derivative(1) * fy.derivative(0);
  if (jac.is_zero()) throw ShapeError("not birational-looking: Jacobian determinant vanishes identically");
  return homogenize_affine(fx, fy);
}

ProjMap compose(const ProjMap& f, const ProjMap& g) {
  std::array<TriPoly, 3> out;
  for (std::size_t k = 0; k < 3; ++k) out[k] = f[k].substitute(g.components());
  if (out[0].is_zero() && out[1].is_zero() && out[2].is_zero())
    throw DomainError("composition is identically zero");
  return ProjMap(std::move(out));
}

bool proj_equal(const ProjMap& f, const ProjMap& g) {
  if (f.degree() != g.degree()) return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!(f[i] * g[j] - f[j] * g[i]).is_zero()) return false;
  return true;
}

bool is_identity(const ProjMap& f) { return proj_equal(f, ProjMap::identity()); }

std::array<std::array<GaussRational, 3>, 3> linear_matrix(const ProjMap& f) {
  if (f.degree() != 1) throw ShapeError("map is not linear");
  std::array<std::array<GaussRational, 3>, 3> m;
  for (std::size_t i = 0; i < 3; ++i) {
    m[i][0] = f[i].coeff({1, 0, 0});
    m[i][1] = f[i].coeff({0, 1, 0});
    m[i][2] = f[i].coeff({0, 0, 1});
  }
  return m;
}

ProjMap invert_linear(const ProjMap& f) {
  if (f.degree() != 1) throw InverseUnavailable("inverse is only available for linear projective maps");
  const auto m = linear_matrix(f);
  auto minor = [&m](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  // adj(m)[i][j] = (-1)^(i+j) * minor(j, i)
  std::array<std::array<GaussRational, 3>, 3> adj;
  const std::size_t others[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      GaussRational v = minor(others[j][0], others[j][1], others[i][0], others[i][1]);
      adj[i][j] = (i + j) % 2 == 0 ? v : -v;
    }
  GaussRational det;
  for (std::size_t j = 0; j < 3; ++j) det += m[0][j] * adj[j][0];
  if (det.is_zero()) throw InverseUnavailable("linear map is degenerate");
  std::array<TriPoly, 3> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i] += TriPoly::var(static_cast<int>(j)).scaled(adj[i][j]);
  return ProjMap(std::move(out));
}

}  // namespace cremona
