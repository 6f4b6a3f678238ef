#include "cremona/heisenberg.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include "cremona/errors.hpp"

namespace cremona::heisenberg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

RatFunc x_power(int e) {
  if (e >= 0) return RatFunc(UniPoly::monomial(1, e));
  return RatFunc(UniPoly::monomial(1, -e)).inverse();
}

Constraint nonzero(const std::string& name, const GaussRational& v) { return {name + " != 0", !v.is_zero(), v}; }
Constraint nonzero(const std::string& name, const RatFunc& r) { return {name + " != 0", !r.is_zero(), std::nullopt}; }
Constraint sign(int s) { return {"s in {-1, 1}", s == 1 || s == -1, GaussRational(s)}; }

// kappa(x) = c(delta*x)*d(x) / (c(x)*d(lambda*x)) for the pair
// (lambda*x, y*c(x)), (delta*x, y*d(x)).
std::optional<GaussRational> torus_ratio(const GaussRational& lambda, const RatFunc& c, const GaussRational& delta,
                                         const RatFunc& d) {
  return is_constant_ratio(c.scale_arg(delta) * d, c * d.scale_arg(lambda));
}

struct TorusShape {
  GaussRational lambda;
  RatFunc c;
  GaussRational delta;
  RatFunc d;
};

std::optional<TorusShape> torus_shape(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const TorusPM1& t) -> std::optional<TorusShape> {
            return TorusShape{1, x_power(t.s) * RatFunc(t.delta), t.gamma, t.a};
          },
          [](const TorusPM2& t) -> std::optional<TorusShape> {
            return TorusShape{1, x_power(2 * t.s) * RatFunc(t.delta), t.gamma, t.a};
          },
          [](const Order2& t) -> std::optional<TorusShape> {
            return TorusShape{-1, x_power(t.s) * RatFunc(t.delta), t.gamma, t.b};
          },
          [](const TorusGen& t) -> std::optional<TorusShape> { return TorusShape{t.lambda, t.c, t.delta, t.d}; },
          [](const auto&) -> std::optional<TorusShape> { return std::nullopt; },
      },
      spec);
}

// Conditions without which the pair cannot be built at all.
std::vector<Constraint> domain_constraints(const FamilySpec& spec) {
  return std::visit(
      Overloaded{
          [](const PGL3&) { return std::vector<Constraint>{}; },
          [](const ElemA& e) { return std::vector<Constraint>{nonzero("a", e.a), nonzero("alpha", e.alpha)}; },
          [](const ElemB& e) {
            return std::vector<Constraint>{nonzero("a", e.a), nonzero("alpha", e.alpha), nonzero("b", e.b),
                                           {"beta not in {0, 1}", !e.beta.is_zero() && !e.beta.is_one(), e.beta}};
          },
          [](const TorusPM1& t) {
            return std::vector<Constraint>{nonzero("delta", t.delta), nonzero("gamma", t.gamma), sign(t.s),
                                           nonzero("a", t.a)};
          },
          [](const TorusPM2& t) {
            return std::vector<Constraint>{nonzero("delta", t.delta), nonzero("gamma", t.gamma), sign(t.s),
                                           nonzero("a", t.a)};
          },
          [](const Order2& t) {
            return std::vector<Constraint>{nonzero("delta", t.delta), nonzero("gamma", t.gamma), sign(t.s),
                                           nonzero("b", t.b)};
          },
          [](const TorusGen& t) {
            const bool ok = !t.lambda.is_zero() && !t.lambda.is_one() && !(t.lambda == GaussRational(-1));
            return std::vector<Constraint>{{"lambda not in {0, 1, -1}", ok, t.lambda}, nonzero("delta", t.delta),
                                           nonzero("c", t.c), nonzero("d", t.d)};
          },
      },
      spec);
}

void require_domain(const FamilySpec& spec) {
  for (const auto& c : domain_constraints(spec))
    if (!c.satisfied) throw DomainError(variant_name(spec) + ": parameter constraint violated: " + c.name);
}

JonqMap elementary(const GaussRational& a, const UniPoly& q, const Mobius& eta) {
  return JonqMap::fiber_affine(eta, RatFunc(a), RatFunc(q), Axis::Y);
}

// Order of a Mobius matrix over Q(i)(u) in PGL(2); 0 when infinite. The
// eigenvalue ratio is a root of unity of order n exactly when
// t = tr^2/det = 2 + 2 cos(2 pi j / n), and t lies in Q(i) only for n in {1, 2, 3, 4, 6}.
int projective_order(const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d) {
  const bool scalar = b.is_zero() && c.is_zero() && a == d;
  if (scalar) return 1;
  const RatFunc tr = a + d;
  const auto t = (tr * tr / (a * d - b * c)).constant_value();
  if (!t) return 0;
  static const std::pair<long, int> table[] = {{0, 2}, {1, 3}, {2, 4}, {3, 6}};
  for (const auto& [value, order] : table)
    if (*t == GaussRational(value)) return order;
  return 0;
}

int mobius_order(const Mobius& m) {
  return projective_order(RatFunc(m.a()), RatFunc(m.b()), RatFunc(m.c()), RatFunc(m.d()));
}

int fibre_order(const JonqMap& h) {
  const auto& m = h.matrix();
  return projective_order(RatFunc(m[0]), RatFunc(m[1]), RatFunc(m[2]), RatFunc(m[3]));
}

std::string order_method_for_affine(const GaussRational& k) { return k.is_one() ? "translation" : "root-of-unity"; }

// Relations alpha^i*beta^j = 1 inside the box |i|, |j| <= bound. Rank 2 means
// h has finite order; rank 0 or 1 leaves a free direction.
std::string kernel_search(const GaussRational& alpha, const GaussRational& beta, int bound) {
  std::vector<GaussRational> pa, pb;
  for (int e = -bound; e <= bound; ++e) {
    pa.push_back(alpha.pow(e));
    pb.push_back(beta.pow(e));
  }
  std::optional<std::pair<int, int>> shortest;
  bool rank2 = false;
  for (int i = 0; i <= bound; ++i)
    for (int j = -bound; j <= bound; ++j) {
      if (i == 0 && j <= 0) continue;
      if (!(pa[static_cast<std::size_t>(i + bound)] * pb[static_cast<std::size_t>(j + bound)]).is_one()) continue;
      if (!shortest || std::abs(i) + std::abs(j) < std::abs(shortest->first) + std::abs(shortest->second)) {
        if (shortest && shortest->first * j != shortest->second * i) rank2 = true;
        shortest = {i, j};
      } else if (shortest->first * j != shortest->second * i) {
        rank2 = true;
      }
    }
  const std::string box = "relations alpha^i*beta^j = 1 with |i|, |j| <= " + std::to_string(bound);
  if (!shortest) return "no " + box;
  if (rank2) return box + " have rank 2";
  return box + " have rank 1, spanned by (" + std::to_string(shortest->first) + ", " +
         std::to_string(shortest->second) + ")";
}

OrderVerdict jonq_order(const JonqMap& h, int bound) {
  OrderVerdict v;
  if (h.is_identity()) {
    v.method = "identity";
    v.detail = "h is the identity";
    return v;
  }
  const Mobius& eta = h.eta();
  const int m = mobius_order(eta);
  if (m == 0) {
    v.value = true;
    v.method = eta.is_affine() ? order_method_for_affine(eta.a() / eta.d()) : "root-of-unity";
    v.detail = "action on the base " + eta.to_string(h.base() == Axis::X ? 'x' : 'y') + " has infinite order";
  } else {
    const JonqMap g = std::get<JonqMap>(power(BirMap(h), m));
    const int k = fibre_order(g);
    if (k == 0) {
      v.value = true;
      v.method = "root-of-unity";
      if (auto parts = g.fiber_affine_parts()) {
        const auto a = parts->first.constant_value();
        if (!a)
          v.method = "fiber-multiplier";
        else if (a->is_one())
          v.method = "translation";
      }
      v.detail = "fibre action of h^" + std::to_string(m) + " has infinite order";
    } else {
      v.method = "root-of-unity";
      v.detail = "h has order " + std::to_string(m * k);
    }
  }

  // Diagonal (alpha*x, beta*y): report the relation lattice within the bound.
  if (eta.is_affine() && eta.b().is_zero() && h.fiber_is_constant()) {
    if (auto mult = h.multiplier()) {
      v.bound = bound;
      v.detail += "; " + kernel_search(eta.a() / eta.d(), *mult->constant_value(), bound);
    }
  }
  return v;
}

}  // namespace

std::string variant_name(const FamilySpec& spec) {
  static const char* names[] = {"pgl3", "elem-a", "elem-b", "torus1", "torus2", "order2", "torus-gen"};
  return names[spec.index()];
}

std::pair<JonqMap, JonqMap> build_family(const FamilySpec& spec) {
  require_domain(spec);
  return std::visit(
      Overloaded{
          [](const PGL3& p) {
            auto shear = [](const GaussRational& s, const GaussRational& t) {
              return elementary(1, UniPoly{0, s}, Mobius::translation(t));
            };
            return std::pair{shear(p.alpha, p.beta), shear(p.gamma, p.delta)};
          },
          [](const ElemA& e) {
            return std::pair{elementary(e.a, e.Q, Mobius::translation(e.c)),
                             elementary(e.alpha, e.P, Mobius::translation(e.gamma))};
          },
          [](const ElemB& e) {
            const GaussRational shift = e.gamma * (e.b - 1) / (e.beta - 1);
            return std::pair{elementary(e.a, e.Q, Mobius::affine(e.b, shift)),
                             elementary(e.alpha, e.P, Mobius::affine(e.beta, e.gamma))};
          },
          [&spec](const auto&) {
            const TorusShape t = *torus_shape(spec);
            return std::pair{JonqMap::fiber_multiplier(Mobius::scaling(t.lambda), t.c),
                             JonqMap::fiber_multiplier(Mobius::scaling(t.delta), t.d)};
          },
      },
      spec);
}

std::vector<Constraint> check_family_constraints(const FamilySpec& spec) {
  std::vector<Constraint> out = domain_constraints(spec);
  const bool domain_ok = std::all_of(out.begin(), out.end(), [](const Constraint& c) { return c.satisfied; });
  if (const auto* p = std::get_if<PGL3>(&spec)) {
    const GaussRational det = p->alpha * p->delta - p->beta * p->gamma;
    out.push_back({"alpha*delta - beta*gamma = 1", det.is_one(), det});
  } else if (const auto* e = std::get_if<ElemB>(&spec)) {
    std::optional<GaussRational> c;
    if (domain_ok) c = e->gamma * (e->b - 1) / (e->beta - 1);
    out.push_back({"c = gamma*(b - 1)/(beta - 1)", c.has_value(), c});
  } else if (const auto* o = std::get_if<Order2>(&spec)) {
    std::optional<GaussRational> k;
    if (domain_ok) k = is_constant_ratio(o->b, o->b.scale_arg(-1));
    out.push_back({"b(x)/b(-x) constant", k.has_value(), k});
  } else if (std::holds_alternative<TorusGen>(spec)) {
    std::optional<GaussRational> k;
    if (domain_ok) {
      const TorusShape t = *torus_shape(spec);
      k = torus_ratio(t.lambda, t.c, t.delta, t.d);
    }
    out.push_back({"c(delta*x)*d(x)/(c(x)*d(lambda*x)) constant", k.has_value(), k});
  }
  return out;
}

GaussRational commutator_constant(const FamilySpec& spec) {
  const auto t = torus_shape(spec);
  if (!t) throw ShapeError("commutator constant is defined for the diagonal families only");
  require_domain(spec);
  const auto k = torus_ratio(t->lambda, t->c, t->delta, t->d);
  if (!k) throw DomainError("commutator multiplier is not constant");
  return *k;
}

OrderVerdict infinite_order(const BirMap& h, int bound) {
  if (const auto* j = std::get_if<JonqMap>(&h)) return jonq_order(*j, bound);
  OrderVerdict v;
  if (is_identity(h)) {
    v.method = "identity";
    v.detail = "h is the identity";
    return v;
  }
  v.method = "bounded-search";
  v.bound = bound;
  BirMap acc = h;
  for (int n = 2; n <= bound; ++n) {
    acc = compose(h, acc);
    if (is_identity(acc)) {
      v.detail = "h has order " + std::to_string(n);
      return v;
    }
  }
  v.value = true;
  v.detail = "h^n != id for 1 <= n <= " + std::to_string(bound);
  return v;
}

EmbeddingReport verify_embedding(const BirMap& f, const BirMap& g, const VerifyOptions& opts) {
  EmbeddingReport r;
  r.f = f;
  r.g = g;
  r.h = commutator(f, g);
  r.fh_commutes = map_equal(compose(f, r.h), compose(r.h, f));
  r.gh_commutes = map_equal(compose(g, r.h), compose(r.h, g));
  if (!r.fh_commutes) r.failed_relations.emplace_back("[f,h] = id");
  if (!r.gh_commutes) r.failed_relations.emplace_back("[g,h] = id");
  r.h_is_identity = is_identity(r.h);
  r.h_infinite_order = infinite_order(r.h, opts.relation_bound);
  r.faithful = r.fh_commutes && r.gh_commutes && r.h_infinite_order.value;

  if (opts.growth) {
    auto growth = [&opts](const BirMap& m) {
      const int n = opts.n_max > 0 ? opts.n_max : dynamics::default_n_max(m);
      try {
        return dynamics::growth_of(m, n, opts.caps, opts.thresholds);
      } catch (const CapExceeded&) {
        dynamics::GrowthReport gr;
        gr.truncated = true;
        return gr;
      }
    };
    r.growth_f = growth(f);
    r.growth_g = growth(g);
    r.growth_h = growth(r.h);
  }
  return r;
}

EmbeddingReport verify_family(const FamilySpec& spec, const VerifyOptions& opts) {
  auto [f, g] = build_family(spec);
  EmbeddingReport r = verify_embedding(f, g, opts);
  r.constraints = check_family_constraints(spec);
  return r;
}

ClaimSolution claim_solve(const Mobius& mu, const GaussRational& lambda_sq, int max_deg) {
  if (!mu.is_affine()) throw ShapeError("mu must be affine, x -> gamma + lambda*x");
  if (lambda_sq.is_zero() || lambda_sq.is_one()) throw DomainError("lambda^2 must avoid 0 and 1");
  if (max_deg < 1) throw DomainError("max_deg must be at least 1");

  // Column j holds the coefficients of mu(x)^j - lambda_sq*x^j.
  const auto n = static_cast<std::size_t>(max_deg) + 1;
  const auto [k, t] = mu.affine_parts();
  const UniPoly lin{t, k};
  std::vector<std::vector<GaussRational>> a(n, std::vector<GaussRational>(n));
  UniPoly pw = UniPoly::constant(1);
  for (std::size_t j = 0; j < n; ++j) {
    const UniPoly col = pw - UniPoly::monomial(lambda_sq, static_cast<int>(j));
    for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeff(static_cast<int>(i));
    pw *= lin;
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    const GaussRational inv = a[row][col].inverse();
    for (auto& e : a[row]) e *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const GaussRational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }

  std::vector<std::vector<GaussRational>> null;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<GaussRational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    null.push_back(std::move(v));
  }

  // Canonical basis: distinct leading degrees, monic, each leading degree
  // eliminated from the other elements.
  std::vector<UniPoly> basis;
  for (auto& v : null) basis.emplace_back(std::move(v));
  std::sort(basis.begin(), basis.end(), [](const UniPoly& l, const UniPoly& r) { return l.degree() > r.degree(); });
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::sort(basis.begin() + static_cast<long>(i), basis.end(),
              [](const UniPoly& l, const UniPoly& r) { return l.degree() > r.degree(); });
    basis[i] = basis[i].monic();
    const int d = basis[i].degree();
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j == i) continue;
      const GaussRational c = basis[j].coeff(d);
      if (!c.is_zero()) basis[j] -= basis[i].scaled(c);
    }
  }
  std::reverse(basis.begin(), basis.end());

  ClaimSolution s;
  s.dimension = static_cast<int>(basis.size());
  s.basis = std::move(basis);
  s.max_degree_searched = max_deg;
  return s;
}

std::array<bool, 5> relation_system_check(const RelationSystem& r) {
  const Mobius scale_gamma = Mobius::scaling(r.gamma);
  const Mobius scale_lambda = Mobius::scaling(r.lambda);
  return {
      r.a == r.a.scale_arg(r.gamma),
      r.b == r.b.scale_arg(r.gamma),
      compose(r.mu, scale_gamma) == compose(scale_gamma, r.mu),
      compose(scale_lambda, r.mu) == compose(scale_gamma, compose(r.mu, scale_lambda)),
      r.b * apply(r.mu, r.a) == RatFunc(r.beta) * r.a * r.b.scale_arg(r.lambda),
  };
}

RelationSystem relation_system_from_maps(const JonqMap& f, const JonqMap& g, const JonqMap& h) {
  auto x_based = [](const JonqMap& m, const char* name) {
    auto r = rebase(m, Axis::X);
    if (!r) throw ShapeError(std::string(name) + " must preserve the lines x = const");
    return *r;
  };
  const JonqMap fx = x_based(f, "f");
  const JonqMap gx = x_based(g, "g");
  const JonqMap hx = x_based(h, "h");
  auto scaling_of = [](const JonqMap& m, const char* name) {
    const Mobius& e = m.eta();
    if (!e.is_affine() || !e.b().is_zero()) throw ShapeError(std::string(name) + " must act on x by scaling");
    return e.a() / e.d();
  };
  auto multiplier_of = [](const JonqMap& m, const char* name) {
    auto a = m.multiplier();
    if (!a) throw ShapeError(std::string(name) + " must act on y by multiplication");
    return *a;
  };
  RelationSystem r;
  r.lambda = scaling_of(fx, "f");
  r.a = multiplier_of(fx, "f");
  r.mu = gx.eta();
  r.b = multiplier_of(gx, "g");
  r.gamma = scaling_of(hx, "h");
  const auto beta = multiplier_of(hx, "h").constant_value();
  if (!beta) throw ShapeError("h must act on y by a constant multiplier");
  r.beta = *beta;
  return r;
}

bool in_power_subfield(const RatFunc& r, int k) {
  if (k <= 1) return true;
  auto ok = [k](const UniPoly& p) {
    for (int e = 0; e <= p.degree(); ++e)
      if (!p.coeff(e).is_zero() && e % k != 0) return false;
    return true;
  };
  return ok(r.num()) && ok(r.den());
}

CentralizerVerdict centralizer_check(const JonqMap& phi_in, const JonqMap& h_in) {
  auto hx = rebase(h_in, Axis::X);
  if (!hx) throw ShapeError("h must be (alpha*x, beta*y) or (alpha*x, y + 1)");
  const JonqMap& h = *hx;
  const Mobius& eta_h = h.eta();
  if (!eta_h.is_affine() || !eta_h.b().is_zero()) throw ShapeError("h must act on x by scaling");
  const GaussRational alpha = eta_h.a() / eta_h.d();
  const auto parts = h.fiber_affine_parts();
  const auto fa = parts ? parts->first.constant_value() : std::nullopt;
  const auto fb = parts ? parts->second.constant_value() : std::nullopt;
  if (!fa || !fb) throw ShapeError("h must be (alpha*x, beta*y) or (alpha*x, y + 1)");
  const bool diagonal = fb->is_zero();
  if (!diagonal && !(fa->is_one() && fb->is_one()))
    throw ShapeError("h must be (alpha*x, beta*y) or (alpha*x, y + 1)");

  const int k = root_of_unity_order(alpha);
  if (k == 0) throw DomainError("alpha must have multiplicative order 1, 2 or 4");

  CentralizerVerdict v;
  v.k = k;
  const BirMap phi(phi_in);
  v.commutes = map_equal(compose(phi, BirMap(h)), compose(BirMap(h), phi));

  const auto phix = rebase(phi_in, Axis::X);
  if (!phix) {
    v.detail = "phi does not preserve the lines x = const";
    return v;
  }
  const Mobius scale = Mobius::scaling(alpha);
  const bool eta_ok = compose(phix->eta(), scale) == compose(scale, phix->eta());
  bool fibre_ok = false;
  if (diagonal) {
    if (auto a = phix->multiplier()) fibre_ok = in_power_subfield(*a, k);
  } else if (auto p = phix->fiber_affine_parts()) {
    fibre_ok = p->first.is_constant() && p->first.constant_value()->is_one() && in_power_subfield(p->second, k);
  }
  v.structural = eta_ok && fibre_ok;
  const std::string power = k == 1 ? "x" : "x^" + std::to_string(k);
  if (!eta_ok)
    v.detail = "eta(alpha*x) != alpha*eta(x)";
  else if (!fibre_ok)
    v.detail = diagonal ? "multiplier not in Q(i)(" + power + ")" : "fibre part not y + a(x) with a in Q(i)(" + power + ")";
  else
    v.detail = diagonal ? "(eta(x), y*a(" + power + "))" : "(eta(x), y + a(" + power + "))";
  return v;
}

}  // namespace cremona::heisenberg
