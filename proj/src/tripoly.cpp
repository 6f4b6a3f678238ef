#include "cremona/tripoly.hpp"

#include <algorithm>
#include <vector>

#include "cremona/errors.hpp"
#include "term_format.hpp"

namespace cremona {

namespace {

Exponents add_exp(const Exponents& a, const Exponents& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

bool divides(const Exponents& a, const Exponents& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

int exp_degree(const Exponents& e) { return static_cast<int>(e[0] + e[1] + e[2]); }

void accumulate(TriPoly::TermMap& m, const Exponents& e, const GaussRational& c) {
  auto [it, inserted] = m.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

}  // namespace

TriPoly::TriPoly(TermMap terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

TriPoly TriPoly::constant(const GaussRational& c) { return monomial(c, {0, 0, 0}); }

TriPoly TriPoly::monomial(const GaussRational& c, const Exponents& e) {
  TriPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

TriPoly TriPoly::var(int v) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(1, e);
}

TriPoly TriPoly::from_uni(const UniPoly& p, int v) {
  TriPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(k);
    out.terms_.emplace(e, c);
  }
  return out;
}

TriPoly TriPoly::homogenize_uni(const UniPoly& p, int v, int w, int deg) {
  if (p.degree() > deg) throw DomainError("homogenisation degree below polynomial degree");
  TriPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const auto& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Exponents e{0, 0, 0};
    e[static_cast<std::size_t>(v)] += static_cast<std::uint32_t>(k);
    e[static_cast<std::size_t>(w)] += static_cast<std::uint32_t>(deg - k);
    out.terms_.emplace(e, c);
  }
  return out;
}

bool TriPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

GaussRational TriPoly::constant_term() const { return coeff({0, 0, 0}); }

GaussRational TriPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRational(0) : it->second;
}

int TriPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_degree(e));
  return d;
}

int TriPoly::degree_in(int v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[static_cast<std::size_t>(v)]));
  return d;
}

bool TriPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = exp_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return exp_degree(kv.first) == d; });
}

const std::pair<const Exponents, GaussRational>& TriPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return *terms_.begin();
}

Exponents TriPoly::monomial_content() const {
  if (terms_.empty()) return {0, 0, 0};
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < 3; ++k) m[k] = std::min(m[k], e[k]);
  return m;
}

TriPoly TriPoly::divide_monomial(const Exponents& d) const {
  if (d == Exponents{0, 0, 0}) return *this;
  TriPoly out;
  for (const auto& [e, c] : terms_) {
    if (!divides(d, e)) throw DomainError("monomial division is not exact");
    out.terms_.emplace_hint(out.terms_.end(), Exponents{e[0] - d[0], e[1] - d[1], e[2] - d[2]}, c);
  }
  return out;
}

TriPoly TriPoly::multiply_monomial(const Exponents& d) const {
  if (d == Exponents{0, 0, 0}) return *this;
  TriPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), add_exp(e, d), c);
  return out;
}

TriPoly TriPoly::scaled(const GaussRational& s) const {
  if (s.is_zero()) return {};
  if (s.is_one()) return *this;
  TriPoly out = *this;
  for (auto& [e, c] : out.terms_) c *= s;
  return out;
}

TriPoly TriPoly::normalized() const {
  if (terms_.empty()) return *this;
  const GaussRational& lead = terms_.begin()->second;
  return lead.is_one() ? *this : scaled(lead.inverse());
}

TriPoly TriPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative power of a polynomial");
  if (is_monomial()) {
    const auto& [ex, c] = *terms_.begin();
    const auto k = static_cast<std::uint32_t>(e);
    return monomial(c.pow(e), {ex[0] * k, ex[1] * k, ex[2] * k});
  }
  TriPoly result = constant(1);
  TriPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

TriPoly TriPoly::derivative(int v) const {
  TriPoly out;
  const auto k = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponents f = e;
    f[k] -= 1;
    out.terms_.emplace(f, c * GaussRational(static_cast<long>(e[k])));
  }
  return out;
}

TriPoly TriPoly::substitute(const std::array<TriPoly, 3>& images) const {
  std::array<std::vector<TriPoly>, 3> powers;
  for (std::size_t k = 0; k < 3; ++k) powers[k].push_back(constant(1));
  auto power = [&](std::size_t k, std::uint32_t n) -> const TriPoly& {
    auto& cache = powers[k];
    while (cache.size() <= n) cache.push_back(cache.back() * images[k]);
    return cache[n];
  };
  TermMap acc;
  for (const auto& [e, c] : terms_) {
    TriPoly t = power(0, e[0]) * power(1, e[1]);
    t = t * power(2, e[2]);
    for (const auto& [f, d] : t.terms_) accumulate(acc, f, c * d);
  }
  TriPoly out;
  out.terms_ = std::move(acc);
  return out;
}

TriPoly TriPoly::swap_vars(int v, int w) const {
  TriPoly out;
  for (const auto& [exps, c] : terms_) {
    Exponents e = exps;
    std::swap(e[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(w)]);
    out.terms_.emplace(e, c);
  }
  return out;
}

TriPoly TriPoly::dehomogenize() const {
  TermMap acc;
  for (const auto& [e, c] : terms_) accumulate(acc, {e[0], e[1], 0}, c);
  TriPoly out;
  out.terms_ = std::move(acc);
  return out;
}

TriPoly TriPoly::homogenize(int deg) const {
  TriPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[2] != 0) throw DomainError("homogenize expects a polynomial without z");
    const int d = exp_degree(e);
    if (d > deg) throw DomainError("homogenisation degree below polynomial degree");
    out.terms_.emplace(Exponents{e[0], e[1], static_cast<std::uint32_t>(deg - d)}, c);
  }
  return out;
}

GaussRational TriPoly::eval(const std::array<GaussRational, 3>& point) const {
  GaussRational acc;
  for (const auto& [e, c] : terms_)
    acc += c * point[0].pow(e[0]) * point[1].pow(e[1]) * point[2].pow(e[2]);
  return acc;
}

UniPoly TriPoly::to_uni(int v) const {
  std::vector<GaussRational> c;
  for (const auto& [e, a] : terms_) {
    for (std::size_t k = 0; k < 3; ++k)
      if (static_cast<int>(k) != v && e[k] != 0) throw ShapeError("polynomial is not univariate");
    const std::size_t n = e[static_cast<std::size_t>(v)];
    if (c.size() <= n) c.resize(n + 1);
    c[n] = a;
  }
  return UniPoly(std::move(c));
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& [e, c] = *b.terms_.begin();
    return a.multiply_monomial(e).scaled(c);
  }
  if (a.is_monomial()) return b * a;

  // Dense slot table over the exponent box of the product when it is small
  // enough; for homogeneous factors the z exponent is implied by x and y.
  Exponents top{0, 0, 0};
  for (std::size_t k = 0; k < 3; ++k) {
    std::uint32_t ma = 0, mb = 0;
    for (const auto& [e, c] : a.terms_) ma = std::max(ma, e[k]);
    for (const auto& [e, c] : b.terms_) mb = std::max(mb, e[k]);
    top[k] = ma + mb + 1;
  }
  const bool homog = a.is_homogeneous() && b.is_homogeneous();
  const std::uint64_t box = std::uint64_t{top[0]} * top[1] * (homog ? 1 : top[2]);
  constexpr std::uint64_t kMaxBox = std::uint64_t{1} << 22;

  if (box > kMaxBox) {
    TriPoly::TermMap acc;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) accumulate(acc, add_exp(ea, eb), ca * cb);
    TriPoly out;
    out.terms_ = std::move(acc);
    return out;
  }

  std::vector<std::int32_t> slot(box, -1);
  std::vector<std::pair<Exponents, GaussRational>> vals;
  vals.reserve(std::min<std::uint64_t>(box, std::uint64_t{a.size()} * b.size()));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      const Exponents e = add_exp(ea, eb);
      std::uint64_t idx = std::uint64_t{e[0]} * top[1] + e[1];
      if (!homog) idx = idx * top[2] + e[2];
      std::int32_t& s = slot[idx];
      if (s < 0) {
        s = static_cast<std::int32_t>(vals.size());
        vals.emplace_back(e, GaussRational());
      }
      vals[static_cast<std::size_t>(s)].second.add_product(ca, cb);
    }
  std::sort(vals.begin(), vals.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  TriPoly out;
  for (auto& [e, c] : vals)
    if (!c.is_zero()) out.terms_.emplace_hint(out.terms_.end(), e, std::move(c));
  return out;
}

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, GaussRational>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* l, const auto* r) {
    return exp_degree(l->first) > exp_degree(r->first);
  });
  static constexpr char names[3] = {'x', 'y', 'z'};
  detail::TermWriter w;
  for (const auto* t : order) {
    std::string mono;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto n = t->first[k];
      if (n == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (n > 1) mono += "^" + std::to_string(n);
    }
    w.add(t->second, mono);
  }
  return w.str();
}

TriPoly exact_div(const TriPoly& a, const TriPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    const auto& [e, c] = b.leading_term();
    return a.divide_monomial(e).scaled(c.inverse());
  }
  const auto& [lb_exp, lb_coeff] = b.leading_term();
  const GaussRational lb_inv = lb_coeff.inverse();
  TriPoly quotient;
  TriPoly rem = a;
  TriPoly::TermMap qterms;
  while (!rem.is_zero()) {
    const auto [le, lc] = rem.leading_term();
    if (!divides(lb_exp, le)) throw DomainError("polynomial division is not exact");
    const Exponents shift{le[0] - lb_exp[0], le[1] - lb_exp[1], le[2] - lb_exp[2]};
    const GaussRational f = lc * lb_inv;
    qterms.emplace(shift, f);
    rem -= b.multiply_monomial(shift).scaled(f);
  }
  return TriPoly(std::move(qterms));
}

namespace {

// Coefficients of p viewed as a polynomial in v; entry k multiplies v^k.
std::vector<TriPoly> split(const TriPoly& p, int v) {
  std::vector<TriPoly::TermMap> parts(static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1);
  const auto k = static_cast<std::size_t>(v);
  for (const auto& [exps, c] : p.terms()) {
    Exponents e = exps;
    const auto n = e[k];
    e[k] = 0;
    parts[n].emplace(e, c);
  }
  std::vector<TriPoly> out;
  out.reserve(parts.size());
  for (auto& m : parts) out.emplace_back(std::move(m));
  return out;
}

TriPoly gcd_rec(const TriPoly& a, const TriPoly& b);

TriPoly content_in(const TriPoly& p, int v) {
  TriPoly g;
  for (const auto& c : split(p, v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.normalized() : gcd_rec(g, c);
    if (g.is_constant()) return TriPoly::constant(1);
  }
  return g;
}

TriPoly primitive_in(const TriPoly& p, int v) {
  TriPoly c = content_in(p, v);
  return c.is_constant() ? p.normalized() : exact_div(p, c).normalized();
}

// Pseudo-remainder of a by b in the variable v, up to a v-free factor.
TriPoly pseudo_rem(TriPoly a, const TriPoly& b, int v) {
  const int db = b.degree_in(v);
  const TriPoly lb = split(b, v).back();
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    const TriPoly la = split(a, v).back();
    Exponents shift{0, 0, 0};
    shift[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(da - db);
    a = lb * a - la * b.multiply_monomial(shift);
  }
  return a;
}

TriPoly gcd_rec(const TriPoly& a, const TriPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return TriPoly::constant(1);

  int main_var = -1;
  int best = 0;
  int used = 0;
  int last_used = -1;
  for (int v = 0; v < 3; ++v) {
    const int da = a.degree_in(v);
    const int db = b.degree_in(v);
    if (da > 0 || db > 0) {
      ++used;
      last_used = v;
    }
    if (da > 0 && db > 0 && (main_var < 0 || std::max(da, db) < best)) {
      main_var = v;
      best = std::max(da, db);
    }
  }
  if (used == 1) return TriPoly::from_uni(gcd(a.to_uni(last_used), b.to_uni(last_used)), last_used);
  if (main_var < 0) {
    // No shared variable: any common factor would be a constant.
    return TriPoly::constant(1);
  }

  const TriPoly ca = content_in(a, main_var);
  const TriPoly cb = content_in(b, main_var);
  const TriPoly c = gcd_rec(ca, cb);
  TriPoly pa = ca.is_constant() ? a : exact_div(a, ca);
  TriPoly pb = cb.is_constant() ? b : exact_div(b, cb);
  if (pa.degree_in(main_var) < pb.degree_in(main_var)) std::swap(pa, pb);

  TriPoly g;
  while (true) {
    TriPoly r = pseudo_rem(pa, pb, main_var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(main_var) == 0) {
      g = TriPoly::constant(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, main_var);
  }
  if (!g.is_constant()) g = primitive_in(g, main_var);
  return (c * g).normalized();
}

}  // namespace

TriPoly gcd(const TriPoly& p, const TriPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();

  const Exponents cp = p.monomial_content();
  const Exponents cq = q.monomial_content();
  const Exponents common{std::min(cp[0], cq[0]), std::min(cp[1], cq[1]), std::min(cp[2], cq[2])};
  const TriPoly a = p.divide_monomial(cp);
  const TriPoly b = q.divide_monomial(cq);

  TriPoly g;
  if (a.is_constant() || b.is_constant()) {
    g = TriPoly::constant(1);
  } else if (a.is_homogeneous() && b.is_homogeneous()) {
    // Neither is divisible by z, so the gcd is the homogenisation of the affine gcd.
    TriPoly affine = gcd_rec(a.dehomogenize(), b.dehomogenize());
    g = affine.homogenize(affine.total_degree());
  } else {
    g = gcd_rec(a, b);
  }
  return g.multiply_monomial(common).normalized();
}

}  // namespace cremona
