#include "cremona/unipoly.hpp"

#include "cremona/errors.hpp"
#include "term_format.hpp"

namespace cremona {

UniPoly::UniPoly(std::vector<GaussRational> coeffs) : c_(std::move(coeffs)) { strip(); }

UniPoly::UniPoly(std::initializer_list<GaussRational> coeffs) : c_(coeffs) { strip(); }

UniPoly UniPoly::constant(const GaussRational& c) { return UniPoly(std::vector<GaussRational>{c}); }

UniPoly UniPoly::monomial(const GaussRational& c, int k) {
  if (k < 0) throw DomainError("negative exponent in polynomial");
  std::vector<GaussRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRational UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

const GaussRational& UniPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

int UniPoly::valuation() const noexcept {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return -1;
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

UniPoly UniPoly::scaled(const GaussRational& s) const {
  if (s.is_zero()) return {};
  UniPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

GaussRational UniPoly::eval(const GaussRational& t) const {
  GaussRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * q;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative power of a polynomial");
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  strip();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  strip();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  detail::TermWriter w;
  const char name[2] = {var, '\0'};
  for (int k = degree(); k >= 0; --k) {
    const auto& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string mono;
    if (k == 1) mono = name;
    else if (k > 1) mono = std::string(name) + "^" + std::to_string(k);
    w.add(c, mono);
  }
  return w.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<GaussRational> rem = a.coeffs();
  std::vector<GaussRational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const GaussRational lead_inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const GaussRational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussRational f = top * lead_inv;
    const int shift = k - db;
    for (int j = 0; j <= db; ++j) {
      if (bc[static_cast<std::size_t>(j)].is_zero()) continue;
      rem[static_cast<std::size_t>(shift + j)] -= f * bc[static_cast<std::size_t>(j)];
    }
    quo[static_cast<std::size_t>(shift)] = std::move(f);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
  UniPoly a = p.monic();
  UniPoly b = q.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return UniPoly::constant(1);
    UniPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace cremona
