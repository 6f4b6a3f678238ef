#pragma once

#include <array>
#include <string>

#include "cremona/ratfunc.hpp"

namespace cremona {

/// Element x -> (a*x + b)/(c*x + d) of PGL(2, Q(i)).
/// Stored with the first nonzero entry of (a, b, c, d) equal to 1.
class Mobius {
 public:
  Mobius() : Mobius(1, 0, 0, 1) {}
  Mobius(GaussRational a, GaussRational b, GaussRational c, GaussRational d);

  static Mobius identity() { return {}; }
  static Mobius scaling(const GaussRational& k) { return {k, 0, 0, 1}; }
  static Mobius translation(const GaussRational& t) { return {1, t, 0, 1}; }
  static Mobius affine(const GaussRational& k, const GaussRational& t) { return {k, t, 0, 1}; }

  const GaussRational& a() const noexcept { return m_[0]; }
  const GaussRational& b() const noexcept { return m_[1]; }
  const GaussRational& c() const noexcept { return m_[2]; }
  const GaussRational& d() const noexcept { return m_[3]; }
  GaussRational det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

  bool is_identity() const;
  bool is_affine() const noexcept { return m_[2].is_zero(); }
  /// For affine maps x -> k*x + t, the pair (k, t).
  std::pair<GaussRational, GaussRational> affine_parts() const;

  /// The function x -> m(x) as a rational function.
  RatFunc as_ratfunc() const;

  friend bool operator==(const Mobius&, const Mobius&) = default;

  std::string to_string(char var = 'x') const;

 private:
  std::array<GaussRational, 4> m_;
};

/// m1 o m2, i.e. x -> m1(m2(x)).
Mobius compose(const Mobius& m1, const Mobius& m2);
Mobius invert(const Mobius& m);

/// Substitution r(m(x)). Contravariant: apply(compose(m1, m2), r) = apply(m2, apply(m1, r)).
RatFunc apply(const Mobius& m, const RatFunc& r);

/// Post-composition m(r(x)). Covariant: image(compose(m1, m2), r) = image(m1, image(m2, r)).
RatFunc image(const Mobius& m, const RatFunc& r);

/// Recognises a rational function of degree <= 1 as a Mobius map; empty otherwise.
std::optional<Mobius> mobius_from_ratfunc(const RatFunc& r);

}  // namespace cremona
