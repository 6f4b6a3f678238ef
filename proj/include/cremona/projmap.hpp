#pragma once

#include <array>
#include <string>

#include "cremona/birat.hpp"
#include "cremona/tripoly.hpp"

namespace cremona {

/// Rational self-map (x:y:z) --> (p0 : p1 : p2) of the projective plane.
///
/// The components are homogeneous of a common degree >= 1 with their common
/// factor cleared, scaled so that the lex-leading coefficient of the first
/// nonzero component is 1. The common degree is the degree of the map.
class ProjMap {
 public:
  /// Validates homogeneity, divides out the gcd and normalizes the scaling.
  explicit ProjMap(std::array<TriPoly, 3> components);

  static ProjMap identity();

  const std::array<TriPoly, 3>& components() const noexcept { return p_; }
  const TriPoly& operator[](std::size_t k) const { return p_[k]; }
  int degree() const noexcept { return degree_; }
  std::size_t term_count() const noexcept;

  /// Bracketed triple "[x*z : x*y : z^2]".
  std::string to_string() const;

 private:
  std::array<TriPoly, 3> p_;
  int degree_ = 0;
};

/// Homogeneous triple agreeing with (fx, fy) on the chart z != 0. Throws
/// DomainError for a constant map and ShapeError ("not birational-looking")
/// when the Jacobian determinant vanishes identically.
ProjMap proj_from_affine(const BiRatFunc& fx, const BiRatFunc& fy);

/// As proj_from_affine without the dominance checks; for callers that already
/// know the pair is birational.
ProjMap homogenize_affine(const BiRatFunc& fx, const BiRatFunc& fy);

/// f o g: components f_i(g0, g1, g2) with the common factor cleared.
/// Throws DomainError when the composite is degenerate.
ProjMap compose(const ProjMap& f, const ProjMap& g);

/// Projective equality: all cross products p_i*q_j - p_j*q_i vanish.
bool proj_equal(const ProjMap& f, const ProjMap& g);
bool is_identity(const ProjMap& f);

/// Inverse of a degree-1 map via the adjugate; InverseUnavailable otherwise.
ProjMap invert_linear(const ProjMap& f);

/// Matrix [[x-coeffs], [y-coeffs], [z-coeffs]] per component of a linear map.
std::array<std::array<GaussRational, 3>, 3> linear_matrix(const ProjMap& f);

}  // namespace cremona
