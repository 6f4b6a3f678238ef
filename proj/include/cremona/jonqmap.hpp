#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "cremona/birat.hpp"
#include "cremona/mobius.hpp"
#include "cremona/projmap.hpp"

namespace cremona {

/// Which affine coordinate is the base of the preserved pencil of lines.
/// Axis::X: maps (eta(x), M(x).y) preserving the lines x = const.
/// Axis::Y: maps (M(y).x, eta(y)) preserving the lines y = const; elementary
/// maps (a*x + Q(y), y + c) live here.
enum class Axis { X, Y };

/// de Jonquieres normal form: a Mobius map eta on the base coordinate and a
/// Mobius map in the fibre coordinate whose matrix entries depend on the base.
///
/// With u the base and v the fibre coordinate the map reads
///   (u, v) -> (eta(u), (m11(u) v + m12(u)) / (m21(u) v + m22(u))).
/// The matrix is only defined up to a factor in Q(i)(u)*; it is stored with
/// polynomial, globally coprime entries and the first nonzero entry monic,
/// so equal maps have equal representations.
class JonqMap {
 public:
  using Matrix = std::array<RatFunc, 4>;

  JonqMap() : JonqMap(Mobius(), {RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)}) {}
  /// Throws DomainError when det(m) vanishes identically.
  JonqMap(Mobius eta, const Matrix& m, Axis base = Axis::X);

  static JonqMap identity(Axis base = Axis::X);
  /// (alpha*x, beta*y)
  static JonqMap diagonal(const GaussRational& alpha, const GaussRational& beta, Axis base = Axis::X);
  /// (eta(u), a(u)*v)
  static JonqMap fiber_multiplier(const Mobius& eta, const RatFunc& a, Axis base = Axis::X);
  /// (eta(u), a(u)*v + b(u))
  static JonqMap fiber_affine(const Mobius& eta, const RatFunc& a, const RatFunc& b, Axis base = Axis::X);

  const Mobius& eta() const noexcept { return eta_; }
  Axis base() const noexcept { return base_; }
  const std::array<UniPoly, 4>& matrix() const noexcept { return m_; }
  RatFunc entry(int row, int col) const { return RatFunc(m_[static_cast<std::size_t>(2 * row + col)]); }

  bool is_identity() const;
  /// a with v -> a(u)*v, when the fibre action has that shape.
  std::optional<RatFunc> multiplier() const;
  /// (a, b) with v -> a(u)*v + b(u), when the fibre action is affine.
  std::optional<std::pair<RatFunc, RatFunc>> fiber_affine_parts() const;
  /// True when every matrix entry is constant.
  bool fiber_is_constant() const;

  /// (fx, fy) on the affine chart, in the original coordinates.
  std::pair<BiRatFunc, BiRatFunc> affine() const;
  /// "(x, 2*x*y)"
  std::string to_string() const;

  friend bool operator==(const JonqMap&, const JonqMap&) = default;

 private:
  Mobius eta_;
  std::array<UniPoly, 4> m_;
  Axis base_ = Axis::X;
};

/// f o g. Both maps must share the base axis; throws ShapeError otherwise.
JonqMap compose(const JonqMap& f, const JonqMap& g);
/// Two-sided inverse.
JonqMap inverse(const JonqMap& f);
/// Cleared homogeneous triple agreeing with f on the chart z != 0.
ProjMap to_proj(const JonqMap& f);
/// Degree of the cleared projective triple.
int degree(const JonqMap& f);

/// The same map expressed over the other base axis. Possible exactly when
/// the fibre matrix is constant, i.e. the map preserves both pencils.
std::optional<JonqMap> rebase(const JonqMap& f, Axis target);

/// Recognises an affine pair as a de Jonquieres map, preferring base x.
std::optional<JonqMap> jonq_from_affine(const BiRatFunc& fx, const BiRatFunc& fy);

}  // namespace cremona
