#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/dynamics.hpp"

namespace cremona::heisenberg {

/// (x + alpha*y, y + beta), (x + gamma*y, y + delta)
struct PGL3 {
  GaussRational alpha, beta, gamma, delta;
};
/// (a*x + Q(y), y + c), (alpha*x + P(y), y + gamma)
struct ElemA {
  GaussRational a{1}, alpha{1}, c, gamma;
  UniPoly P, Q;
};
/// (a*x + Q(y), b*y + gamma*(b - 1)/(beta - 1)), (alpha*x + P(y), beta*y + gamma)
struct ElemB {
  GaussRational a{1}, alpha{1}, b{1}, beta, gamma;
  UniPoly P, Q;
};
/// (x, delta*x^s*y), (gamma*x, y*a(x)) with s = +-1
struct TorusPM1 {
  GaussRational delta{1}, gamma;
  int s = 1;
  RatFunc a{1};
};
/// (x, delta*x^(2s)*y), (gamma*x, y*a(x)) with s = +-1
struct TorusPM2 {
  GaussRational delta{1}, gamma;
  int s = 1;
  RatFunc a{1};
};
/// (-x, delta*x^s*y), (gamma*x, y*b(x)) with s = +-1
struct Order2 {
  GaussRational delta{1}, gamma;
  int s = 1;
  RatFunc b{1};
};
/// (lambda*x, y*c(x)), (delta*x, y*d(x))
struct TorusGen {
  GaussRational lambda, delta;
  RatFunc c{1}, d{1};
};

using FamilySpec = std::variant<PGL3, ElemA, ElemB, TorusPM1, TorusPM2, Order2, TorusGen>;

/// Variant tag as used in family text: "pgl3", "elem-a", ...
std::string variant_name(const FamilySpec& spec);

/// The pair (f, g) as de Jonquieres maps. Throws DomainError when a
/// parameter leaves its domain (zero multiplier, beta = 1, lambda = +-1, ...).
std::pair<JonqMap, JonqMap> build_family(const FamilySpec& spec);

struct Constraint {
  std::string name;
  bool satisfied = false;
  std::optional<GaussRational> witness;
};

/// Every domain and compatibility condition of the family, evaluated exactly.
/// Ratio conditions carry the constant as witness when it exists.
std::vector<Constraint> check_family_constraints(const FamilySpec& spec);

/// kappa with [f, g] = (x, kappa*y) for the diagonal families.
/// Throws ShapeError for other variants and DomainError when the ratio is
/// not constant.
GaussRational commutator_constant(const FamilySpec& spec);

struct OrderVerdict {
  bool value = false;  // true: infinite order
  std::string method;  // identity, root-of-unity, translation, fiber-multiplier, bounded-search
  std::optional<int> bound;
  std::string detail;
};

/// Infinite-order decision for a map h. Exact for affine-diagonal and
/// fibre-affine shapes; a bounded search h^n = id (n <= bound) otherwise.
OrderVerdict infinite_order(const BirMap& h, int bound = 24);

struct VerifyOptions {
  int n_max = 0;  // 0: per-map default
  dynamics::Caps caps;
  dynamics::Thresholds thresholds;
  int relation_bound = 24;
  bool growth = true;
};

struct EmbeddingReport {
  BirMap f, g, h;
  bool fh_commutes = false;
  bool gh_commutes = false;
  bool h_is_identity = false;
  OrderVerdict h_infinite_order;
  bool faithful = false;
  std::optional<dynamics::GrowthReport> growth_f, growth_g, growth_h;
  std::vector<Constraint> constraints;
  /// Names of the relations that fail: "[f,h] = id", "[g,h] = id".
  std::vector<std::string> failed_relations;
};

/// h = [f, g]; checks [f, h] = [g, h] = id exactly and decides the order of h.
/// faithful = both relations hold and h has infinite order.
EmbeddingReport verify_embedding(const BirMap& f, const BirMap& g, const VerifyOptions& opts = {});
/// build_family + verify_embedding, with the family constraints attached.
EmbeddingReport verify_family(const FamilySpec& spec, const VerifyOptions& opts = {});

struct ClaimSolution {
  std::vector<UniPoly> basis;  // monic, strictly increasing degrees
  int dimension = 0;
  int max_degree_searched = 0;
};

/// Basis of {P : deg P <= max_deg, P(mu(x)) = lambda_sq * P(x)}. mu must be
/// affine (ShapeError otherwise); lambda_sq must avoid 0 and 1.
ClaimSolution claim_solve(const Mobius& mu, const GaussRational& lambda_sq, int max_deg);

/// f = (lambda*x, y*a(x)), g = (mu(x), y*b(x)), h = (gamma*x, beta*y).
struct RelationSystem {
  GaussRational lambda;
  Mobius mu;
  GaussRational gamma, beta;
  RatFunc a{1}, b{1};
};

inline constexpr std::array<const char*, 5> kRelationNames = {
    "a(x) = a(gamma*x)",
    "b(x) = b(gamma*x)",
    "mu(gamma*x) = gamma*mu(x)",
    "lambda*mu(x) = gamma*mu(lambda*x)",
    "b(x)*a(mu(x)) = beta*a(x)*b(lambda*x)",
};

std::array<bool, 5> relation_system_check(const RelationSystem& r);
/// Extracts the parameters from maps of the required shape (ShapeError otherwise).
RelationSystem relation_system_from_maps(const JonqMap& f, const JonqMap& g, const JonqMap& h);

struct CentralizerVerdict {
  bool commutes = false;
  bool structural = false;  // phi has the normal shape of the centralizer
  int k = 1;                // order of alpha
  std::string detail;
};

/// h = (alpha*x, beta*y) or (alpha*x, y + 1) with alpha in {1, -1, i, -i}
/// (DomainError for other alpha; ShapeError for other shapes of h).
CentralizerVerdict centralizer_check(const JonqMap& phi, const JonqMap& h);

/// True when every exponent of num and den is divisible by k.
bool in_power_subfield(const RatFunc& r, int k);

}  // namespace cremona::heisenberg
