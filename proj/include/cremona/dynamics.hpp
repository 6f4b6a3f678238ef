#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cremona/birmap.hpp"

namespace cremona::dynamics {

/// Growth type of deg(f^n): bounded (elliptic), linear (Jonquieres twist),
/// quadratic (Halphen twist), exponential (hyperbolic).
enum class GrowthClass { Bounded, Linear, Quadratic, Exponential, Indeterminate };

/// "bounded", "linear", "quadratic", "exponential", "indeterminate"
std::string to_string(GrowthClass c);
/// "elliptic", "jonquieres-twist", "halphen-twist", "hyperbolic", "indeterminate"
std::string geometric_name(GrowthClass c);
/// Inverse of to_string; throws DomainError for an unknown name.
GrowthClass growth_class_from_string(const std::string& s);

struct Caps {
  int max_degree = 512;
  std::size_t max_terms = 200000;
};

enum class IterationPath { Automatic, Jonquieres, Projective };

struct DegreeSequence {
  std::vector<int> degrees;  // degrees[k] = deg f^(k+1)
  bool truncated = false;
  std::string stop_reason;
};

/// 64 for de Jonquieres maps, 16 otherwise.
int default_n_max(const BirMap& f);

/// Exact degrees of f, f^2, ..., f^n_max. Iteration stops before the first
/// iterate exceeding a cap, marking the result truncated; a cap exceeded
/// already by f itself throws CapExceeded. JonqMap inputs iterate in normal
/// form unless the projective path is requested.
DegreeSequence degree_sequence(const BirMap& f, int n_max, const Caps& caps = {},
                               IterationPath path = IterationPath::Automatic);

struct Thresholds {
  double theta = 0.25;      // minimal ratio excess d_{n+1}/d_n - 1
  double residual = 1e-2;   // relative residual of the log-linear fit
};

struct GrowthReport {
  std::vector<int> degrees;
  GrowthClass growth = GrowthClass::Indeterminate;
  std::optional<double> dyn_degree_estimate;
  std::optional<double> growth_constant_estimate;
  int samples = 0;  // ratios entering the estimates
  int n_used = 0;
  bool truncated = false;
};

/// Heuristic classification over the finite window; needs at least six
/// entries (DomainError otherwise). Checks bounded, linear, quadratic and
/// exponential behaviour in that order.
GrowthReport classify_growth(const std::vector<int>& degrees, const Thresholds& t = {});

/// Geometric mean of the last-half ratios; DomainError unless the sequence
/// classifies as exponential.
double dyn_degree_estimate(const std::vector<int>& degrees, const Thresholds& t = {});

/// classify_growth on a computed sequence, keeping its truncation flag; fewer
/// than six degrees give an Indeterminate report.
GrowthReport growth_from_sequence(const DegreeSequence& seq, const Thresholds& t = {});

/// degree_sequence followed by classify_growth; too-short (truncated)
/// sequences come back Indeterminate.
GrowthReport growth_of(const BirMap& f, int n_max, const Caps& caps = {}, const Thresholds& t = {});

}  // namespace cremona::dynamics
