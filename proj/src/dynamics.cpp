#include "cremona/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cremona/errors.hpp"

namespace cremona::dynamics {

namespace {

constexpr std::size_t kMinLength = 6;

struct ClassInfo {
  GrowthClass c;
  const char* name;
  const char* geometric;
};

constexpr ClassInfo kClasses[] = {
    {GrowthClass::Bounded, "bounded", "elliptic"},
    {GrowthClass::Linear, "linear", "jonquieres-twist"},
    {GrowthClass::Quadratic, "quadratic", "halphen-twist"},
    {GrowthClass::Exponential, "exponential", "hyperbolic"},
    {GrowthClass::Indeterminate, "indeterminate", "indeterminate"},
};

const ClassInfo& info(GrowthClass c) {
  for (const auto& i : kClasses)
    if (i.c == c) return i;
  return kClasses[4];
}

std::vector<long> differences(const std::vector<long>& v) {
  std::vector<long> d;
  for (std::size_t k = 1; k < v.size(); ++k) d.push_back(v[k] - v[k - 1]);
  return d;
}

// The last ceil(n/2) entries are equal and nonzero.
bool eventually_constant_nonzero(const std::vector<long>& d) {
  if (d.empty()) return false;
  const std::size_t tail = (d.size() + 1) / 2;
  const long v = d.back();
  if (v == 0) return false;
  return std::all_of(d.end() - static_cast<long>(tail), d.end(), [v](long e) { return e == v; });
}

bool looks_bounded(const std::vector<int>& d) {
  const std::size_t tail = d.size() / 3;
  const auto split = d.end() - static_cast<long>(tail);
  const std::set<int> seen(d.begin(), split);
  const int early_max = *std::max_element(d.begin(), split);
  return std::all_of(split, d.end(), [&](int v) { return v <= early_max && seen.count(v) > 0; });
}

struct ExpFit {
  bool ok = false;
  double lambda = 0;
  double c = 0;
  int samples = 0;
};

ExpFit exponential_fit(const std::vector<int>& d, const Thresholds& t) {
  ExpFit fit;
  const std::size_t n = d.size();
  const std::size_t nr = n - 1;
  const std::size_t tail_r = (nr + 1) / 2;
  double log_sum = 0;
  for (std::size_t k = nr - tail_r; k < nr; ++k) {
    const double r = static_cast<double>(d[k + 1]) / static_cast<double>(d[k]);
    if (r < 1.0 + t.theta) return fit;
    log_sum += std::log(r);
  }

  // Least-squares line through (n, log d_n) over the last half of the points.
  const std::size_t tail_p = (n + 1) / 2;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = n - tail_p; k < n; ++k) {
    const double x = static_cast<double>(k + 1);
    const double y = std::log(static_cast<double>(d[k]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(tail_p);
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double icept = (sy - slope * sx) / m;
  double res2 = 0, norm2 = 0;
  for (std::size_t k = n - tail_p; k < n; ++k) {
    const double y = std::log(static_cast<double>(d[k]));
    const double e = y - (icept + slope * static_cast<double>(k + 1));
    res2 += e * e;
    norm2 += y * y;
  }
  if (norm2 == 0 || std::sqrt(res2 / norm2) >= t.residual) return fit;

  fit.ok = true;
  fit.samples = static_cast<int>(tail_r);
  fit.lambda = std::exp(log_sum / static_cast<double>(tail_r));
  double log_c = 0;
  for (std::size_t k = n - tail_p; k < n; ++k)
    log_c += std::log(static_cast<double>(d[k])) - static_cast<double>(k + 1) * std::log(fit.lambda);
  fit.c = std::exp(log_c / m);
  return fit;
}

}  // namespace

std::string to_string(GrowthClass c) { return info(c).name; }
std::string geometric_name(GrowthClass c) { return info(c).geometric; }

GrowthClass growth_class_from_string(const std::string& s) {
  for (const auto& i : kClasses)
    if (s == i.name || s == i.geometric) return i.c;
  throw DomainError("unknown growth class '" + s + "'");
}

int default_n_max(const BirMap& f) { return is_jonq(f) ? 64 : 16; }

DegreeSequence degree_sequence(const BirMap& f, int n_max, const Caps& caps, IterationPath path) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  const bool jonq = is_jonq(f) && path != IterationPath::Projective;
  if (path == IterationPath::Jonquieres && !is_jonq(f))
    throw ShapeError("the de Jonquieres path needs a de Jonquieres map");

  const BirMap step = jonq ? f : BirMap(to_proj(f));
  DegreeSequence out;
  BirMap acc = step;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      // Projective composition costs grow with deg f * deg f^(n-1), which also
      // bounds the cleared degree; past the degree cap the iterate is skipped.
      if (!jonq) {
        const long bound = static_cast<long>(degree(step)) * degree(acc);
        if (bound > caps.max_degree) {
          out.truncated = true;
          out.stop_reason = "iterate " + std::to_string(n) + ": degree bound " + std::to_string(bound) +
                            " exceeds cap " + std::to_string(caps.max_degree);
          break;
        }
      }
      // f^n = f o f^(n-1): the large iterate is substituted into the small f.
      acc = compose(step, acc);
    }
    const ProjMap p = to_proj(acc);
    std::string reason;
    if (p.degree() > caps.max_degree)
      reason = "degree " + std::to_string(p.degree()) + " exceeds cap " + std::to_string(caps.max_degree);
    else if (p.term_count() > caps.max_terms)
      reason = std::to_string(p.term_count()) + " terms exceed cap " + std::to_string(caps.max_terms);
    if (!reason.empty()) {
      if (n == 1) throw CapExceeded(reason);
      out.truncated = true;
      out.stop_reason = "iterate " + std::to_string(n) + ": " + reason;
      break;
    }
    out.degrees.push_back(p.degree());
  }
  return out;
}

GrowthReport classify_growth(const std::vector<int>& degrees, const Thresholds& t) {
  if (degrees.size() < kMinLength)
    throw DomainError("growth classification needs at least " + std::to_string(kMinLength) + " degrees");
  if (std::any_of(degrees.begin(), degrees.end(), [](int d) { return d < 1; }))
    throw DomainError("degrees must be positive");

  GrowthReport r;
  r.degrees = degrees;
  r.n_used = static_cast<int>(degrees.size());
  const std::vector<long> as_long(degrees.begin(), degrees.end());
  const auto d1 = differences(as_long);
  if (looks_bounded(degrees)) {
    r.growth = GrowthClass::Bounded;
  } else if (eventually_constant_nonzero(d1)) {
    r.growth = GrowthClass::Linear;
  } else if (eventually_constant_nonzero(differences(d1))) {
    r.growth = GrowthClass::Quadratic;
  } else if (const ExpFit fit = exponential_fit(degrees, t); fit.ok) {
    r.growth = GrowthClass::Exponential;
    r.dyn_degree_estimate = fit.lambda;
    r.growth_constant_estimate = fit.c;
    r.samples = fit.samples;
  }
  return r;
}

double dyn_degree_estimate(const std::vector<int>& degrees, const Thresholds& t) {
  const GrowthReport r = classify_growth(degrees, t);
  if (r.growth != GrowthClass::Exponential) throw DomainError("sequence does not grow exponentially");
  return *r.dyn_degree_estimate;
}

GrowthReport growth_of(const BirMap& f, int n_max, const Caps& caps, const Thresholds& t) {
  return growth_from_sequence(degree_sequence(f, n_max, caps), t);
}

GrowthReport growth_from_sequence(const DegreeSequence& seq, const Thresholds& t) {
  GrowthReport r;
  if (seq.degrees.size() >= kMinLength) {
    r = classify_growth(seq.degrees, t);
  } else {
    r.degrees = seq.degrees;
    r.n_used = static_cast<int>(seq.degrees.size());
  }
  r.truncated = seq.truncated;
  return r;
}

}  // namespace cremona::dynamics
