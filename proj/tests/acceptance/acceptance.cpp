// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/dynamics.hpp"
#include "cremona/errors.hpp"
#include "cremona/family_text.hpp"
#include "cremona/heisenberg.hpp"
#include "cremona/parser.hpp"
#include "generators.hpp"

using namespace cremona;
using dynamics::GrowthClass;

namespace {

std::string data_dir = CREMONA_DATA_DIR;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first failure; later checks still run so the detail is complete.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

BirMap M(const std::string& s) { return io::parse_map(s); }
std::string R(const BirMap& f) { return io::render_map(f); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Instance {
  std::string f, g, h;
};

const std::vector<Instance> kCommutators = {
    {"(x, x*y)", "(2*x, x*y)", "(x, 2*y)"},
    {"(x + y^2, y + 1)", "(x + y, y)", "(x - 1, y)"},
    {"(-x, x*y)", "(2*x, x^2*y)", "(x, 2*y)"},
    {"(2*x, x*y)", "(3*x, x*y)", "(x, 3/2*y)"},
};

void commutator_identities(Check& check) {
  for (const auto& in : kCommutators) {
    const auto t0 = Clock::now();
    const BirMap h = commutator(M(in.f), M(in.g));
    const double dt = seconds_since(t0);
    check(map_equal(h, M(in.h)), "[" + in.f + ", " + in.g + "] = " + R(h) + ", want " + in.h);
    check(dt < 1.0, in.f + ": " + std::to_string(dt) + " s");
  }
  heisenberg::TorusGen t;
  t.lambda = 2;
  t.delta = 3;
  t.c = RatFunc::x();
  t.d = RatFunc::x();
  const GaussRational kappa = heisenberg::commutator_constant(t);
  check(kappa == GaussRational::fraction(3, 2), "commutator_constant = " + kappa.to_string());
}

void negative_control(Check& check) {
  const auto r = heisenberg::verify_embedding(M("(x + y^2, y)"), M("(x, y + 1)"));
  check(map_equal(r.h, M("(x + 2*y - 1, y)")), "h = " + R(r.h));
  check(!r.gh_commutes, "gh_commutes is true");
  check(!r.faithful, "faithful is true");
}

void degree_growth(Check& check) {
  const auto t0 = Clock::now();
  const BirMap twist = M("(x, x*y)");
  const auto jq = dynamics::degree_sequence(twist, 20, {}, dynamics::IterationPath::Jonquieres);
  const auto pj = dynamics::degree_sequence(twist, 20, {}, dynamics::IterationPath::Projective);
  std::vector<int> linear;
  for (int n = 1; n <= 20; ++n) linear.push_back(n + 1);
  check(jq.degrees == linear, "(x, x*y) on the de Jonquieres path");
  check(pj.degrees == jq.degrees, "(x, x*y) paths disagree");
  const auto lin = dynamics::growth_of(twist, 20);
  check(lin.growth == GrowthClass::Linear, "(x, x*y) classifies " + dynamics::to_string(lin.growth));

  const BirMap henon = M("(y, y^2 + x)");
  const auto hs = dynamics::degree_sequence(henon, 8);
  std::vector<int> powers;
  for (int n = 1; n <= 8; ++n) powers.push_back(1 << n);
  check(hs.degrees == powers, "Henon degrees");
  const auto exp = dynamics::growth_from_sequence(hs);
  check(exp.growth == GrowthClass::Exponential, "Henon classifies " + dynamics::to_string(exp.growth));
  const double lambda = exp.dyn_degree_estimate.value_or(0);
  check(lambda >= 1.99 && lambda <= 2.01, "Henon dynamical degree " + std::to_string(lambda));

  const BirMap inv = M("(1/x, 1/y)");
  const auto is = dynamics::degree_sequence(inv, 16);
  bool alternating = !is.degrees.empty();
  for (std::size_t k = 0; k < is.degrees.size(); ++k) alternating &= is.degrees[k] == (k % 2 == 0 ? 2 : 1);
  check(alternating, "(1/x, 1/y) degrees do not alternate 2, 1");
  const auto bd = dynamics::growth_from_sequence(is);
  check(bd.growth == GrowthClass::Bounded, "(1/x, 1/y) classifies " + dynamics::to_string(bd.growth));
  const double dt = seconds_since(t0);
  check(dt < 10.0, "runtime " + std::to_string(dt) + " s");
}

void claim_solver(Check& check) {
  struct Case {
    std::string mu, lambda2;
    std::vector<std::string> basis;
  };
  const std::vector<Case> cases = {
      {"3 + 2*x", "2", {"x + 3"}},
      {"3 - 2*x", "4", {"x^2 - 2*x + 1"}},
      {"x + 1", "2", {}},
  };
  for (const auto& c : cases) {
    const Mobius mu = io::parse_mobius(c.mu);
    const GaussRational l2 = io::parse_scalar(c.lambda2);
    for (int d : {2, 4, 6}) {
      const auto s = heisenberg::claim_solve(mu, l2, d);
      std::vector<std::string> got;
      for (const auto& p : s.basis) {
        got.push_back(p.to_string());
        const UniPoly mux{mu.b() / mu.d(), mu.a() / mu.d()};
        check(p.compose(mux) == p.scaled(l2), p.to_string() + " does not re-substitute");
      }
      check(s.dimension == static_cast<int>(c.basis.size()),
            "mu = " + c.mu + ", max_deg " + std::to_string(d) + ": dimension " + std::to_string(s.dimension));
      check(got == c.basis, "mu = " + c.mu + ", max_deg " + std::to_string(d) + ": basis differs");
    }
  }
}

void distortion(Check& check) {
  for (const auto& in : kCommutators) {
    const BirMap f = M(in.f), g = M(in.g);
    const BirMap h = commutator(f, g);
    const Bindings b{{"f", f}, {"g", g}};
    for (int k = 1; k <= 5; ++k) {
      const BirMap lhs = word_eval(MapWord::commutator_power("f", "g", k), b);
      check(map_equal(lhs, power(h, static_cast<long>(k) * k)),
            in.f + ", " + in.g + ": k = " + std::to_string(k));
    }
  }
}

void relation_system(Check& check) {
  heisenberg::RelationSystem r;
  r.lambda = 2;
  r.mu = Mobius::scaling(3);
  r.gamma = 1;
  r.beta = GaussRational::fraction(3, 2);
  r.a = RatFunc::x();
  r.b = RatFunc::x();
  const auto ok = heisenberg::relation_system_check(r);
  for (int k = 0; k < 5; ++k) check(ok[k], std::string(heisenberg::kRelationNames[k]) + " fails");
  r.beta = 1;
  const auto perturbed = heisenberg::relation_system_check(r);
  check(!perturbed[4], "rel5 holds with beta = 1");
}

void oracle_equivalence(Check& check) {
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> len(1, 6), coin(0, 1), letter(0, 3);
  const std::vector<std::string> names = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 100; ++trial) {
    Bindings jb;
    for (const auto& n : names) jb.emplace(n, M(coin(rng) ? gen::diagonal(rng) : gen::elementary(rng)));
    MapWord w;
    const int length = len(rng);
    for (int k = 0; k < length; ++k) w.letters.emplace_back(names[letter(rng)], coin(rng) ? 1 : -1);
    const BirMap via_jonq = word_eval(w, jb);
    const BirMap via_proj = word_eval(w, projective_bindings(jb));
    check(std::holds_alternative<ProjMap>(via_proj), w.to_string() + ": projective path left projective form");
    check(map_equal(via_jonq, via_proj), "word " + w.to_string() + " (trial " + std::to_string(trial) + ")");
  }
}

// Twist or elliptic, when the family shape decides it; nullopt otherwise.
std::optional<GrowthClass> designated(const RatFunc& multiplier, const GaussRational& base) {
  if (multiplier.is_constant()) return GrowthClass::Bounded;
  if (!is_root_of_unity(base)) return GrowthClass::Linear;
  return std::nullopt;
}

std::pair<std::optional<GrowthClass>, std::optional<GrowthClass>> designation(const heisenberg::FamilySpec& spec) {
  using namespace heisenberg;
  const auto x_pow = [](int s) { return s > 0 ? RatFunc::x() : RatFunc(1) / RatFunc::x(); };
  const auto x_pow2 = [&](int s) { return x_pow(s) * x_pow(s); };
  return std::visit(
      [&](const auto& v) -> std::pair<std::optional<GrowthClass>, std::optional<GrowthClass>> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PGL3> || std::is_same_v<T, ElemA> || std::is_same_v<T, ElemB>) {
          return {GrowthClass::Bounded, GrowthClass::Bounded};
        } else if constexpr (std::is_same_v<T, TorusPM1>) {
          return {designated(x_pow(v.s), GaussRational(1)), designated(v.a, v.gamma)};
        } else if constexpr (std::is_same_v<T, TorusPM2>) {
          return {designated(x_pow2(v.s), GaussRational(1)), designated(v.a, v.gamma)};
        } else if constexpr (std::is_same_v<T, Order2>) {
          // f^2 = (x, -delta^2 * x^(2s) * y)
          return {GrowthClass::Linear, designated(v.b, v.gamma)};
        } else {
          return {designated(v.c, v.lambda), designated(v.d, v.delta)};
        }
      },
      spec);
}

void faithful_growth(Check& check) {
  std::istringstream in(slurp(data_dir + "/instances.batch"));
  int checked = 0, faithful = 0, twists = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("family ", 0) != 0) continue;
    auto words = io::split_words(line);
    while (words.size() > 2 && words[words.size() - 2] == "--expect") words.resize(words.size() - 2);
    const auto spec = io::parse_family_words(words);
    heisenberg::EmbeddingReport r;
    try {
      r = heisenberg::verify_family(spec);
    } catch (const DomainError&) {
      continue;  // parameters outside the family's domain
    }
    ++checked;
    const auto [df, dg] = designation(spec);
    twists += (df == GrowthClass::Linear) + (dg == GrowthClass::Linear);
    const auto cls = [](const auto& g) { return g ? g->growth : GrowthClass::Indeterminate; };
    if (df) check(cls(r.growth_f) == *df, line + ": f classifies " + dynamics::to_string(cls(r.growth_f)));
    if (dg) check(cls(r.growth_g) == *dg, line + ": g classifies " + dynamics::to_string(cls(r.growth_g)));
    if (!r.faithful) continue;
    ++faithful;
    check(cls(r.growth_h) == GrowthClass::Bounded, line + ": h classifies " + dynamics::to_string(cls(r.growth_h)));
    for (const auto* g : {&r.growth_f, &r.growth_g, &r.growth_h})
      check(cls(*g) != GrowthClass::Exponential, line + ": exponential growth in a faithful report");
  }
  check(checked >= 20, "only " + std::to_string(checked) + " instances");
  check(twists >= 10, "only " + std::to_string(twists) + " twist generators");
  check(faithful >= 10, "only " + std::to_string(faithful) + " faithful instances");
}

void parser_corpus(Check& check) {
  std::istringstream in(slurp(data_dir + "/expressions.txt"));
  int count = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    ++count;
    try {
      const BirMap f = M(line);
      const std::string once = R(f);
      const BirMap g = M(once);
      check(R(g) == once && map_equal(f, g), "round trip of " + line);
    } catch (const std::exception& e) {
      check(false, line + ": " + e.what());
    }
  }
  check(count >= 50, "corpus has " + std::to_string(count) + " expressions");
  const auto named = io::parse_maps_file(slurp(data_dir + "/family_shapes.maps"));
  check(!named.empty(), "no named maps");
  for (const auto& m : named) check(R(M(R(m.map))) == R(m.map), "round trip of " + m.name);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) data_dir = argv[1];
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"commutator identities", commutator_identities},
      {"negative control", negative_control},
      {"degree growth", degree_growth},
      {"claim solver", claim_solver},
      {"distortion identity", distortion},
      {"relation system", relation_system},
      {"oracle equivalence", oracle_equivalence},
      {"no exponential growth in faithful embeddings", faithful_growth},
      {"parser corpus", parser_corpus},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    const auto t0 = Clock::now();
    try {
      criteria[k].second(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    const bool ok = check.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
              << static_cast<int>(dt * 1000) << " ms)\n";
    for (const auto& f : check.failures) std::cout << "    " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
