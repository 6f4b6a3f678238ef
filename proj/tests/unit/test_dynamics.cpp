#include <doctest.h>

#include <cmath>
#include <random>

#include "cremona/dynamics.hpp"
#include "cremona/errors.hpp"
#include "cremona/parser.hpp"
#include "generators.hpp"

using namespace cremona;
using namespace cremona::dynamics;

namespace {

BirMap M(const std::string& s) { return io::parse_map(s); }

std::vector<int> seq(std::initializer_list<int> v) { return v; }

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("degree sequences") {
  CHECK(degree_sequence(M("(x, x*y)"), 10).degrees == seq({2, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
  CHECK(degree_sequence(M("(y, y^2 + x)"), 6).degrees == seq({2, 4, 8, 16, 32, 64}));
  CHECK(degree_sequence(M("(1/x, 1/y)"), 4).degrees == seq({2, 1, 2, 1}));
  CHECK_THROWS_AS(degree_sequence(M("(x, x*y)"), 0), DomainError);
}

TEST_CASE("both iteration paths give the same degrees") {
  const BirMap f = M("(x, x*y)");
  const auto a = degree_sequence(f, 20, {}, IterationPath::Jonquieres);
  const auto b = degree_sequence(f, 20, {}, IterationPath::Projective);
  CHECK(a.degrees == b.degrees);
  CHECK_THROWS_AS(degree_sequence(M("(y, y^2 + x)"), 3, {}, IterationPath::Jonquieres), ShapeError);
}

TEST_CASE("caps truncate the sequence") {
  Caps caps;
  caps.max_degree = 64;
  const auto s = degree_sequence(M("(y, y^2 + x)"), 10, caps);
  CHECK(s.truncated);
  CHECK(s.degrees == seq({2, 4, 8, 16, 32, 64}));
  CHECK(s.stop_reason.find("exceeds cap 64") != std::string::npos);

  Caps jcaps;
  jcaps.max_degree = 5;
  const auto t = degree_sequence(M("(x, x*y)"), 10, jcaps);
  CHECK(t.truncated);
  CHECK(t.degrees == seq({2, 3, 4, 5}));

  Caps tiny;
  tiny.max_degree = 1;
  CHECK_THROWS_AS(degree_sequence(M("(x, x*y)"), 3, tiny), CapExceeded);
  Caps few_terms;
  few_terms.max_terms = 2;
  CHECK_THROWS_AS(degree_sequence(M("(x, x*y + x^2)"), 3, few_terms), CapExceeded);
}

TEST_CASE("growth classes") {
  CHECK(classify_growth(seq({2, 3, 4, 5, 6, 7, 8, 9, 10, 11})).growth == GrowthClass::Linear);
  const auto e = classify_growth(seq({2, 4, 8, 16, 32, 64}));
  CHECK(e.growth == GrowthClass::Exponential);
  CHECK(*e.dyn_degree_estimate == doctest::Approx(2.0));
  CHECK(classify_growth(seq({2, 1, 2, 1, 2, 1})).growth == GrowthClass::Bounded);
  CHECK(classify_growth(seq({1, 2, 5, 10, 17, 26, 37, 50})).growth == GrowthClass::Quadratic);
  CHECK(classify_growth(seq({1, 1, 1, 1, 1, 1})).growth == GrowthClass::Bounded);
  CHECK(classify_growth(seq({2, 3, 2, 7, 2, 30})).growth == GrowthClass::Indeterminate);
  CHECK_THROWS_AS(classify_growth(seq({1, 2, 3})), DomainError);
  CHECK_THROWS_AS(classify_growth(seq({1, 2, 0, 4, 5, 6})), DomainError);
  CHECK(to_string(GrowthClass::Linear) == "linear");
  CHECK(geometric_name(GrowthClass::Linear) == "jonquieres-twist");
  CHECK(growth_class_from_string("hyperbolic") == GrowthClass::Exponential);
}

TEST_CASE("dynamical degree estimates") {
  CHECK(dyn_degree_estimate(seq({2, 4, 8, 16, 32, 64})) == doctest::Approx(2.0));
  CHECK(dyn_degree_estimate(seq({3, 9, 27, 81, 243, 729})) == doctest::Approx(3.0));
  // Pell recurrence d(n+1) = 2 d(n) + d(n-1); the ratio tends to 1 + sqrt(2).
  const double pell = dyn_degree_estimate(seq({2, 5, 12, 29, 70, 169}));
  CHECK(std::abs(pell - (1.0 + std::sqrt(2.0))) < 5e-3);
  const auto r = classify_growth(seq({2, 5, 12, 29, 70, 169}));
  CHECK(r.samples == 3);
  CHECK(r.growth_constant_estimate.has_value());
  CHECK_THROWS_AS(dyn_degree_estimate(seq({2, 3, 4, 5, 6, 7})), DomainError);
}

TEST_CASE("property: synthetic sequences classify by construction") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> small(1, 6), len(6, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = len(rng), a = small(rng), b = small(rng), c = small(rng);
    std::vector<int> lin, quad, expo, per;
    for (int k = 0; k < n; ++k) {
      lin.push_back(a * k + b);
      quad.push_back(a * k * k + b * k + c);
      per.push_back(1 + (k % (1 + c % 3)) * b);
    }
    const int base = 2 + small(rng) % 3;
    long v = c;
    for (int k = 0; k < std::min(n, 14); ++k, v *= base) expo.push_back(static_cast<int>(v));
    CHECK(classify_growth(lin).growth == GrowthClass::Linear);
    CHECK(classify_growth(quad).growth == GrowthClass::Quadratic);
    CHECK(classify_growth(per).growth == GrowthClass::Bounded);
    const auto e = classify_growth(expo);
    CHECK(e.growth == GrowthClass::Exponential);
    CHECK(*e.dyn_degree_estimate == doctest::Approx(base));
    // Eventual behaviour only: dropping the first two entries keeps the class.
    for (const auto* s : {&lin, &quad, &expo}) {
      if (s->size() < 8) continue;
      const std::vector<int> tail(s->begin() + 2, s->end());
      CHECK(classify_growth(tail).growth == classify_growth(*s).growth);
    }
  }
}

TEST_CASE("property: elementary automorphisms have bounded degrees") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const BirMap f = M(gen::elementary(rng));
    const auto r = growth_of(f, 12);
    CHECK(r.growth == GrowthClass::Bounded);
    CHECK(*std::max_element(r.degrees.begin(), r.degrees.end()) <= degree(f));
  }
}

TEST_CASE("property: torus twists grow linearly") {
  std::mt19937 rng(78);
  std::uniform_int_distribution<int> p(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int e = p(rng);
    const BirMap f = M("(" + gen::small_scalar(rng) + "*x, " + gen::small_scalar(rng) + "*x^" + std::to_string(e) + "*y)");
    const auto r = growth_of(f, 16);
    CHECK(r.growth == GrowthClass::Linear);
    CHECK(r.degrees[1] - r.degrees[0] == e);
  }
}

}  // TEST_SUITE
