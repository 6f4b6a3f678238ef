#include <doctest.h>

#include <random>

#include "cremona/birmap.hpp"
#include "cremona/errors.hpp"
#include "cremona/parser.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace cremona;

namespace {

BirMap M(const std::string& s) { return io::parse_map(s); }
std::string R(const BirMap& f) { return io::render_map(f); }

ProjMap P(const std::string& s) { return to_proj(M(s)); }


// The composite f o g agrees with the oracle at sample points.
void check_composite(const std::string& f, const std::string& g, const BirMap& fg, std::mt19937& rng) {
  const std::string text = R(fg);
  int agree = 0, defined = 0;
  for (int k = 0; k < 8; ++k) {
    const auto x = oracle::random_cq(rng), y = oracle::random_cq(rng);
    const auto expect = oracle::eval_composite(f, g, x, y);
    const auto got = oracle::eval_map(text, x, y);
    if (!expect || !got) continue;
    ++defined;
    if ((*expect)[0] == (*got)[0] && (*expect)[1] == (*got)[1]) ++agree;
  }
  CHECK_MESSAGE(agree == defined, f << " o " << g << " = " << text);
  CHECK(defined > 0);
}

}  // namespace

TEST_SUITE("birmap") {

TEST_CASE("projective triples from affine pairs") {
  const ProjMap f = P("(x, x*y)");
  CHECK(f.to_string() == "[x*z : x*y : z^2]");
  CHECK(f.degree() == 2);
  CHECK(P("(x, y)").to_string() == "[x : y : z]");
  const ProjMap inv = P("(1/x, 1/y)");
  CHECK(inv.degree() == 2);
  CHECK(proj_equal(inv, std::get<ProjMap>(M("[y*z : x*z : x*y]"))));
  CHECK_THROWS_AS(io::parse_map("(1, 2)"), DomainError);
  CHECK_THROWS_AS(io::parse_map("(x + y, 2*x + 2*y)"), ShapeError);
}

TEST_CASE("projective composition clears common factors") {
  const ProjMap f = P("(x, x*y)");
  const ProjMap ff = compose(f, f);
  CHECK(ff.to_string() == "[x*z^2 : x^2*y : z^3]");
  CHECK(ff.degree() == 3);
  CHECK(ff.degree() < f.degree() * f.degree());
  CHECK(proj_equal(compose(f, ProjMap::identity()), f));
  const ProjMap s = std::get<ProjMap>(M("[y*z : x*z : x*y]"));
  CHECK(is_identity(compose(s, s)));
}

TEST_CASE("projective equality") {
  CHECK(proj_equal(std::get<ProjMap>(M("[x : y : z]")), std::get<ProjMap>(M("[2*x : 2*y : 2*z]"))));
  CHECK_FALSE(proj_equal(std::get<ProjMap>(M("[x : y : z]")), std::get<ProjMap>(M("[y : x : z]"))));
  const BirMap d1 = M("(2*x, 3*y)"), d2 = M("(5*x, -y)");
  CHECK(map_equal(commutator(to_proj(d1), to_proj(d2)), ProjMap::identity()));
}

TEST_CASE("property: projective equality ignores scalars and common factors") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const ProjMap f = to_proj(M(gen::jonq_any(rng)));
    const auto& c = f.components();
    const TriPoly factor =
        TriPoly::var(0) + TriPoly::var(1).scaled(io::parse_scalar(gen::small_scalar(rng))) - TriPoly::var(2);
    const GaussRational k = GaussRational(3) + GaussRational::i();
    const ProjMap g({c[0].scaled(k) * factor, c[1].scaled(k) * factor, c[2].scaled(k) * factor});
    CHECK(proj_equal(f, g));
    CHECK(proj_equal(g, f));
    CHECK(g.components() == f.components());  // normalization makes the representation unique
  }
}

TEST_CASE("de Jonquieres composition and inverse") {
  CHECK(R(compose(M("(x, x*y)"), M("(2*x, x*y)"))) == "(2*x, 2*x^2*y)");
  CHECK(R(inverse(M("(-x, x*y)"))) == "(-x, -y/x)");
  const BirMap f = M("(x + 1, (x*y + 1)/(y + 2))");
  CHECK(is_identity(compose(f, inverse(f))));
  CHECK(is_jonq(compose(f, inverse(f))));
}

TEST_CASE("conversion to projective form") {
  CHECK(P("(x, x*y)").to_string() == "[x*z : x*y : z^2]");
  CHECK(P("(2*x, 3*y)").to_string() == "[x : 3/2*y : 1/2*z]");
  CHECK(proj_equal(P("(2*x, 3*y)"), std::get<ProjMap>(M("[2*x : 3*y : z]"))));
  const ProjMap q = P("(x, y + x^2)");
  CHECK(q.degree() == 2);
  CHECK(proj_equal(q, std::get<ProjMap>(M("[x*z : y*z + x^2 : z^2]"))));
}

TEST_CASE("words and commutators") {
  Bindings b{{"f", M("(x, x*y)")}, {"g", M("(2*x, x*y)")}};
  CHECK(R(word_eval(MapWord::parse("f g f^-1 g^-1"), b)) == "(x, 2*y)");
  CHECK(is_identity(word_eval(MapWord::parse("f^0"), b)));
  CHECK(is_identity(word_eval(MapWord::parse("f^2 f^-2"), b)));
  CHECK(MapWord::commutator_power("f", "g", 3).to_string() == "f^3 g^3 f^-3 g^-3");
  CHECK_THROWS_AS(word_eval(MapWord::parse("f k"), b), DomainError);
  CHECK_THROWS_AS(MapWord::parse("f ^"), ParseError);

  CHECK(R(commutator(M("(x, x*y)"), M("(2*x, x*y)"))) == "(x, 2*y)");
  CHECK(R(commutator(M("(x + y^2, y + 1)"), M("(x + y, y)"))) == "(x - 1, y)");
  CHECK(is_identity(commutator(M("(2*x, 3*y)"), M("(-x, 1/2*y)"))));
}

TEST_CASE("raw projective bindings need explicit inverses") {
  const ProjMap henon = P("(y, y^2 + x)");
  Bindings raw{{"h", BirMap(henon)}};
  CHECK(degree(word_eval(MapWord::parse("h h"), raw)) == 4);
  CHECK_THROWS_AS(word_eval(MapWord::parse("h^-1"), raw), InverseUnavailable);
  Bindings with_inverse{{"h", Binding(BirMap(henon), M("(y - x^2, x)"))}};
  CHECK(is_identity(word_eval(MapWord::parse("h h^-1"), with_inverse)));
}

TEST_CASE("inverse of a bracketed triple of de Jonquieres shape") {
  const BirMap f = M("[x*z + y^2 : y*z : z^2]");
  CHECK(is_identity(compose(f, inverse(f))));
  CHECK_THROWS_AS(inverse(BirMap(P("(y, y^2 + x)"))), InverseUnavailable);
}

TEST_CASE("property: de Jonquieres and projective paths agree") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    const std::string ft = gen::jonq_any(rng), gt = gen::jonq_any(rng);
    const BirMap f = M(ft), g = M(gt);
    const BirMap fg = compose(f, g);
    CHECK(proj_equal(to_proj(fg), compose(to_proj(f), to_proj(g))));
    CHECK(degree(fg) <= degree(f) * degree(g));
    check_composite(ft, gt, fg, rng);
  }
}

TEST_CASE("property: inverses are two-sided in both representations") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const BirMap f = M(gen::jonq_any(rng));
    const BirMap fi = inverse(f);
    CHECK(is_identity(compose(f, fi)));
    CHECK(is_identity(compose(fi, f)));
    CHECK(is_identity(compose(to_proj(f), to_proj(fi))));
  }
  for (int trial = 0; trial < 20; ++trial) {
    const BirMap lin = M("(x + " + gen::small_scalar(rng) + "*y + 1, " + gen::small_scalar(rng) + "*y - x)");
    const BirMap p = to_proj(lin);
    CHECK(is_identity(compose(p, inverse(p))));
  }
}

TEST_CASE("property: commutators of same-base diagonal fibre maps are (x, k*y)") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    const std::string k1 = gen::small_scalar(rng), k2 = gen::small_scalar(rng);
    const BirMap f = M("(" + k1 + "*x, " + gen::small_scalar(rng) + "*y)");
    const BirMap g = M("(" + k2 + "*x, " + gen::small_scalar(rng) + "*y)");
    const BirMap h = commutator(f, g);
    REQUIRE(is_jonq(h));
    const auto& j = std::get<JonqMap>(h);
    CHECK(j.eta().is_identity());
    const auto m = j.multiplier();
    REQUIRE(m.has_value());
    CHECK(m->is_constant());
  }
}

TEST_CASE("property: projective equality is an equivalence relation") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::string t = gen::jonq_any(rng);
    const ProjMap a = to_proj(M(t));
    const ProjMap b = compose(a, ProjMap::identity());
    const ProjMap c = compose(ProjMap::identity(), b);
    CHECK(proj_equal(a, a));
    CHECK(proj_equal(a, b) == proj_equal(b, a));
    if (proj_equal(a, b) && proj_equal(b, c)) CHECK(proj_equal(a, c));
  }
}

TEST_CASE("rebasing maps with constant fibre matrices") {
  const JonqMap d = std::get<JonqMap>(M("(2*x, 3*y)"));
  const auto other = rebase(d, d.base() == Axis::X ? Axis::Y : Axis::X);
  REQUIRE(other.has_value());
  CHECK(proj_equal(to_proj(*other), to_proj(d)));
  CHECK_FALSE(rebase(std::get<JonqMap>(M("(x, x*y)")), Axis::Y).has_value());
}

}  // TEST_SUITE
