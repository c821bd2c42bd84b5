#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "resint/homol.hpp"

using namespace resint;

namespace {

GFRing ringXY() { return GFRing(GF(32003), {"x", "y"}); }

PolyList ideal(const GFRing& r, std::initializer_list<const char*> gens) {
  PolyList out;
  for (const char* g : gens) out.push_back(parsePoly(r, g));
  return out;
}

GFElem unitVec(int comp) {
  GFElem e;
  e.terms.push_back({comp, Monomial::one(), 1});
  return e;
}

// S(b) as a subquotient: one free generator in degree -b
Subquotient twistedFree(int degree) {
  return Subquotient{FreeModule::free(1, degree), {unitVec(0)}, {}};
}

HilbertSeries freeHS(int numVars, int genDegree) {
  return HilbertSeries{{1}, genDegree, numVars};
}

}  // namespace

TEST_CASE("Ext against S of the residue field is k placed in degree -n") {
  auto r = ringXY();
  auto m = quotientRingModule(r, ideal(r, {"x", "y"}));
  auto res = minimalResolution(r, m);

  CHECK(subqIsZero(r, extModule(r, res, 0)));
  CHECK(subqIsZero(r, extModule(r, res, 1)));

  auto e2 = extModule(r, res, 2);
  auto hs = subqHilbert(r, e2);
  CHECK(!hs.isZero());
  CHECK(seriesDim(hs) == 0);
  CHECK(seriesCoeff(hs, -2) == 1);
  CHECK(seriesCoeff(hs, -1) == 0);
  CHECK(seriesCoeff(hs, 0) == 0);
  CHECK(subqLength(r, e2) == 1);

  CHECK(extModule(r, res, -1).ambient.rank() == 0);
  CHECK(extModule(r, res, 3).ambient.rank() == 0);
}

TEST_CASE("Ext of a free module: identity in degree zero, nothing above") {
  auto r = ringXY();
  auto s = quotientRingModule(r, {});
  auto res = minimalResolution(r, s);
  CHECK(res.length() == 0);
  CHECK(seriesEqual(subqHilbert(r, extModule(r, res, 0)), freeHS(2, 0)));
  CHECK(extModule(r, res, 1).ambient.rank() == 0);
  CHECK(extModule(r, res, 2).ambient.rank() == 0);

  // a twisted free generator dualizes to the opposite twist
  auto e0 = extModule(r, twistedFree(1), 0);
  CHECK(seriesEqual(subqHilbert(r, e0), freeHS(2, -1)));
}

TEST_CASE("canonical module of a hypersurface") {
  auto r = ringXY();
  auto a = ideal(r, {"x"});
  auto w = canonicalModule(r, a);
  // omega of S/(f), deg f = d, is S/(f) twisted by d - n
  CHECK(seriesEqual(subqHilbert(r, w), seriesShift(idealHilbert(r, a), 1)));
}

TEST_CASE("canonical module of a complete intersection") {
  auto r = ringXY();
  auto a = ideal(r, {"x^2", "y^3"});
  auto hsR = idealHilbert(r, a);
  auto w = canonicalModule(r, a);
  // omega = R(sum of degrees - n) = R(3); series picks up t^{-3}
  CHECK(seriesEqual(subqHilbert(r, w), seriesShift(hsR, -3)));

  // complete intersections have exactly one nonvanishing Ext
  auto res = minimalResolution(r, quotientRingModule(r, a));
  CHECK(subqIsZero(r, extModule(r, res, 0)));
  CHECK(subqIsZero(r, extModule(r, res, 1)));
  CHECK(!subqIsZero(r, extModule(r, res, 2)));
}

TEST_CASE("Hom basics") {
  auto r = ringXY();
  auto s = quotientRingModule(r, {});

  SUBCASE("Hom(S/(x), S) vanishes") {
    auto m = quotientRingModule(r, ideal(r, {"x"}));
    CHECK(subqIsZero(r, homModule(r, m, s)));
  }

  SUBCASE("Hom(S(-1), S) = S(1)") {
    auto h = homModule(r, twistedFree(1), s);
    CHECK(seriesEqual(subqHilbert(r, h), freeHS(2, -1)));
  }

  SUBCASE("endomorphisms of a cyclic module are the module itself") {
    auto a = ideal(r, {"x*y"});
    auto m = quotientRingModule(r, a);
    auto h = homModule(r, m, m);
    CHECK(seriesEqual(subqHilbert(r, h), idealHilbert(r, a)));
  }

  SUBCASE("Hom(S/(x^2), S/(x)) = S/(x)") {
    auto m = quotientRingModule(r, ideal(r, {"x^2"}));
    auto n = quotientRingModule(r, ideal(r, {"x"}));
    CHECK(seriesEqual(subqHilbert(r, homModule(r, m, n)), idealHilbert(r, ideal(r, {"x"}))));
  }
}

TEST_CASE("unmixedness flags the embedded prime of (x^2, xy)") {
  auto r = ringXY();
  auto u = unmixednessTest(r, ideal(r, {"x^2", "x*y"}));
  CHECK(!u.unmixed);
  CHECK(u.offendingK == 2);

  CHECK(unmixednessTest(r, ideal(r, {"x"})).unmixed);
  CHECK(unmixednessTest(r, ideal(r, {"x^2", "y^3"})).unmixed);
  CHECK(unmixednessTest(r, ideal(r, {"1"})).unmixed);
}

TEST_CASE("two disjoint planes: unmixed but not Cohen-Macaulay") {
  GFRing r(GF(32003), {"x", "y", "z", "w"});
  auto a = ideal(r, {"x*z", "x*w", "y*z", "y*w"});
  CHECK(unmixednessTest(r, a).unmixed);

  auto res = minimalResolution(r, quotientRingModule(r, a));
  CHECK(localCohomologyProfile(r, res) == std::vector<int>{1, 2});

  // the middle cohomology is one copy of k in degree 0, so the dual Ext
  // sits in degree -n
  auto e3 = extModule(r, res, 3);
  CHECK(subqLength(r, e3) == 1);
  CHECK(seriesCoeff(subqHilbert(r, e3), -4) == 1);
}

TEST_CASE("local cohomology profiles of small modules") {
  auto r = ringXY();
  auto profile = [&](std::initializer_list<const char*> gens) {
    return localCohomologyProfile(r, quotientRingModule(r, ideal(r, gens)));
  };
  CHECK(profile({"x", "y"}) == std::vector<int>{0});
  CHECK(profile({}) == std::vector<int>{2});
  CHECK(profile({"x"}) == std::vector<int>{1});
  CHECK(profile({"x^2", "x*y"}) == std::vector<int>{0, 1});
}

TEST_CASE("profile endpoints agree with depth and dimension") {
  auto r = ringXY();
  auto check = [&](const Subquotient& m) {
    auto res = minimalResolution(r, m);
    auto p = localCohomologyProfile(r, res);
    REQUIRE(!p.empty());
    CHECK(p.front() == depthFromResolution(r, res));
    CHECK(p.back() == seriesDim(subqHilbert(r, m)));
  };
  check(quotientRingModule(r, ideal(r, {"x^2", "x*y"})));
  check(quotientRingModule(r, ideal(r, {"x^3", "y^2"})));
  ModOps<GF> ops(r.field(), ModOrder::top(r.order()));
  auto col = ops.make({{0, Monomial::var(0, 1), 1}, {1, Monomial::var(1, 1), 1}});
  check(cokernel(FreeModule::free(2), {col}));
}

TEST_CASE("finite length values") {
  auto r = ringXY();
  CHECK(subqLength(r, quotientRingModule(r, ideal(r, {"x", "y"}))) == 1);
  CHECK(subqLength(r, quotientRingModule(r, ideal(r, {"x^2", "x*y", "y^2"}))) == 3);
  CHECK_THROWS(subqLength(r, quotientRingModule(r, ideal(r, {"x"}))));
  CHECK(subqLength(r, quotientRingModule(r, ideal(r, {"1"}))) == 0);
}

TEST_CASE("graded dual transform on a module with embedded torsion") {
  auto r = ringXY();
  // H^0 of S/(x^2, xy) is k in degree 1; its dual Ext^2 must be k in -1-n
  auto res = minimalResolution(r, quotientRingModule(r, ideal(r, {"x^2", "x*y"})));
  auto hs2 = subqHilbert(r, extModule(r, res, 2));
  CHECK(subqLength(r, extModule(r, res, 2)) == 1);
  CHECK(seriesCoeff(hs2, -3) == 1);
}

TEST_CASE("minors of a generic 2x3 matrix: Cohen-Macaulay, endomorphisms trivial") {
  std::vector<std::string> names;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j)
      names.push_back("x[" + std::to_string(i) + "," + std::to_string(j) + "]");
  GFRing r(GF(32003), names);
  auto v = [&](int i, int j) { return r.var((i - 1) * 3 + (j - 1)); };
  PolyList minors;
  for (int p = 1; p <= 3; ++p)
    for (int q = p + 1; q <= 3; ++q)
      minors.push_back(r.sub(r.mul(v(1, p), v(2, q)), r.mul(v(1, q), v(2, p))));

  CHECK(unmixednessTest(r, minors).unmixed);
  auto res = minimalResolution(r, quotientRingModule(r, minors));
  CHECK(localCohomologyProfile(r, res) == std::vector<int>{4});

  auto w = canonicalModule(r, minors);
  auto hsW = subqHilbert(r, w);
  CHECK(seriesDim(hsW) == 4);
  // R is normal CM, so Hom(omega, omega) = R
  CHECK(seriesEqual(subqHilbert(r, homModule(r, w, w)), idealHilbert(r, minors)));
}
