#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "resint/resolution.hpp"

using namespace resint;

namespace {

GFRing ringXY() { return GFRing(GF(32003), {"x", "y"}); }

GFRing matrixRing(int n) {
  std::vector<std::string> names;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= n; ++c)
      names.push_back("x[" + std::to_string(r) + "," + std::to_string(c) + "]");
  return GFRing(GF(32003), names);
}

PolyList allMinors(const GFRing& ring, int n) {
  PolyList out;
  auto var = [&](int r, int c) { return ring.var((r - 1) * n + (c - 1)); };
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      out.push_back(ring.sub(ring.mul(var(1, p), var(2, q)), ring.mul(var(1, q), var(2, p))));
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("Koszul resolution of the residue field, two variables") {
  auto r = ringXY();
  auto m = quotientRingModule(r, {parsePoly(r, "x"), parsePoly(r, "y")});
  auto res = minimalResolution(r, m);
  auto b = bettiTable(res);
  CHECK(b.pd() == 2);
  CHECK(b.total(0) == 1);
  CHECK(b.total(1) == 2);
  CHECK(b.total(2) == 1);
  CHECK(sorted(b.twists[1]) == std::vector<int>{1, 1});
  CHECK(sorted(b.twists[2]) == std::vector<int>{2});
  CHECK(b.regularity() == 0);
  CHECK(depthFromResolution(r, res) == 0);
  CHECK(validateResolution(r, m, res));
}

TEST_CASE("Koszul resolution, three variables") {
  GFRing r(GF(32003), {"x", "y", "z"});
  auto m = quotientRingModule(r, {parsePoly(r, "x"), parsePoly(r, "y"), parsePoly(r, "z")});
  auto res = minimalResolution(r, m);
  auto b = bettiTable(res);
  CHECK(b.pd() == 3);
  CHECK(b.total(1) == 3);
  CHECK(b.total(2) == 3);
  CHECK(b.total(3) == 1);
  CHECK(validateResolution(r, m, res));
}

TEST_CASE("resolution of S/(x^2, x*y)") {
  auto r = ringXY();
  auto m = quotientRingModule(r, {parsePoly(r, "x^2"), parsePoly(r, "x*y")});
  auto res = minimalResolution(r, m);
  auto b = bettiTable(res);
  CHECK(b.pd() == 2);
  CHECK(sorted(b.twists[1]) == std::vector<int>{2, 2});
  CHECK(sorted(b.twists[2]) == std::vector<int>{3});
  CHECK(b.regularity() == 1);
  CHECK(depthFromResolution(r, res) == 0);
  CHECK(validateResolution(r, m, res));
}

TEST_CASE("Eagon-Northcott shape for the 2x4 minor ideal") {
  auto r = matrixRing(4);
  auto m = quotientRingModule(r, allMinors(r, 4));
  auto res = minimalResolution(r, m);
  auto b = bettiTable(res);
  CHECK(b.pd() == 3);
  CHECK(b.total(0) == 1);
  CHECK(b.total(1) == 6);
  CHECK(b.total(2) == 8);
  CHECK(b.total(3) == 3);
  CHECK(b.graded(1, 2) == 6);
  CHECK(b.graded(2, 3) == 8);
  CHECK(b.graded(3, 4) == 3);
  CHECK(b.regularity() == 1);
  CHECK(depthFromResolution(r, res) == 5);
  CHECK(validateResolution(r, m, res));
}

TEST_CASE("free and zero modules") {
  auto r = ringXY();
  // S(-2)^2 free: no relations
  Subquotient free = cokernel(FreeModule::free(2, 2), {});
  auto res = minimalResolution(r, free);
  CHECK(res.length() == 0);
  CHECK(bettiTable(res).total(0) == 2);
  CHECK(depthFromResolution(r, res) == 2);
  CHECK(validateResolution(r, free, res));
  // zero module
  auto z = quotientRingModule(r, {r.fromInt(1)});
  auto zres = minimalResolution(r, z);
  CHECK(zres.isZeroModule());
  CHECK_THROWS_AS(depthFromResolution(r, zres), std::invalid_argument);
  CHECK(validateResolution(r, z, zres));
}

TEST_CASE("subquotient (x,y)/(x,y)^2 resolves like k(-1)^2") {
  auto r = ringXY();
  Subquotient m;
  m.ambient = FreeModule::free(1);
  m.sub.push_back(polyToElem(parsePoly(r, "x")));
  m.sub.push_back(polyToElem(parsePoly(r, "y")));
  for (const char* s : {"x^2", "x*y", "y^2"}) m.rel.push_back(polyToElem(parsePoly(r, s)));
  auto hs = subqHilbert(r, m);
  CHECK(seriesEqual(hs, HilbertSeries{{2}, 1, 0}));
  auto res = minimalResolution(r, m);
  auto b = bettiTable(res);
  CHECK(b.pd() == 2);
  CHECK(sorted(b.twists[0]) == std::vector<int>{1, 1});
  CHECK(sorted(b.twists[1]) == std::vector<int>{2, 2, 2, 2});
  CHECK(sorted(b.twists[2]) == std::vector<int>{3, 3});
  CHECK(validateResolution(r, m, res));
}

TEST_CASE("redundant generators are pruned from F0") {
  auto r = ringXY();
  Subquotient m;
  m.ambient = FreeModule::free(1);
  // x, y, and x+y generate the same module as x, y
  m.sub.push_back(polyToElem(parsePoly(r, "x")));
  m.sub.push_back(polyToElem(parsePoly(r, "y")));
  m.sub.push_back(polyToElem(parsePoly(r, "x + y")));
  auto res = minimalResolution(r, m);
  CHECK(bettiTable(res).total(0) == 2);
  CHECK(validateResolution(r, m, res));
}

TEST_CASE("validator rejects corrupted resolutions") {
  auto r = ringXY();
  auto m = quotientRingModule(r, {parsePoly(r, "x^2"), parsePoly(r, "x*y")});
  auto res = minimalResolution(r, m);
  REQUIRE(validateResolution(r, m, res));
  auto broken = res;
  // tamper with a coefficient in the last map
  auto& col = broken.maps.back().front();
  col.terms.front().c = r.field().add(col.terms.front().c, 1);
  CHECK(!validateResolution(r, m, broken));
}

TEST_CASE("random quotients validate") {
  GFRing r(GF(32003), {"x", "y", "z"});
  std::mt19937_64 rng(17);
  auto randomHomog = [&](int deg, int nTerms) {
    std::vector<Term<GF>> ts;
    for (int t = 0; t < nTerms; ++t) {
      Monomial m;
      for (int k = 0; k < deg; ++k) {
        int v = (int)(rng() % 3);
        m.set(v, m[v] + 1);
      }
      ts.push_back({m, r.field().fromInt((long long)(rng() % 32002) + 1)});
    }
    return r.make(std::move(ts));
  };
  for (int trial = 0; trial < 4; ++trial) {
    PolyList gens = {randomHomog(2, 2), randomHomog(2, 2), randomHomog(3, 3)};
    auto m = quotientRingModule(r, gens);
    auto res = minimalResolution(r, m);
    CHECK(validateResolution(r, m, res));
    CHECK(bettiTable(res).pd() <= 3);
  }
}
