#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "resint/idealops.hpp"

using namespace resint;

namespace {

GFRing ringXY() { return GFRing(GF(32003), {"x", "y"}); }
GFRing ringXYZ() { return GFRing(GF(32003), {"x", "y", "z"}); }

// 2 x n matrix of indeterminates x[r,c], row major
GFRing matrixRing(int n) {
  std::vector<std::string> names;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= n; ++c)
      names.push_back("x[" + std::to_string(r) + "," + std::to_string(c) + "]");
  return GFRing(GF(32003), names);
}

GFPoly minor2(const GFRing& ring, int n, int p, int q) {
  // x[1,p]*x[2,q] - x[1,q]*x[2,p], columns 1-based
  auto var = [&](int r, int c) { return ring.var((r - 1) * n + (c - 1)); };
  return ring.sub(ring.mul(var(1, p), var(2, q)), ring.mul(var(1, q), var(2, p)));
}

PolyList allMinors(const GFRing& ring, int n) {
  PolyList out;
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) out.push_back(minor2(ring, n, p, q));
  return out;
}

std::vector<std::string> strs(const GFRing& r, const PolyList& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(printPoly(r, f));
  return out;
}

}  // namespace

TEST_CASE("hilbert series basics") {
  auto r = ringXYZ();
  // free ring
  auto hsFree = idealHilbert(r, {});
  CHECK(seriesDim(hsFree) == 3);
  CHECK(seriesCoeff(hsFree, 0) == 1);
  CHECK(seriesCoeff(hsFree, 5) == 21);
  // hypersurface
  auto hsX = idealHilbert(r, {parsePoly(r, "x")});
  CHECK(seriesDim(hsX) == 2);
  CHECK(seriesCoeff(hsX, 4) == 5);
  // unit ideal: zero module
  auto hsUnit = idealHilbert(r, {parsePoly(r, "3")});
  CHECK(hsUnit.isZero());
  CHECK(seriesDim(hsUnit) == -1);
}

TEST_CASE("hilbert series of a finite-length quotient") {
  auto r = ringXY();
  auto hs = idealHilbert(r, {parsePoly(r, "x^2"), parsePoly(r, "x*y"), parsePoly(r, "y^2")});
  CHECK(seriesDim(hs) == 0);
  CHECK(seriesDegree(hs) == 3);  // length 1 + 2
  CHECK(seriesCoeff(hs, 0) == 1);
  CHECK(seriesCoeff(hs, 1) == 2);
  CHECK(seriesCoeff(hs, 2) == 0);
  CHECK(seriesToString(hs) == "(1 - 3*t^2 + 2*t^3)/(1-t)^2");
}

TEST_CASE("series arithmetic and equality") {
  HilbertSeries a{{1, -1}, 0, 1};  // (1-t)/(1-t) = 1
  HilbertSeries b{{1}, 0, 0};
  CHECK(seriesEqual(a, b));
  CHECK(seriesEqual(seriesShift(b, 3), HilbertSeries{{1}, 3, 0}));
  auto c = seriesSub(a, b);
  CHECK(c.isZero());
  // (1+t)^2 = 1+2t+t^2
  HilbertSeries u{{1, 1}, 0, 0};
  CHECK(seriesEqual(seriesMulNum(u, u), HilbertSeries{{1, 2, 1}, 0, 0}));
}

TEST_CASE("2x4 minors: codim, degree, Hilbert function") {
  auto r = matrixRing(4);
  auto I = allMinors(r, 4);
  auto gb = idealGroebner(r, I);
  CHECK(gb->size() == 6);  // the minors are already a Groebner basis
  auto hs = idealHilbert(r, I);
  CHECK(seriesDim(hs) == 5);
  CHECK(idealCodim(r, I) == 3);
  CHECK(seriesDegree(hs) == 4);
  // sections of O(d,d) on P1 x P3
  long long expect[5] = {1, 8, 30, 80, 175};
  for (int d = 0; d < 5; ++d) CHECK(seriesCoeff(hs, d) == expect[d]);
}

TEST_CASE("powers of the minor ideal have the predicted generator counts") {
  auto r = matrixRing(4);
  auto I = allMinors(r, 4);
  auto I2 = idealPower(r, I, 2);
  CHECK(I2.size() == 20);
  auto I3 = idealProduct(r, I2, I);
  CHECK(I3.size() == 50);
  auto I4 = idealProduct(r, I3, I);
  CHECK(I4.size() == 105);
  CHECK(sameDegreeRank(r, I2) == 20);
}

TEST_CASE("intersection") {
  auto r = ringXYZ();
  auto res = idealIntersection(r, {parsePoly(r, "x")}, {parsePoly(r, "y")});
  REQUIRE(res.size() == 1);
  CHECK(printPoly(r, res[0]) == "x*y");
  auto res2 = idealIntersection(r, {parsePoly(r, "x"), parsePoly(r, "y")}, {parsePoly(r, "z")});
  auto canon = idealGroebner(r, res2);
  auto expect = idealGroebner(r, {parsePoly(r, "x*z"), parsePoly(r, "y*z")});
  CHECK(strs(r, *canon) == strs(r, *expect));
}

TEST_CASE("quotient and saturation") {
  auto r = ringXY();
  PolyList A = {parsePoly(r, "x^2"), parsePoly(r, "x*y")};
  auto q = idealQuotient(r, A, {parsePoly(r, "x")});
  auto canon = idealGroebner(r, q);
  CHECK(strs(r, *canon) == std::vector<std::string>{"y", "x"});
  auto qi = idealQuotient(r, A, {parsePoly(r, "x"), parsePoly(r, "y")});
  auto canon2 = idealGroebner(r, qi);
  CHECK(strs(r, *canon2) == std::vector<std::string>{"x"});
  auto sat = idealSaturation(r, A, parsePoly(r, "y"));
  auto canon3 = idealGroebner(r, sat);
  CHECK(strs(r, *canon3) == std::vector<std::string>{"x"});
}

TEST_CASE("zero divisor test") {
  auto r = ringXY();
  PolyList A = {parsePoly(r, "x*y")};
  CHECK(!isNzd(r, parsePoly(r, "x"), A));
  CHECK(isNzd(r, parsePoly(r, "x + y"), A));
}

TEST_CASE("membership") {
  auto r = ringXY();
  PolyList A = {parsePoly(r, "x^2 - y^2"), parsePoly(r, "x*y")};
  CHECK(idealContains(r, A, parsePoly(r, "x^3 + y^3")));
  CHECK(!idealContains(r, A, parsePoly(r, "x")));
  CHECK(idealContains(r, A, r.zero()));
}

TEST_CASE("elimination") {
  auto r = ringXYZ();
  PolyList A = {parsePoly(r, "x^2 - y*z"), parsePoly(r, "x*y")};
  auto e = eliminate(r, A, 1);
  CHECK(!e.inhomogeneousInput);
  REQUIRE(e.gens.size() == 1);
  CHECK(printPoly(r, e.gens[0]) == "y^2*z");
  auto e2 = eliminate(r, {parsePoly(r, "x - y^2"), parsePoly(r, "x")}, 1);
  CHECK(e2.inhomogeneousInput);
  auto canon = idealGroebner(r, e2.gens);
  CHECK(strs(r, *canon) == std::vector<std::string>{"y^2"});
}

TEST_CASE("disk cache round trip") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / ("resint-test-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  auto r = ringXY();
  PolyList A = {parsePoly(r, "x^2 - y^2"), parsePoly(r, "x*y")};
  std::vector<std::string> first;
  {
    GbCache cache(dir.string());
    GbEnv env{&cache, nullptr};
    first = strs(r, *idealGroebner(r, A, env));
  }
  // fresh process-level cache, same directory: must come back identical
  {
    GbCache cache(dir.string());
    GbEnv env{&cache, nullptr};
    CHECK(strs(r, *idealGroebner(r, A, env)) == first);
  }
  // manifest exists alongside the payload
  bool sawJson = false, sawTxt = false;
  for (const auto& p : fs::directory_iterator(dir)) {
    if (p.path().extension() == ".json") sawJson = true;
    if (p.path().extension() == ".txt") sawTxt = true;
  }
  CHECK(sawJson);
  CHECK(sawTxt);
  fs::remove_all(dir);
}

TEST_CASE("random ideal identities") {
  auto r = ringXYZ();
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
    PolyList A = {randomHomog(2, 2), randomHomog(3, 2)};
    PolyList B = {randomHomog(2, 2)};
    auto inter = idealIntersection(r, A, B);
    for (const auto& f : inter) {
      CHECK(idealContains(r, A, f));
      CHECK(idealContains(r, B, f));
    }
    GFPoly f = randomHomog(1, 2);
    auto q = idealQuotient(r, A, {f});
    for (const auto& g : q) CHECK(idealContains(r, A, r.mul(g, f)));
    // saturation contains the colon
    auto sat = idealSaturation(r, A, f);
    for (const auto& g : q) CHECK(idealContains(r, sat, g));
    // Hilbert additivity: HS(S/A) + HS(S/B) = HS(S/(A+B)) + HS(S/(A cap B))
    auto lhs = seriesAdd(idealHilbert(r, A), idealHilbert(r, B));
    auto rhs = seriesAdd(idealHilbert(r, idealSum(r, A, B)), idealHilbert(r, inter));
    CHECK(seriesEqual(lhs, rhs));
  }
}
