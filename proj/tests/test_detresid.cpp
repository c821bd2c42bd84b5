#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "resint/detresid.hpp"
#include "resint/resolution.hpp"

using namespace resint;

namespace {

GbCache& cache() {
  static GbCache c;
  return c;
}

GbEnv env() { return GbEnv{&cache(), nullptr}; }

const DetContext& ctx4() {
  static DetContext ctx = buildContext(4, 32003, env());
  return ctx;
}

const ResidualChain& chain4() {
  static ResidualChain chain = residualChain(ctx4(), sparseReduction(ctx4(), env()), 17, env());
  return chain;
}

long long binom(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (long long s = 0; s < b; ++s) r = r * (a - s) / (s + 1);
  return r;
}

// dimension of the degree-d part of the Grassmannian coordinate ring
long long closedFormH(int n, int d) {
  return binom(n + d - 1, d + 1) * binom(n + d - 2, d) / (n - 1);
}

int depthOfM(int i, int j) {
  auto res = minimalResolution(ctx4().ring, moduleM(ctx4(), chain4(), i, j, env()), env());
  return depthFromResolution(ctx4().ring, res);
}

}  // namespace

TEST_CASE("context construction and minor indexing") {
  const auto& ctx = ctx4();
  CHECK(ctx.n == 4);
  CHECK(ctx.g == 3);
  CHECK(ctx.ell == 5);
  CHECK(ctx.ring.numVars() == 8);
  CHECK(ctx.minors.size() == 6);
  CHECK(minorIndex(ctx, 1, 2) == 0);
  CHECK(minorIndex(ctx, 2, 3) == 3);
  CHECK(minorIndex(ctx, 3, 4) == 5);
  for (const auto& d : ctx.minors) {
    CHECK(d.degree() == 2);
    CHECK(ctx.ring.isHomogeneous(d));
  }
  CHECK_THROWS_AS((void)minorIndex(ctx, 2, 2), std::out_of_range);
  CHECK_THROWS_AS((void)minorIndex(ctx, 0, 3), std::out_of_range);
  CHECK_THROWS_AS((void)minorIndex(ctx, 1, 5), std::out_of_range);
  CHECK_THROWS_AS((void)buildContext(3), std::invalid_argument);
}

TEST_CASE("antidiagonal reduction sequence") {
  const auto& ctx = ctx4();
  auto seq = sparseReduction(ctx, env());
  CHECK(seq.kind == ReductionKind::Sparse);
  REQUIRE(seq.elements.size() == 5);
  const auto& R = ctx.ring;
  auto d = [&](int q, int r) { return ctx.minors[minorIndex(ctx, q, r)]; };
  CHECK(R.equal(seq.elements[0], d(1, 2)));
  CHECK(R.equal(seq.elements[1], d(1, 3)));
  CHECK(R.equal(seq.elements[2], R.add(d(1, 4), d(2, 3))));
  CHECK(R.equal(seq.elements[3], d(2, 4)));
  CHECK(R.equal(seq.elements[4], d(3, 4)));
}

TEST_CASE("reduction number detection") {
  const auto& ctx = ctx4();
  auto seq = sparseReduction(ctx, env());
  CHECK(reductionNumberCheck(ctx, seq.elements, env()));
  PolyList truncated(seq.elements.begin(), seq.elements.begin() + 4);
  CHECK_FALSE(reductionNumberCheck(ctx, truncated, env()));
  // the full minor ideal reduces itself, but not with the strict drop
  CHECK_FALSE(reductionNumberCheck(ctx, ctx.minors, env()));
}

TEST_CASE("seeded reductions are reproducible") {
  const auto& ctx = ctx4();
  auto a = genericReduction(ctx, 17, env());
  auto b = genericReduction(ctx, 17, env());
  CHECK(a.kind == ReductionKind::Generic);
  REQUIRE(a.elements.size() == 5);
  for (int p = 0; p < 5; ++p) CHECK(ctx.ring.equal(a.elements[p], b.elements[p]));
}

TEST_CASE("residual chain over the antidiagonal reduction") {
  const auto& ctx = ctx4();
  const auto& chain = chain4();
  const auto& R = ctx.ring;
  REQUIRE(chain.links.size() == 6);
  CHECK(chain.links[0].k.empty());
  for (int i = 1; i <= 5; ++i) CHECK(chain.links[i].source == "sparse");
  for (int i = 0; i <= 4; ++i) {
    CHECK(idealCodim(R, chain.links[i].k, env()) == i);
    CHECK(idealDim(R, chain.links[i].k, env()) == 8 - i);
    CHECK(chain.links[i].geometric);
  }
  // complete intersection range: the colon adds nothing
  CHECK(idealEqual(R, chain.links[1].k, chain.links[1].j, env()));
  CHECK(idealEqual(R, chain.links[2].k, chain.links[2].j, env()));
  // from the codimension of the minor ideal on, it does
  CHECK_FALSE(idealEqual(R, chain.links[3].k, chain.links[3].j, env()));
  CHECK_FALSE(idealEqual(R, chain.links[4].k, chain.links[4].j, env()));
  // the chain grows strictly
  for (int i = 0; i <= 4; ++i) {
    for (const auto& f : chain.links[i].k)
      CHECK(idealContains(R, chain.links[i + 1].k, f, env()));
    CHECK_FALSE(idealEqual(R, chain.links[i].k, chain.links[i + 1].k, env()));
  }
}

TEST_CASE("colon facts along the chain") {
  const auto& ctx = ctx4();
  const auto& chain = chain4();
  const auto& R = ctx.ring;
  // J_3 : a_4 equals J_3 : I, and a_4 avoids the associated primes of K_3
  auto byElement = idealQuotient(R, chain.links[3].j, {chain.links[4].a}, env());
  CHECK(idealEqual(R, byElement, chain.links[3].k, env()));
  CHECK(isNzd(R, chain.links[4].a, chain.links[3].k, env()));
  // K_3 meets the minor ideal exactly in J_3
  auto meet = idealIntersection(R, chain.links[3].k, ctx.minors, env());
  CHECK(idealEqual(R, meet, chain.links[3].j, env()));
}

TEST_CASE("power modules and the graded identity") {
  const auto& ctx = ctx4();
  const auto& chain = chain4();
  const auto& R = ctx.ring;
  // M at (0, 1) is the minor ideal itself, normalized to start in degree 0
  auto m01 = moduleM(ctx, chain, 0, 1, env());
  HilbertSeries freeHS{{1}, 0, 8};
  auto idealPart = seriesSub(freeHS, idealHilbert(R, ctx.minors, env()));
  CHECK(seriesEqual(subqHilbert(R, m01, env()), seriesShift(idealPart, -2)));
  CHECK(presentation(R, m01, env()).gens.rank() == 6);
  for (int t : presentation(R, m01, env()).gens.twists) CHECK(t == 0);

  CHECK(hfIdentityM(ctx, chain, 1, 1, env()));
  CHECK(hfIdentityM(ctx, chain, 3, 1, env()));
  CHECK(hfIdentityM(ctx, chain, 3, 2, env()));
  CHECK(hfIdentityM(ctx, chain, 4, 1, env()));

  auto m4m1 = moduleM(ctx, chain, 4, -1, env());
  CHECK_FALSE(subqIsZero(R, m4m1, env()));
  CHECK(seriesDim(subqHilbert(R, m4m1, env())) == 4);

  CHECK_THROWS_AS((void)moduleM(ctx, chain, 5, 0, env()), std::out_of_range);
  CHECK_THROWS_AS((void)moduleM(ctx, chain, 1, -2, env()), std::invalid_argument);
}

TEST_CASE("grassmann hilbert function, two oracles and the closed form") {
  auto h4 = grassmannHF(4, 4, 32003, env());
  REQUIRE(h4.size() == 5);
  CHECK(h4[0] == 1);
  CHECK(h4[1] == 6);
  CHECK(h4[2] == 20);
  CHECK(h4[3] == 50);
  CHECK(h4[4] == 105);
  for (int d = 0; d <= 4; ++d) CHECK(h4[d] == closedFormH(4, d));
  auto h5 = grassmannHF(5, 2, 32003, env());
  REQUIRE(h5.size() == 3);
  CHECK(h5[0] == 1);
  CHECK(h5[1] == 10);
  CHECK(h5[2] == 50);
  for (int d = 0; d <= 2; ++d) CHECK(h5[d] == closedFormH(5, d));
}

TEST_CASE("finite differences of the hilbert function") {
  std::vector<long long> h{1, 6, 20, 50, 105};
  CHECK(deltaPower(h, 0, 0) == 1);
  CHECK(deltaPower(h, 0, 3) == 50);
  CHECK(deltaPower(h, 1, 0) == 1);
  CHECK(deltaPower(h, 1, 1) == 5);
  CHECK(deltaPower(h, 1, 2) == 14);
  CHECK(deltaPower(h, 2, 2) == 9);
  CHECK(deltaPower(h, 3, 0) == 1);
  CHECK_THROWS_AS((void)deltaPower(h, 1, 7), std::out_of_range);
  CHECK_THROWS_AS((void)deltaPower(h, -1, 0), std::invalid_argument);
}

TEST_CASE("depth table") {
  // frozen 5 x 5 grid for the 2 x 4 case, rows i = 0..4, columns j = -1..3
  const int grid[5][5] = {
      {8, 8, 6, 4, 4},
      {7, 7, 6, 4, 4},
      {6, 6, 6, 4, 4},
      {2, 5, 5, 4, 4},
      {1, 1, 4, 4, 4},
  };
  for (int i = 0; i <= 4; ++i)
    for (int j = -1; j <= 3; ++j) CHECK(predictedDepth(4, i, j) == grid[i][j + 1]);
  CHECK(predictedDepth(5, 6, 3) == 4);
  CHECK(predictedDepth(5, 5, 0) == 2);
  CHECK(predictedDepth(5, 6, 0) == 1);
  CHECK(predictedDepth(5, 5, 1) == 5);
  CHECK(predictedDepth(5, 6, 2) == 4);
  CHECK(predictedDepth(5, 4, -1) == 3);
  CHECK(predictedDepth(7, 6, -1) == 5);
  CHECK_THROWS_AS((void)predictedDepth(4, 5, 0), std::out_of_range);
  CHECK_THROWS_AS((void)predictedDepth(3, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)predictedDepth(4, 0, -2), std::invalid_argument);
}

TEST_CASE("region labels") {
  CHECK(regionChar(predictedRegion(4, 0, 2)) == 'A');
  CHECK(regionChar(predictedRegion(4, 3, 1)) == 'A');
  CHECK(regionChar(predictedRegion(4, 4, 0)) == 'D');
  CHECK(regionChar(predictedRegion(4, 4, 1)) == 'C');
  CHECK(regionChar(predictedRegion(4, 4, 2)) == 'E');
  CHECK(regionChar(predictedRegion(4, 0, 0)) == 'C');
  CHECK(regionChar(predictedRegion(7, 6, -1)) == 'B');
}

TEST_CASE("computed depths at the table boundary") {
  // the overlap column: consecutive colon quotients
  CHECK(depthOfM(0, -1) == 8);   // K_1 is principal
  CHECK(depthOfM(2, -1) == 6);   // maximal depth, matching the i <= g side
  CHECK(depthOfM(3, -1) == 2);   // depth drop exactly at i = g
  // headline drop for the last geometric link
  CHECK(depthOfM(4, 0) == 1);
}
