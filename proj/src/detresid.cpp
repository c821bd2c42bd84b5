#include "resint/detresid.hpp"

#include <random>
#include <stdexcept>

namespace resint {

namespace {

std::vector<std::string> matrixVarNames(int n) {
  std::vector<std::string> names;
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= n; ++c)
      names.push_back("x[" + std::to_string(r) + "," + std::to_string(c) + "]");
  return names;
}

// splitmix-style stream so retries and chain steps draw independent seeds
std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// random combination of the minors with at least one nonzero coefficient
GFPoly randomCombination(const DetContext& ctx, std::uint64_t seed) {
  const auto& R = ctx.ring;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, R.field().modulus() - 1);
  for (;;) {
    GFPoly a = R.zero();
    bool hit = false;
    for (const auto& d : ctx.minors) {
      auto c = coeff(rng);
      if (c == 0) continue;
      hit = true;
      a = R.add(a, R.scale(d, c));
    }
    if (hit) return a;
  }
}

std::vector<GFElem> rankOneElems(const PolyList& gens) {
  std::vector<GFElem> out;
  for (const auto& f : gens)
    if (!f.isZero()) out.push_back(polyToElem(f));
  return out;
}

}  // namespace

DetContext buildContext(int n, std::int64_t prime, const GbEnv& env) {
  if (n < 4) throw std::invalid_argument("matrix width below 4 is outside the table");
  GFRing ring(GF(prime), matrixVarNames(n));
  PolyList minors;
  auto var = [&](int row, int col) { return ring.var((row - 1) * n + (col - 1)); };
  for (int q = 1; q <= n; ++q)
    for (int r = q + 1; r <= n; ++r)
      minors.push_back(ring.sub(ring.mul(var(1, q), var(2, r)), ring.mul(var(1, r), var(2, q))));
  DetContext ctx{n, n - 1, 2 * n - 3, std::move(ring), std::move(minors)};
  if (idealCodim(ctx.ring, ctx.minors, env) != ctx.g)
    throw std::logic_error("minor ideal has the wrong codimension");
  return ctx;
}

int minorIndex(const DetContext& ctx, int q, int r) {
  if (q < 1 || q >= r || r > ctx.n) throw std::out_of_range("minor column pair");
  return (q - 1) * ctx.n - q * (q - 1) / 2 + (r - q - 1);
}

bool reductionNumberCheck(const DetContext& ctx, const PolyList& j, const GbEnv& env) {
  const auto& R = ctx.ring;
  const int n = ctx.n;
  PolyList top = idealProduct(R, j, idealPower(R, ctx.minors, n - 3));
  if (!idealEqual(R, top, idealPower(R, ctx.minors, n - 2), env)) return false;
  // the reduction number must be exactly n - 2, so one power lower still falls short
  PolyList low = n == 4 ? j : idealProduct(R, j, idealPower(R, ctx.minors, n - 4));
  return !idealEqual(R, low, idealPower(R, ctx.minors, n - 3), env);
}

ReductionSequence sparseReduction(const DetContext& ctx, const GbEnv& env) {
  ReductionSequence seq;
  seq.kind = ReductionKind::Sparse;
  for (int p = 1; p <= ctx.ell; ++p) {
    GFPoly a = ctx.ring.zero();
    for (int q = 1; q < ctx.n; ++q) {
      int r = p + 2 - q;
      if (r > q && r <= ctx.n) a = ctx.ring.add(a, ctx.minors[minorIndex(ctx, q, r)]);
    }
    seq.elements.push_back(a);
  }
  if (!reductionNumberCheck(ctx, seq.elements, env))
    throw std::logic_error("antidiagonal sums fail the reduction check");
  return seq;
}

ReductionSequence genericReduction(const DetContext& ctx, std::uint64_t seed, const GbEnv& env) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    ReductionSequence seq;
    seq.kind = ReductionKind::Generic;
    seq.seed = seed;
    for (int p = 0; p < ctx.ell; ++p)
      seq.elements.push_back(
          randomCombination(ctx, deriveSeed(seed, std::uint64_t(attempt) * 64 + p)));
    if (reductionNumberCheck(ctx, seq.elements, env)) return seq;
  }
  throw std::runtime_error("no random reduction found within the retry bound");
}

ResidualChain residualChain(const DetContext& ctx, const ReductionSequence& initial,
                            std::uint64_t fallbackSeed, const GbEnv& env) {
  if (int(initial.elements.size()) != ctx.ell)
    throw std::invalid_argument("reduction sequence has the wrong length");
  const auto& R = ctx.ring;
  ResidualChain chain;
  ChainLink base;
  base.a = R.zero();
  base.geometric = true;  // K_0 = 0, and the minor ideal already has codim >= 1
  base.source = "none";
  chain.links.push_back(std::move(base));

  const std::string initSrc = initial.kind == ReductionKind::Sparse
                                  ? "sparse"
                                  : "generic(" + std::to_string(initial.seed) + ")";
  for (int i = 1; i <= ctx.ell; ++i) {
    const bool interior = i < ctx.ell;  // the last colon is residual but need not be geometric
    auto tryElement = [&](const GFPoly& cand, const std::string& src) {
      PolyList jCur = chain.links[i - 1].j;
      jCur.push_back(cand);
      PolyList kCur = idealQuotient(R, jCur, ctx.minors, env);
      bool geo = idealCodim(R, idealSum(R, ctx.minors, kCur), env) >= i + 1;
      if (interior && (idealCodim(R, kCur, env) != i || !geo)) return false;
      ChainLink link;
      link.a = cand;
      link.j = std::move(jCur);
      link.k = std::move(kCur);
      link.geometric = geo;
      link.source = src;
      chain.links.push_back(std::move(link));
      return true;
    };
    if (tryElement(initial.elements[i - 1], initSrc)) continue;
    bool placed = false;
    for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
      std::uint64_t s = deriveSeed(fallbackSeed, std::uint64_t(i) * 1024 + attempt + 512);
      placed = tryElement(randomCombination(ctx, s), "generic(" + std::to_string(s) + ")");
    }
    if (!placed)
      throw std::runtime_error("residual chain stalled at step " + std::to_string(i));
  }
  return chain;
}

Subquotient moduleM(const DetContext& ctx, const ResidualChain& chain, int i, int j,
                    const GbEnv& env) {
  if (i < 0 || i >= ctx.ell) throw std::out_of_range("chain index outside the table");
  if (j < -1) throw std::invalid_argument("powers below -1 are out of scope");
  const auto& R = ctx.ring;
  if (j == 0) return quotientRingModule(R, chain.links[i].k);
  Subquotient m;
  m.ambient = FreeModule::free(1);
  if (j == -1) {
    m.sub = rankOneElems(chain.links[i + 1].k);
    m.rel = rankOneElems(chain.links[i].k);
    return m;
  }
  m.sub = rankOneElems(idealPower(R, ctx.minors, j));
  m.rel = rankOneElems(j == 1 ? chain.links[i].j
                              : idealProduct(R, chain.links[i].j,
                                             idealPower(R, ctx.minors, j - 1)));
  (void)env;
  return twist(std::move(m), 2 * j);
}

bool hfIdentityM(const DetContext& ctx, const ResidualChain& chain, int i, int j,
                 const GbEnv& env) {
  if (j < 1) throw std::invalid_argument("the power normalization needs j >= 1");
  const auto& R = ctx.ring;
  auto lhs = subqHilbert(R, moduleM(ctx, chain, i, j, env), env);
  const auto& ki = chain.links[i].k;
  auto rhs = seriesShift(
      seriesSub(idealHilbert(R, ki, env),
                idealHilbert(R, idealSum(R, ki, idealPower(R, ctx.minors, j)), env)),
      -2 * j);
  return seriesEqual(lhs, rhs);
}

std::vector<long long> grassmannHF(int n, int maxT, std::int64_t prime, const GbEnv& env) {
  if (n < 2 || maxT < 0) throw std::invalid_argument("grassmann table range");
  std::vector<std::string> names;
  for (int q = 1; q <= n; ++q)
    for (int r = q + 1; r <= n; ++r)
      names.push_back("p[" + std::to_string(q) + "," + std::to_string(r) + "]");
  GFRing P(GF(prime), names);
  auto idx = [&](int q, int r) { return (q - 1) * n - q * (q - 1) / 2 + (r - q - 1); };
  PolyList rels;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          rels.push_back(P.add(
              P.sub(P.mul(P.var(idx(a, b)), P.var(idx(c, d))),
                    P.mul(P.var(idx(a, c)), P.var(idx(b, d)))),
              P.mul(P.var(idx(a, d)), P.var(idx(b, c)))));
  auto hs = idealHilbert(P, rels, env);
  std::vector<long long> h;
  for (int t = 0; t <= maxT; ++t) h.push_back(seriesCoeff(hs, t));

  // independent count: minimal generators of the t-th power of the minor ideal
  GFRing R(GF(prime), matrixVarNames(n));
  PolyList minors;
  auto var = [&](int row, int col) { return R.var((row - 1) * n + (col - 1)); };
  for (int q = 1; q <= n; ++q)
    for (int r = q + 1; r <= n; ++r)
      minors.push_back(R.sub(R.mul(var(1, q), var(2, r)), R.mul(var(1, r), var(2, q))));
  for (int t = 0; t <= maxT; ++t)
    if (sameDegreeRank(R, idealPower(R, minors, t)) != h[t])
      throw std::logic_error("grassmann coordinate ring oracles disagree");
  return h;
}

long long deltaPower(const std::vector<long long>& h, int i, int t) {
  if (i < 0) throw std::invalid_argument("negative difference order");
  auto val = [&](int u) -> long long {
    if (u < 0) return 0;
    if (u >= int(h.size())) throw std::out_of_range("difference needs a longer table");
    return h[u];
  };
  long long out = 0, binom = 1;
  for (int s = 0; s <= i; ++s) {
    out += (s % 2 ? -binom : binom) * val(t - s);
    binom = binom * (i - s) / (s + 1);
  }
  return out;
}

int predictedDepth(int n, int i, int j) {
  if (n < 4) throw std::invalid_argument("matrix width below 4 is outside the table");
  const int g = n - 1, ell = 2 * n - 3, dim = 2 * n - i;
  if (i < 0 || i >= ell) throw std::out_of_range("chain index outside the table");
  if (j < -1) throw std::invalid_argument("powers below -1 are out of scope");
  // the depth-drop window is tested first: at (i, j) = (g, -1) it overlaps the
  // maximal-depth window, and the module there is not maximal Cohen-Macaulay
  if (j <= std::min(1, i - g - 1)) return dim - 3;
  if (j <= 0 && i <= g) return dim;
  if (j == 1 && i <= g - 1) return n + 2;
  if (j == 1 && i >= g && i <= g + 1) return dim;
  if (j >= 2 && j <= i - g - 1) return std::min(dim - 3, 4);
  return 4;
}

Region predictedRegion(int n, int i, int j) {
  const int g = n - 1, ell = 2 * n - 3;
  if ((j >= 2 && i <= ell - 5) || (j >= i - g && i >= ell - 4 && i <= ell - 2))
    return Region::A;
  if (j <= std::min(1, i - g - 1) && i <= ell - 5) return Region::B;
  if (j >= i - g && j <= 1) return Region::C;
  if (j <= i - g - 1 && i >= ell - 4) return Region::D;
  if (j >= i - g && i == ell - 1) return Region::E;
  return Region::None;
}

char regionChar(Region r) {
  switch (r) {
    case Region::A: return 'A';
    case Region::B: return 'B';
    case Region::C: return 'C';
    case Region::D: return 'D';
    case Region::E: return 'E';
    default: return '-';
  }
}

}  // namespace resint
