#include <stdexcept>

#include "resint/homol.hpp"

namespace resint {

namespace {

Subquotient zeroModule() { return Subquotient{FreeModule{}, {}, {}}; }

// row r of the columns of a map, read in the dual of the domain: the
// transpose sends e_r^* to the element these terms make up
std::vector<ModTerm<GF>> transposeRow(const std::vector<GFElem>& cols, int r) {
  std::vector<ModTerm<GF>> row;
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& t : cols[c].terms)
      if (t.comp == r) row.push_back({static_cast<std::int32_t>(c), t.m, t.c});
  return row;
}

FreeModule dual(const FreeModule& f) {
  FreeModule d = f;
  for (auto& t : d.twists) t = -t;
  return d;
}

std::vector<GFElem> unitVectors(int rank) {
  std::vector<GFElem> out;
  out.reserve(rank);
  for (int c = 0; c < rank; ++c) {
    GFElem e;
    e.terms.push_back({c, Monomial::one(), 1});
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Subquotient extModule(const GFRing& ring, const Resolution& res, int k) {
  if (res.isZeroModule() || k < 0 || k > res.length()) return zeroModule();
  const int L = res.length();
  ModOps<GF> ops(ring.field(), ModOrder::top(ring.order()));

  Subquotient ext;
  ext.ambient = dual(res.frees[k]);
  if (k == L) {
    ext.sub = unitVectors(ext.ambient.rank());
  } else {
    // kernel of the transposed map out of F_k^*: syzygies of its rows
    std::vector<GFElem> rows;
    rows.reserve(res.frees[k].rank());
    for (int r = 0; r < res.frees[k].rank(); ++r)
      rows.push_back(ops.make(transposeRow(res.maps[k], r)));
    GbOptions opts;
    opts.wantSyzygies = true;
    ext.sub =
        moduleGroebner(ring, dual(res.frees[k + 1]), rows, ModOrder::top(ring.order()), opts)
            .syzygies;
  }
  if (k > 0) {
    // image of the transposed previous map; lands in the kernel since the
    // resolution maps compose to zero
    for (int r = 0; r < res.frees[k - 1].rank(); ++r) {
      auto row = ops.make(transposeRow(res.maps[k - 1], r));
      if (!row.isZero()) ext.rel.push_back(std::move(row));
    }
  }
  return ext;
}

Subquotient extModule(const GFRing& ring, const Subquotient& m, int k, const GbEnv& env) {
  return extModule(ring, minimalResolution(ring, m, env), k);
}

Subquotient canonicalModule(const GFRing& ring, const PolyList& a, const GbEnv& env) {
  int c = idealCodim(ring, a, env);
  auto res = minimalResolution(ring, quotientRingModule(ring, a), env);
  return twist(extModule(ring, res, c), -ring.numVars());
}

Subquotient homModule(const GFRing& ring, const Subquotient& m, const Subquotient& n,
                      const GbEnv& env) {
  Presentation pm = presentation(ring, m, env);
  Presentation pn = presentation(ring, n, env);
  const int r0 = pm.gens.rank();
  const int g0 = pn.gens.rank();
  if (r0 == 0 || g0 == 0) return zeroModule();

  // a homomorphism is a tuple in N^{r0}; component (i, j) = i*g0 + j
  FreeModule fn;
  fn.twists.resize(static_cast<size_t>(r0) * g0);
  for (int i = 0; i < r0; ++i)
    for (int j = 0; j < g0; ++j)
      fn.twists[static_cast<size_t>(i) * g0 + j] = pn.gens.twists[j] - pm.gens.twists[i];
  ModOps<GF> opsFN(ring.field(), ModOrder::top(ring.order()));

  std::vector<GFElem> gens = unitVectors(static_cast<int>(fn.twists.size()));

  // impose one relation of M at a time: keep the combinations of the current
  // tuples that send the relation into span(rel of N)
  for (const auto& relCol : pm.columns) {
    std::vector<GFPoly> alpha(r0, ring.zero());
    {
      std::vector<std::vector<Term<GF>>> parts(r0);
      for (const auto& t : relCol.terms) parts[t.comp].push_back({t.m, t.c});
      for (int i = 0; i < r0; ++i) alpha[i] = ring.make(std::move(parts[i]));
    }
    std::vector<GFElem> images;
    images.reserve(gens.size());
    for (const auto& g : gens) {
      std::vector<ModTerm<GF>> ts;
      for (const auto& t : g.terms) {
        const int i = t.comp / g0, j = t.comp % g0;
        for (const auto& at : alpha[i].terms)
          ts.push_back({j, at.m * t.m, ring.field().mul(at.c, t.c)});
      }
      images.push_back(opsFN.make(std::move(ts)));
    }
    std::vector<GFElem> all = images;
    for (const auto& rel : pn.columns) all.push_back(rel);
    GbOptions opts;
    opts.budget = env.budget;
    opts.wantSyzygies = true;
    auto syz = moduleGroebner(ring, pn.gens, all, ModOrder::top(ring.order()), opts).syzygies;
    std::vector<GFElem> next;
    const int s = static_cast<int>(gens.size());
    for (const auto& sig : syz) {
      GFElem acc;
      for (const auto& t : sig.terms)
        if (t.comp < s) acc = opsFN.add(acc, opsFN.mulTerm(gens[t.comp], t.m, t.c));
      if (!acc.isZero()) next.push_back(std::move(acc));
    }
    gens = std::move(next);
    if (gens.empty()) break;
  }

  Subquotient hom;
  hom.ambient = fn;
  if (gens.empty()) return hom;  // nothing survived; tuples of relations span zero too
  hom.sub = std::move(gens);
  for (int i = 0; i < r0; ++i)
    for (const auto& rel : pn.columns) {
      std::vector<ModTerm<GF>> ts;
      ts.reserve(rel.terms.size());
      for (const auto& t : rel.terms) ts.push_back({i * g0 + t.comp, t.m, t.c});
      hom.rel.push_back(opsFN.make(std::move(ts)));
    }
  return hom;
}

UnmixedResult unmixednessTest(const GFRing& ring, const PolyList& a, const GbEnv& env) {
  auto res = minimalResolution(ring, quotientRingModule(ring, a), env);
  if (res.isZeroModule()) return {true, -1};
  const int n = ring.numVars();
  const int c = idealCodim(ring, a, env);
  for (int k = c + 1; k <= res.length(); ++k) {
    auto hs = subqHilbert(ring, extModule(ring, res, k), env);
    if (hs.isZero()) continue;
    // a nonzero Ext of dimension n-k flags an associated prime of codim k
    if (seriesDim(hs) == n - k) return {false, k};
  }
  return {true, -1};
}

std::vector<int> localCohomologyProfile(const GFRing& ring, const Resolution& res,
                                        const GbEnv& env) {
  std::vector<int> out;
  if (res.isZeroModule()) return out;
  const int n = ring.numVars();
  for (int k = res.length(); k >= 0; --k) {
    auto hs = subqHilbert(ring, extModule(ring, res, k), env);
    if (!hs.isZero()) out.push_back(n - k);
  }
  return out;
}

std::vector<int> localCohomologyProfile(const GFRing& ring, const Subquotient& m,
                                        const GbEnv& env) {
  return localCohomologyProfile(ring, minimalResolution(ring, m, env), env);
}

long long subqLength(const GFRing& ring, const Subquotient& m, const GbEnv& env) {
  auto hs = subqHilbert(ring, m, env);
  if (hs.isZero()) return 0;
  if (seriesDim(hs) != 0) throw std::invalid_argument("module does not have finite length");
  return seriesDegree(hs);
}

}  // namespace resint
