#include "resint/subquotient.hpp"

#include <stdexcept>

namespace resint {

namespace {

// cached module GB would need elem serialization; these stay per-call
std::vector<GFElem> moduleBasis(const GFRing& ring, const FreeModule& fm,
                                const std::vector<GFElem>& gens, const GbEnv& env) {
  GbOptions opts;
  opts.budget = env.budget;
  return moduleGroebner(ring, fm, gens, ModOrder::top(ring.order()), opts).basis;
}

// Hilbert series of the submodule spanned by `gens` inside fm
HilbertSeries submoduleHilbert(const GFRing& ring, const FreeModule& fm,
                               const std::vector<GFElem>& gens, const GbEnv& env) {
  auto basis = moduleBasis(ring, fm, gens, env);
  const int n = ring.numVars();
  HilbertSeries acc{{}, 0, n};
  for (int c = 0; c < fm.rank(); ++c) {
    std::vector<Monomial> leads;
    for (const auto& e : basis)
      if (e.lead().comp == c) leads.push_back(e.lead().m);
    if (leads.empty()) continue;
    // t^twist * (1 - N_c) / (1-t)^n
    HilbertSeries part;
    part.denomExp = n;
    part.num = {1};
    HilbertSeries nc{hilbertNumerator(std::move(leads)), 0, n};
    part = seriesSub(part, nc);
    acc = seriesAdd(acc, seriesShift(part, fm.twists[c]));
  }
  return acc;
}

}  // namespace

Subquotient quotientRingModule(const GFRing& ring, const PolyList& a) {
  Subquotient m;
  m.ambient = FreeModule::free(1);
  GFElem unit;
  unit.terms.push_back({0, Monomial::one(), ring.field().one()});
  m.sub.push_back(unit);
  for (const auto& f : a) {
    if (f.isZero()) continue;
    m.rel.push_back(polyToElem(f));
  }
  return m;
}

Subquotient cokernel(const FreeModule& target, std::vector<GFElem> columns) {
  Subquotient m;
  m.ambient = target;
  for (int c = 0; c < target.rank(); ++c) {
    GFElem unit;
    unit.terms.push_back({c, Monomial::one(), 1});
    m.sub.push_back(std::move(unit));
  }
  for (auto& col : columns)
    if (!col.isZero()) m.rel.push_back(std::move(col));
  return m;
}

Subquotient twist(Subquotient m, int b) {
  for (auto& t : m.ambient.twists) t -= b;
  return m;
}

HilbertSeries subqHilbert(const GFRing& ring, const Subquotient& m, const GbEnv& env) {
  if (m.rel.empty()) return submoduleHilbert(ring, m.ambient, m.sub, env);
  // (N + R)/R needs the numerator span to include R; spans of generators
  // coming out of Hom do not always contain their relation module
  std::vector<GFElem> all = m.sub;
  all.insert(all.end(), m.rel.begin(), m.rel.end());
  HilbertSeries hsAll = submoduleHilbert(ring, m.ambient, all, env);
  HilbertSeries hsRel = submoduleHilbert(ring, m.ambient, m.rel, env);
  return seriesSub(hsAll, hsRel);
}

bool subqIsZero(const GFRing& ring, const Subquotient& m, const GbEnv& env) {
  if (m.sub.empty()) return true;
  auto relBasis = moduleBasis(ring, m.ambient, m.rel, env);
  auto order = ModOrder::top(ring.order());
  for (const auto& g : m.sub)
    if (!moduleNormalForm(ring, m.ambient, g, relBasis, order, env.budget).isZero())
      return false;
  return true;
}

Presentation presentation(const GFRing& ring, const Subquotient& m, const GbEnv& env) {
  Presentation p;
  const int ns = static_cast<int>(m.sub.size());
  std::vector<int> twists(ns, 0);
  for (int i = 0; i < ns; ++i) {
    if (m.sub[i].isZero()) continue;
    if (!ModOps<GF>::isHomogeneous(m.ambient, m.sub[i]))
      throw std::invalid_argument("subquotient generators must be homogeneous");
    twists[i] = ModOps<GF>::degree(m.ambient, m.sub[i]);
  }
  p.gens = FreeModule{twists};
  std::vector<GFElem> all = m.sub;
  for (const auto& r : m.rel) all.push_back(r);
  GbOptions opts;
  opts.budget = env.budget;
  opts.wantSyzygies = true;
  auto res = moduleGroebner(ring, m.ambient, all, ModOrder::top(ring.order()), opts);
  ModOps<GF> ops(ring.field(), ModOrder::top(ring.order()));
  for (const auto& s : res.syzygies) {
    std::vector<ModTerm<GF>> ts;
    for (const auto& t : s.terms)
      if (t.comp < ns) ts.push_back(t);
    auto col = ops.make(std::move(ts));
    if (!col.isZero()) p.columns.push_back(std::move(col));
  }
  return p;
}

}  // namespace resint
