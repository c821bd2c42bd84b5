#include "resint/resolution.hpp"

#include <optional>
#include <stdexcept>

namespace resint {

namespace {

struct WorkMatrix {
  FreeModule target;
  std::vector<GFElem> cols;
  std::vector<int> tags;  // optional labels for target components
};

std::optional<std::pair<int, int>> findUnit(const std::vector<GFElem>& cols) {
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& t : cols[c].terms)
      if (t.m.isOne()) return std::make_pair(static_cast<int>(t.comp), static_cast<int>(c));
  return std::nullopt;
}

// the polynomial occupying row r of a column
GFPoly rowEntry(const GFRing& ring, const GFElem& col, int r) {
  std::vector<Term<GF>> ts;
  for (const auto& t : col.terms)
    if (t.comp == r) ts.push_back({t.m, t.c});
  return ring.make(std::move(ts));
}

void dropComponent(std::vector<GFElem>& cols, int r) {
  for (auto& col : cols) {
    std::vector<ModTerm<GF>> ts;
    ts.reserve(col.terms.size());
    for (const auto& t : col.terms) {
      if (t.comp == r) continue;
      ts.push_back({t.comp > r ? t.comp - 1 : t.comp, t.m, t.c});
    }
    col.terms = std::move(ts);  // relative order of surviving terms is unchanged
  }
}

// Split off the trivial complexes witnessed by unit entries of `mat`. Each
// pivot (r, c0) clears row r by column operations, then removes row r (a
// component of mat's target) together with column c0, and drops column r of
// `prev` when present. Exactness of prev o mat is preserved throughout.
void sweepUnits(const GFRing& ring, const ModOps<GF>& ops, WorkMatrix& mat, WorkMatrix* prev) {
  while (auto pivot = findUnit(mat.cols)) {
    auto [r, c0] = *pivot;
    GFPoly u = rowEntry(ring, mat.cols[c0], r);
    auto uinv = ring.field().inv(u.lead().c);
    for (size_t c = 0; c < mat.cols.size(); ++c) {
      if (static_cast<int>(c) == c0) continue;
      GFPoly alpha = rowEntry(ring, mat.cols[c], r);
      if (alpha.isZero()) continue;
      GFPoly factor = ring.scale(alpha, ring.field().neg(uinv));
      mat.cols[c] = ops.add(mat.cols[c], ops.mulPoly(mat.cols[c0], factor));
    }
    mat.cols.erase(mat.cols.begin() + c0);
    dropComponent(mat.cols, r);
    mat.target.twists.erase(mat.target.twists.begin() + r);
    if (!mat.tags.empty()) mat.tags.erase(mat.tags.begin() + r);
    if (prev) prev->cols.erase(prev->cols.begin() + r);
  }
  std::vector<GFElem> live;
  for (auto& col : mat.cols)
    if (!col.isZero()) live.push_back(std::move(col));
  mat.cols = std::move(live);
}

FreeModule columnModule(const FreeModule& target, const std::vector<GFElem>& cols) {
  std::vector<int> twists;
  twists.reserve(cols.size());
  for (const auto& col : cols) {
    if (!ModOps<GF>::isHomogeneous(target, col))
      throw std::logic_error("resolution steps require homogeneous columns");
    twists.push_back(ModOps<GF>::degree(target, col));
  }
  return FreeModule{twists};
}

}  // namespace

Resolution minimalResolution(const GFRing& ring, const Subquotient& m, const GbEnv& env) {
  ModOps<GF> ops(ring.field(), ModOrder::top(ring.order()));
  Presentation pres = presentation(ring, m, env);

  WorkMatrix cur{pres.gens, pres.columns, {}};
  for (int i = 0; i < pres.gens.rank(); ++i) cur.tags.push_back(i);
  sweepUnits(ring, ops, cur, nullptr);

  Resolution res;
  res.frees.push_back(cur.target);
  res.subIndices = cur.tags;

  while (!cur.cols.empty()) {
    if (static_cast<int>(res.frees.size()) > ring.numVars() + 1)
      throw std::logic_error("resolution exceeds the global bound");
    FreeModule next = columnModule(cur.target, cur.cols);
    GbOptions opts;
    opts.budget = env.budget;
    opts.wantSyzygies = true;
    auto syz =
        moduleGroebner(ring, cur.target, cur.cols, ModOrder::top(ring.order()), opts).syzygies;
    WorkMatrix b{next, std::move(syz), {}};
    sweepUnits(ring, ops, b, &cur);
    res.maps.push_back(cur.cols);
    res.frees.push_back(b.target);
    cur = std::move(b);
  }
  return res;
}

BettiTable bettiTable(const Resolution& r) {
  BettiTable b;
  for (const auto& f : r.frees) b.twists.push_back(f.twists);
  return b;
}

int depthFromResolution(const GFRing& ring, const Resolution& r) {
  if (r.isZeroModule()) throw std::invalid_argument("depth of the zero module");
  return ring.numVars() - bettiTable(r).pd();
}

bool validateResolution(const GFRing& ring, const Subquotient& m, const Resolution& r,
                        const GbEnv& env) {
  ModOps<GF> ops(ring.field(), ModOrder::top(ring.order()));
  // shapes line up
  for (size_t k = 0; k < r.maps.size(); ++k) {
    if (static_cast<int>(r.maps[k].size()) != r.frees[k + 1].rank()) return false;
    for (size_t c = 0; c < r.maps[k].size(); ++c) {
      const auto& col = r.maps[k][c];
      if (col.isZero()) return false;  // minimal complexes have no zero columns
      if (!ModOps<GF>::isHomogeneous(r.frees[k], col)) return false;
      if (ModOps<GF>::degree(r.frees[k], col) != r.frees[k + 1].twists[c]) return false;
      for (const auto& t : col.terms)
        if (t.m.isOne()) return false;  // minimality
    }
  }
  // d o d = 0
  for (size_t k = 1; k < r.maps.size(); ++k) {
    for (const auto& col : r.maps[k]) {
      GFElem acc;
      for (const auto& t : col.terms)
        acc = ops.add(acc, ops.mulTerm(r.maps[k - 1][t.comp], t.m, t.c));
      if (!acc.isZero()) return false;
    }
  }
  // columns of the first map are genuine relations among the surviving sub
  // generators, i.e. they land back in span(rel)
  if (!r.maps.empty()) {
    if (r.subIndices.size() != static_cast<size_t>(r.frees[0].rank())) return false;
    auto relBasis = moduleGroebner(ring, m.ambient, m.rel, ModOrder::top(ring.order())).basis;
    for (const auto& col : r.maps[0]) {
      GFElem acc;
      for (const auto& t : col.terms)
        acc = ops.add(acc, ops.mulTerm(m.sub[r.subIndices[t.comp]], t.m, t.c));
      if (!moduleNormalForm(ring, m.ambient, acc, relBasis, ModOrder::top(ring.order()),
                            env.budget)
               .isZero())
        return false;
    }
  }
  // alternating Hilbert sum equals the module
  const int n = ring.numVars();
  HilbertSeries acc{{}, 0, n};
  int sign = 1;
  for (const auto& f : r.frees) {
    for (int t : f.twists) {
      HilbertSeries part{{sign}, t, n};
      acc = seriesAdd(acc, part);
    }
    sign = -sign;
  }
  return seriesEqual(acc, subqHilbert(ring, m, env));
}

}  // namespace resint
