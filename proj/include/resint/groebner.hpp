#pragma once

#include <chrono>
#include <set>
#include <stdexcept>
#include <vector>

#include "resint/module.hpp"

namespace resint {

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Cooperative budget, shared across all the Groebner work of one task. Long
// loops poll it; exceeding throws instead of silently truncating.
struct Budget {
  int maxDegree = 0;      // 0 = unlimited; checked against the sugar degree
  double maxSeconds = 0;  // 0 = unlimited
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void checkDegree(int d) const {
    if (maxDegree > 0 && d > maxDegree)
      throw BudgetExceeded("degree budget exceeded at degree " + std::to_string(d));
  }
  void checkTime() const {
    if (maxSeconds > 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (el > maxSeconds) throw BudgetExceeded("time budget exceeded");
    }
  }
};

struct GbOptions {
  bool reduced = true;       // inter-reduce (ignored in syzygy mode)
  bool wantSyzygies = false;
  Budget* budget = nullptr;
};

template <class F>
struct GbResult {
  std::vector<ModElem<F>> basis;     // monic; reduced GB unless syzygy mode
  std::vector<ModElem<F>> syzygies;  // generators of the syzygy module of the inputs
  FreeModule syzModule;              // twists = degrees of the input generators
  bool inhomogeneousInput = false;
};

// Buchberger with sugar-degree pair selection and Gebauer-Moller pruning.
//
// Syzygy mode tracks cofactors by running in F (+) S^r under an order that
// makes the F block dominate and orders the trailing block by the Schreyer
// order induced by the input leads. Zero-reductions then hand over their tail
// verbatim as a syzygy of the inputs. The product criterion is applied only to
// rank-one non-syzygy runs: it is unsound for modules, and in syzygy runs a
// coprime pair instead contributes its Koszul syzygy directly.
template <class F>
class Buchberger {
 public:
  using E = ModElem<F>;
  using T = ModTerm<F>;

  Buchberger(const Ring<F>& ring, const FreeModule& fm, const ModOrder& order,
             const GbOptions& opts)
      : ring_(ring),
        inputModule_(fm),
        inputOrder_(order),
        opts_(opts),
        pairs_(SPairCmp{order.ring}) {}

  GbResult<F> run(const std::vector<E>& gens) {
    GbResult<F> out;
    const int m = inputModule_.rank();
    const int r = static_cast<int>(gens.size());
    aug_ = inputModule_;
    augOrder_ = inputOrder_;
    ModOps<F> inOps(ring_.field(), inputOrder_);
    std::vector<int> genDeg(r, 0);
    for (int i = 0; i < r; ++i) {
      genDeg[i] = std::max(0, ModOps<F>::degree(inputModule_, gens[i]));
      if (!gens[i].isZero() && !ModOps<F>::isHomogeneous(inputModule_, gens[i]))
        out.inhomogeneousInput = true;
    }
    out.syzModule = FreeModule{genDeg};
    if (opts_.wantSyzygies) {
      augOrder_.elimBoundary = m;
      augOrder_.schreyer.assign(r, Monomial::one());
      for (int i = 0; i < r; ++i)
        if (!gens[i].isZero()) augOrder_.schreyer[i] = gens[i].lead().m;
      for (int i = 0; i < r; ++i) aug_.twists.push_back(genDeg[i]);
    }
    ops_.emplace(ring_.field(), augOrder_);
    byComp_.assign(opts_.wantSyzygies ? m + r : m, {});

    // seed
    for (int i = 0; i < r; ++i) {
      E e = gens[i];
      if (opts_.wantSyzygies) {
        // re-sort under the augmented order and append the unit tail
        std::vector<T> ts = e.terms;
        ts.push_back({m + i, Monomial::one(), ring_.field().one()});
        e = ops_->make(std::move(ts));
      }
      if (e.isZero() || e.lead().comp >= m) {
        // zero generator: its tail (the unit vector) is already a syzygy
        if (opts_.wantSyzygies) emitSyzygy(e, out);
        continue;
      }
      addEntry(std::move(e), genDeg[i], out);
    }

    // main loop
    while (!pairs_.empty()) {
      SPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (opts_.budget) {
        opts_.budget->checkDegree(p.sugar);
        opts_.budget->checkTime();
      }
      const Entry& a = entries_[p.i];
      const Entry& b = entries_[p.j];
      E s = ops_->sub(ops_->mulTerm(a.e, p.lcm.quotient(a.lm), ring_.field().one()),
                      ops_->mulTerm(b.e, p.lcm.quotient(b.lm), ring_.field().one()));
      int sugar = p.sugar;
      E rem = normalForm(std::move(s), sugar, -1);
      if (rem.isZero()) continue;
      if (rem.lead().comp >= m) {
        if (opts_.wantSyzygies) emitSyzygy(rem, out);
        continue;
      }
      addEntry(std::move(rem), sugar, out);
    }

    // output
    if (!opts_.wantSyzygies && opts_.reduced) {
      interReduce();
    }
    for (const auto& en : entries_)
      if (!en.dropped) out.basis.push_back(stripTail(en.e, m));
    return out;
  }

 private:
  struct Entry {
    E e;  // monic
    Monomial lm;
    std::int32_t lc;
    int sugar;
    bool dropped = false;
  };

  struct SPair {
    int sugar;
    Monomial lcm;
    std::int32_t comp;
    int i, j;
  };
  struct SPairCmp {
    TermOrder ord;
    bool operator()(const SPair& a, const SPair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      if (int c = ord.cmp(a.lcm, b.lcm)) return c < 0;
      if (a.comp != b.comp) return a.comp < b.comp;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };

  void emitSyzygy(const E& e, GbResult<F>& out) {
    const int m = inputModule_.rank();
    std::vector<T> ts;
    ts.reserve(e.terms.size());
    for (const auto& t : e.terms) ts.push_back({t.comp - m, t.m, t.c});
    ModOps<F> plain(ring_.field(), ModOrder::top(inputOrder_.ring));
    E s = plain.make(std::move(ts));
    if (!s.isZero()) out.syzygies.push_back(std::move(s));
  }

  static E stripTail(const E& e, int m) {
    E r;
    for (const auto& t : e.terms) {
      if (t.comp >= m) break;  // tail terms sort strictly after all F terms
      r.terms.push_back(t);
    }
    return r;
  }

  E normalForm(E f, int& sugar, int exclude) {
    GeoBucket<F> bucket(*ops_);
    bucket.init(f);
    std::vector<T> rem;
    int steps = 0;
    while (auto t = bucket.popLead()) {
      if (opts_.budget && (++steps & 0xff) == 0) opts_.budget->checkTime();
      int red = t->comp < static_cast<int>(byComp_.size()) ? findReducer(t->comp, t->m, exclude)
                                                           : -1;
      if (red < 0) {
        rem.push_back(*t);
        continue;
      }
      const Entry& g = entries_[red];
      Monomial q = t->m.quotient(g.lm);
      bucket.addScaledSkipLead(g.e, q, ring_.field().neg(t->c));
      sugar = std::max(sugar, g.sugar + q.deg());
    }
    E r;
    r.terms = std::move(rem);  // produced in strictly descending order
    return r;
  }

  int findReducer(std::int32_t comp, const Monomial& mon, int exclude) const {
    for (int idx : byComp_[comp]) {
      if (idx == exclude || entries_[idx].dropped) continue;
      if (entries_[idx].lm.divides(mon)) return idx;
    }
    return -1;
  }

  void addEntry(E e, int sugar, GbResult<F>& out) {
    e = ops_->makeMonic(std::move(e));
    Entry en;
    en.lm = e.lead().m;
    en.lc = e.lead().comp;
    en.sugar = sugar;
    en.e = std::move(e);
    int h = static_cast<int>(entries_.size());

    // Gebauer-Moller update of the pair set against the new element
    const bool rankOne = inputModule_.rank() == 1;
    struct Cand {
      Monomial lcm;
      int g;
      bool coprime;
      bool alive = true;
    };
    std::vector<Cand> cands;
    for (int g = 0; g < h; ++g) {
      if (entries_[g].dropped || entries_[g].lc != en.lc) continue;
      Monomial l = entries_[g].lm.lcm(en.lm);
      cands.push_back({l, g, entries_[g].lm.coprime(en.lm)});
    }
    // M: drop candidates whose lcm is strictly divisible by another candidate lcm
    for (auto& c : cands)
      for (auto& d : cands) {
        if (&c == &d || !d.alive || !c.alive) continue;
        if (d.lcm.divides(c.lcm) && !(d.lcm == c.lcm)) c.alive = false;
      }
    // F: among equal lcms keep one, preferring a coprime member
    for (size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].alive) continue;
      for (size_t y = x + 1; y < cands.size(); ++y) {
        if (!cands[y].alive || !(cands[x].lcm == cands[y].lcm)) continue;
        if (cands[y].coprime && !cands[x].coprime) cands[x].coprime = true;
        cands[y].alive = false;
      }
    }
    // B: prune old pairs via the chain criterion through the new lead
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (it->comp == en.lc && en.lm.divides(it->lcm) &&
          !(entries_[it->i].lm.lcm(en.lm) == it->lcm) &&
          !(entries_[it->j].lm.lcm(en.lm) == it->lcm))
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (auto& c : cands) {
      if (!c.alive) continue;
      if (c.coprime && rankOne) {
        // product criterion; in syzygy mode the pair still owes its Koszul syzygy
        if (opts_.wantSyzygies) emitKoszul(c.g, h, en, out);
        continue;
      }
      int sug = std::max(entries_[c.g].sugar + c.lcm.quotient(entries_[c.g].lm).deg(),
                         sugar + c.lcm.quotient(en.lm).deg());
      pairs_.insert(SPair{sug, c.lcm, en.lc, c.g, h});
    }

    byComp_[en.lc].push_back(h);
    entries_.push_back(std::move(en));
  }

  void emitKoszul(int i, int, const Entry& h, GbResult<F>& out) {
    const int m = inputModule_.rank();
    auto split = [&](const E& e, Polynomial<F>& fpart, E& tail) {
      fpart.ringSig = ring_.sig();
      for (const auto& t : e.terms) {
        if (t.comp < m) fpart.terms.push_back({t.m, t.c});
        else tail.terms.push_back(t);
      }
    };
    Polynomial<F> fi, fh;
    E ti, th;
    split(entries_[i].e, fi, ti);
    split(h.e, fh, th);
    E k = ops_->sub(ops_->mulPoly(ti, fh), ops_->mulPoly(th, fi));
    if (!k.isZero()) emitSyzygy(k, out);
  }

  void interReduce() {
    // minimal leads first
    std::vector<int> order(entries_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      int c = augOrder_.cmp(entries_[a].lc, entries_[a].lm, entries_[b].lc, entries_[b].lm);
      if (c) return c < 0;
      return a < b;
    });
    std::vector<int> kept;
    for (int idx : order) {
      bool red = false;
      for (int k : kept)
        if (entries_[k].lc == entries_[idx].lc && entries_[k].lm.divides(entries_[idx].lm)) {
          red = true;
          break;
        }
      if (red) entries_[idx].dropped = true;
      else kept.push_back(idx);
    }
    for (auto& c : byComp_) {
      std::vector<int> v;
      for (int idx : c)
        if (!entries_[idx].dropped) v.push_back(idx);
      c = std::move(v);
    }
    for (int idx : kept) {
      int sugar = entries_[idx].sugar;
      E r = normalFormTail(entries_[idx], sugar, idx);
      entries_[idx].e = std::move(r);
    }
    // canonical output order: ascending leads
    std::vector<Entry> out;
    for (int idx : kept) out.push_back(std::move(entries_[idx]));
    std::sort(out.begin(), out.end(), [&](const Entry& a, const Entry& b) {
      return augOrder_.cmp(a.lc, a.lm, b.lc, b.lm) < 0;
    });
    entries_ = std::move(out);
  }

  // reduce the tail of an entry against everything else (lead is irreducible)
  E normalFormTail(const Entry& en, int& sugar, int exclude) {
    E tail;
    tail.terms.assign(en.e.terms.begin() + 1, en.e.terms.end());
    E red = normalForm(std::move(tail), sugar, exclude);
    E r;
    r.terms.reserve(red.terms.size() + 1);
    r.terms.push_back(en.e.terms.front());
    for (auto& t : red.terms) r.terms.push_back(std::move(t));
    return r;
  }

  const Ring<F>& ring_;
  FreeModule inputModule_;
  ModOrder inputOrder_;
  GbOptions opts_;

  FreeModule aug_;
  ModOrder augOrder_;
  std::optional<ModOps<F>> ops_;
  std::vector<Entry> entries_;
  std::set<SPair, SPairCmp> pairs_;
  std::vector<std::vector<int>> byComp_;
};

// --- public wrappers ---

template <class F>
GbResult<F> moduleGroebner(const Ring<F>& ring, const FreeModule& fm,
                           const std::vector<ModElem<F>>& gens, const ModOrder& order,
                           const GbOptions& opts = {}) {
  Buchberger<F> engine(ring, fm, order, opts);
  return engine.run(gens);
}

template <class F>
ModElem<F> polyToElem(const Polynomial<F>& f) {
  ModElem<F> e;
  e.terms.reserve(f.terms.size());
  for (const auto& t : f.terms) e.terms.push_back({0, t.m, t.c});
  return e;
}

template <class F>
Polynomial<F> elemToPoly(const Ring<F>& ring, const ModElem<F>& e) {
  Polynomial<F> f{{}, ring.sig()};
  f.terms.reserve(e.terms.size());
  for (const auto& t : e.terms) f.terms.push_back({t.m, t.c});
  return f;
}

template <class F>
struct PolyGbResult {
  std::vector<Polynomial<F>> basis;
  std::vector<ModElem<F>> syzygies;
  FreeModule syzModule;
  bool inhomogeneousInput = false;
};

template <class F>
PolyGbResult<F> groebnerBasis(const Ring<F>& ring, const std::vector<Polynomial<F>>& gens,
                              const GbOptions& opts = {}) {
  for (const auto& g : gens) ring.check(g);
  std::vector<ModElem<F>> elems;
  elems.reserve(gens.size());
  for (const auto& g : gens) elems.push_back(polyToElem(g));
  auto r = moduleGroebner(ring, FreeModule::free(1), elems, ModOrder::top(ring.order()), opts);
  PolyGbResult<F> out;
  out.syzygies = std::move(r.syzygies);
  out.syzModule = std::move(r.syzModule);
  out.inhomogeneousInput = r.inhomogeneousInput;
  out.basis.reserve(r.basis.size());
  for (const auto& e : r.basis) out.basis.push_back(elemToPoly(ring, e));
  return out;
}

template <class F>
ModElem<F> moduleNormalForm(const Ring<F>& ring, const FreeModule& fm, const ModElem<F>& f,
                            const std::vector<ModElem<F>>& basis, const ModOrder& order,
                            Budget* budget = nullptr) {
  // one-shot reduction against a fixed basis
  ModOps<F> ops(ring.field(), order);
  struct Red {
    const ModElem<F>* e;
    Monomial lm;
    std::int32_t lc;
  };
  std::vector<std::vector<Red>> byComp(fm.rank());
  for (const auto& b : basis)
    if (!b.isZero()) byComp[b.lead().comp].push_back({&b, b.lead().m, b.lead().comp});
  GeoBucket<F> bucket(ops);
  bucket.init(f);
  std::vector<ModTerm<F>> rem;
  int steps = 0;
  while (auto t = bucket.popLead()) {
    if (budget && (++steps & 0xff) == 0) budget->checkTime();
    const Red* red = nullptr;
    for (const auto& cand : byComp[t->comp])
      if (cand.lm.divides(t->m)) {
        red = &cand;
        break;
      }
    if (!red) {
      rem.push_back(*t);
      continue;
    }
    Monomial q = t->m.quotient(red->lm);
    auto c = ops.field().div(t->c, red->e->lead().c);
    bucket.addScaledSkipLead(*red->e, q, ops.field().neg(c));
  }
  ModElem<F> r;
  r.terms = std::move(rem);
  return r;
}

template <class F>
Polynomial<F> normalForm(const Ring<F>& ring, const Polynomial<F>& f,
                         const std::vector<Polynomial<F>>& basis, Budget* budget = nullptr) {
  ring.check(f);
  std::vector<ModElem<F>> b;
  b.reserve(basis.size());
  for (const auto& g : basis) b.push_back(polyToElem(g));
  auto r = moduleNormalForm(ring, FreeModule::free(1), polyToElem(f), b,
                            ModOrder::top(ring.order()), budget);
  return elemToPoly(ring, r);
}

// test oracle: every S-pair of `basis` reduces to zero (no pruning at all)
template <class F>
bool buchbergerCheck(const Ring<F>& ring, const FreeModule& fm,
                     const std::vector<ModElem<F>>& basis, const ModOrder& order) {
  ModOps<F> ops(ring.field(), order);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].isZero() || basis[j].isZero()) continue;
      const auto& a = basis[i].lead();
      const auto& b = basis[j].lead();
      if (a.comp != b.comp) continue;
      Monomial l = a.m.lcm(b.m);
      auto s = ops.sub(ops.mulTerm(basis[i], l.quotient(a.m), ops.field().inv(a.c)),
                       ops.mulTerm(basis[j], l.quotient(b.m), ops.field().inv(b.c)));
      if (!moduleNormalForm(ring, fm, s, basis, order).isZero()) return false;
    }
  return true;
}

}  // namespace resint
