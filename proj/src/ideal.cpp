#include "resint/idealops.hpp"

#include <algorithm>
#include <stdexcept>

namespace resint {

namespace {

PolyList dropZeros(const PolyList& gens) {
  PolyList out;
  for (const auto& f : gens)
    if (!f.isZero()) out.push_back(f);
  return out;
}

std::string gbKey(const GFRing& ring, const PolyList& gens) {
  std::vector<std::string> g;
  g.reserve(gens.size());
  for (const auto& f : gens)
    if (!f.isZero()) g.push_back(printPoly(ring, f));
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::string key = "gb 1\n" + ring.signature() + "\n";
  for (const auto& s : g) {
    key += s;
    key += '\n';
  }
  return key;
}

Monomial shiftUp(const Monomial& m, int n) {
  Monomial r;
  for (int v = 0; v < n; ++v) r.set(v + 1, m[v]);
  return r;
}

Monomial shiftDown(const Monomial& m, int n) {
  Monomial r;
  for (int v = 1; v <= n; ++v) r.set(v - 1, m[v]);
  return r;
}

}  // namespace

std::shared_ptr<const PolyList> idealGroebner(const GFRing& ring, const PolyList& gens,
                                              const GbEnv& env) {
  std::string key;
  if (env.cache) {
    key = gbKey(ring, gens);
    if (auto lines = env.cache->load(key)) {
      auto out = std::make_shared<PolyList>();
      out->reserve(lines->size());
      for (const auto& l : *lines) out->push_back(parsePoly(ring, l));
      return out;
    }
  }
  GbOptions opts;
  opts.budget = env.budget;
  auto res = groebnerBasis(ring, gens, opts);
  auto out = std::make_shared<PolyList>(std::move(res.basis));
  if (env.cache) {
    std::vector<std::string> lines;
    lines.reserve(out->size());
    for (const auto& f : *out) lines.push_back(printPoly(ring, f));
    env.cache->store(key, std::move(lines), ring.field().signature());
  }
  return out;
}

bool idealContains(const GFRing& ring, const PolyList& gens, const GFPoly& f, const GbEnv& env) {
  if (f.isZero()) return true;
  auto gb = idealGroebner(ring, gens, env);
  return normalForm(ring, f, *gb, env.budget).isZero();
}

bool idealEqual(const GFRing& ring, const PolyList& a, const PolyList& b, const GbEnv& env) {
  auto ga = idealGroebner(ring, a, env);
  auto gb = idealGroebner(ring, b, env);
  if (ga->size() != gb->size()) return false;
  for (size_t i = 0; i < ga->size(); ++i)
    if (!ring.equal((*ga)[i], (*gb)[i])) return false;
  return true;
}

PolyList idealSum(const GFRing& ring, const PolyList& a, const PolyList& b) {
  (void)ring;
  PolyList out = dropZeros(a);
  for (const auto& f : b)
    if (!f.isZero()) out.push_back(f);
  return out;
}

PolyList idealProduct(const GFRing& ring, const PolyList& a, const PolyList& b) {
  PolyList out;
  for (const auto& f : a)
    for (const auto& g : b) {
      if (f.isZero() || g.isZero()) continue;
      out.push_back(ring.mul(f, g));
    }
  return pruneSameDegree(ring, out);
}

PolyList idealPower(const GFRing& ring, const PolyList& a, int j) {
  if (j < 0) throw std::invalid_argument("negative ideal power");
  if (j == 0) return {ring.fromInt(1)};
  PolyList pow = pruneSameDegree(ring, dropZeros(a));
  for (int k = 2; k <= j; ++k) pow = idealProduct(ring, pow, a);
  return pow;
}

PolyList pruneSameDegree(const GFRing& ring, const PolyList& gens) {
  // bucket by degree; within a bucket run exact Gaussian elimination and keep
  // the generators that contribute a new pivot
  std::vector<int> degs;
  for (const auto& f : gens) degs.push_back(f.degree());
  std::vector<int> uniq = degs;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

  std::vector<bool> keep(gens.size(), false);
  const auto& F = ring.field();
  for (int d : uniq) {
    if (d < 0) continue;  // zero polys
    std::vector<size_t> idx;
    for (size_t i = 0; i < gens.size(); ++i)
      if (degs[i] == d) idx.push_back(i);
    // column space: all monomials appearing, descending
    std::vector<Monomial> mons;
    for (size_t i : idx)
      for (const auto& t : gens[i].terms) mons.push_back(t.m);
    std::sort(mons.begin(), mons.end(),
              [&](const Monomial& a, const Monomial& b) { return ring.order().cmp(a, b) > 0; });
    mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
    auto colOf = [&](const Monomial& m) {
      auto it = std::lower_bound(mons.begin(), mons.end(), m, [&](const Monomial& a,
                                                                  const Monomial& b) {
        return ring.order().cmp(a, b) > 0;
      });
      return static_cast<size_t>(it - mons.begin());
    };
    std::vector<std::vector<GF::Elem>> rows;  // normalized, with pivot col
    std::vector<size_t> pivots;
    for (size_t i : idx) {
      std::vector<GF::Elem> row(mons.size(), F.zero());
      for (const auto& t : gens[i].terms) row[colOf(t.m)] = t.c;
      for (size_t r = 0; r < rows.size(); ++r) {
        auto c = row[pivots[r]];
        if (F.isZero(c)) continue;
        for (size_t k = pivots[r]; k < mons.size(); ++k)
          row[k] = F.sub(row[k], F.mul(c, rows[r][k]));
      }
      size_t p = 0;
      while (p < mons.size() && F.isZero(row[p])) ++p;
      if (p == mons.size()) continue;  // dependent within its degree
      auto inv = F.inv(row[p]);
      for (size_t k = p; k < mons.size(); ++k) row[k] = F.mul(row[k], inv);
      rows.push_back(std::move(row));
      pivots.push_back(p);
      keep[i] = true;
    }
  }
  PolyList out;
  for (size_t i = 0; i < gens.size(); ++i)
    if (keep[i]) out.push_back(gens[i]);
  return out;
}

long long sameDegreeRank(const GFRing& ring, const PolyList& gens) {
  return static_cast<long long>(pruneSameDegree(ring, gens).size());
}

PolyList idealIntersection(const GFRing& ring, const PolyList& a, const PolyList& b,
                           const GbEnv& env) {
  PolyList ga = dropZeros(a), gb = dropZeros(b);
  if (ga.empty() || gb.empty()) return {};
  const int n = ring.numVars();
  if (n + 1 > Monomial::kMaxVars)
    throw std::invalid_argument("no spare variable slot for the intersection trick");
  std::string t = "t";
  while (std::find(ring.varNames().begin(), ring.varNames().end(), t) != ring.varNames().end())
    t += "_";
  std::vector<std::string> extNames{t};
  for (const auto& v : ring.varNames()) extNames.push_back(v);
  GFRing ext(ring.field(), extNames, TermOrder::blockElim(1));

  // t*A + (1-t)*B; inhomogeneous on purpose, the sugar strategy copes
  PolyList gens;
  for (const auto& f : ga) {
    std::vector<Term<GF>> ts;
    for (const auto& tm : f.terms) ts.push_back({shiftUp(tm.m, n) * Monomial::var(0), tm.c});
    gens.push_back(ext.make(std::move(ts)));
  }
  for (const auto& f : gb) {
    std::vector<Term<GF>> ts;
    for (const auto& tm : f.terms) {
      ts.push_back({shiftUp(tm.m, n), tm.c});
      ts.push_back({shiftUp(tm.m, n) * Monomial::var(0), ring.field().neg(tm.c)});
    }
    gens.push_back(ext.make(std::move(ts)));
  }
  auto basis = idealGroebner(ext, gens, env);
  PolyList out;
  for (const auto& g : *basis) {
    bool pure = true;
    for (const auto& tm : g.terms)
      if (tm.m[0]) {
        pure = false;
        break;
      }
    if (!pure) continue;
    std::vector<Term<GF>> ts;
    for (const auto& tm : g.terms) ts.push_back({shiftDown(tm.m, n), tm.c});
    out.push_back(ring.make(std::move(ts)));
  }
  return out;
}

GFPoly exactDivide(const GFRing& ring, const GFPoly& f, const GFPoly& b) {
  if (b.isZero()) throw std::logic_error("division by zero polynomial");
  GFPoly q = ring.zero();
  GFPoly r = f;
  const auto& F = ring.field();
  while (!r.isZero()) {
    const auto& lr = r.lead();
    const auto& lb = b.lead();
    if (!lb.m.divides(lr.m)) throw std::logic_error("inexact polynomial division");
    Monomial m = lr.m.quotient(lb.m);
    auto c = F.div(lr.c, lb.c);
    GFPoly piece = ring.monomial(m, c);
    q = ring.add(q, piece);
    r = ring.sub(r, ring.mul(piece, b));
  }
  return q;
}

PolyList idealQuotient(const GFRing& ring, const PolyList& a, const PolyList& b,
                       const GbEnv& env) {
  PolyList gb = dropZeros(b);
  if (gb.empty()) return {ring.fromInt(1)};  // A : (0) = S
  PolyList acc;
  bool first = true;
  for (const auto& g : gb) {
    PolyList inter = idealIntersection(ring, a, {g}, env);
    PolyList q;
    q.reserve(inter.size());
    for (const auto& f : inter) q.push_back(exactDivide(ring, f, g));
    acc = first ? std::move(q) : idealIntersection(ring, acc, q, env);
    first = false;
    if (acc.empty()) return acc;  // quotient is already zero
  }
  return acc;
}

PolyList idealSaturation(const GFRing& ring, const PolyList& a, const GFPoly& f,
                         const GbEnv& env) {
  PolyList cur = a;
  for (int round = 0; round < 20; ++round) {
    PolyList next = idealQuotient(ring, cur, {f}, env);
    if (idealEqual(ring, next, cur, env)) return cur;
    cur = std::move(next);
  }
  throw std::runtime_error("saturation did not stabilize within 20 rounds");
}

bool isNzd(const GFRing& ring, const GFPoly& f, const PolyList& a, const GbEnv& env) {
  return idealEqual(ring, idealQuotient(ring, a, {f}, env), a, env);
}

ElimResult eliminate(const GFRing& ring, const PolyList& gens, int firstK, const GbEnv& env) {
  ElimResult out;
  for (const auto& f : gens)
    if (!f.isZero() && !ring.isHomogeneous(f)) out.inhomogeneousInput = true;
  GFRing elimRing(ring.field(), ring.varNames(), TermOrder::blockElim(firstK));
  PolyList lifted;
  for (const auto& f : dropZeros(gens)) {
    std::vector<Term<GF>> ts(f.terms.begin(), f.terms.end());
    lifted.push_back(elimRing.make(std::move(ts)));
  }
  auto basis = idealGroebner(elimRing, lifted, env);
  for (const auto& g : *basis) {
    bool pure = true;
    for (const auto& t : g.terms)
      for (int v = 0; v < firstK && pure; ++v)
        if (t.m[v]) pure = false;
    if (!pure) continue;
    std::vector<Term<GF>> ts(g.terms.begin(), g.terms.end());
    out.gens.push_back(ring.make(std::move(ts)));
  }
  return out;
}

HilbertSeries idealHilbert(const GFRing& ring, const PolyList& gens, const GbEnv& env) {
  auto gb = idealGroebner(ring, gens, env);
  std::vector<Monomial> leads;
  leads.reserve(gb->size());
  for (const auto& f : *gb) leads.push_back(f.lead().m);
  HilbertSeries s;
  s.num = hilbertNumerator(std::move(leads));
  s.denomExp = ring.numVars();
  return normalized(std::move(s));
}

int idealDim(const GFRing& ring, const PolyList& gens, const GbEnv& env) {
  return seriesDim(idealHilbert(ring, gens, env));
}

int idealCodim(const GFRing& ring, const PolyList& gens, const GbEnv& env) {
  return ring.numVars() - idealDim(ring, gens, env);
}

}  // namespace resint
