#pragma once

#include <optional>
#include <vector>

#include "resint/polynomial.hpp"

namespace resint {

// Graded free module: rank many generators, twists[i] = degree of generator i,
// so the module is  (+)_i S(-twists[i]).
struct FreeModule {
  std::vector<int> twists;
  int rank() const { return static_cast<int>(twists.size()); }
  static FreeModule free(int rank, int twist = 0) {
    return FreeModule{std::vector<int>(rank, twist)};
  }
};

template <class F>
struct ModTerm {
  std::int32_t comp;
  Monomial m;
  typename F::Elem c;
};

// Term list sorted strictly descending under a ModOrder.
template <class F>
struct ModElem {
  std::vector<ModTerm<F>> terms;
  bool isZero() const { return terms.empty(); }
  const ModTerm<F>& lead() const { return terms.front(); }
};

// Order on (component, monomial) pairs. Components below elimBoundary beat the
// rest (used for the syzygy-tracking augmentation). Within the trailing group a
// Schreyer multiplier per component may be installed: compare m * schreyer[c]
// in the ring order, ties broken by component. Without multipliers: TOP =
// term-over-position (ring order, then component), POT = position-over-term.
struct ModOrder {
  enum class Mode { TOP, POT };
  TermOrder ring;
  Mode mode = Mode::TOP;
  int elimBoundary = 0;
  std::vector<Monomial> schreyer;  // indexed by comp - elimBoundary when nonempty

  static ModOrder top(TermOrder o) { return ModOrder{o, Mode::TOP, 0, {}}; }
  static ModOrder pot(TermOrder o) { return ModOrder{o, Mode::POT, 0, {}}; }

  int cmp(std::int32_t c1, const Monomial& m1, std::int32_t c2, const Monomial& m2) const {
    if (elimBoundary > 0) {
      bool tail1 = c1 >= elimBoundary, tail2 = c2 >= elimBoundary;
      if (tail1 != tail2) return tail1 ? -1 : 1;
      if (tail1 && !schreyer.empty()) {
        int c = ring.cmp(m1 * schreyer[c1 - elimBoundary], m2 * schreyer[c2 - elimBoundary]);
        if (c) return c;
        return c1 == c2 ? 0 : (c1 < c2 ? 1 : -1);
      }
    }
    if (mode == Mode::POT) {
      if (c1 != c2) return c1 < c2 ? 1 : -1;
      return ring.cmp(m1, m2);
    }
    int c = ring.cmp(m1, m2);
    if (c) return c;
    return c1 == c2 ? 0 : (c1 < c2 ? 1 : -1);
  }

  template <class F>
  int cmp(const ModTerm<F>& a, const ModTerm<F>& b) const {
    return cmp(a.comp, a.m, b.comp, b.m);
  }
};

// Arithmetic on module elements for a fixed field and order.
template <class F>
class ModOps {
 public:
  using Elem = typename F::Elem;
  using E = ModElem<F>;
  using T = ModTerm<F>;

  ModOps(const F& field, const ModOrder& order) : f_(field), o_(order) {}

  const F& field() const { return f_; }
  const ModOrder& order() const { return o_; }

  E make(std::vector<T> ts) const {
    std::sort(ts.begin(), ts.end(), [&](const T& a, const T& b) { return o_.cmp(a, b) > 0; });
    E e;
    e.terms.reserve(ts.size());
    for (auto& t : ts) {
      if (f_.isZero(t.c)) continue;
      if (!e.terms.empty() && e.terms.back().comp == t.comp && e.terms.back().m == t.m) {
        e.terms.back().c = f_.add(e.terms.back().c, t.c);
        if (f_.isZero(e.terms.back().c)) e.terms.pop_back();
      } else {
        e.terms.push_back(std::move(t));
      }
    }
    return e;
  }

  E add(const E& a, const E& b) const {
    E r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
      int c = o_.cmp(a.terms[i], b.terms[j]);
      if (c > 0) r.terms.push_back(a.terms[i++]);
      else if (c < 0) r.terms.push_back(b.terms[j++]);
      else {
        Elem s = f_.add(a.terms[i].c, b.terms[j].c);
        if (!f_.isZero(s)) r.terms.push_back({a.terms[i].comp, a.terms[i].m, s});
        ++i; ++j;
      }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
  }

  E neg(const E& a) const {
    E r = a;
    for (auto& t : r.terms) t.c = f_.neg(t.c);
    return r;
  }
  E sub(const E& a, const E& b) const { return add(a, neg(b)); }

  E scale(const E& a, Elem c) const {
    if (f_.isZero(c)) return E{};
    E r = a;
    for (auto& t : r.terms) t.c = f_.mul(t.c, c);
    return r;
  }

  // a * (c * m); term order is multiplicative, so sortedness is preserved
  E mulTerm(const E& a, const Monomial& m, Elem c) const {
    if (f_.isZero(c)) return E{};
    E r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.comp, t.m * m, f_.mul(t.c, c)});
    return r;
  }

  E mulPoly(const E& a, const Polynomial<F>& p) const {
    std::vector<T> acc;
    acc.reserve(a.terms.size() * p.terms.size());
    for (const auto& u : p.terms)
      for (const auto& t : a.terms) acc.push_back({t.comp, t.m * u.m, f_.mul(t.c, u.c)});
    return make(std::move(acc));
  }

  E makeMonic(const E& a) const {
    if (a.isZero()) return a;
    return scale(a, f_.inv(a.lead().c));
  }

  bool equal(const E& a, const E& b) const {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
      const auto& s = a.terms[i];
      const auto& t = b.terms[i];
      if (s.comp != t.comp || !(s.m == t.m) || !(s.c == t.c)) return false;
    }
    return true;
  }

  static int degree(const FreeModule& fm, const T& t) { return t.m.deg() + fm.twists[t.comp]; }
  static int degree(const FreeModule& fm, const E& e) {
    int d = -1;
    for (const auto& t : e.terms) d = std::max(d, degree(fm, t));
    return d;
  }
  static bool isHomogeneous(const FreeModule& fm, const E& e) {
    for (const auto& t : e.terms)
      if (degree(fm, t) != degree(fm, e.terms.front())) return false;
    return true;
  }

 private:
  const F& f_;
  ModOrder o_;
};

// Geobucket accumulator: keeps partial sums in buckets of geometrically growing
// capacity so long reduction chains cost O(n log n) merges instead of O(n^2).
template <class F>
class GeoBucket {
 public:
  using T = ModTerm<F>;
  using E = ModElem<F>;

  explicit GeoBucket(const ModOps<F>& ops) : ops_(ops) {}

  void init(const E& e) {
    buckets_.clear();
    push(e.terms);
  }

  void addScaled(const E& e, const Monomial& m, typename F::Elem c) {
    if (ops_.field().isZero(c) || e.isZero()) return;
    std::vector<T> v;
    v.reserve(e.terms.size());
    for (const auto& t : e.terms) v.push_back({t.comp, t.m * m, ops_.field().mul(t.c, c)});
    push(std::move(v));
  }

  // same, but skip e's leading term (reduction steps cancel it exactly)
  void addScaledSkipLead(const E& e, const Monomial& m, typename F::Elem c) {
    if (ops_.field().isZero(c) || e.terms.size() < 2) return;
    std::vector<T> v;
    v.reserve(e.terms.size() - 1);
    for (size_t i = 1; i < e.terms.size(); ++i) {
      const auto& t = e.terms[i];
      v.push_back({t.comp, t.m * m, ops_.field().mul(t.c, c)});
    }
    push(std::move(v));
  }

  // pop the leading term (coefficients across buckets combined); nullopt when empty
  std::optional<T> popLead() {
    while (true) {
      int best = -1;
      for (size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || ops_.order().cmp(buckets_[i].back(), buckets_[best].back()) > 0)
          best = static_cast<int>(i);
      }
      if (best < 0) return std::nullopt;
      T t = buckets_[best].back();
      eraseFront(buckets_[best]);
      for (size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        const T& h = buckets_[i].back();
        if (h.comp == t.comp && h.m == t.m) {
          t.c = ops_.field().add(t.c, h.c);
          eraseFront(buckets_[i]);
        }
      }
      if (!ops_.field().isZero(t.c)) return t;
    }
  }

 private:
  // buckets store terms descending; front = lead. Use index offset to avoid
  // O(n) pop-front: store reversed (back = lead).
  void eraseFront(std::vector<T>& b) { b.pop_back(); }

  void push(std::vector<T> v) {
    // incoming vectors are sorted descending; store reversed
    std::reverse(v.begin(), v.end());
    size_t cap = 4;
    size_t i = 0;
    while (true) {
      if (i == buckets_.size()) {
        buckets_.push_back(std::move(v));
        return;
      }
      if (buckets_[i].empty() && v.size() <= cap) {
        buckets_[i] = std::move(v);
        return;
      }
      if (v.size() <= cap && buckets_[i].size() + v.size() <= 2 * cap) {
        buckets_[i] = mergeRev(buckets_[i], v);
        return;
      }
      if (!buckets_[i].empty() && v.size() > cap) {
        // carry the resident bucket into the incoming vector and continue up
        v = mergeRev(buckets_[i], v);
        buckets_[i].clear();
      } else if (buckets_[i].size() + v.size() > 2 * cap) {
        v = mergeRev(buckets_[i], v);
        buckets_[i].clear();
      }
      cap *= 4;
      ++i;
    }
  }

  std::vector<T> mergeRev(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    // inputs ascending (reversed storage); produce ascending
    while (i < a.size() && j < b.size()) {
      int c = ops_.order().cmp(a[i], b[j]);
      if (c < 0) r.push_back(a[i++]);
      else if (c > 0) r.push_back(b[j++]);
      else {
        auto s = ops_.field().add(a[i].c, b[j].c);
        if (!ops_.field().isZero(s)) r.push_back({a[i].comp, a[i].m, s});
        ++i; ++j;
      }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
  }

  const ModOps<F>& ops_;
  std::vector<std::vector<T>> buckets_;
};

}  // namespace resint
