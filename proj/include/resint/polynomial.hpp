#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "resint/field.hpp"
#include "resint/monomial.hpp"

namespace resint {

template <class F>
struct Term {
  Monomial m;
  typename F::Elem c;
};

// Plain term list, sorted strictly descending in the ring's order. All
// structure (field, order, names) lives in the Ring; polynomials only carry a
// signature hash so cross-ring mixups fail fast instead of corrupting data.
template <class F>
struct Polynomial {
  std::vector<Term<F>> terms;
  std::uint64_t ringSig = 0;

  bool isZero() const { return terms.empty(); }
  const Term<F>& lead() const { return terms.front(); }
  int degree() const { return terms.empty() ? -1 : terms.front().m.deg(); }
};

template <class F>
class Ring {
 public:
  using Elem = typename F::Elem;
  using Poly = Polynomial<F>;

  Ring(F field, std::vector<std::string> varNames, TermOrder order = TermOrder::degrevlex())
      : field_(std::move(field)), names_(std::move(varNames)), order_(order) {
    if (static_cast<int>(names_.size()) > Monomial::kMaxVars)
      throw std::invalid_argument("too many variables for monomial capacity");
    sigText_ = field_.signature() + "[";
    for (size_t i = 0; i < names_.size(); ++i) sigText_ += (i ? "," : "") + names_[i];
    sigText_ += "];" + order_.signature();
    sig_ = fnv(sigText_);
  }

  const F& field() const { return field_; }
  int numVars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& varNames() const { return names_; }
  const TermOrder& order() const { return order_; }
  std::uint64_t sig() const { return sig_; }
  const std::string& signature() const { return sigText_; }

  void check(const Poly& f) const {
    if (!f.terms.empty() && f.ringSig != sig_) throw std::invalid_argument("ring mismatch");
  }

  Poly zero() const { return Poly{{}, sig_}; }
  Poly constant(Elem c) const {
    Poly f{{}, sig_};
    if (!field_.isZero(c)) f.terms.push_back({Monomial::one(), c});
    return f;
  }
  Poly fromInt(std::int64_t n) const { return constant(field_.fromInt(n)); }
  Poly monomial(const Monomial& m, Elem c) const {
    Poly f{{}, sig_};
    if (!field_.isZero(c)) f.terms.push_back({m, c});
    return f;
  }
  Poly var(int v, int power = 1) const { return monomial(Monomial::var(v, power), field_.one()); }

  // sort descending, merge equal monomials, drop zeros
  Poly make(std::vector<Term<F>> ts) const {
    std::sort(ts.begin(), ts.end(),
              [&](const Term<F>& a, const Term<F>& b) { return order_.cmp(a.m, b.m) > 0; });
    Poly f{{}, sig_};
    f.terms.reserve(ts.size());
    for (auto& t : ts) {
      if (field_.isZero(t.c)) continue;
      if (!f.terms.empty() && f.terms.back().m == t.m) {
        f.terms.back().c = field_.add(f.terms.back().c, t.c);
        if (field_.isZero(f.terms.back().c)) f.terms.pop_back();
      } else {
        f.terms.push_back(std::move(t));
      }
    }
    return f;
  }

  Poly add(const Poly& a, const Poly& b) const {
    check(a); check(b);
    Poly r{{}, sig_};
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
      int c = order_.cmp(a.terms[i].m, b.terms[j].m);
      if (c > 0) {
        r.terms.push_back(a.terms[i++]);
      } else if (c < 0) {
        r.terms.push_back(b.terms[j++]);
      } else {
        Elem s = field_.add(a.terms[i].c, b.terms[j].c);
        if (!field_.isZero(s)) r.terms.push_back({a.terms[i].m, s});
        ++i; ++j;
      }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
  }

  Poly neg(const Poly& a) const {
    Poly r = a;
    for (auto& t : r.terms) t.c = field_.neg(t.c);
    return r;
  }
  Poly sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

  Poly scale(const Poly& a, Elem c) const {
    if (field_.isZero(c)) return zero();
    Poly r = a;
    for (auto& t : r.terms) t.c = field_.mul(t.c, c);
    return r;
  }

  Poly mulTerm(const Poly& a, const Monomial& m, Elem c) const {
    if (field_.isZero(c)) return zero();
    Poly r{{}, sig_};
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.m * m, field_.mul(t.c, c)});
    return r;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    check(a); check(b);
    const Poly& small = a.terms.size() <= b.terms.size() ? a : b;
    const Poly& big = a.terms.size() <= b.terms.size() ? b : a;
    std::vector<Term<F>> acc;
    acc.reserve(small.terms.size() * big.terms.size());
    for (const auto& t : small.terms)
      for (const auto& u : big.terms) acc.push_back({t.m * u.m, field_.mul(t.c, u.c)});
    return make(std::move(acc));
  }

  Poly pow(const Poly& a, int e) const {
    Poly r = fromInt(1);
    for (int k = 0; k < e; ++k) r = mul(r, a);
    return r;
  }

  Poly makeMonic(const Poly& a) const {
    if (a.isZero()) return a;
    return scale(a, field_.inv(a.lead().c));
  }

  bool equal(const Poly& a, const Poly& b) const {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].m == b.terms[i].m) || !(a.terms[i].c == b.terms[i].c)) return false;
    return true;
  }

  bool isHomogeneous(const Poly& a) const {
    for (const auto& t : a.terms)
      if (t.m.deg() != a.terms.front().m.deg()) return false;
    return true;
  }

  static std::uint64_t fnv(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  TermOrder order_;
  std::string sigText_;
  std::uint64_t sig_ = 0;
};

using GF = PrimeField;
using QQ = RationalField;
using GFRing = Ring<GF>;
using GFPoly = Polynomial<GF>;
using QRing = Ring<QQ>;
using QPoly = Polynomial<QQ>;

}  // namespace resint
