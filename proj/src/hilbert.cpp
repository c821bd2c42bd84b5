#include "resint/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace resint {

namespace {

using Num = std::vector<long long>;

Num numOne() { return {1}; }

void addScaledShifted(Num& a, const Num& b, int shift, long long scale) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += scale * b[i];
}

Num mulNum(const Num& a, const Num& b) {
  Num r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// drop generators divisible by another one
void interreduce(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(),
            [](const Monomial& a, const Monomial& b) { return a.deg() < b.deg(); });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  g = std::move(out);
}

Num numerator(std::vector<Monomial> g);

// split into connected components of the shared-variable graph
bool trySplit(const std::vector<Monomial>& g, Num& out) {
  int n = static_cast<int>(g.size());
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    // BFS
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && !g[u].coprime(g[v])) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }
  if (nc <= 1) return false;
  out = numOne();
  for (int c = 0; c < nc; ++c) {
    std::vector<Monomial> part;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) part.push_back(g[i]);
    out = mulNum(out, numerator(std::move(part)));
  }
  return true;
}

Num numerator(std::vector<Monomial> g) {
  interreduce(g);
  if (g.empty()) return numOne();
  if (g.size() == 1 && g[0].isOne()) return Num{0};  // unit ideal
  if (g.size() == 1) {
    Num r(g[0].deg() + 1, 0);
    r[0] = 1;
    r[g[0].deg()] = -1;
    return r;
  }
  Num split;
  if (trySplit(g, split)) return split;

  // pivot on the most shared variable
  int counts[Monomial::kMaxVars] = {0};
  for (const auto& m : g)
    for (int v = 0; v < Monomial::kMaxVars; ++v)
      if (m[v]) ++counts[v];
  int pv = 0;
  for (int v = 1; v < Monomial::kMaxVars; ++v)
    if (counts[v] > counts[pv]) pv = v;

  // N(G) = N(G + (x)) + t * N(G : x)
  std::vector<Monomial> plus{Monomial::var(pv)};
  for (const auto& m : g)
    if (!m[pv]) plus.push_back(m);
  std::vector<Monomial> colon;
  colon.reserve(g.size());
  for (const auto& m : g) {
    Monomial q = m;
    if (m[pv]) q.set(pv, m[pv] - 1);
    colon.push_back(q);
  }
  Num a = numerator(std::move(plus));
  Num b = numerator(std::move(colon));
  Num r = std::move(a);
  addScaledShifted(r, b, 1, 1);
  return r;
}

long long binomial(long long top, int k) {
  // C(top, k) for small k; exact, guards overflow by stepwise division
  if (top < 0 || k < 0) return 0;
  if (k == 0) return 1;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (top - k + i);
    r /= i;
  }
  if (r > INT64_MAX || r < 0) throw std::overflow_error("binomial overflow");
  return static_cast<long long>(r);
}

}  // namespace

std::vector<long long> hilbertNumerator(std::vector<Monomial> gens) {
  return numerator(std::move(gens));
}

HilbertSeries normalized(HilbertSeries s) {
  size_t lead = 0;
  while (lead < s.num.size() && s.num[lead] == 0) ++lead;
  if (lead == s.num.size()) return HilbertSeries{{}, 0, s.denomExp};
  size_t tail = s.num.size();
  while (tail > lead && s.num[tail - 1] == 0) --tail;
  HilbertSeries r;
  r.num.assign(s.num.begin() + lead, s.num.begin() + tail);
  r.shift = s.shift + static_cast<int>(lead);
  r.denomExp = s.denomExp;
  return r;
}

HilbertSeries seriesAdd(const HilbertSeries& a, const HilbertSeries& b) {
  // raise both to a common denominator first
  int de = std::max(a.denomExp, b.denomExp);
  auto raise = [&](const HilbertSeries& s) {
    Num n = s.num;
    for (int i = s.denomExp; i < de; ++i) {
      // multiply by (1-t)
      Num m(n.size() + 1, 0);
      for (size_t j = 0; j < n.size(); ++j) {
        m[j] += n[j];
        m[j + 1] -= n[j];
      }
      n = std::move(m);
    }
    return n;
  };
  Num na = raise(a), nb = raise(b);
  int shift = std::min(a.shift, b.shift);
  HilbertSeries r;
  r.denomExp = de;
  r.shift = shift;
  addScaledShifted(r.num, na, a.shift - shift, 1);
  addScaledShifted(r.num, nb, b.shift - shift, 1);
  return normalized(std::move(r));
}

HilbertSeries seriesSub(const HilbertSeries& a, const HilbertSeries& b) {
  HilbertSeries nb = b;
  for (auto& c : nb.num) c = -c;
  return seriesAdd(a, nb);
}

HilbertSeries seriesShift(HilbertSeries s, int k) {
  s.shift += k;
  return s;
}

HilbertSeries seriesMulNum(const HilbertSeries& a, const HilbertSeries& b) {
  HilbertSeries r;
  r.denomExp = a.denomExp + b.denomExp;
  r.shift = a.shift + b.shift;
  if (a.num.empty() || b.num.empty()) return normalized(std::move(r));
  r.num = mulNum(a.num, b.num);
  return normalized(std::move(r));
}

bool seriesEqual(const HilbertSeries& a, const HilbertSeries& b) {
  HilbertSeries d = seriesSub(a, b);
  return d.isZero();
}

long long seriesCoeff(const HilbertSeries& s, long long d) {
  __int128 acc = 0;
  long long e = d - s.shift;
  for (size_t k = 0; k < s.num.size(); ++k) {
    if (!s.num[k]) continue;
    long long j = e - static_cast<long long>(k);
    if (s.denomExp == 0) {
      if (j == 0) acc += s.num[k];
    } else if (j >= 0) {
      acc += static_cast<__int128>(s.num[k]) * binomial(s.denomExp - 1 + j, s.denomExp - 1);
    }
  }
  if (acc > INT64_MAX || acc < -static_cast<__int128>(INT64_MAX)) {
    throw std::overflow_error("hilbert coefficient overflow");
  }
  return static_cast<long long>(acc);
}

int seriesDim(const HilbertSeries& s) {
  HilbertSeries n = normalized(s);
  if (n.num.empty()) return -1;
  Num q = n.num;
  int e = 0;
  while (true) {
    __int128 at1 = 0;
    for (long long c : q) at1 += c;
    if (at1 != 0) break;
    // exact division by (1-t): q'_k = q_0 + ... + q_k, last carry must vanish
    Num d(q.size(), 0);
    long long run = 0;
    for (size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      d[k] = run;
    }
    d.resize(q.size() - 1);
    q = std::move(d);
    ++e;
  }
  return n.denomExp - e;
}

long long seriesDegree(const HilbertSeries& s) {
  HilbertSeries n = normalized(s);
  if (n.num.empty()) return 0;
  Num q = n.num;
  int dim = seriesDim(s);
  int e = n.denomExp - dim;
  for (int i = 0; i < e; ++i) {
    Num d(q.size(), 0);
    long long run = 0;
    for (size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      d[k] = run;
    }
    if (!d.empty()) d.resize(q.size() - 1);
    q = std::move(d);
  }
  __int128 at1 = 0;
  for (long long c : q) at1 += c;
  long long v = static_cast<long long>(at1);
  return v < 0 ? -v : v;
}

std::vector<std::pair<long long, long long>> seriesFiniteSupport(const HilbertSeries& s) {
  HilbertSeries n = normalized(s);
  if (n.num.empty()) return {};
  if (seriesDim(s) > 0) throw std::invalid_argument("series has infinite support");
  // dim <= 0 means (1-t)^denomExp divides the numerator exactly
  Num q = n.num;
  for (int i = 0; i < n.denomExp; ++i) {
    Num d;
    long long run = 0;
    for (size_t k = 0; k + 1 < q.size(); ++k) {
      run += q[k];
      d.push_back(run);
    }
    q = std::move(d);
  }
  std::vector<std::pair<long long, long long>> out;
  for (size_t k = 0; k < q.size(); ++k)
    if (q[k]) out.emplace_back(n.shift + static_cast<long long>(k), q[k]);
  return out;
}

std::string seriesToString(const HilbertSeries& s) {
  HilbertSeries n = normalized(s);
  std::string out = "(";
  if (n.num.empty()) out += "0";
  bool first = true;
  for (size_t k = 0; k < n.num.size(); ++k) {
    long long c = n.num[k];
    if (!c) continue;
    long long d = n.shift + static_cast<long long>(k);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    std::string mono = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
    if (a != 1 || mono.empty()) {
      out += std::to_string(a);
      if (!mono.empty()) out += "*";
    }
    out += mono;
  }
  out += ")";
  if (n.denomExp > 0) out += "/(1-t)^" + std::to_string(n.denomExp);
  return out;
}

}  // namespace resint
