#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>

namespace resint {

// Exponent vector with cached total degree. Capacity is fixed; rings check
// their variable count against kMaxVars at construction. Trailing entries are
// zero, so order comparisons may scan the whole array.
class Monomial {
 public:
  static constexpr int kMaxVars = 16;
  using Exp = std::uint8_t;

  Monomial() = default;

  int deg() const { return deg_; }
  Exp operator[](int v) const { return e_[v]; }

  void set(int v, int value) {
    if (value < 0 || value > 255) throw std::overflow_error("exponent out of range");
    deg_ += value - e_[v];
    e_[v] = static_cast<Exp>(value);
  }

  bool isOne() const { return deg_ == 0; }

  static Monomial one() { return Monomial(); }
  static Monomial var(int v, int power = 1) {
    Monomial m;
    m.set(v, power);
    return m;
  }

  Monomial mulChecked(const Monomial& o) const {
    Monomial r;
    for (int v = 0; v < kMaxVars; ++v) {
      int s = int(e_[v]) + int(o.e_[v]);
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      r.e_[v] = static_cast<Exp>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }
  Monomial operator*(const Monomial& o) const { return mulChecked(o); }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int v = 0; v < kMaxVars; ++v)
      if (e_[v] > o.e_[v]) return false;
    return true;
  }

  // this / o; caller guarantees divisibility
  Monomial quotient(const Monomial& o) const {
    Monomial r;
    for (int v = 0; v < kMaxVars; ++v) r.e_[v] = static_cast<Exp>(e_[v] - o.e_[v]);
    r.deg_ = deg_ - o.deg_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    int d = 0;
    for (int v = 0; v < kMaxVars; ++v) {
      r.e_[v] = e_[v] > o.e_[v] ? e_[v] : o.e_[v];
      d += r.e_[v];
    }
    r.deg_ = static_cast<std::uint16_t>(d);
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int v = 0; v < kMaxVars; ++v)
      if (e_[v] != 0 && o.e_[v] != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const {
    return deg_ == o.deg_ && std::memcmp(e_.data(), o.e_.data(), kMaxVars) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v = 0; v < kMaxVars; ++v) {
      h ^= e_[v];
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::array<Exp, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
};

// Degree-compatible orders on the standard grading. block-elimination(k)
// eliminates the first k variables.
struct TermOrder {
  enum class Kind { DegRevLex, BlockElim };
  Kind kind = Kind::DegRevLex;
  int blockSize = 0;

  static TermOrder degrevlex() { return TermOrder{Kind::DegRevLex, 0}; }
  static TermOrder blockElim(int firstBlock) { return TermOrder{Kind::BlockElim, firstBlock}; }

  // strict compare: +1 if a > b, 0 if equal, -1 if a < b
  int cmp(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::DegRevLex) return cmpDegRevLex(a, b, 0, Monomial::kMaxVars, a.deg(), b.deg());
    int da = 0, db = 0;
    for (int v = 0; v < blockSize; ++v) {
      da += a[v];
      db += b[v];
    }
    if (int c = cmpDegRevLex(a, b, 0, blockSize, da, db)) return c;
    return cmpDegRevLex(a, b, blockSize, Monomial::kMaxVars, a.deg() - da, b.deg() - db);
  }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  bool operator==(const TermOrder& o) const { return kind == o.kind && blockSize == o.blockSize; }

  std::string signature() const {
    return kind == Kind::DegRevLex ? "degrevlex" : "elim(" + std::to_string(blockSize) + ")";
  }

 private:
  static int cmpDegRevLex(const Monomial& a, const Monomial& b, int lo, int hi, int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (int v = hi - 1; v >= lo; --v)
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    return 0;
  }
};

}  // namespace resint
