#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace resint {

// Coefficient arithmetic is exact everywhere. The prime field is the production
// path; rationals exist for small cross-checks and reuse gmp.

class PrimeField {
 public:
  using Elem = std::int64_t;  // canonical representative in [0, p)

  explicit PrimeField(std::int64_t p = 32003) : p_(p) {
    if (p < 2 || p > (std::int64_t(1) << 31)) throw std::invalid_argument("prime out of range");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("modulus is not prime");
  }

  std::int64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool isZero(Elem a) const { return a == 0; }
  bool isOne(Elem a) const { return a == 1; }
  Elem fromInt(std::int64_t n) const {
    Elem r = n % p_;
    return r < 0 ? r + p_ : r;
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const {
    Elem s = a - b;
    return s < 0 ? s + p_ : s;
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    // extended euclid
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1;
      std::int64_t s2 = s0 - q * s1;
      r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    return s0 < 0 ? s0 + p_ : s0;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // symmetric representative, for printing
  std::int64_t lift(Elem a) const { return a > p_ / 2 ? a - p_ : a; }
  std::string toString(Elem a) const { return std::to_string(lift(a)); }
  Elem parse(const std::string& digits) const {
    mpz_class z(digits);
    mpz_class r = z % p_;
    std::int64_t v = r.get_si();
    return v < 0 ? v + p_ : v;
  }

  std::string signature() const { return "GF(" + std::to_string(p_) + ")"; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::int64_t p_;
};

class RationalField {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool isZero(const Elem& a) const { return sgn(a) == 0; }
  bool isOne(const Elem& a) const { return a == 1; }
  Elem fromInt(std::int64_t n) const { return Elem(static_cast<long>(n)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in rationals");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a / inv_check(b); }

  std::string toString(const Elem& a) const {
    Elem c = a;
    c.canonicalize();
    return c.get_str();
  }
  Elem parse(const std::string& s) const {
    Elem v(s);
    v.canonicalize();
    return v;
  }

  std::string signature() const { return "QQ"; }
  bool operator==(const RationalField&) const { return true; }

 private:
  Elem inv_check(const Elem& b) const {
    if (sgn(b) == 0) throw std::domain_error("division by zero in rationals");
    return b;
  }
};

}  // namespace resint
