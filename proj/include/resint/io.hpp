#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "resint/polynomial.hpp"

namespace resint {

// Textual polynomial format: integer (or num/den) coefficients, variable names
// as configured in the ring (e.g. x[1,2]), operators + - * ^ and parentheses.
// print() emits the canonical form, which parse() round-trips bit-exactly.

namespace io_detail {

inline bool displayNegative(const PrimeField& f, PrimeField::Elem c) { return f.lift(c) < 0; }
inline std::string displayAbs(const PrimeField& f, PrimeField::Elem c) {
  auto v = f.lift(c);
  return std::to_string(v < 0 ? -v : v);
}
inline bool displayNegative(const RationalField&, const mpq_class& c) { return sgn(c) < 0; }
inline std::string displayAbs(const RationalField&, const mpq_class& c) {
  mpq_class a = c < 0 ? mpq_class(-c) : c;
  a.canonicalize();
  return a.get_str();
}

}  // namespace io_detail

template <class F>
std::string printMonomial(const Ring<F>& ring, const Monomial& m) {
  std::string s;
  for (int v = 0; v < ring.numVars(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.varNames()[v];
    if (m[v] > 1) s += "^" + std::to_string(int(m[v]));
  }
  return s;
}

template <class F>
std::string printPoly(const Ring<F>& ring, const Polynomial<F>& f) {
  if (f.isZero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms) {
    bool neg = io_detail::displayNegative(ring.field(), t.c);
    std::string cs = io_detail::displayAbs(ring.field(), t.c);
    std::string ms = printMonomial(ring, t.m);
    std::string piece;
    if (ms.empty()) piece = cs;
    else if (cs == "1") piece = ms;
    else piece = cs + "*" + ms;
    if (first) {
      out += (neg ? "-" : "") + piece;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + piece;
    }
  }
  return out;
}

template <class F>
class PolyParser {
 public:
  PolyParser(const Ring<F>& ring, const std::string& text) : ring_(ring), s_(text) {
    for (int v = 0; v < ring.numVars(); ++v) names_[ring.varNames()[v]] = v;
  }

  Polynomial<F> parse() {
    auto f = parseExpr();
    skipWs();
    if (pos_ != s_.size()) fail("trailing input");
    return f;
  }

 private:
  using Poly = Polynomial<F>;

  Poly parseExpr() {
    skipWs();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    Poly acc = parseTerm();
    if (neg) acc = ring_.neg(acc);
    while (true) {
      skipWs();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        Poly t = parseTerm();
        acc = c == '+' ? ring_.add(acc, t) : ring_.sub(acc, t);
      } else {
        return acc;
      }
    }
  }

  Poly parseTerm() {
    Poly acc = parseFactor();
    while (true) {
      skipWs();
      if (peek() == '*') {
        get();
        acc = ring_.mul(acc, parseFactor());
      } else {
        return acc;
      }
    }
  }

  Poly parseFactor() {
    skipWs();
    char c = peek();
    Poly base;
    if (c == '(') {
      get();
      base = parseExpr();
      skipWs();
      if (get() != ')') fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = readDigits();
      skipWs();
      if (peek() == '/') {
        get();
        skipWs();
        digits += "/" + readDigits();
      }
      base = ring_.constant(ring_.field().parse(digits));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      base = parseVar();
    } else {
      fail("unexpected character");
    }
    skipWs();
    if (peek() == '^') {
      get();
      skipWs();
      int e = std::stoi(readDigits());
      base = ring_.pow(base, e);
    }
    return base;
  }

  Poly parseVar() {
    std::string name;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      name += s_[pos_++];
    if (pos_ < s_.size() && s_[pos_] == '[') {
      while (pos_ < s_.size() && s_[pos_] != ']') name += s_[pos_++];
      if (pos_ == s_.size()) fail("unterminated variable index");
      name += s_[pos_++];
    }
    auto it = names_.find(name);
    if (it == names_.end()) fail("unknown variable '" + name + "'");
    return ring_.var(it->second);
  }

  std::string readDigits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
    if (d.empty()) fail("expected number");
    return d;
  }

  void skipWs() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::runtime_error("parse error at position " + std::to_string(pos_) + ": " + why);
  }

  const Ring<F>& ring_;
  const std::string& s_;
  size_t pos_ = 0;
  std::map<std::string, int> names_;
};

template <class F>
Polynomial<F> parsePoly(const Ring<F>& ring, const std::string& text) {
  return PolyParser<F>(ring, text).parse();
}

}  // namespace resint
