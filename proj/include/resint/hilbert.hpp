#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "resint/monomial.hpp"

namespace resint {

// Rational function num(t) * t^shift / (1-t)^denomExp with integer numerator.
// Everything graded here is compared through these, exactly; no truncation.
struct HilbertSeries {
  std::vector<long long> num;  // dense, degree 0 first
  int shift = 0;
  int denomExp = 0;

  bool isZero() const {
    for (long long c : num)
      if (c) return false;
    return true;
  }
};

// numerator of the Hilbert series of S/(monomial ideal), over (1-t)^numVars
std::vector<long long> hilbertNumerator(std::vector<Monomial> gens);

// trims zeros at both ends (leading zeros move into shift)
HilbertSeries normalized(HilbertSeries s);

HilbertSeries seriesAdd(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries seriesSub(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries seriesShift(HilbertSeries s, int k);  // multiply by t^k
HilbertSeries seriesMulNum(const HilbertSeries& a, const HilbertSeries& b);
bool seriesEqual(const HilbertSeries& a, const HilbertSeries& b);

// coefficient of t^d in the power series expansion
long long seriesCoeff(const HilbertSeries& s, long long d);

// Krull dimension read off the series: denomExp minus the multiplicity of
// (1-t) in the numerator. Returns -1 for the zero module.
int seriesDim(const HilbertSeries& s);

// multiplicity: num / (1-t)^mult evaluated at 1 (sign-correct for dim >= 0)
long long seriesDegree(const HilbertSeries& s);

// (degree, coefficient) pairs of a finite-length series, ascending degree,
// zero coefficients dropped; throws when the module has positive dimension
std::vector<std::pair<long long, long long>> seriesFiniteSupport(const HilbertSeries& s);

std::string seriesToString(const HilbertSeries& s);

}  // namespace resint
