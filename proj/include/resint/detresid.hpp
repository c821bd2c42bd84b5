#pragma once

#include <cstdint>
#include <string>

#include "resint/homol.hpp"

namespace resint {

// generic 2 x n matrix, its 2x2 minors, and the derived constants
struct DetContext {
  int n;
  int g;    // codimension of the minor ideal, n - 1
  int ell;  // analytic spread, 2n - 3
  GFRing ring;
  PolyList minors;  // delta(q, r) for q < r, ordered lexicographically
};

// throws on n < 4; verifies codim = n - 1
DetContext buildContext(int n, std::int64_t prime = 32003, const GbEnv& env = {});

// position of delta(q, r) in DetContext::minors, columns 1-based
int minorIndex(const DetContext& ctx, int q, int r);

enum class ReductionKind { Sparse, Generic };

struct ReductionSequence {
  ReductionKind kind = ReductionKind::Sparse;
  std::uint64_t seed = 0;  // meaningful for Generic
  PolyList elements;       // a_1 .. a_ell, quadrics in the minor ideal
};

// true iff J * I^(n-3) == I^(n-2) and the one-lower product falls short
// (read as J != I when n = 4)
bool reductionNumberCheck(const DetContext& ctx, const PolyList& j, const GbEnv& env = {});

// a_p = sum of delta(q, r) over q + r = p + 2; verified to be a reduction
ReductionSequence sparseReduction(const DetContext& ctx, const GbEnv& env = {});

// seeded random combinations of the minors; redrawn (bounded) until the
// reduction check passes
ReductionSequence genericReduction(const DetContext& ctx, std::uint64_t seed,
                                   const GbEnv& env = {});

struct ChainLink {
  GFPoly a;            // accepted element (zero at i = 0)
  PolyList j;          // J_i = (a_1 .. a_i)
  PolyList k;          // K_i = J_i : I
  bool geometric = false;  // codim(I + K_i) >= i + 1, checked for i <= ell-1
  std::string source;      // "sparse" or "generic(<seed>)"
};

struct ResidualChain {
  std::vector<ChainLink> links;  // index i = 0 .. ell
};

// K_i with codim K_i == i and the geometric flag enforced for i <= ell-1;
// any step that fails either check is replaced by seeded generic draws
ResidualChain residualChain(const DetContext& ctx, const ReductionSequence& initial,
                            std::uint64_t fallbackSeed, const GbEnv& env = {});

// M_{i,j}: (I^j / J_i I^{j-1})(2j) for j >= 1, S/K_i for j = 0,
// K_{i+1}/K_i for j = -1 (smaller j is out of scope)
Subquotient moduleM(const DetContext& ctx, const ResidualChain& chain, int i, int j,
                    const GbEnv& env = {});

// the graded identity behind the M_{i,j} normalization:
// HF(M_{i,j}) == HF((I^j + K_i)/K_i) shifted by 2j, j >= 1
bool hfIdentityM(const DetContext& ctx, const ResidualChain& chain, int i, int j,
                 const GbEnv& env = {});

// h(t) for t = 0..maxT, from the Pluecker quadric ideal, cross-checked
// against the generator rank of the t-th power of the minor ideal
std::vector<long long> grassmannHF(int n, int maxT, std::int64_t prime = 32003,
                                   const GbEnv& env = {});

// i-fold finite difference of h, reading h as 0 in negative degrees
long long deltaPower(const std::vector<long long>& h, int i, int t);

// the depth table for M_{i,j}; 0 <= i <= ell-1, j >= -1
int predictedDepth(int n, int i, int j);

enum class Region { A, B, C, D, E, None };
Region predictedRegion(int n, int i, int j);
char regionChar(Region r);

}  // namespace resint
