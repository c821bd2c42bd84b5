#pragma once

#include "resint/subquotient.hpp"

namespace resint {

// Minimal graded free resolution 0 <- M <- F_0 <- F_1 <- ... <- F_len <- 0.
// maps[k] holds the columns of F_{k+1} -> F_k.
struct Resolution {
  std::vector<FreeModule> frees;
  std::vector<std::vector<GFElem>> maps;
  std::vector<int> subIndices;  // F_0 component -> index of the surviving sub generator

  int length() const { return static_cast<int>(frees.size()) - 1; }
  bool isZeroModule() const { return frees.size() == 1 && frees[0].rank() == 0; }
};

Resolution minimalResolution(const GFRing& ring, const Subquotient& m, const GbEnv& env = {});

struct BettiTable {
  std::vector<std::vector<int>> twists;  // twists[k] = generator degrees of F_k

  long long total(int k) const {
    if (k < 0 || k >= static_cast<int>(twists.size())) return 0;
    return static_cast<long long>(twists[k].size());
  }
  long long graded(int k, int d) const {
    if (k < 0 || k >= static_cast<int>(twists.size())) return 0;
    long long n = 0;
    for (int t : twists[k])
      if (t == d) ++n;
    return n;
  }
  int pd() const {
    for (int k = static_cast<int>(twists.size()) - 1; k >= 0; --k)
      if (!twists[k].empty()) return k;
    return 0;
  }
  // Castelnuovo-Mumford regularity off the minimal resolution
  int regularity() const {
    int r = INT_MIN;
    for (size_t k = 0; k < twists.size(); ++k)
      for (int t : twists[k]) r = std::max(r, t - static_cast<int>(k));
    return r;
  }
  bool singleDegree(int k, int d) const {
    if (total(k) == 0) return true;
    for (int t : twists[static_cast<size_t>(k)])
      if (t != d) return false;
    return true;
  }
};

BettiTable bettiTable(const Resolution& r);

// Auslander-Buchsbaum; throws for the zero module
int depthFromResolution(const GFRing& ring, const Resolution& r);

// d composed with d vanishes, column degrees match, the alternating Hilbert
// sum reproduces the module, and the first map consists of actual relations
bool validateResolution(const GFRing& ring, const Subquotient& m, const Resolution& r,
                        const GbEnv& env = {});

}  // namespace resint
