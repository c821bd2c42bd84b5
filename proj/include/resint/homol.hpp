#pragma once

#include "resint/resolution.hpp"

namespace resint {

// Ext^k(M, S) as a subquotient of the dualized k-th free module
Subquotient extModule(const GFRing& ring, const Resolution& res, int k);
Subquotient extModule(const GFRing& ring, const Subquotient& m, int k, const GbEnv& env = {});

// Ext^codim(S/a, S) twisted by -numVars
Subquotient canonicalModule(const GFRing& ring, const PolyList& a, const GbEnv& env = {});

// Hom_S(M, N) as a subquotient of N^{mu(M)}
Subquotient homModule(const GFRing& ring, const Subquotient& m, const Subquotient& n,
                      const GbEnv& env = {});

// S/a has an embedded (or wrong-codimension) associated prime iff some
// Ext^k(S/a, S) with k above the codimension has dimension exactly n - k
struct UnmixedResult {
  bool unmixed = true;
  int offendingK = -1;
};
UnmixedResult unmixednessTest(const GFRing& ring, const PolyList& a, const GbEnv& env = {});

// {p : H_m^p(M) != 0} = {numVars - k : Ext^k(M, S) != 0}, ascending;
// min is the depth and max is the dimension
std::vector<int> localCohomologyProfile(const GFRing& ring, const Resolution& res,
                                        const GbEnv& env = {});
std::vector<int> localCohomologyProfile(const GFRing& ring, const Subquotient& m,
                                        const GbEnv& env = {});

// length of a finite-length module; throws if dim > 0
long long subqLength(const GFRing& ring, const Subquotient& m, const GbEnv& env = {});

}  // namespace resint
