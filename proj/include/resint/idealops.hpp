#pragma once

#include <memory>
#include <vector>

#include "resint/gb_cache.hpp"
#include "resint/groebner.hpp"
#include "resint/hilbert.hpp"
#include "resint/io.hpp"

namespace resint {

// Shared context threaded through every basis-level computation.
struct GbEnv {
  GbCache* cache = nullptr;
  Budget* budget = nullptr;
};

using PolyList = std::vector<GFPoly>;

// reduced Groebner basis of an ideal, memoized through env.cache
std::shared_ptr<const PolyList> idealGroebner(const GFRing& ring, const PolyList& gens,
                                              const GbEnv& env = {});

bool idealContains(const GFRing& ring, const PolyList& gens, const GFPoly& f,
                   const GbEnv& env = {});
bool idealEqual(const GFRing& ring, const PolyList& a, const PolyList& b, const GbEnv& env = {});

PolyList idealSum(const GFRing& ring, const PolyList& a, const PolyList& b);
PolyList idealProduct(const GFRing& ring, const PolyList& a, const PolyList& b);
PolyList idealPower(const GFRing& ring, const PolyList& a, int j);

// drop generators that are redundant within their own degree (exact linear
// algebra; cheap, and complete for ideals generated in a single degree)
PolyList pruneSameDegree(const GFRing& ring, const PolyList& gens);

// number of minimal generators for an ideal generated in a single degree
long long sameDegreeRank(const GFRing& ring, const PolyList& gens);

PolyList idealIntersection(const GFRing& ring, const PolyList& a, const PolyList& b,
                           const GbEnv& env = {});
PolyList idealQuotient(const GFRing& ring, const PolyList& a, const PolyList& b,
                       const GbEnv& env = {});
PolyList idealSaturation(const GFRing& ring, const PolyList& a, const GFPoly& f,
                         const GbEnv& env = {});
bool isNzd(const GFRing& ring, const GFPoly& f, const PolyList& a, const GbEnv& env = {});

struct ElimResult {
  PolyList gens;
  bool inhomogeneousInput = false;  // flagged, not fatal; elimination stays valid
};
// contraction to the subring without the first k variables
ElimResult eliminate(const GFRing& ring, const PolyList& gens, int firstK, const GbEnv& env = {});

// exact division; throws std::logic_error when f is not a multiple of b
GFPoly exactDivide(const GFRing& ring, const GFPoly& f, const GFPoly& b);

// Hilbert data of S/I
HilbertSeries idealHilbert(const GFRing& ring, const PolyList& gens, const GbEnv& env = {});
int idealDim(const GFRing& ring, const PolyList& gens, const GbEnv& env = {});
int idealCodim(const GFRing& ring, const PolyList& gens, const GbEnv& env = {});

}  // namespace resint
