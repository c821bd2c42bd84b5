#pragma once

#include "resint/idealops.hpp"
#include "resint/module.hpp"

namespace resint {

using GFElem = ModElem<GF>;

// Graded module (span(sub) + span(rel))/span(rel) inside a twisted free
// module. span(rel) need not sit inside span(sub); Hom modules violate that.
struct Subquotient {
  FreeModule ambient;
  std::vector<GFElem> sub;
  std::vector<GFElem> rel;
};

// S/A as a subquotient of S^1
Subquotient quotientRingModule(const GFRing& ring, const PolyList& a);

// cokernel of a column matrix into `target`
Subquotient cokernel(const FreeModule& target, std::vector<GFElem> columns);

// M(b): all ambient twists drop by b
Subquotient twist(Subquotient m, int b);

HilbertSeries subqHilbert(const GFRing& ring, const Subquotient& m, const GbEnv& env = {});

bool subqIsZero(const GFRing& ring, const Subquotient& m, const GbEnv& env = {});

// relations among the sub generators modulo rel; column j lives in a free
// module whose component i has twist deg(sub_i)
struct Presentation {
  FreeModule gens;               // one component per sub generator
  std::vector<GFElem> columns;   // relations
};
Presentation presentation(const GFRing& ring, const Subquotient& m, const GbEnv& env = {});

}  // namespace resint
