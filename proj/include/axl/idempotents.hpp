#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axl/catalog.hpp"
#include "axl/groebner.hpp"

namespace axl {

struct IdemSystemOpts {
  bool shift = false;            // solve y^2 = 1/4 * identity with y = x - 1/2 * identity
  bool length_relation = false;  // add (y,y) = 1/4 (1,1) (or (x,x) = (x,1) unshifted)
  std::optional<Mat> stabilizer; // add linear relations u^g = u
};

// The idempotency polynomial system in the algebra's coordinates.
PolyIdeal idempotent_system(const Algebra& A, const IdemSystemOpts& opts);

struct ClosedFormCheck {
  bool idempotent = false;
  FieldElem length;
  IdempotentLaw fusion;
};
ClosedFormCheck verify_closed_form(const Algebra& A, const Vec& u);

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // indices into the solution list
  bool closed = true;                    // automorphism images stayed in the set
};
OrbitPartition orbit_partition(const std::vector<Vec>& solutions, const std::vector<Mat>& group);

// A known positive-dimensional idempotent family: an affine parametrization
// of the coordinates by (lam, mu) subject to a conic (or a line in lam).
struct IdemFamily {
  std::string name;
  // coords(t) over desc extended with transcendental(s); one rational
  // parametrization of the family, used for the substitution match
  std::vector<FieldElem> param_point;
  DescP param_desc;
  // exact membership test: defining equations in the algebra's coordinates
  // (evaluated at identity - p when `complement` is set)
  std::vector<FPoly> membership;
  bool complement = false;
};

struct IdempotentEnumeration {
  DescP desc;
  std::vector<Vec> idempotents;  // nonzero idempotents (identity included)
  bool complete = true;
  std::vector<std::string> matched_families;  // positive parts matched by substitution
  int unmatched_positive_parts = 0;
  std::vector<UPoly> unsolved;
};

// Full enumeration pipeline: build the system (shift/length when an identity
// and form exist), split off the family's known positive-dimensional
// components, solve the zero-dimensional parts, and verify every point in the
// algebra.
IdempotentEnumeration enumerate_idempotents(const BuildResult& br, int adjoin_budget,
                                            bool use_tricks = true);

// Catalog knowledge: split polynomials (in coordinates) and parametrized
// family points for the families with infinitely many idempotents.
std::vector<FPoly> family_split_polys(const BuildResult& br);
std::vector<IdemFamily> family_positive_families(const BuildResult& br);

}  // namespace axl
