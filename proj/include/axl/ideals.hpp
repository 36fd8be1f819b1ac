#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axl/catalog.hpp"

namespace axl {

// Radical of (A, axes): kernel of the Gram matrix, valid when every designated
// axis has nonzero length (checked).
Subspace radical(const Algebra& A, const std::vector<Vec>& axes);

struct AxisIdealObstruction {
  bool no_axis_ideals = false;
  int orbit_count = 0;
  // witness pair (axis from orbit 1, axis from orbit 2) with nonzero form
  // value, when two orbits exist
  std::optional<std::pair<int, int>> witness;
};
AxisIdealObstruction axis_ideal_obstruction(const Algebra& A, const std::vector<Vec>& axes,
                                            const std::vector<Mat>& miyamoto_gens);

struct IdealEntry {
  Subspace space;
  int dim = 0;
};

struct IdealLattice {
  std::vector<IdealEntry> ideals;  // proper nonzero ideals inside the radical
  bool certified = false;          // complete for tabulated radicals (dim <= 7)
  // nonzero lambda-family flags: pairs (u, v) such that every u + t v spins to
  // an ideal (the 4B alpha = -1 situation)
  std::vector<std::pair<Vec, Vec>> pencil_families;
};

IdealLattice enumerate_subideals(const Algebra& A, const Subspace& R,
                                 const std::vector<Mat>& miyamoto_gens,
                                 const std::vector<Vec>& axes, const FusionLaw& law);

// The Jordan-type identification of a 2-generated algebra of Jordan type eta.
struct JordanId {
  std::string tag;  // 2B | 3C(eta) | 3Cx | S(delta) | S2circ | S2hat | 1A | unknown
  std::optional<FieldElem> delta;
};
JordanId identify_jordan(const Algebra& A, const Vec& x, const Vec& y, const FieldElem& eta);

bool miyamoto_invariant(const Subspace& s, const std::vector<Mat>& gens);

}  // namespace axl
