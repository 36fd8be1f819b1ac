#pragma once

#include <string>
#include <vector>

#include "axl/linalg.hpp"

namespace axl {

// Dense univariate polynomial over a FieldElem coefficient field,
// low-degree-first.
using UPoly = std::vector<FieldElem>;

int updeg(const UPoly& f);
void uptrim(UPoly& f);
UPoly up_monic(const UPoly& f);
UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
// division with remainder (b nonzero)
std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b);
UPoly up_gcd(const UPoly& a, const UPoly& b);  // monic
UPoly up_derivative(const UPoly& a);
FieldElem up_eval(const UPoly& a, const FieldElem& x);
UPoly up_embed(const UPoly& a, const DescP& d);
std::string up_str(const UPoly& a, const std::string& var);

// Roots of f that lie in the field, possibly after adjoining square roots
// (each adjunction consumes budget). Quadratic and symmetric (even) factors
// are unwound; whatever resists is reported as unsolved monic factors.
struct RootSearch {
  DescP desc;
  std::vector<FieldElem> roots;
  std::vector<UPoly> unsolved;
  bool complete() const { return unsolved.empty(); }
};
RootSearch roots_in_field(const UPoly& f, const DescP& d, int adjoin_budget,
                          const std::vector<FieldElem>& candidates = {},
                          const std::string& root_prefix = "rt");

// Minimal polynomial of a square matrix (monic, low-first), via cyclic Krylov
// subspaces unioned until it annihilates the matrix.
UPoly minpoly_of_matrix(const Mat& m);

std::string fresh_root_name(const DescP& d, const std::string& prefix);

}  // namespace axl
