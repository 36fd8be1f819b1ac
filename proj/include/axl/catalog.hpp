#pragma once

#include <map>
#include <string>
#include <vector>

#include "axl/fusion.hpp"

namespace axl {

// A constructed catalog algebra: structure constants, Frobenius form, the
// designated axes with their fusion law, and named distinguished elements
// (the table's extra basis vectors, identity when present).
struct BuildResult {
  Algebra A;
  FusionLaw law;
  std::string family;
  std::map<std::string, FieldElem> params;
  std::map<std::string, Vec> named;
  // The involutory automorphism switching the two generating axes.
  Mat sigma;
};

struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;  // required parameter names
  int dim;
  int axet_size;    // -1 for generically infinite
  long miy_order;   // |Miy(A)|; -1 for generically infinite
  long sym_order;   // |<Miy(A), sigma>|; -1 for generically infinite
  bool monster;     // Monster-type family (vs Jordan-type)
};

const std::vector<FamilyInfo>& family_table();
const FamilyInfo& family_info(const std::string& name);

// Build a catalog algebra over the given field description. Parameters are
// taken from `params` by name; `literal` keeps the two printed constants that
// fail associativity (6J w^2 coefficient, 5A w^2 scalar) instead of the
// repaired values.
BuildResult build_family(const std::string& family, const DescP& d,
                         const std::map<std::string, FieldElem>& params, bool literal = false);

struct ValidationReport {
  bool commutative = true;
  bool frobenius = true;
  bool axes_ok = true;
  std::vector<std::string> failures;
  bool pass() const { return commutative && frobenius && axes_ok; }
};
ValidationReport validate(const BuildResult& br);

// Solve for the scalar k making Frobenius associativity hold when the product
// b_i * b_j is fixed + k * dir; the slot's current value in A is ignored.
FieldElem repair_constant(const Algebra& A, int i, int j, const Vec& fixed, const Vec& dir);

// Identity of the subalgebra generated by `gens`, expressed in A's coordinates.
std::optional<Vec> subalgebra_identity(const Algebra& A, const std::vector<Vec>& gens);

}  // namespace axl
