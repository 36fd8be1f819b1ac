#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axl/algebra.hpp"
#include "axl/univar.hpp"

namespace axl {

// Finite eigenvalue set with a symmetric star table into subsets (bitmasks
// over eigenvalue indices), optionally C2-graded.
struct FusionLaw {
  std::vector<FieldElem> evs;        // evs[0] == 1
  std::vector<uint32_t> star;        // k*k symmetric bitmask table
  std::string name;                  // J(eta) | M(alpha,beta) | AM(alpha,beta) | custom
  std::optional<uint32_t> minus_set; // C2 grading: bitmask of odd eigenvalues

  int k() const { return (int)evs.size(); }
  uint32_t star_at(int i, int j) const { return star[size_t(i) * evs.size() + j]; }
  int ev_index(const FieldElem& lambda) const;
};

FusionLaw jordan_law(const FieldElem& eta);
FusionLaw monster_law(const FieldElem& alpha, const FieldElem& beta);
FusionLaw almost_monster_law(const FieldElem& alpha, const FieldElem& beta);
FusionLaw trivial_law(const DescP& d);  // single eigenvalue 1

// Brute-force C2-grading discovery (1 stays even); nullopt if ungradable.
std::optional<uint32_t> find_c2_grading(const FusionLaw& law);

struct AxisReport {
  bool idempotent = false;
  std::vector<Subspace> eigenspaces;  // parallel to law.evs
  bool semisimple = false;
  bool primitive = false;
  // (lambda index, mu index, offending eigenvalue index; -1 = outside all)
  std::vector<std::array<int, 3>> fusion_violations;
  bool passes() const { return idempotent && semisimple && fusion_violations.empty(); }
};

AxisReport check_axis(const Algebra& A, const Vec& a, const FusionLaw& law);

// Miyamoto involution of a verified axis for a C2-graded law.
Mat miyamoto(const Algebra& A, const Vec& a, const FusionLaw& law);

bool is_automorphism(const Algebra& A, const Mat& phi);

struct AxetClosure {
  std::vector<Vec> axes;
  bool axes_capped = false;
  std::vector<Mat> miyamoto_gens;   // one per distinct axis involution
  long group_order = 0;             // 0 when capped
  bool group_capped = false;
  std::vector<Mat> group;           // full group when not capped
};
AxetClosure axet_closure(const Algebra& A, const std::vector<Vec>& axes, const FusionLaw& law,
                         int axis_cap = 64, int group_cap = 256);

struct DoubleAxisResult {
  Vec axis;
  std::vector<FieldElem> eigenvalues;  // observed
  std::vector<Subspace> eigenspaces;
  bool semisimple = false;
};
DoubleAxisResult double_axis(const Algebra& A, const Vec& a, const Vec& b, const FusionLaw& law);

// Eigen-analysis and minimal star table of an arbitrary idempotent.
struct IdempotentLaw {
  bool diagonalizable = false;
  std::vector<FieldElem> eigenvalues;
  std::vector<int> multiplicities;
  FusionLaw law;                       // minimal observed star table
  std::optional<uint32_t> grading;
  std::optional<Mat> involution;       // induced tau when graded
  std::string classification;          // "J(...)", "M(...)", "AM(...)", "trivial", "custom"
  std::vector<UPoly> unresolved_spectrum;  // charpoly factors with no roots in field
  DescP desc;                          // possibly extended field
};
IdempotentLaw fusion_law_of_idempotent(const Algebra& A, const Vec& u, bool allow_adjoin = true);

FieldElem axis_length(const Algebra& A, const Vec& u);

}  // namespace axl
