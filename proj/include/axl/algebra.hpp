#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axl/linalg.hpp"

namespace axl {

// Commutative nonassociative algebra from symmetric structure constants;
// optional Frobenius form and designated axes.
class Algebra {
 public:
  DescP d;
  int n = 0;
  std::vector<std::string> labels;
  // sc[pair_index(i,j)] = coordinates of b_i * b_j, stored for i <= j.
  std::vector<Vec> sc;
  std::optional<Mat> form;
  std::vector<Vec> axes;      // designated axes (coordinate vectors)
  std::vector<int> gens;      // indices into axes of the generating pair

  Algebra() = default;
  Algebra(const DescP& dd, std::vector<std::string> labels_);

  size_t pair_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return size_t(i) * n - size_t(i) * (i - 1) / 2 + (j - i);
  }
  const Vec& basis_product(int i, int j) const { return sc[pair_index(i, j)]; }
  void set_product(int i, int j, Vec v) { sc[pair_index(i, j)] = std::move(v); }

  Vec basis_vec(int i) const;
  Vec product(const Vec& x, const Vec& y) const;
  Mat adjoint(const Vec& x) const;
  FieldElem form_value(const Vec& x, const Vec& y) const;

  int label_index(const std::string& s) const;
};

struct IdealSub {
  enum class Flag { Subalgebra, Ideal };
  Subspace space;
  Flag flag = Flag::Subalgebra;
};

IdealSub subalgebra_closure(const Algebra& A, const std::vector<Vec>& gens);
IdealSub ideal_closure(const Algebra& A, const std::vector<Vec>& gens);
bool is_ideal(const Algebra& A, const Subspace& s);
bool is_subalgebra(const Algebra& A, const Subspace& s);

std::optional<Vec> find_identity(const Algebra& A);
Subspace annihilator(const Algebra& A);

struct Quotient {
  Algebra algebra;
  Mat projection;  // (n - dim I) x n
};
Quotient quotient(const Algebra& A, const IdealSub& I);

// The restriction of A to a product-closed subspace, expressed on the
// subspace's canonical basis; `lift` maps new coordinates back into A.
struct SubalgebraView {
  Algebra algebra;
  Mat lift;  // n x dim
};
SubalgebraView subalgebra_view(const Algebra& A, const Subspace& s);

}  // namespace axl
