#pragma once

#include <vector>

#include "axl/field.hpp"

namespace axl {

using Vec = std::vector<FieldElem>;

struct Mat {
  DescP d;
  int rows = 0, cols = 0;
  std::vector<FieldElem> a;

  Mat() = default;
  Mat(const DescP& dd, int r, int c) : d(dd), rows(r), cols(c), a(size_t(r) * c, FieldElem::zero(dd)) {}
  FieldElem& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const FieldElem& at(int i, int j) const { return a[size_t(i) * cols + j]; }
  static Mat identity(const DescP& d, int n);
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_apply(const Mat& m, const Vec& v);  // column-vector convention
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const Mat& x, const FieldElem& c);
bool mat_is_zero(const Mat& x);
Mat mat_inverse(const Mat& x);  // fails if singular
Mat mat_transpose(const Mat& x);

// Row-reduced echelon form in place; returns pivot column list. The
// production kernel parallelizes row elimination with OpenMP; the serial
// version is the reference used in tests and the benchmark.
std::vector<int> rref(Mat& m);
std::vector<int> rref_serial(Mat& m);

// Exact determinant via Bareiss fraction-free elimination (row denominators
// cleared first so intermediates stay polynomial-sized).
FieldElem det(const Mat& m);
FieldElem det_serial(const Mat& m);

// Monic characteristic polynomial det(tI - M), division-free (Berkowitz);
// coefficients low-degree-first.
std::vector<FieldElem> charpoly(const Mat& m);
std::vector<FieldElem> charpoly_serial(const Mat& m);

// Canonical subspace: basis rows in RREF.
struct Subspace {
  DescP d;
  int ambient = 0;
  std::vector<Vec> basis;

  int dim() const { return (int)basis.size(); }
  bool contains(const Vec& v) const;
  // Reduce v against the basis; returns the residual.
  Vec reduce(const Vec& v) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

Subspace subspace_from_rows(const DescP& d, int ambient, const std::vector<Vec>& rows);
Subspace kernel(const Mat& m);                      // right null space
Subspace eigenspace(const Mat& m, const FieldElem& lambda);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_leq(const Subspace& a, const Subspace& b);  // a <= b

// Exact linear solve A x = b; nullopt when inconsistent. Free variables are
// set to zero.
std::optional<Vec> solve_linear(const Mat& A, const Vec& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const FieldElem& c);
bool vec_is_zero(const Vec& a);
Vec vec_zero(const DescP& d, int n);

std::string mat_str(const Mat& m);  // aligned text grid for CLI reports

}  // namespace axl
