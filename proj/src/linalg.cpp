#include "axl/linalg.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace axl {

Mat Mat::identity(const DescP& d, int n) {
  Mat m(d, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(d);
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  Mat r(x.d, x.rows, y.cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < y.cols; ++j) {
      FieldElem s = FieldElem::zero(x.d);
      for (int k = 0; k < x.cols; ++k) s = s + x.at(i, k) * y.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  Vec r(m.rows, FieldElem::zero(m.d));
  for (int i = 0; i < m.rows; ++i) {
    FieldElem s = FieldElem::zero(m.d);
    for (int j = 0; j < m.cols; ++j) s = s + m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
  return r;
}

Mat mat_scale(const Mat& x, const FieldElem& c) {
  Mat r = x;
  for (auto& e : r.a) e = e * c;
  return r;
}

bool mat_is_zero(const Mat& x) {
  for (auto& e : x.a)
    if (!e.is_zero()) return false;
  return true;
}

Mat mat_transpose(const Mat& x) {
  Mat r(x.d, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

namespace {

template <bool Parallel>
std::vector<int> rref_impl(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i) {
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    FieldElem inv = m.at(r, c).inv();
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel)
#endif
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      FieldElem f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <bool Parallel>
FieldElem det_impl(const Mat& min) {
  if (min.rows != min.cols) fail(Err::DimensionMismatch, "det of non-square matrix");
  int n = min.rows;
  const DescP& d = min.d;
  if (n == 0) return FieldElem::one(d);
  Mat m = min;
  // Bareiss: divisions by the previous pivot are exact.
  FieldElem prev = FieldElem::one(d);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!m.at(i, k).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return FieldElem::zero(d);
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(k, j));
      sign = -sign;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel)
#endif
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = FieldElem::zero(d);
    }
    prev = m.at(k, k);
  }
  FieldElem det = m.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

template <bool Parallel>
std::vector<FieldElem> charpoly_impl(const Mat& m) {
  if (m.rows != m.cols) fail(Err::DimensionMismatch, "charpoly of non-square matrix");
  int n = m.rows;
  const DescP& d = m.d;
  FieldElem one = FieldElem::one(d), zero = FieldElem::zero(d);
  if (n == 0) return {one};
  // Berkowitz: iteratively build the coefficient vector via Toeplitz products.
  std::vector<FieldElem> coeffs{one, -m.at(0, 0)};  // charpoly of leading 1x1, high-first
  for (int k = 1; k < n; ++k) {
    // principal (k+1)x(k+1) block: R = row (k, 0..k-1), C = col (0..k-1, k)
    std::vector<FieldElem> rowv(k), colv(k);
    for (int j = 0; j < k; ++j) rowv[j] = m.at(k, j);
    for (int i = 0; i < k; ++i) colv[i] = m.at(i, k);
    // s_i = R * A^i * C for i = 0..k-1, with A the leading k x k block
    std::vector<FieldElem> s(k, zero);
    std::vector<FieldElem> w = colv;
    for (int i = 0; i < k; ++i) {
      FieldElem acc = zero;
      for (int j = 0; j < k; ++j) acc = acc + rowv[j] * w[j];
      s[i] = acc;
      if (i + 1 < k) {
        std::vector<FieldElem> w2(k, zero);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel&& k >= 4)
#endif
        for (int r = 0; r < k; ++r) {
          FieldElem a2 = zero;
          for (int j = 0; j < k; ++j) a2 = a2 + m.at(r, j) * w[j];
          w2[r] = a2;
        }
        w = std::move(w2);
      }
    }
    // Toeplitz multiply: new[i] = old[i] - m(k,k) old[i-1] - sum s[j] old[i-2-j]
    std::vector<FieldElem> nc(coeffs.size() + 1, zero);
    for (size_t i = 0; i < nc.size(); ++i) {
      FieldElem acc = i < coeffs.size() ? coeffs[i] : zero;
      if (i >= 1) acc = acc - m.at(k, k) * coeffs[i - 1];
      for (size_t j = 0; j + 2 <= i && j < s.size(); ++j) acc = acc - s[j] * coeffs[i - 2 - j];
      nc[i] = acc;
    }
    coeffs = std::move(nc);
  }
  // high-first -> low-first
  std::reverse(coeffs.begin(), coeffs.end());
  return coeffs;
}

}  // namespace

std::vector<int> rref(Mat& m) { return rref_impl<true>(m); }
std::vector<int> rref_serial(Mat& m) { return rref_impl<false>(m); }
FieldElem det(const Mat& m) { return det_impl<true>(m); }
FieldElem det_serial(const Mat& m) { return det_impl<false>(m); }
std::vector<FieldElem> charpoly(const Mat& m) { return charpoly_impl<true>(m); }
std::vector<FieldElem> charpoly_serial(const Mat& m) { return charpoly_impl<false>(m); }

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}
Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}
Vec vec_scale(const Vec& a, const FieldElem& c) {
  Vec r = a;
  for (auto& x : r) x = x * c;
  return r;
}
bool vec_is_zero(const Vec& a) {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}
Vec vec_zero(const DescP& d, int n) { return Vec(n, FieldElem::zero(d)); }

Subspace subspace_from_rows(const DescP& d, int ambient, const std::vector<Vec>& rows) {
  Subspace s;
  s.d = d;
  s.ambient = ambient;
  if (rows.empty()) return s;
  Mat m(d, (int)rows.size(), ambient);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < ambient; ++j) m.at((int)i, j) = rows[i][j];
  rref(m);
  for (int i = 0; i < m.rows; ++i) {
    Vec row(ambient, FieldElem::zero(d));
    bool nz = false;
    for (int j = 0; j < ambient; ++j) {
      row[j] = m.at(i, j);
      nz = nz || !row[j].is_zero();
    }
    if (nz) s.basis.push_back(std::move(row));
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (auto& b : basis) {
    int pc = -1;
    for (int j = 0; j < ambient; ++j)
      if (!b[j].is_zero()) {
        pc = j;
        break;
      }
    if (pc < 0) continue;
    if (!r[pc].is_zero()) r = vec_sub(r, vec_scale(b, r[pc]));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

Subspace kernel(const Mat& m) {
  Mat r = m;
  std::vector<int> piv = rref(r);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<Vec> rows;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    Vec v(m.cols, FieldElem::zero(m.d));
    v[c] = FieldElem::one(m.d);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at((int)k, c);
    rows.push_back(std::move(v));
  }
  return subspace_from_rows(m.d, m.cols, rows);
}

Subspace eigenspace(const Mat& m, const FieldElem& lambda) {
  if (m.rows != m.cols) fail(Err::DimensionMismatch, "eigenspace of non-square matrix");
  Mat s = m;
  for (int i = 0; i < m.rows; ++i) s.at(i, i) = s.at(i, i) - lambda;
  return kernel(s);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  std::vector<Vec> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return subspace_from_rows(a.d, a.ambient, rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  // Zassenhaus: rref of [A A; B 0]; intersection basis sits in the right block
  // of rows whose left block vanished.
  int n = a.ambient;
  int ra = a.dim(), rb = b.dim();
  if (ra == 0 || rb == 0) return subspace_from_rows(a.d, n, {});
  Mat m(a.d, ra + rb, 2 * n);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = a.basis[i][j];
      m.at(i, n + j) = a.basis[i][j];
    }
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < n; ++j) m.at(ra + i, j) = b.basis[i][j];
  rref(m);
  std::vector<Vec> rows;
  for (int i = 0; i < m.rows; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j) left_zero = m.at(i, j).is_zero();
    if (!left_zero) continue;
    Vec v(n, FieldElem::zero(a.d));
    bool nz = false;
    for (int j = 0; j < n; ++j) {
      v[j] = m.at(i, n + j);
      nz = nz || !v[j].is_zero();
    }
    if (nz) rows.push_back(std::move(v));
  }
  return subspace_from_rows(a.d, n, rows);
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  for (auto& v : a.basis)
    if (!b.contains(v)) return false;
  return true;
}

std::optional<Vec> solve_linear(const Mat& A, const Vec& b) {
  Mat aug(A.d, A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<int> piv = rref(aug);
  for (size_t k = 0; k < piv.size(); ++k)
    if (piv[k] == A.cols) return std::nullopt;  // inconsistent
  Vec x(A.cols, FieldElem::zero(A.d));
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.at((int)k, A.cols);
  return x;
}

Mat mat_inverse(const Mat& x) {
  if (x.rows != x.cols) fail(Err::DimensionMismatch, "inverse of non-square matrix");
  int n = x.rows;
  Mat aug(x.d, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, n + i) = FieldElem::one(x.d);
  }
  auto piv = rref(aug);
  if ((int)piv.size() < n || piv[n - 1] != n - 1)
    fail(Err::DivisionByZero, "matrix is singular");
  Mat r(x.d, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

std::string mat_str(const Mat& m) {
  std::vector<std::string> cells(m.a.size());
  std::vector<size_t> width(m.cols, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      cells[size_t(i) * m.cols + j] = m.at(i, j).str();
      width[j] = std::max(width[j], cells[size_t(i) * m.cols + j].size());
    }
  std::ostringstream os;
  for (int i = 0; i < m.rows; ++i) {
    os << "[ ";
    for (int j = 0; j < m.cols; ++j) {
      const std::string& s = cells[size_t(i) * m.cols + j];
      os << std::string(width[j] - s.size(), ' ') << s << (j + 1 < m.cols ? "  " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace axl
