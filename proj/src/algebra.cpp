#include "axl/algebra.hpp"

namespace axl {

Algebra::Algebra(const DescP& dd, std::vector<std::string> labels_)
    : d(dd), n((int)labels_.size()), labels(std::move(labels_)) {
  sc.assign(size_t(n) * (n + 1) / 2, vec_zero(d, n));
}

Vec Algebra::basis_vec(int i) const {
  Vec v = vec_zero(d, n);
  v[i] = FieldElem::one(d);
  return v;
}

Vec Algebra::product(const Vec& x, const Vec& y) const {
  if ((int)x.size() != n || (int)y.size() != n)
    fail(Err::DimensionMismatch, "vector length does not match algebra dimension");
  Vec r = vec_zero(d, n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vec& p = basis_product(i, j);
      FieldElem c = x[i] * y[j];
      for (int k = 0; k < n; ++k)
        if (!p[k].is_zero()) r[k] = r[k] + c * p[k];
    }
  }
  return r;
}

Mat Algebra::adjoint(const Vec& x) const {
  if ((int)x.size() != n) fail(Err::DimensionMismatch, "adjoint: bad vector length");
  Mat m(d, n, n);
  for (int j = 0; j < n; ++j) {
    Vec col = product(x, basis_vec(j));
    for (int k = 0; k < n; ++k) m.at(k, j) = col[k];
  }
  return m;
}

FieldElem Algebra::form_value(const Vec& x, const Vec& y) const {
  if (!form) fail(Err::NoForm, "algebra carries no Frobenius form");
  FieldElem s = FieldElem::zero(d);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!y[j].is_zero()) s = s + x[i] * y[j] * form->at(i, j);
  }
  return s;
}

int Algebra::label_index(const std::string& s) const {
  for (int i = 0; i < n; ++i)
    if (labels[i] == s) return i;
  fail(Err::Internal, "no basis label " + s);
}

namespace {

// Span-then-multiply iteration; `mults` produces the vectors to multiply a
// basis member with.
Subspace closure_iterate(const Algebra& A, const std::vector<Vec>& gens,
                         const std::vector<Vec>& multipliers, bool pairwise) {
  Subspace s = subspace_from_rows(A.d, A.n, gens);
  bool grew = true;
  while (grew && s.dim() < A.n) {
    grew = false;
    std::vector<Vec> next = s.basis;
    for (auto& u : s.basis) {
      if (pairwise) {
        for (auto& v : s.basis) next.push_back(A.product(u, v));
      }
      for (auto& w : multipliers) next.push_back(A.product(u, w));
    }
    Subspace ns = subspace_from_rows(A.d, A.n, next);
    if (ns.dim() > s.dim()) {
      s = std::move(ns);
      grew = true;
    }
  }
  return s;
}

}  // namespace

IdealSub subalgebra_closure(const Algebra& A, const std::vector<Vec>& gens) {
  IdealSub r;
  r.space = closure_iterate(A, gens, {}, true);
  r.flag = IdealSub::Flag::Subalgebra;
  return r;
}

IdealSub ideal_closure(const Algebra& A, const std::vector<Vec>& gens) {
  std::vector<Vec> basis_mult;
  for (int i = 0; i < A.n; ++i) basis_mult.push_back(A.basis_vec(i));
  IdealSub r;
  r.space = closure_iterate(A, gens, basis_mult, false);
  r.flag = IdealSub::Flag::Ideal;
  return r;
}

bool is_subalgebra(const Algebra& A, const Subspace& s) {
  for (auto& u : s.basis)
    for (auto& v : s.basis)
      if (!s.contains(A.product(u, v))) return false;
  return true;
}

bool is_ideal(const Algebra& A, const Subspace& s) {
  for (auto& u : s.basis)
    for (int i = 0; i < A.n; ++i)
      if (!s.contains(A.product(u, A.basis_vec(i)))) return false;
  return true;
}

std::optional<Vec> find_identity(const Algebra& A) {
  // x * b_i = b_i for all i: n^2 linear equations in n unknowns.
  Mat L(A.d, A.n * A.n, A.n);
  Vec rhs = vec_zero(A.d, A.n * A.n);
  for (int i = 0; i < A.n; ++i) {
    for (int j = 0; j < A.n; ++j) {
      const Vec& p = A.basis_product(j, i);
      for (int k = 0; k < A.n; ++k) L.at(i * A.n + k, j) = p[k];
    }
    rhs[i * A.n + i] = FieldElem::one(A.d);
  }
  auto x = solve_linear(L, rhs);
  if (!x) return std::nullopt;
  for (int i = 0; i < A.n; ++i)
    if (!(A.product(*x, A.basis_vec(i)) == A.basis_vec(i))) return std::nullopt;
  return x;
}

Subspace annihilator(const Algebra& A) {
  Mat L(A.d, A.n * A.n, A.n);
  for (int i = 0; i < A.n; ++i) {
    Mat ad = A.adjoint(A.basis_vec(i));
    for (int r = 0; r < A.n; ++r)
      for (int c = 0; c < A.n; ++c) L.at(i * A.n + r, c) = ad.at(r, c);
  }
  return kernel(L);
}

Quotient quotient(const Algebra& A, const IdealSub& I) {
  if (I.flag != IdealSub::Flag::Ideal || !is_ideal(A, I.space))
    fail(Err::NotAnIdeal, "quotient by a non-ideal");
  const Subspace& s = I.space;
  // Complement basis: standard basis vectors at non-pivot coordinates.
  std::vector<int> pivots;
  for (auto& row : s.basis) {
    for (int j = 0; j < A.n; ++j)
      if (!row[j].is_zero()) {
        pivots.push_back(j);
        break;
      }
  }
  std::vector<bool> is_piv(A.n, false);
  for (int p : pivots) is_piv[p] = true;
  std::vector<int> comp;
  for (int j = 0; j < A.n; ++j)
    if (!is_piv[j]) comp.push_back(j);
  int m = (int)comp.size();

  // projection: reduce e_j modulo the ideal, read complement coordinates
  Mat proj(A.d, m, A.n);
  for (int j = 0; j < A.n; ++j) {
    Vec r = s.reduce(A.basis_vec(j));
    for (int k = 0; k < m; ++k) proj.at(k, j) = r[comp[k]];
  }

  std::vector<std::string> labels;
  for (int k = 0; k < m; ++k) labels.push_back(A.labels[comp[k]]);
  Algebra Q(A.d, labels);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Vec p = A.product(A.basis_vec(comp[i]), A.basis_vec(comp[j]));
      Q.set_product(i, j, mat_apply(proj, p));
    }
  // The form descends iff the ideal sits inside the form radical.
  if (A.form) {
    bool descends = true;
    for (auto& v : s.basis) {
      for (int i = 0; i < A.n && descends; ++i)
        descends = A.form_value(v, A.basis_vec(i)).is_zero();
      if (!descends) break;
    }
    if (descends) {
      Mat f(A.d, m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) f.at(i, j) = A.form->at(comp[i], comp[j]);
      Q.form = f;
    }
  }
  for (auto& ax : A.axes) {
    Vec img = mat_apply(proj, ax);
    if (!vec_is_zero(img)) Q.axes.push_back(img);
  }
  // generator images (deduplicated later by callers if needed)
  for (int g : A.gens) {
    Vec img = mat_apply(proj, A.axes[g]);
    for (size_t k = 0; k < Q.axes.size(); ++k)
      if (Q.axes[k] == img) {
        Q.gens.push_back((int)k);
        break;
      }
  }
  return Quotient{std::move(Q), std::move(proj)};
}

SubalgebraView subalgebra_view(const Algebra& A, const Subspace& s) {
  if (!is_subalgebra(A, s)) fail(Err::Internal, "subspace is not product-closed");
  int m = s.dim();
  Mat lift(A.d, A.n, m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < A.n; ++i) lift.at(i, k) = s.basis[k][i];
  // coordinates w.r.t. the RREF basis: pick pivot columns
  std::vector<int> pivots;
  for (auto& row : s.basis)
    for (int j = 0; j < A.n; ++j)
      if (!row[j].is_zero()) {
        pivots.push_back(j);
        break;
      }
  auto coords = [&](const Vec& v) {
    Vec c(m, FieldElem::zero(A.d));
    Vec r = v;
    for (int k = 0; k < m; ++k) {
      c[k] = r[pivots[k]];
      if (!c[k].is_zero()) r = vec_sub(r, vec_scale(s.basis[k], c[k]));
    }
    if (!vec_is_zero(r)) fail(Err::Internal, "vector not in subspace");
    return c;
  };
  std::vector<std::string> labels;
  for (int k = 0; k < m; ++k) labels.push_back("s" + std::to_string(k));
  Algebra S(A.d, labels);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      S.set_product(i, j, coords(A.product(s.basis[i], s.basis[j])));
  if (A.form) {
    Mat f(A.d, m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) f.at(i, j) = A.form_value(s.basis[i], s.basis[j]);
    S.form = f;
  }
  return SubalgebraView{std::move(S), std::move(lift)};
}

}  // namespace axl
