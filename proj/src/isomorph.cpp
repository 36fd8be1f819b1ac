#include "axl/isomorph.hpp"

namespace axl {

bool intertwines_products(const Algebra& A, const Algebra& B, const Mat& phi) {
  for (int i = 0; i < A.n; ++i)
    for (int j = i; j < A.n; ++j) {
      Vec lhs = mat_apply(phi, A.basis_product(i, j));
      Vec rhs = B.product(mat_apply(phi, A.basis_vec(i)), mat_apply(phi, A.basis_vec(j)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

std::optional<Mat> extend_generator_map(const Algebra& A, const Vec& a0, const Vec& a1,
                                        const Algebra& B, const Vec& b0, const Vec& b1) {
  // Build a spanning set of A by products of the generators, mapping images in
  // lockstep; reject on the first inconsistency.
  std::vector<Vec> span{a0, a1};
  std::vector<Vec> img{b0, b1};
  Subspace s = subspace_from_rows(A.d, A.n, span);
  if (s.dim() < (int)span.size()) {
    // degenerate generators (a0 = a1)
    if (!(a0 == a1)) return std::nullopt;
    span.pop_back();
    img.pop_back();
  }
  // coordinates of v in the span basis (span rows are kept independent)
  auto coords_in_span = [&](const Vec& v) -> std::optional<Vec> {
    Mat M(A.d, A.n, (int)span.size());
    for (size_t k = 0; k < span.size(); ++k)
      for (int i = 0; i < A.n; ++i) M.at(i, (int)k) = span[k][i];
    return solve_linear(M, v);
  };
  size_t i = 0, j = 0;
  while (true) {
    // next unprocessed pair (i, j) with i <= j < span.size()
    if (j >= span.size()) break;
    Vec p = A.product(span[i], span[j]);
    Vec q = B.product(img[i], img[j]);
    auto c = coords_in_span(p);
    if (c) {
      // consistency: q must equal the same combination of images
      Vec expect = vec_zero(B.d, B.n);
      for (size_t k = 0; k < span.size(); ++k)
        expect = vec_add(expect, vec_scale(img[k], (*c)[k]));
      if (!(expect == q)) return std::nullopt;
    } else {
      span.push_back(p);
      img.push_back(q);
    }
    if (i < j)
      ++i;
    else {
      i = 0;
      ++j;
    }
  }
  if ((int)span.size() != A.n) return std::nullopt;  // not 2-generated by these
  // phi maps span[k] -> img[k]; express on the standard basis
  Mat S(A.d, A.n, A.n), T(B.d, B.n, A.n);
  for (int k = 0; k < A.n; ++k)
    for (int r = 0; r < A.n; ++r) {
      S.at(r, k) = span[k][r];
      T.at(r, k) = img[k][r];
    }
  Mat phi = mat_mul(T, mat_inverse(S));
  if (!intertwines_products(A, B, phi)) return std::nullopt;
  // invertibility (dimension match assumed by caller)
  Mat chk = phi;
  auto piv = rref(chk);
  if ((int)piv.size() != A.n) return std::nullopt;
  return phi;
}

std::optional<IsoWitness> axial_iso(const BuildResult& A, const BuildResult& B) {
  if (A.A.n != B.A.n) fail(Err::DimensionMismatch, "axial_iso: dimensions differ");
  if (A.A.d->p != B.A.d->p) fail(Err::FieldMismatch, "axial_iso: fields differ");
  const Vec& a0 = A.A.axes[A.A.gens[0]];
  const Vec& a1 = A.A.axes[A.A.gens[1]];
  for (size_t i = 0; i < B.A.axes.size(); ++i) {
    for (size_t j = 0; j < B.A.axes.size(); ++j) {
      if (i == j) continue;
      auto phi = extend_generator_map(A.A, a0, a1, B.A, B.A.axes[i], B.A.axes[j]);
      if (!phi) continue;
      IsoWitness w;
      w.matrix = *phi;
      w.generator_images = {(int)i, (int)j};
      // axial: designated axes of A map into B's designated axis set, bijectively
      bool axial = true;
      std::vector<bool> hit(B.A.axes.size(), false);
      for (auto& ax : A.A.axes) {
        Vec im = mat_apply(*phi, ax);
        bool found = false;
        for (size_t k = 0; k < B.A.axes.size(); ++k)
          if (!hit[k] && B.A.axes[k] == im) {
            hit[k] = true;
            found = true;
            break;
          }
        if (!found) {
          axial = false;
          break;
        }
      }
      w.axial = axial && A.A.axes.size() == B.A.axes.size();
      if (A.A.form && B.A.form) {
        bool fp = true;
        for (int r = 0; r < A.A.n && fp; ++r)
          for (int c2 = r; c2 < A.A.n && fp; ++c2)
            fp = A.A.form_value(A.A.basis_vec(r), A.A.basis_vec(c2)) ==
                 B.A.form_value(mat_apply(*phi, A.A.basis_vec(r)),
                                mat_apply(*phi, A.A.basis_vec(c2)));
        w.form_preserving = fp;
      }
      return w;
    }
  }
  return std::nullopt;
}

AlgebraIso4B4Y algebra_iso_4B4Y(const BuildResult& fourB) {
  if (fourB.family != "4B") fail(Err::CorpusParseError, "algebra_iso_4B4Y expects a 4B instance");
  FieldElem at = fourB.params.at("alpha");
  FieldElem one = FieldElem::one(fourB.A.d);
  if ((at + one).is_zero())
    fail(Err::ExcludedParameter,
         "4B(-1) has no identity in its 3C subalgebras; the isomorphism fails at alpha~ = -1");
  BuildResult target = build_family("4Ya", fourB.A.d, {{"alpha", one - at}});
  // a_i := 1_{<<b_i, b_{i+2}>>} - b_i
  const Algebra& Bg = fourB.A;
  auto mk = [&](const Vec& bi, const Vec& bi2) {
    auto idsub = subalgebra_identity(Bg, {bi, bi2});
    if (!idsub) fail(Err::NoIdentity, "3C subalgebra of 4B lacks an identity");
    return vec_sub(*idsub, bi);
  };
  // 4B axes are listed a0, a1, a2, a-1
  const Vec& b0 = Bg.axes[0];
  const Vec& b1 = Bg.axes[1];
  const Vec& b2 = Bg.axes[2];
  Vec na0 = mk(b0, b2);
  Vec na1 = mk(b1, Bg.axes[3]);
  auto phi = extend_generator_map(target.A, target.A.axes[target.A.gens[0]],
                                  target.A.axes[target.A.gens[1]], Bg, na0, na1);
  if (!phi) fail(Err::Internal, "4B/4Y isomorphism extension failed");
  IsoWitness w;
  w.matrix = *phi;
  w.generator_images = {-1, -1};
  // the constructed generators are not designated axes of 4B in general
  std::vector<bool> hit(Bg.axes.size(), false);
  bool axial = true;
  for (auto& ax : target.A.axes) {
    Vec im = mat_apply(*phi, ax);
    bool found = false;
    for (size_t k = 0; k < Bg.axes.size(); ++k)
      if (!hit[k] && Bg.axes[k] == im) {
        hit[k] = true;
        found = true;
        break;
      }
    if (!found) axial = false;
  }
  w.axial = axial;
  return AlgebraIso4B4Y{std::move(target), std::move(w)};
}

}  // namespace axl
