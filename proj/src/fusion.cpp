#include "axl/fusion.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace axl {

int FusionLaw::ev_index(const FieldElem& lambda) const {
  for (size_t i = 0; i < evs.size(); ++i)
    if (evs[i] == lambda) return (int)i;
  return -1;
}

namespace {

FusionLaw make_law(std::vector<FieldElem> evs, std::vector<uint32_t> star, std::string name) {
  for (size_t i = 0; i < evs.size(); ++i)
    for (size_t j = i + 1; j < evs.size(); ++j)
      if (evs[i] == evs[j])
        fail(Err::ExcludedParameter, "fusion law eigenvalues must be distinct (" + name + ")");
  FusionLaw law{std::move(evs), std::move(star), std::move(name), std::nullopt};
  law.minus_set = find_c2_grading(law);
  return law;
}

}  // namespace

FusionLaw jordan_law(const FieldElem& eta) {
  const DescP& d = eta.d;
  FieldElem one = FieldElem::one(d), zero = FieldElem::zero(d);
  if (eta == one || eta == zero)
    fail(Err::ExcludedParameter, "J(eta) requires eta != 0, 1");
  // indices: 0 -> 1, 1 -> 0, 2 -> eta
  std::vector<uint32_t> star(9, 0);
  auto set = [&](int i, int j, uint32_t m) { star[i * 3 + j] = star[j * 3 + i] = m; };
  set(0, 0, 0b001);
  set(1, 1, 0b010);
  set(0, 2, 0b100);
  set(1, 2, 0b100);
  set(2, 2, 0b011);
  return make_law({one, zero, eta}, star, "J(" + eta.str() + ")");
}

namespace {

FusionLaw monster_like(const FieldElem& alpha, const FieldElem& beta, bool almost) {
  const DescP& d = alpha.d;
  FieldElem one = FieldElem::one(d), zero = FieldElem::zero(d);
  if (alpha == one || alpha == zero || beta == one || beta == zero || alpha == beta)
    fail(Err::ExcludedParameter, "M(alpha,beta) requires alpha, beta != 1, 0 and alpha != beta");
  // indices: 0 -> 1, 1 -> 0, 2 -> alpha, 3 -> beta
  std::vector<uint32_t> star(16, 0);
  auto set = [&](int i, int j, uint32_t m) { star[i * 4 + j] = star[j * 4 + i] = m; };
  set(0, 0, 0b0001);
  set(1, 1, 0b0010);
  set(0, 2, 0b0100);
  set(1, 2, 0b0100);
  set(0, 3, 0b1000);
  set(1, 3, 0b1000);
  set(2, 2, almost ? 0b0111 : 0b0011);
  set(2, 3, 0b1000);
  set(3, 3, 0b0111);
  std::string nm = std::string(almost ? "AM(" : "M(") + alpha.str() + "," + beta.str() + ")";
  return make_law({one, zero, alpha, beta}, star, nm);
}

}  // namespace

FusionLaw monster_law(const FieldElem& alpha, const FieldElem& beta) {
  return monster_like(alpha, beta, false);
}
FusionLaw almost_monster_law(const FieldElem& alpha, const FieldElem& beta) {
  return monster_like(alpha, beta, true);
}

FusionLaw trivial_law(const DescP& d) {
  FusionLaw law{{FieldElem::one(d)}, {0b1}, "trivial", std::nullopt};
  law.minus_set = 0;
  return law;
}

std::optional<uint32_t> find_c2_grading(const FusionLaw& law) {
  int k = law.k();
  // sign assignments keeping 1 even; prefer a nontrivial grading, fall back to
  // the trivial one (mask 0, which every law admits).
  for (uint32_t mask = 2; mask < (1u << k); mask += 2) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i; j < k && ok; ++j) {
        bool odd = ((mask >> i) & 1) ^ ((mask >> j) & 1);
        uint32_t allowed = odd ? mask : ~mask;
        ok = (law.star_at(i, j) & ~allowed) == 0;
      }
    if (ok) return mask;
  }
  return 0;
}

AxisReport check_axis(const Algebra& A, const Vec& a, const FusionLaw& law) {
  AxisReport rep;
  rep.idempotent = A.product(a, a) == a;
  Mat ad = A.adjoint(a);
  int total = 0;
  for (auto& lambda : law.evs) {
    FieldElem lam = lambda.d.get() == A.d.get() ? lambda : embed(lambda, A.d);
    rep.eigenspaces.push_back(eigenspace(ad, lam));
    total += rep.eigenspaces.back().dim();
  }
  rep.semisimple = (total == A.n);
  rep.primitive = rep.eigenspaces.empty() ? false : rep.eigenspaces[0].dim() == 1;
  if (!rep.idempotent || rep.eigenspaces[0].dim() == 0) {
    rep.primitive = false;
    if (!rep.idempotent) return rep;
  }
  if (!rep.semisimple) return rep;
  // fusion: products of eigenbasis vectors land in the allowed eigenspace sums
  int k = law.k();
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      uint32_t allowed = law.star_at(i, j);
      Subspace target;
      target.d = A.d;
      target.ambient = A.n;
      for (int t = 0; t < k; ++t)
        if (allowed & (1u << t)) target = subspace_sum(target, rep.eigenspaces[t]);
      for (auto& u : rep.eigenspaces[i].basis) {
        for (auto& v : rep.eigenspaces[j].basis) {
          Vec p = A.product(u, v);
          if (target.contains(p)) continue;
          // identify offending eigencomponents
          Vec residual = p;
          bool named = false;
          for (int t = 0; t < k; ++t) {
            if (allowed & (1u << t)) continue;
            // project: component in eigenspace t is nonzero iff reducing by the
            // full eigenbasis uses a vector of eigenspace t
            Subspace others;
            others.d = A.d;
            others.ambient = A.n;
            for (int s2 = 0; s2 < k; ++s2)
              if (s2 != t) others = subspace_sum(others, rep.eigenspaces[s2]);
            Vec red = others.reduce(p);
            if (!vec_is_zero(red)) {
              rep.fusion_violations.push_back({i, j, t});
              named = true;
            }
          }
          if (!named) rep.fusion_violations.push_back({i, j, -1});
          (void)residual;
        }
      }
    }
  }
  return rep;
}

bool is_automorphism(const Algebra& A, const Mat& phi) {
  for (int i = 0; i < A.n; ++i) {
    Vec pi = mat_apply(phi, A.basis_vec(i));
    for (int j = i; j < A.n; ++j) {
      Vec pj = mat_apply(phi, A.basis_vec(j));
      if (!(mat_apply(phi, A.basis_product(i, j)) == A.product(pi, pj))) return false;
    }
  }
  return true;
}

Mat miyamoto(const Algebra& A, const Vec& a, const FusionLaw& law) {
  if (!law.minus_set || *law.minus_set == 0) fail(Err::NotGraded, "fusion law admits no C2 grading");
  AxisReport rep = check_axis(A, a, law);
  if (!rep.semisimple || !rep.idempotent)
    fail(Err::NotSemisimple, "miyamoto: not a semisimple idempotent for this law");
  // tau = P diag(+-1) P^{-1}, columns of P an eigenbasis
  Mat P(A.d, A.n, A.n);
  std::vector<int> sign;
  int col = 0;
  for (int t = 0; t < law.k(); ++t) {
    for (auto& v : rep.eigenspaces[t].basis) {
      for (int i = 0; i < A.n; ++i) P.at(i, col) = v[i];
      sign.push_back((*law.minus_set >> t) & 1 ? -1 : 1);
      ++col;
    }
  }
  Mat Pinv = mat_inverse(P);
  for (int j = 0; j < A.n; ++j)
    if (sign[j] < 0)
      for (int i = 0; i < A.n; ++i) P.at(i, j) = -P.at(i, j);
  Mat tau = mat_mul(P, Pinv);
  if (!(mat_mul(tau, tau) == Mat::identity(A.d, A.n)))
    fail(Err::Internal, "miyamoto map is not an involution");
  if (!is_automorphism(A, tau)) fail(Err::Internal, "miyamoto map is not an automorphism");
  return tau;
}

namespace {

int find_vec(const std::vector<Vec>& vs, const Vec& v) {
  for (size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == v) return (int)i;
  return -1;
}

int find_mat(const std::vector<Mat>& ms, const Mat& m) {
  for (size_t i = 0; i < ms.size(); ++i)
    if (ms[i] == m) return (int)i;
  return -1;
}

}  // namespace

AxetClosure axet_closure(const Algebra& A, const std::vector<Vec>& axes, const FusionLaw& law,
                         int axis_cap, int group_cap) {
  AxetClosure out;
  for (auto& a : axes)
    if (find_vec(out.axes, a) < 0) out.axes.push_back(a);
  // Orbit closure of axes under the generated involutions.
  size_t next = 0;
  while (next < out.axes.size()) {
    if ((int)out.axes.size() > axis_cap) {
      out.axes_capped = true;
      break;
    }
    Mat tau = miyamoto(A, out.axes[next], law);
    if (find_mat(out.miyamoto_gens, tau) < 0) out.miyamoto_gens.push_back(tau);
    ++next;
    std::vector<Mat> gens = out.miyamoto_gens;
    for (auto& g : gens) {
      for (size_t i = 0; i < out.axes.size(); ++i) {
        Vec img = mat_apply(g, out.axes[i]);
        if (find_vec(out.axes, img) < 0) {
          out.axes.push_back(img);
          if ((int)out.axes.size() > axis_cap) {
            out.axes_capped = true;
            break;
          }
        }
      }
      if (out.axes_capped) break;
    }
    if (out.axes_capped) break;
  }
  if (out.axes_capped) return out;
  // Close the matrix group.
  std::vector<Mat> group{Mat::identity(A.d, A.n)};
  size_t head = 0;
  while (head < group.size()) {
    if ((int)group.size() > group_cap) {
      out.group_capped = true;
      break;
    }
    Mat g = group[head++];
    for (auto& h : out.miyamoto_gens) {
      Mat gh = mat_mul(g, h);
      if (find_mat(group, gh) < 0) group.push_back(gh);
    }
  }
  if (!out.group_capped) {
    out.group_order = (long)group.size();
    out.group = std::move(group);
  }
  return out;
}

DoubleAxisResult double_axis(const Algebra& A, const Vec& a, const Vec& b, const FusionLaw& law) {
  if (!vec_is_zero(A.product(a, b)))
    fail(Err::NotOrthogonal, "double axis requires orthogonal axes (ab = 0)");
  DoubleAxisResult res;
  res.axis = vec_add(a, b);
  // candidate eigenvalues: pairwise sums lambda + mu
  std::vector<FieldElem> cands;
  for (auto& l : law.evs)
    for (auto& m : law.evs) {
      FieldElem s = l + m;
      bool seen = false;
      for (auto& c : cands) seen = seen || c == s;
      if (!seen) cands.push_back(s);
    }
  Mat ad = A.adjoint(res.axis);
  int total = 0;
  for (auto& lam : cands) {
    Subspace es = eigenspace(ad, lam);
    if (es.dim() == 0) continue;
    res.eigenvalues.push_back(lam);
    total += es.dim();
    res.eigenspaces.push_back(std::move(es));
  }
  res.semisimple = total == A.n;
  return res;
}

IdempotentLaw fusion_law_of_idempotent(const Algebra& A, const Vec& u, bool allow_adjoin) {
  IdempotentLaw out;
  out.desc = A.d;
  if (!(A.product(u, u) == u)) fail(Err::NotIdempotent, "not an idempotent");
  Mat ad = A.adjoint(u);
  UPoly chi = charpoly(ad);
  std::vector<FieldElem> candidates{FieldElem::one(A.d), FieldElem::zero(A.d),
                                    FieldElem::from_rat(A.d, Rat(1, 2))};
  RootSearch rs = roots_in_field(chi, A.d, allow_adjoin ? 1 : 0, candidates, "adj");
  out.desc = rs.desc;
  out.unresolved_spectrum = rs.unsolved;

  // work in the (possibly extended) field
  Algebra AX = A;
  Mat adx = ad;
  if (rs.desc.get() != A.d.get()) {
    AX = Algebra(rs.desc, A.labels);
    for (size_t i = 0; i < A.sc.size(); ++i) {
      Vec v;
      for (auto& c : A.sc[i]) v.push_back(embed(c, rs.desc));
      AX.sc[i] = std::move(v);
    }
    if (A.form) {
      Mat f(rs.desc, A.n, A.n);
      for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) f.at(i, j) = embed(A.form->at(i, j), rs.desc);
      AX.form = f;
    }
    Vec ux;
    for (auto& c : u) ux.push_back(embed(c, rs.desc));
    adx = AX.adjoint(ux);
  }

  std::vector<Subspace> spaces;
  int total = 0;
  for (auto& lam : rs.roots) {
    Subspace es = eigenspace(adx, lam);
    if (es.dim() == 0) continue;
    out.eigenvalues.push_back(lam);
    out.multiplicities.push_back(es.dim());
    total += es.dim();
    spaces.push_back(std::move(es));
  }
  out.diagonalizable = rs.unsolved.empty() && total == A.n;
  int k = (int)out.eigenvalues.size();

  // put eigenvalue 1 first if present
  for (int i = 0; i < k; ++i) {
    if (out.eigenvalues[i] == FieldElem::one(out.desc)) {
      std::swap(out.eigenvalues[0], out.eigenvalues[i]);
      std::swap(out.multiplicities[0], out.multiplicities[i]);
      std::swap(spaces[0], spaces[i]);
      break;
    }
  }

  // minimal star table from observed eigenvector products
  out.law.evs = out.eigenvalues;
  out.law.star.assign(size_t(k) * k, 0);
  out.law.name = "observed";
  if (out.diagonalizable) {
    for (int i = 0; i < k; ++i) {
      for (int j = i; j < k; ++j) {
        uint32_t mask = 0;
        for (auto& x : spaces[i].basis)
          for (auto& y : spaces[j].basis) {
            Vec p = AX.product(x, y);
            for (int t = 0; t < k; ++t) {
              if (mask & (1u << t)) continue;
              Subspace others;
              others.d = AX.d;
              others.ambient = AX.n;
              for (int s2 = 0; s2 < k; ++s2)
                if (s2 != t) others = subspace_sum(others, spaces[s2]);
              if (!vec_is_zero(others.reduce(p))) mask |= 1u << t;
            }
          }
        out.law.star[size_t(i) * k + j] = out.law.star[size_t(j) * k + i] = mask;
      }
    }
    out.grading = find_c2_grading(out.law);
    out.law.minus_set = out.grading;
    if (out.grading && *out.grading != 0) {
      Mat P(AX.d, AX.n, AX.n);
      std::vector<int> sign;
      int col = 0;
      for (int t = 0; t < k; ++t)
        for (auto& v : spaces[t].basis) {
          for (int i = 0; i < AX.n; ++i) P.at(i, col) = v[i];
          sign.push_back((*out.grading >> t) & 1 ? -1 : 1);
          ++col;
        }
      if (col == AX.n) {
        Mat Pinv = mat_inverse(P);
        for (int j = 0; j < AX.n; ++j)
          if (sign[j] < 0)
            for (int i = 0; i < AX.n; ++i) P.at(i, j) = -P.at(i, j);
        Mat tau = mat_mul(P, Pinv);
        if (is_automorphism(AX, tau)) out.involution = tau;
      }
    }
  }

  // classification against templates
  FieldElem one = FieldElem::one(out.desc), zero = FieldElem::zero(out.desc);
  auto star_leq = [&](const FusionLaw& tmpl, const std::vector<int>& perm) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        uint32_t got = out.law.star[size_t(i) * k + j];
        uint32_t allowed = 0;
        for (int t = 0; t < k; ++t)
          if (tmpl.star_at(perm[i], perm[j]) & (1u << perm[t])) allowed |= 1u << t;
        if (got & ~allowed) return false;
      }
    return true;
  };
  out.classification = "custom";
  if (!out.diagonalizable) {
    out.classification = "undetermined";
  } else if (k == 1 && out.eigenvalues[0] == one) {
    out.classification = "trivial";
  } else if (k <= 3 && out.eigenvalues[0] == one) {
    // J(eta): {1, 0, eta}
    int zi = -1, ei = -1;
    for (int i = 1; i < k; ++i) (out.eigenvalues[i] == zero ? zi : ei) = i;
    if (k == 2 && zi == 1) {
      // {1, 0} with 1*1={1}, 0*0={0}, 1*0 empty: an associative pair
      bool ok = (out.law.star[0] & ~1u) == 0 && (out.law.star[3] & ~2u) == 0 &&
                out.law.star[1] == 0;
      if (ok) out.classification = "J-degenerate";
    } else if (k == 3 && zi > 0 && ei > 0) {
      FusionLaw tmpl = jordan_law(out.eigenvalues[ei]);
      std::vector<int> perm(3);
      perm[0] = 0;
      perm[zi] = 1;
      perm[ei] = 2;
      if (star_leq(tmpl, perm)) {
        out.classification = "J(" + out.eigenvalues[ei].str() + ")";
        out.law.name = out.classification;
      }
    }
  } else if (k == 4 && out.eigenvalues[0] == one) {
    int zi = -1;
    for (int i = 1; i < k; ++i)
      if (out.eigenvalues[i] == zero) zi = i;
    if (zi > 0) {
      std::vector<int> rest;
      for (int i = 1; i < k; ++i)
        if (i != zi) rest.push_back(i);
      for (int pick = 0; pick < 2 && out.classification == "custom"; ++pick) {
        int ai = rest[pick], bi = rest[1 - pick];
        FieldElem al = out.eigenvalues[ai], bt = out.eigenvalues[bi];
        std::vector<int> perm(4);
        perm[0] = 0;
        perm[zi] = 1;
        perm[ai] = 2;
        perm[bi] = 3;
        FusionLaw m = monster_law(al, bt);
        if (star_leq(m, perm)) {
          out.classification = "M(" + al.str() + "," + bt.str() + ")";
          out.law.name = out.classification;
          break;
        }
        FusionLaw am = almost_monster_law(al, bt);
        if (star_leq(am, perm)) {
          out.classification = "AM(" + al.str() + "," + bt.str() + ")";
          out.law.name = out.classification;
          break;
        }
      }
    }
  }
  return out;
}

FieldElem axis_length(const Algebra& A, const Vec& u) {
  if (!A.form) fail(Err::NoForm, "length requires a Frobenius form");
  return A.form_value(u, u);
}

}  // namespace axl
