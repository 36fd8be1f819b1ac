#include "axl/ideals.hpp"

#include <algorithm>

namespace axl {

Subspace radical(const Algebra& A, const std::vector<Vec>& axes) {
  if (!A.form) fail(Err::NoForm, "radical requires a Frobenius form");
  for (auto& a : axes)
    if (A.form_value(a, a).is_zero())
      fail(Err::AxisOfLengthZero, "an axis has length zero; the form radical need not be R(A,X)");
  return kernel(*A.form);
}

bool miyamoto_invariant(const Subspace& s, const std::vector<Mat>& gens) {
  for (auto& g : gens)
    for (auto& v : s.basis)
      if (!s.contains(mat_apply(g, v))) return false;
  return true;
}

AxisIdealObstruction axis_ideal_obstruction(const Algebra& A, const std::vector<Vec>& axes,
                                            const std::vector<Mat>& gens) {
  AxisIdealObstruction out;
  if (!A.form) fail(Err::NoForm, "axis_ideal_obstruction requires a form");
  // orbits of the axis list under the generators
  std::vector<int> orbit(axes.size(), -1);
  int norb = 0;
  for (size_t i = 0; i < axes.size(); ++i) {
    if (orbit[i] >= 0) continue;
    orbit[i] = norb;
    std::vector<size_t> work{i};
    while (!work.empty()) {
      size_t cur = work.back();
      work.pop_back();
      for (auto& g : gens) {
        Vec img = mat_apply(g, axes[cur]);
        for (size_t j = 0; j < axes.size(); ++j)
          if (orbit[j] < 0 && axes[j] == img) {
            orbit[j] = norb;
            work.push_back(j);
          }
      }
    }
    ++norb;
  }
  out.orbit_count = norb;
  if (norb == 1) {
    out.no_axis_ideals = true;
    return out;
  }
  if (norb == 2) {
    for (size_t i = 0; i < axes.size(); ++i)
      for (size_t j = 0; j < axes.size(); ++j)
        if (orbit[i] == 0 && orbit[j] == 1 && !A.form_value(axes[i], axes[j]).is_zero()) {
          out.no_axis_ideals = true;
          out.witness = {(int)i, (int)j};
          return out;
        }
  }
  return out;
}

namespace {

bool contains_entry(const std::vector<IdealEntry>& es, const Subspace& s) {
  for (auto& e : es)
    if (e.space == s) return true;
  return false;
}

void add_candidate(const Algebra& A, const Subspace& R, std::vector<IdealEntry>& out,
                   const Subspace& cand) {
  if (cand.dim() == 0 || !subspace_leq(cand, R)) return;
  if (!contains_entry(out, cand)) out.push_back({cand, cand.dim()});
}

// Close a subspace under the Miyamoto generators (module closure).
Subspace module_closure(const Subspace& s, const std::vector<Mat>& gens, int ambient,
                        const DescP& d) {
  Subspace cur = s;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> rows = cur.basis;
    for (auto& g : gens)
      for (auto& v : cur.basis) rows.push_back(mat_apply(g, v));
    Subspace ns = subspace_from_rows(d, ambient, rows);
    if (ns.dim() > cur.dim()) {
      cur = ns;
      grew = true;
    }
  }
  return cur;
}

}  // namespace

IdealLattice enumerate_subideals(const Algebra& A, const Subspace& R,
                                 const std::vector<Mat>& gens, const std::vector<Vec>& axes,
                                 const FusionLaw& law) {
  if (!is_ideal(A, R)) fail(Err::NotAnIdeal, "enumerate_subideals: R is not an ideal");
  IdealLattice lat;
  lat.certified = R.dim() <= 7;
  std::vector<IdealEntry>& out = lat.ideals;
  if (R.dim() == 0) return lat;
  out.push_back({R, R.dim()});

  // (i) intersections of R with common eigenspaces A_S(a) over all axes,
  //     |S| <= 2
  std::vector<Mat> ads;
  for (auto& a : axes) ads.push_back(A.adjoint(a));
  int k = law.k();
  std::vector<std::vector<Subspace>> eig(axes.size());
  for (size_t ai = 0; ai < axes.size(); ++ai)
    for (int t = 0; t < k; ++t) eig[ai].push_back(eigenspace(ads[ai], law.evs[t]));
  std::vector<Vec> candidate_pool;
  auto common_eig = [&](uint32_t S) {
    Subspace acc;
    bool first = true;
    for (size_t ai = 0; ai < axes.size(); ++ai) {
      Subspace cur;
      cur.d = A.d;
      cur.ambient = A.n;
      for (int t = 0; t < k; ++t)
        if (S & (1u << t)) cur = subspace_sum(cur, eig[ai][t]);
      acc = first ? cur : subspace_intersect(acc, cur);
      first = false;
      if (acc.dim() == 0) break;
    }
    return acc;
  };
  for (uint32_t S = 1; S < (1u << k); ++S) {
    int bits = __builtin_popcount(S);
    if (bits > 2) continue;
    Subspace ce = subspace_intersect(common_eig(S), R);
    if (ce.dim() == 0) continue;
    for (auto& v : ce.basis) candidate_pool.push_back(v);
    IdealSub closed = ideal_closure(A, ce.basis);
    add_candidate(A, R, out, closed.space);
  }

  // (ii) orbit sums/differences of axis images and iterated differences
  {
    Vec total = vec_zero(A.d, A.n);
    for (auto& a : axes) total = vec_add(total, a);
    candidate_pool.push_back(total);
    std::vector<Vec> diffs;
    for (size_t i = 0; i + 1 < axes.size(); ++i) diffs.push_back(vec_sub(axes[i], axes[i + 1]));
    for (int iter = 0; iter < (int)axes.size() && !diffs.empty(); ++iter) {
      for (auto& v : diffs) candidate_pool.push_back(v);
      std::vector<Vec> next;
      for (size_t i = 0; i + 1 < diffs.size(); ++i) next.push_back(vec_sub(diffs[i], diffs[i + 1]));
      diffs = next;
    }
  }
  // annihilator inside R, and R's own canonical basis
  {
    Subspace ann = subspace_intersect(annihilator(A), R);
    for (auto& v : ann.basis) candidate_pool.push_back(v);
    for (auto& v : R.basis) candidate_pool.push_back(v);
  }
  // keep only pool vectors inside R; spin each to a candidate ideal
  {
    std::vector<Vec> pool;
    for (auto& v : candidate_pool) {
      if (vec_is_zero(v) || !R.contains(v)) continue;
      bool dup = false;
      for (auto& w : pool) dup = dup || w == v;
      if (!dup) pool.push_back(v);
    }
    candidate_pool = pool;
    for (auto& v : candidate_pool) {
      Subspace mod = module_closure(subspace_from_rows(A.d, A.n, {v}), gens, A.n, A.d);
      add_candidate(A, R, out, ideal_closure(A, mod.basis).space);
    }
  }

  // (iii) pencils u + t v: the multiplier condition b_i(u+tv) in
  //       span(u+tv) mod W is a rank-<=1 condition whose 2x2 minors are
  //       quadratics in t; special t values are their common roots. Iterated
  //       with the intersection closure until the lattice stabilizes, since
  //       pencils may sit above ideals only found as intersections.
  auto pencil_pass = [&]() {
    std::vector<Subspace> mods{Subspace{A.d, A.n, {}}};
    for (auto& e : out)
      if (e.dim < R.dim()) mods.push_back(e.space);
    FieldElem one = FieldElem::one(A.d), zero = FieldElem::zero(A.d);
    for (size_t ui = 0; ui < candidate_pool.size(); ++ui) {
      for (size_t vi = ui + 1; vi < candidate_pool.size(); ++vi) {
        const Vec& u = candidate_pool[ui];
        const Vec& v = candidate_pool[vi];
        for (auto& W : mods) {
          if (W.contains(u) || W.contains(v)) continue;
          Vec ru = W.reduce(u), rv = W.reduce(v);
          // gcd over all minors of [b_i u + t b_i v ; u + t v] mod W
          UPoly g;  // zero polynomial = every t admissible so far
          bool first = true;
          for (int i = 0; i < A.n; ++i) {
            Vec p = W.reduce(A.product(A.basis_vec(i), u));
            Vec q = W.reduce(A.product(A.basis_vec(i), v));
            for (int j = 0; j < A.n; ++j) {
              for (int k2 = j + 1; k2 < A.n; ++k2) {
                // (p+tq)_j (ru+trv)_k - (p+tq)_k (ru+trv)_j
                FieldElem c0 = p[j] * ru[k2] - p[k2] * ru[j];
                FieldElem c1 = p[j] * rv[k2] + q[j] * ru[k2] - p[k2] * rv[j] - q[k2] * ru[j];
                FieldElem c2 = q[j] * rv[k2] - q[k2] * rv[j];
                UPoly minor{c0, c1, c2};
                uptrim(minor);
                if (minor.empty()) continue;
                g = first ? up_monic(minor) : up_gcd(g, minor);
                first = false;
                if (!g.empty() && updeg(g) == 0) break;
              }
              if (!first && !g.empty() && updeg(g) == 0) break;
            }
            if (!first && !g.empty() && updeg(g) == 0) break;
          }
          if (first) {
            // all minors vanish identically: every t gives an ideal direction
            bool dup = false;
            for (auto& [pu, pv] : lat.pencil_families)
              dup = dup || (pu == u && pv == v) || (pu == v && pv == u);
            if (!dup) {
              bool ok = true;
              for (long tv : {2L, 5L}) {
                Vec w = vec_add(u, vec_scale(v, FieldElem::from_int(A.d, tv)));
                Subspace sp = ideal_closure(A, {w}).space;
                ok = ok && sp.dim() < R.dim();
              }
              if (ok) lat.pencil_families.push_back({u, v});
            }
            continue;
          }
          if (g.empty() || updeg(g) == 0) continue;  // no admissible t
          RootSearch rs = roots_in_field(g, A.d, 0, {zero, one, -one});
          for (auto& t : rs.roots) {
            Vec w = vec_add(u, vec_scale(v, t));
            if (W.contains(w) || vec_is_zero(w)) continue;
            std::vector<Vec> gensv{w};
            for (auto& b2 : W.basis) gensv.push_back(b2);
            add_candidate(A, R, out, ideal_closure(A, gensv).space);
          }
        }
      }
    }
  };

  auto intersection_pass = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      size_t m = out.size();
      for (size_t i = 0; i < m && !grew; ++i)
        for (size_t j = i + 1; j < m && !grew; ++j) {
          Subspace is = subspace_intersect(out[i].space, out[j].space);
          if (is.dim() > 0 && !contains_entry(out, is)) {
            out.push_back({is, is.dim()});
            grew = true;
          }
        }
    }
  };

  size_t before;
  int rounds = 0;
  do {
    before = out.size();
    pencil_pass();
    intersection_pass();
  } while (out.size() > before && ++rounds < 4);

  std::sort(out.begin(), out.end(), [](const IdealEntry& a, const IdealEntry& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return false;
  });
  return lat;
}

JordanId identify_jordan(const Algebra& A, const Vec& x, const Vec& y, const FieldElem& eta) {
  JordanId out;
  out.tag = "unknown";
  const DescP& d = A.d;
  FieldElem half = FieldElem::from_rat(d, Rat(1, 2)), one = FieldElem::one(d);
  FusionLaw law = jordan_law(eta);
  AxisReport rx = check_axis(A, x, law), ry = check_axis(A, y, law);
  if (!rx.passes() || !ry.passes() || !rx.primitive || !ry.primitive)
    fail(Err::NotJordan, "generators are not primitive Jordan-type axes");
  IdealSub gen = subalgebra_closure(A, {x, y});
  int dim = gen.space.dim();
  if (dim != A.n)
    fail(Err::NotJordan, "algebra is not 2-generated by the given axes");
  auto id = find_identity(A);
  Vec xy = A.product(x, y);
  if (dim == 1) {
    out.tag = "1A";
    return out;
  }
  if (eta == half) {
    if (dim == 2) {
      if (vec_is_zero(xy))
        out.tag = "2B";
      else if (xy == vec_scale(vec_add(x, y), half))
        out.tag = "S2circ";
      return out;
    }
    if (dim == 3 && !id) {
      out.tag = "S2hat";
      return out;
    }
    if (dim == 3 && id) {
      // c := x + y - 4xy an axis -> 3C(1/2), else S(delta)
      Vec c = vec_sub(vec_add(x, y), vec_scale(xy, FieldElem::from_int(d, 4)));
      bool c_axis = false;
      if (A.product(c, c) == c) c_axis = check_axis(A, c, law).passes();
      if (c_axis) {
        out.tag = "3C(" + eta.str() + ")";
        return out;
      }
      // xy = 1/2(x+y) + 1/8(delta-2) * identity
      Vec residual = vec_sub(xy, vec_scale(vec_add(x, y), half));
      // residual = gamma * identity
      FieldElem gamma = FieldElem::zero(d);
      for (int i = 0; i < A.n; ++i)
        if (!(*id)[i].is_zero()) {
          gamma = residual[i] / (*id)[i];
          break;
        }
      if (residual == vec_scale(*id, gamma)) {
        out.delta = FieldElem::from_int(d, 2) + FieldElem::from_int(d, 8) * gamma;
        out.tag = "S(" + out.delta->str() + ")";
      }
      return out;
    }
    return out;
  }
  // eta != 1/2
  if (dim == 2) {
    if (vec_is_zero(xy))
      out.tag = "2B";
    else if (eta == -one)
      out.tag = "3Cx";
    return out;
  }
  if (dim == 3) {
    out.tag = "3C(" + eta.str() + ")";
    return out;
  }
  return out;
}

}  // namespace axl
