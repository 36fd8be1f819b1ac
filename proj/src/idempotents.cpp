#include "axl/idempotents.hpp"

#include <algorithm>

namespace axl {

PolyIdeal idempotent_system(const Algebra& A, const IdemSystemOpts& opts) {
  PolyIdeal I;
  I.d = A.d;
  I.nv = A.n;
  I.ord = TermOrder::Grevlex;
  for (int i = 0; i < A.n; ++i) I.vars.push_back("x_" + A.labels[i]);
  std::optional<Vec> id;
  if (opts.shift || opts.length_relation) {
    id = find_identity(A);
    if (!id) fail(Err::NoIdentity, "shift/length tricks require an identity");
    if (opts.length_relation && !A.form) fail(Err::NoForm, "length relation requires a form");
  }
  FieldElem half = FieldElem::from_rat(A.d, Rat(1, 2));
  FieldElem quarter = FieldElem::from_rat(A.d, Rat(1, 4));
  // square coordinates: (v*v)_k = sum_{i,j} v_i v_j c_{ij}^k
  auto square_coord = [&](int k) {
    FPoly acc = fp_const(A.d, A.n, I.ord, FieldElem::zero(A.d));
    for (int i = 0; i < A.n; ++i)
      for (int j = i; j < A.n; ++j) {
        const FieldElem& c = A.basis_product(i, j)[k];
        if (c.is_zero()) continue;
        Mono m(A.n, 0);
        m[i] += 1;
        m[j] += 1;
        FieldElem coeff = i == j ? c : c + c;
        FPoly term{A.d, A.n, I.ord, {{m, coeff}}};
        acc = fp_add(acc, term);
      }
    return acc;
  };
  for (int k = 0; k < A.n; ++k) {
    FPoly g = square_coord(k);
    if (opts.shift) {
      // y^2 = 1/4 * identity
      g = fp_sub(g, fp_const(A.d, A.n, I.ord, quarter * (*id)[k]));
    } else {
      g = fp_sub(g, fp_var(A.d, A.n, I.ord, k));
    }
    I.gens.push_back(std::move(g));
  }
  if (opts.length_relation) {
    // shifted: (y,y) = 1/4 (1,1); unshifted: (x,x) = (x,1)
    FPoly rel = fp_const(A.d, A.n, I.ord, FieldElem::zero(A.d));
    for (int i = 0; i < A.n; ++i)
      for (int j = 0; j < A.n; ++j) {
        const FieldElem& f = A.form->at(i, j);
        if (f.is_zero()) continue;
        Mono m(A.n, 0);
        m[i] += 1;
        m[j] += 1;
        rel = fp_add(rel, FPoly{A.d, A.n, I.ord, {{m, f}}});
      }
    if (opts.shift) {
      rel = fp_sub(rel, fp_const(A.d, A.n, I.ord, quarter * A.form_value(*id, *id)));
    } else {
      for (int i = 0; i < A.n; ++i) {
        FieldElem c = A.form_value(A.basis_vec(i), *id);
        if (!c.is_zero()) rel = fp_sub(rel, fp_scale(fp_var(A.d, A.n, I.ord, i), c));
      }
    }
    I.gens.push_back(std::move(rel));
  }
  if (opts.stabilizer) {
    const Mat& g = *opts.stabilizer;
    for (int r = 0; r < A.n; ++r) {
      FPoly rel = fp_const(A.d, A.n, I.ord, FieldElem::zero(A.d));
      for (int c2 = 0; c2 < A.n; ++c2) {
        FieldElem coeff = g.at(r, c2) - (r == c2 ? FieldElem::one(A.d) : FieldElem::zero(A.d));
        if (!coeff.is_zero()) rel = fp_add(rel, fp_scale(fp_var(A.d, A.n, I.ord, c2), coeff));
      }
      if (!rel.is_zero()) I.gens.push_back(std::move(rel));
    }
  }
  (void)half;
  return I;
}

ClosedFormCheck verify_closed_form(const Algebra& A, const Vec& u) {
  ClosedFormCheck out;
  out.idempotent = A.product(u, u) == u;
  if (A.form) out.length = A.form_value(u, u);
  if (out.idempotent) out.fusion = fusion_law_of_idempotent(A, u);
  return out;
}

OrbitPartition orbit_partition(const std::vector<Vec>& solutions, const std::vector<Mat>& group) {
  OrbitPartition out;
  auto find = [&](const Vec& v) -> int {
    for (size_t i = 0; i < solutions.size(); ++i)
      if (solutions[i] == v) return (int)i;
    return -1;
  };
  std::vector<bool> seen(solutions.size(), false);
  for (size_t i = 0; i < solutions.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit{(int)i};
    seen[i] = true;
    for (size_t h = 0; h < orbit.size(); ++h) {
      for (auto& g : group) {
        Vec img = mat_apply(g, solutions[orbit[h]]);
        int k = find(img);
        if (k < 0) {
          out.closed = false;
          continue;
        }
        if (!seen[k]) {
          seen[k] = true;
          orbit.push_back(k);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

namespace {

FPoly coord_linear(const DescP& d, int nv, int var, const FieldElem& shift) {
  FPoly f = fp_var(d, nv, TermOrder::Grevlex, var);
  if (!shift.is_zero()) f = fp_sub(f, fp_const(d, nv, TermOrder::Grevlex, shift));
  return f;
}

}  // namespace

std::vector<FPoly> family_split_polys(const BuildResult& br) {
  const Algebra& A = br.A;
  const DescP& d = A.d;
  auto var = [&](int i) { return fp_var(d, A.n, TermOrder::Grevlex, i); };
  FieldElem one = FieldElem::one(d);
  if (br.family == "4A") {
    int a0 = A.label_index("a0"), a2 = A.label_index("a2");
    int a1 = A.label_index("a1"), am1 = A.label_index("a-1");
    FieldElem bt = br.params.at("beta");
    FieldElem delta = FieldElem::from_int(d, 2) * (FieldElem::from_int(d, 4) * bt - one);
    FPoly L1 = fp_sub(var(a0), var(a2));
    FPoly L2 = fp_sub(var(a1), var(am1));
    FPoly Q = fp_sub(fp_add(fp_add(fp_mul(var(a0), var(a0)), fp_mul(var(a1), var(a1))),
                            fp_scale(fp_mul(var(a0), var(a1)), delta)),
                     fp_const(d, A.n, TermOrder::Grevlex, one));
    return {L1, L2, Q};
  }
  if (br.family == "4Yb") {
    int ii[4] = {A.label_index("a0"), A.label_index("a2"), A.label_index("a1"),
                 A.label_index("a-1")};
    auto id = find_identity(A);
    std::vector<FPoly> out;
    for (int i : ii) {
      out.push_back(coord_linear(d, A.n, i, FieldElem::zero(d)));
      out.push_back(coord_linear(d, A.n, i, (*id)[i]));
    }
    return out;
  }
  if (br.family == "6Y") {
    int a0 = 0, a2 = 1, a4 = 2, dd = 3, zz = 4;
    FieldElem third = FieldElem::from_rat(d, Rat(1, 3));
    std::vector<FPoly> out;
    for (int i : {a0, a2, a4}) {
      out.push_back(coord_linear(d, A.n, i, FieldElem::zero(d)));
      out.push_back(coord_linear(d, A.n, i, one));
      out.push_back(coord_linear(d, A.n, i, third));
    }
    // conic x_z = 2 x_d (1 - x_d)
    FPoly Q = fp_sub(var(zz), fp_sub(fp_scale(var(dd), FieldElem::from_int(d, 2)),
                                     fp_scale(fp_mul(var(dd), var(dd)), FieldElem::from_int(d, 2))));
    out.push_back(Q);
    return out;
  }
  return {};
}

std::vector<IdemFamily> family_positive_families(const BuildResult& br) {
  const Algebra& A = br.A;
  const DescP& d = A.d;
  std::vector<IdemFamily> out;
  DescP pd = FieldDesc::make(A.d->p, {"t"});
  FieldElem t = FieldElem::generator(pd, "t");
  FieldElem one = FieldElem::one(pd), two = FieldElem::from_int(pd, 2);
  TermOrder ord = TermOrder::Grevlex;
  auto var = [&](int i) { return fp_var(d, A.n, ord, i); };
  auto cst = [&](const FieldElem& c) { return fp_const(d, A.n, ord, c); };
  auto lift = [&](const FieldElem& c) {
    auto r = c.as_rational();
    if (!r) fail(Err::Internal, "family parametrization needs rational base data");
    return FieldElem::from_rat(pd, *r);
  };
  if (br.family == "4A") {
    FieldElem bt = lift(br.params.at("beta"));
    FieldElem delta = two * (FieldElem::from_int(pd, 4) * bt - one);
    // conic lam^2 + delta lam mu + mu^2 = 1 through (1,0): lam = 1+u, mu = t u
    FieldElem u = -(two + delta * t) / (one + delta * t + t * t);
    FieldElem lam = one + u, mu = t * u;
    FieldElem nu = FieldElem::from_int(pd, 4) * (one - lam - mu) / (two * bt - one);
    std::vector<FieldElem> coords(A.n, FieldElem::zero(pd));
    int a0 = A.label_index("a0"), a1 = A.label_index("a1"), a2 = A.label_index("a2"),
        am1 = A.label_index("a-1"), e = A.label_index("e");
    coords[a0] = lam;
    coords[a2] = lam;
    coords[a1] = mu;
    coords[am1] = mu;
    coords[e] = nu;
    FieldElem btd = br.params.at("beta");
    FieldElem deltad = FieldElem::from_int(d, 2) * (FieldElem::from_int(d, 4) * btd -
                                                    FieldElem::one(d));
    std::vector<FPoly> mem{
        fp_sub(var(a0), var(a2)), fp_sub(var(a1), var(am1)),
        fp_sub(fp_scale(var(e), FieldElem::from_int(d, 2) * btd - FieldElem::one(d)),
               fp_scale(fp_sub(fp_sub(cst(FieldElem::one(d)), var(a0)), var(a1)),
                        FieldElem::from_int(d, 4))),
        fp_sub(fp_add(fp_add(fp_mul(var(a0), var(a0)), fp_mul(var(a1), var(a1))),
                      fp_scale(fp_mul(var(a0), var(a1)), deltad)),
               cst(FieldElem::one(d)))};
    out.push_back({"x(lam,mu)", coords, pd, mem, false});
    return out;
  }
  if (br.family == "4Yb") {
    FieldElem bt = lift(br.params.at("beta"));
    // lam^2 + mu^2 + 2(1-4bt) lam mu = lam + mu through (0,0): mu = t lam
    FieldElem k = two * (one - FieldElem::from_int(pd, 4) * bt);
    FieldElem lam = (one + t) / (one + t * t + k * t);
    FieldElem mu = t * lam;
    int a0 = A.label_index("a0"), a1 = A.label_index("a1"), a2 = A.label_index("a2"),
        am1 = A.label_index("a-1"), z = A.label_index("z");
    auto mk = [&](int i0, int i1) {
      std::vector<FieldElem> coords(A.n, FieldElem::zero(pd));
      coords[i0] = lam;
      coords[i1] = mu;
      coords[z] = one - lam - mu;
      return coords;
    };
    FieldElem kd = FieldElem::from_int(d, 2) *
                   (FieldElem::one(d) - FieldElem::from_int(d, 4) * br.params.at("beta"));
    auto mem_for = [&](int i0, int i1, int j0, int j1) {
      // plane x_{j0} = x_{j1} = 0, affine x_z = 1 - x_{i0} - x_{i1}, conic
      std::vector<FPoly> mem{
          var(j0), var(j1),
          fp_sub(var(z), fp_sub(fp_sub(cst(FieldElem::one(d)), var(i0)), var(i1))),
          fp_sub(fp_add(fp_add(fp_mul(var(i0), var(i0)), fp_mul(var(i1), var(i1))),
                        fp_scale(fp_mul(var(i0), var(i1)), kd)),
                 fp_add(var(i0), var(i1)))};
      return mem;
    };
    auto c0 = mk(a0, a2);
    auto c1 = mk(a1, am1);
    auto idv = find_identity(A);
    std::vector<FieldElem> c0c(A.n, FieldElem::zero(pd)), c1c(A.n, FieldElem::zero(pd));
    for (int i = 0; i < A.n; ++i) {
      c0c[i] = lift((*idv)[i]) - c0[i];
      c1c[i] = lift((*idv)[i]) - c1[i];
    }
    out.push_back({"x0(lam,mu)", c0, pd, mem_for(a0, a2, a1, am1), false});
    out.push_back({"x1(lam,mu)", c1, pd, mem_for(a1, am1, a0, a2), false});
    out.push_back({"1-x0(lam,mu)", c0c, pd, mem_for(a0, a2, a1, am1), true});
    out.push_back({"1-x1(lam,mu)", c1c, pd, mem_for(a1, am1, a0, a2), true});
    return out;
  }
  if (br.family == "6Y") {
    // x_i(t) = t a_i + (1-t) a_{i+3} + 2t(1-t) z, y(t) likewise on 1_{B0}, 1_{B1}
    FieldElem w = two * t * (one - t);
    auto mk = [&](std::vector<std::pair<int, FieldElem>> parts) {
      std::vector<FieldElem> coords(A.n, FieldElem::zero(pd));
      for (auto& [i, c] : parts) coords[i] = coords[i] + c;
      coords[4] = coords[4] + w;  // z
      return coords;
    };
    // membership: fixed even-axis coordinates plus x_z = 2 x_d (1 - x_d)
    FieldElem oned = FieldElem::one(d), thirdd = FieldElem::from_rat(d, Rat(1, 3));
    FPoly Q = fp_sub(var(4), fp_sub(fp_scale(var(3), FieldElem::from_int(d, 2)),
                                    fp_scale(fp_mul(var(3), var(3)), FieldElem::from_int(d, 2))));
    auto mem3 = [&](FieldElem v0, FieldElem v1, FieldElem v2) {
      return std::vector<FPoly>{fp_sub(var(0), cst(v0)), fp_sub(var(1), cst(v1)),
                                fp_sub(var(2), cst(v2)), Q};
    };
    FieldElem zd = FieldElem::zero(d);
    // basis: a0 a2 a4 d z; a3 = a0 + d, a5 = a2 + d, a1 = a4 + d
    out.push_back({"x0(lam)", mk({{0, one}, {3, one - t}}), pd, mem3(oned, zd, zd), false});
    out.push_back({"x1(lam)", mk({{2, one}, {3, t}}), pd, mem3(zd, zd, oned), false});
    out.push_back({"x2(lam)", mk({{1, one}, {3, one - t}}), pd, mem3(zd, oned, zd), false});
    FieldElem third = FieldElem::from_rat(pd, Rat(1, 3));
    out.push_back({"y(lam)", mk({{0, third}, {1, third}, {2, third}, {3, one - t}}), pd,
                   mem3(thirdd, thirdd, thirdd), false});
    return out;
  }
  return out;
}

namespace {

// Does the parametrized family satisfy every generator identically?
bool family_matches(const PolyIdeal& part, const IdemFamily& fam,
                    const std::optional<Vec>& shift_id) {
  // transport generators to the parameter field (coefficients must be rational)
  for (auto& g : part.gens) {
    FPoly gp{fam.param_desc, part.nv, TermOrder::Grevlex, {}};
    for (auto& [m, c] : g.t) {
      auto r = c.as_rational();
      if (!r) return false;
      gp.t.emplace_back(m, FieldElem::from_rat(fam.param_desc, *r));
    }
    gp.normalize();
    std::vector<FieldElem> pt = fam.param_point;
    if (shift_id) {
      // system variables are y = x - 1/2 identity
      for (size_t i = 0; i < pt.size(); ++i) {
        auto r = (*shift_id)[i].as_rational();
        if (!r) return false;
        pt[i] = pt[i] - FieldElem::from_rat(fam.param_desc, *r / Rat(2));
      }
    }
    if (!fp_eval(gp, pt).is_zero()) return false;
  }
  return true;
}

bool on_family(const Vec& p, const IdemFamily& fam, const Algebra& A,
               const std::optional<Vec>& identity) {
  if (fam.membership.empty()) return false;
  Vec q = p;
  if (fam.complement) {
    if (!identity) return false;
    Vec id = *identity;
    for (size_t i = 0; i < q.size(); ++i)
      q[i] = (id[i].d.get() == q[i].d.get() ? id[i] : embed(id[i], q[i].d)) - q[i];
  }
  for (auto& g : fam.membership) {
    FPoly ge = g.d.get() == q[0].d.get() ? g : fp_embed(g, q[0].d);
    if (!fp_eval(ge, q).is_zero()) return false;
  }
  (void)A;
  return true;
}

}  // namespace

IdempotentEnumeration enumerate_idempotents(const BuildResult& br, int adjoin_budget,
                                            bool use_tricks) {
  const Algebra& A = br.A;
  IdempotentEnumeration out;
  out.desc = A.d;
  auto id = find_identity(A);
  bool shift = use_tricks && id.has_value() && A.form.has_value();
  IdemSystemOpts opts;
  opts.shift = shift;
  opts.length_relation = shift;
  PolyIdeal sys = idempotent_system(A, opts);
  // split polynomials are written in x-coordinates; shift them to y
  std::vector<FPoly> splits = family_split_polys(br);
  if (shift) {
    for (auto& L : splits) {
      FPoly shifted{L.d, L.nv, L.ord, {}};
      for (auto& [m, c] : L.t) {
        // substitute x_i = y_i + 1/2 id_i
        FPoly term = fp_const(L.d, L.nv, L.ord, c);
        for (int v = 0; v < L.nv; ++v)
          for (int e = 0; e < m[v]; ++e) {
            FPoly xv = fp_add(fp_var(L.d, L.nv, L.ord, v),
                              fp_const(L.d, L.nv, L.ord,
                                       (*id)[v] * FieldElem::from_rat(A.d, Rat(1, 2))));
            term = fp_mul(term, xv);
          }
        shifted = fp_add(shifted, term);
      }
      L = shifted;
    }
  }
  DimensionSplit ds;
  try {
    ds = dimension_split(sys, splits);
  } catch (const AxlError& e) {
    if (e.code() != Err::SolverIncomplete) throw;
    out.complete = false;
    return out;
  }
  auto fams = family_positive_families(br);
  std::optional<Vec> shift_id = shift ? id : std::nullopt;
  for (auto& part : ds.positive_parts) {
    bool matched = false;
    for (auto& f : fams) {
      if (family_matches(part, f, shift_id)) {
        bool dup = false;
        for (auto& n : out.matched_families) dup = dup || n == f.name;
        if (!dup) out.matched_families.push_back(f.name);
        matched = true;
      }
    }
    if (!matched) ++out.unmatched_positive_parts;
  }
  // solve zero-dimensional parts sequentially on one growing field
  DescP cur = A.d;
  std::vector<Vec> pts;
  for (auto& part : ds.zero_dim_parts) {
    PolyIdeal p2 = part;
    if (cur.get() != A.d.get()) {
      p2.d = cur;
      for (auto& g : p2.gens) g = fp_embed(g, cur);
      p2.gb.reset();
    }
    SolutionSet s;
    try {
      s = solve_zero_dim(std::move(p2), adjoin_budget);
    } catch (const AxlError& e) {
      if (e.code() != Err::SolverIncomplete) throw;
      out.complete = false;
      continue;
    }
    if (!s.complete) {
      out.complete = false;
      for (auto& u : s.unsolved_minpolys) out.unsolved.push_back(u);
    }
    if (s.desc->exts.size() > cur->exts.size()) {
      for (auto& p3 : pts)
        for (auto& c : p3) c = embed(c, s.desc);
      cur = s.desc;
    }
    for (auto& p3 : s.points) {
      Vec v;
      for (auto& c : p3) v.push_back(c.d.get() == cur.get() ? c : embed(c, cur));
      pts.push_back(std::move(v));
    }
  }
  out.desc = cur;
  // map back from the shifted variables, dedupe, verify, drop zero
  Algebra AX = A;
  if (cur.get() != A.d.get()) {
    AX = Algebra(cur, A.labels);
    for (size_t i = 0; i < A.sc.size(); ++i) {
      Vec v;
      for (auto& c : A.sc[i]) v.push_back(embed(c, cur));
      AX.sc[i] = std::move(v);
    }
  }
  FieldElem halfc = FieldElem::from_rat(cur, Rat(1, 2));
  for (auto& p3 : pts) {
    Vec x = p3;
    if (shift)
      for (int i = 0; i < A.n; ++i) x[i] = x[i] + halfc * embed((*id)[i], cur);
    if (vec_is_zero(x)) continue;
    if (!(AX.product(x, x) == x)) fail(Err::Internal, "solver returned a non-idempotent");
    bool dup = false;
    for (auto& q : out.idempotents) dup = dup || q == x;
    if (dup) continue;
    // drop points that lie on a matched family (they are counted as families)
    bool fam_member = false;
    if (!out.matched_families.empty()) {
      std::optional<Vec> idc;
      if (id) {
        Vec iv;
        for (auto& c : *id) iv.push_back(embed(c, cur));
        idc = std::move(iv);
      }
      for (auto& f : fams) {
        bool listed = false;
        for (auto& n : out.matched_families) listed = listed || n == f.name;
        if (listed && on_family(x, f, A, idc)) fam_member = true;
      }
    }
    if (!fam_member) out.idempotents.push_back(std::move(x));
  }
  return out;
}

}  // namespace axl
