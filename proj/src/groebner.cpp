#include "axl/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace axl {

int term_cmp(const Mono& a, const Mono& b, TermOrder ord) {
  switch (ord) {
    case TermOrder::Grevlex:
      return grevlex_cmp(a, b);
    case TermOrder::Lex:
      return lex_cmp(a, b);
    case TermOrder::Elim1: {
      if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
      Mono ar(a.begin() + 1, a.end()), br(b.begin() + 1, b.end());
      return grevlex_cmp(ar, br);
    }
  }
  return 0;
}

void FPoly::normalize() {
  TermOrder o = ord;
  std::sort(t.begin(), t.end(),
            [o](const auto& x, const auto& y) { return term_cmp(x.first, y.first, o) > 0; });
  std::vector<std::pair<Mono, FieldElem>> out;
  for (auto& [m, c] : t) {
    if (!out.empty() && out.back().first == m)
      out.back().second = out.back().second + c;
    else
      out.emplace_back(m, c);
  }
  t.clear();
  for (auto& [m, c] : out)
    if (!c.is_zero()) t.emplace_back(std::move(m), std::move(c));
}

FPoly fp_const(const DescP& d, int nv, TermOrder ord, const FieldElem& c) {
  FPoly r{d, nv, ord, {}};
  if (!c.is_zero()) r.t.emplace_back(Mono(nv, 0), c);
  return r;
}

FPoly fp_var(const DescP& d, int nv, TermOrder ord, int idx) {
  FPoly r{d, nv, ord, {}};
  Mono m(nv, 0);
  m[idx] = 1;
  r.t.emplace_back(std::move(m), FieldElem::one(d));
  return r;
}

FPoly fp_add(const FPoly& a, const FPoly& b) {
  FPoly r = a;
  r.t.insert(r.t.end(), b.t.begin(), b.t.end());
  r.normalize();
  return r;
}

FPoly fp_sub(const FPoly& a, const FPoly& b) {
  FPoly nb = b;
  for (auto& [m, c] : nb.t) c = -c;
  return fp_add(a, nb);
}

FPoly fp_mul(const FPoly& a, const FPoly& b) {
  FPoly r{a.d, a.nv, a.ord, {}};
  for (auto& [ma, ca] : a.t)
    for (auto& [mb, cb] : b.t) r.t.emplace_back(mono_mul(ma, mb), ca * cb);
  r.normalize();
  return r;
}

FPoly fp_scale(const FPoly& a, const FieldElem& c) {
  FPoly r = a;
  if (c.is_zero()) {
    r.t.clear();
    return r;
  }
  for (auto& [m, cc] : r.t) cc = cc * c;
  return r;
}

FPoly fp_mul_term(const FPoly& a, const Mono& m, const FieldElem& c) {
  FPoly r{a.d, a.nv, a.ord, {}};
  if (c.is_zero()) return r;
  for (auto& [ma, ca] : a.t) r.t.emplace_back(mono_mul(ma, m), ca * c);
  return r;
}

FPoly fp_monic(const FPoly& a) {
  if (a.is_zero()) return a;
  return fp_scale(a, a.lc().inv());
}

FPoly fp_reorder(const FPoly& a, TermOrder ord) {
  FPoly r = a;
  r.ord = ord;
  r.normalize();
  return r;
}

FieldElem fp_eval(const FPoly& a, const std::vector<FieldElem>& vals) {
  FieldElem acc = FieldElem::zero(a.d);
  for (auto& [m, c] : a.t) {
    FieldElem term = c;
    for (int v = 0; v < a.nv; ++v)
      for (int e = 0; e < m[v]; ++e) term = term * vals[v];
    acc = acc + term;
  }
  return acc;
}

FPoly fp_embed(const FPoly& a, const DescP& d) {
  FPoly r = a;
  r.d = d;
  for (auto& [m, c] : r.t) c = embed(c, d);
  return r;
}

FPoly fp_substitute(const FPoly& a, int var, const FieldElem& value) {
  FPoly r{value.d, a.nv - 1, a.ord, {}};
  for (auto& [m, c] : a.t) {
    FieldElem cc = c.d.get() == value.d.get() ? c : embed(c, value.d);
    for (int e = 0; e < m[var]; ++e) cc = cc * value;
    Mono nm;
    nm.reserve(a.nv - 1);
    for (int v = 0; v < a.nv; ++v)
      if (v != var) nm.push_back(m[v]);
    r.t.emplace_back(std::move(nm), std::move(cc));
  }
  r.normalize();
  return r;
}

std::string fp_str(const FPoly& a, const std::vector<std::string>& vars) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : a.t) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int v = 0; v < a.nv; ++v) {
      if (m[v] == 0) continue;
      os << "*" << vars[v];
      if (m[v] > 1) os << "^" << m[v];
    }
  }
  return os.str();
}

FPoly normal_form(const FPoly& f, const std::vector<FPoly>& G) {
  FPoly rem{f.d, f.nv, f.ord, {}};
  FPoly cur = f;
  while (!cur.is_zero()) {
    bool reduced = false;
    for (auto& g : G) {
      if (g.is_zero()) continue;
      if (mono_divides(g.lm(), cur.lm())) {
        Mono qm = mono_div(cur.lm(), g.lm());
        FieldElem qc = cur.lc() / g.lc();
        cur = fp_sub(cur, fp_mul_term(g, qm, qc));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.t.push_back(cur.t.front());
      cur.t.erase(cur.t.begin());
    }
  }
  rem.normalize();
  return rem;
}

namespace {

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

void groebner(PolyIdeal& I) {
  if (I.gb) return;
  std::vector<FPoly> G;
  for (auto& g : I.gens) {
    FPoly gg = fp_reorder(g, I.ord);
    if (!gg.is_zero()) G.push_back(fp_monic(gg));
  }
  struct Pair {
    size_t i, j;
    Mono lcm;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      if (G[i].is_zero()) continue;
      pairs.push_back({i, j, mono_lcm(G[i].lm(), G[j].lm())});
    }
  };
  for (size_t j = 0; j < G.size(); ++j) push_pairs(j);
  size_t guard = 0;
  while (!pairs.empty()) {
    if (++guard > 200000) fail(Err::SolverIncomplete, "Buchberger pair budget exceeded");
    if ((guard & 0x3f) == 0 && deadline_expired())
      fail(Err::SolverIncomplete, "timeout during Groebner basis computation");
    // normal selection: smallest lcm degree first
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
      if (term_cmp(pairs[k].lcm, pairs[best].lcm, I.ord) < 0) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);
    const FPoly &fi = G[p.i], &fj = G[p.j];
    if (fi.is_zero() || fj.is_zero()) continue;
    // product criterion
    if (mono_coprime(fi.lm(), fj.lm())) continue;
    // chain criterion: some g_k with lt dividing the lcm and both side pairs done
    bool skip = false;
    for (size_t k2 = 0; k2 < G.size() && !skip; ++k2) {
      if (k2 == p.i || k2 == p.j || G[k2].is_zero()) continue;
      if (!mono_divides(G[k2].lm(), p.lcm)) continue;
      bool pending = false;
      for (auto& q : pairs)
        if ((q.i == std::min(p.i, k2) && q.j == std::max(p.i, k2)) ||
            (q.i == std::min(p.j, k2) && q.j == std::max(p.j, k2)))
          pending = true;
      if (!pending) skip = true;
    }
    if (skip) continue;
    FPoly s = fp_sub(fp_mul_term(fi, mono_div(p.lcm, fi.lm()), FieldElem::one(I.d)),
                     fp_mul_term(fj, mono_div(p.lcm, fj.lm()), FieldElem::one(I.d)));
    FPoly r = normal_form(s, G);
    if (r.is_zero()) continue;
    G.push_back(fp_monic(r));
    push_pairs(G.size() - 1);
  }
  // inter-reduce to the reduced GB
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < G.size(); ++i) {
      if (G[i].is_zero()) continue;
      std::vector<FPoly> others;
      for (size_t j = 0; j < G.size(); ++j)
        if (j != i && !G[j].is_zero()) others.push_back(G[j]);
      FPoly r = normal_form(G[i], others);
      if (!(r == G[i])) {
        G[i] = r.is_zero() ? r : fp_monic(r);
        changed = true;
      }
    }
  }
  std::vector<FPoly> red;
  for (auto& g : G)
    if (!g.is_zero()) red.push_back(g);
  std::sort(red.begin(), red.end(), [&](const FPoly& a, const FPoly& b) {
    return term_cmp(a.lm(), b.lm(), I.ord) < 0;
  });
  I.gb = std::move(red);
}

bool gb_contains_one(const PolyIdeal& I) {
  for (auto& g : *I.gb)
    if (!g.is_zero() && mono_deg(g.lm()) == 0) return true;
  return false;
}

bool is_zero_dimensional(PolyIdeal& I) {
  groebner(I);
  if (gb_contains_one(I)) return true;  // empty variety
  // every variable needs a pure power among the leading terms
  for (int v = 0; v < I.nv; ++v) {
    bool found = false;
    for (auto& g : *I.gb) {
      const Mono& m = g.lm();
      bool pure = m[v] > 0;
      for (int w = 0; w < I.nv && pure; ++w)
        if (w != v && m[w] > 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Mono> quotient_basis(PolyIdeal& I, size_t cap) {
  groebner(I);
  if (gb_contains_one(I)) return {};
  std::vector<Mono> basis;
  Mono cur(I.nv, 0);
  // enumerate standard monomials by DFS with per-variable bounds
  std::vector<int> bound(I.nv, -1);
  for (int v = 0; v < I.nv; ++v)
    for (auto& g : *I.gb) {
      const Mono& m = g.lm();
      bool pure = m[v] > 0;
      for (int w = 0; w < I.nv && pure; ++w)
        if (w != v && m[w] > 0) pure = false;
      if (pure) bound[v] = bound[v] < 0 ? m[v] : std::min(bound[v], (int)m[v]);
    }
  for (int v = 0; v < I.nv; ++v)
    if (bound[v] < 0) fail(Err::SolverIncomplete, "quotient basis of a positive-dimensional ideal");
  std::function<void(int)> rec = [&](int v) {
    if ((size_t)basis.size() > cap) fail(Err::SolverIncomplete, "quotient dimension exceeds cap");
    if (v == I.nv) {
      bool standard = true;
      for (auto& g : *I.gb)
        if (mono_divides(g.lm(), cur)) {
          standard = false;
          break;
        }
      if (standard) basis.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[v]; ++e) {
      cur[v] = e;
      rec(v + 1);
    }
    cur[v] = 0;
  };
  rec(0);
  std::sort(basis.begin(), basis.end(),
            [&](const Mono& a, const Mono& b) { return term_cmp(a, b, I.ord) < 0; });
  return basis;
}

PolyIdeal saturate(const PolyIdeal& I, const FPoly& f) {
  // J = I + (t*f - 1) in (t, x_1..x_n); eliminate t.
  PolyIdeal J;
  J.d = I.d;
  J.nv = I.nv + 1;
  J.vars = I.vars;
  J.vars.insert(J.vars.begin(), "_t");
  J.ord = TermOrder::Elim1;
  auto lift = [&](const FPoly& g) {
    FPoly r{I.d, J.nv, J.ord, {}};
    for (auto& [m, c] : g.t) {
      Mono nm(m);
      nm.insert(nm.begin(), 0);
      r.t.emplace_back(std::move(nm), c);
    }
    r.normalize();
    return r;
  };
  for (auto& g : I.gens) J.gens.push_back(lift(g));
  FPoly tf = fp_mul(fp_var(I.d, J.nv, J.ord, 0), lift(f));
  J.gens.push_back(fp_sub(tf, fp_const(I.d, J.nv, J.ord, FieldElem::one(I.d))));
  groebner(J);
  PolyIdeal R;
  R.d = I.d;
  R.nv = I.nv;
  R.vars = I.vars;
  R.ord = I.ord;
  for (auto& g : *J.gb) {
    bool tfree = true;
    for (auto& [m, c] : g.t) tfree = tfree && m[0] == 0;
    if (!tfree) continue;
    FPoly r{I.d, I.nv, I.ord, {}};
    for (auto& [m, c] : g.t) r.t.emplace_back(Mono(m.begin() + 1, m.end()), c);
    r.normalize();
    R.gens.push_back(std::move(r));
  }
  return R;
}

PolyIdeal ideal_plus(const PolyIdeal& I, const FPoly& f) {
  PolyIdeal R = I;
  R.gb.reset();
  R.gens.push_back(fp_reorder(f, R.ord));
  return R;
}

DimensionSplit dimension_split(const PolyIdeal& Iin, const std::vector<FPoly>& split_polys) {
  DimensionSplit out;
  std::function<void(PolyIdeal, std::vector<FPoly>)> rec = [&](PolyIdeal I,
                                                               std::vector<FPoly> splits) {
    groebner(I);
    if (gb_contains_one(I)) return;  // empty
    if (is_zero_dimensional(I)) {
      out.zero_dim_parts.push_back(std::move(I));
      return;
    }
    for (size_t k = 0; k < splits.size(); ++k) {
      FPoly L = fp_reorder(splits[k], I.ord);
      if (normal_form(L, *I.gb).is_zero()) continue;  // vanishes identically on V(I)
      std::vector<FPoly> rest = splits;
      rest.erase(rest.begin() + k);
      PolyIdeal I2 = ideal_plus(I, L);
      PolyIdeal I1 = saturate(I, L);
      rec(std::move(I1), rest);
      rec(std::move(I2), rest);
      return;
    }
    out.positive_parts.push_back(std::move(I));
  };
  rec(Iin, split_polys);
  return out;
}

namespace {

Mat mult_matrix(PolyIdeal& I, const std::vector<Mono>& basis, int var) {
  int D = (int)basis.size();
  Mat M(I.d, D, D);
  std::map<Mono, int> index;
  for (int i = 0; i < D; ++i) index[basis[i]] = i;
  for (int j = 0; j < D; ++j) {
    Mono m(basis[j]);
    m[var] += 1;
    FPoly f{I.d, I.nv, I.ord, {{m, FieldElem::one(I.d)}}};
    FPoly nf = normal_form(f, *I.gb);
    for (auto& [mm, c] : nf.t) {
      auto it = index.find(mm);
      if (it == index.end()) fail(Err::Internal, "normal form escaped the quotient basis");
      M.at(it->second, j) = c;
    }
  }
  return M;
}

}  // namespace

SolutionSet solve_zero_dim(PolyIdeal I, int adjoin_budget) {
  SolutionSet out;
  out.desc = I.d;
  groebner(I);
  if (gb_contains_one(I)) return out;
  if (I.nv == 0) {
    out.points.push_back({});
    return out;
  }
  if (!is_zero_dimensional(I))
    fail(Err::SolverIncomplete, "solve_zero_dim: ideal is not zero-dimensional");
  std::vector<Mono> basis = quotient_basis(I);
  // per-variable minimal polynomials; substitute pinned variables first
  int best_var = -1;
  UPoly best_mp;
  for (int v = 0; v < I.nv; ++v) {
    Mat M = mult_matrix(I, basis, v);
    UPoly mp = minpoly_of_matrix(M);
    if (best_var < 0 || updeg(mp) < updeg(best_mp)) {
      best_var = v;
      best_mp = mp;
      if (updeg(mp) == 1) break;
    }
  }
  std::vector<FieldElem> cands{FieldElem::zero(I.d), FieldElem::one(I.d),
                               FieldElem::from_rat(I.d, Rat(1, 2))};
  RootSearch rs = roots_in_field(best_mp, I.d, adjoin_budget, cands, "rt");
  int budget_left = adjoin_budget - (int)(rs.desc->exts.size() - I.d->exts.size());
  if (!rs.unsolved.empty()) {
    out.complete = false;
    for (auto& u : rs.unsolved) out.unsolved_minpolys.push_back(u);
  }
  DescP cur = rs.desc;
  out.desc = cur;
  for (auto& root : rs.roots) {
    FieldElem r = embed(root, cur);
    PolyIdeal sub;
    sub.d = cur;
    sub.nv = I.nv - 1;
    sub.ord = I.ord;
    for (size_t k = 0; k < I.vars.size(); ++k)
      if ((int)k != best_var) sub.vars.push_back(I.vars[k]);
    for (auto& g : I.gens) sub.gens.push_back(fp_substitute(fp_embed(g, cur), best_var, r));
    SolutionSet sres = solve_zero_dim(std::move(sub), budget_left);
    if (!sres.complete) {
      out.complete = false;
      for (auto& u : sres.unsolved_minpolys) out.unsolved_minpolys.push_back(u);
    }
    if (desc_extends(sres.desc, cur) && sres.desc->exts.size() > cur->exts.size()) {
      cur = sres.desc;
      out.desc = cur;
      for (auto& p : out.points)
        for (auto& c : p) c = embed(c, cur);
      r = embed(r, cur);
    }
    for (auto& p : sres.points) {
      std::vector<FieldElem> full;
      size_t pi = 0;
      for (int k = 0; k < I.nv; ++k) {
        if (k == best_var)
          full.push_back(r);
        else
          full.push_back(embed(p[pi++], cur));
      }
      out.points.push_back(std::move(full));
    }
  }
  return out;
}

}  // namespace axl
