#include "axl/univar.hpp"

#include <algorithm>
#include <sstream>

namespace axl {

int updeg(const UPoly& f) {
  for (size_t i = f.size(); i-- > 0;)
    if (!f[i].is_zero()) return (int)i;
  return -1;
}

void uptrim(UPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

UPoly up_monic(const UPoly& f) {
  UPoly g = f;
  uptrim(g);
  if (g.empty()) return g;
  FieldElem inv = g.back().inv();
  for (auto& c : g) c = c * inv;
  return g;
}

UPoly up_add(const UPoly& a, const UPoly& b) {
  UPoly r = a.size() >= b.size() ? a : b;
  const UPoly& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  uptrim(r);
  return r;
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
  UPoly nb = b;
  for (auto& c : nb) c = -c;
  return up_add(a, nb);
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  const DescP& d = a[0].d ? a[0].d : b[0].d;
  UPoly r(a.size() + b.size() - 1, FieldElem::zero(d));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
  }
  uptrim(r);
  return r;
}

std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b) {
  UPoly r = a, q;
  uptrim(r);
  int db = updeg(b);
  if (db < 0) fail(Err::DivisionByZero, "polynomial division by zero");
  const DescP& d = b[db].d;
  FieldElem lbinv = b[db].inv();
  int da = updeg(r);
  if (da < db) return {UPoly{}, r};
  q.assign(da - db + 1, FieldElem::zero(d));
  while ((da = updeg(r)) >= db) {
    FieldElem c = r[da] * lbinv;
    q[da - db] = c;
    for (int i = 0; i <= db; ++i) r[da - db + i] = r[da - db + i] - c * b[i];
    uptrim(r);
  }
  return {q, r};
}

UPoly up_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  uptrim(x);
  uptrim(y);
  while (!y.empty()) {
    auto [q, r] = up_divmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return up_monic(x);
}

UPoly up_derivative(const UPoly& a) {
  UPoly r;
  if (a.size() <= 1) return r;
  const DescP& d = a[0].d;
  r.assign(a.size() - 1, FieldElem::zero(d));
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * FieldElem::from_int(d, (long)i);
  uptrim(r);
  return r;
}

FieldElem up_eval(const UPoly& a, const FieldElem& x) {
  FieldElem acc = FieldElem::zero(x.d);
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

UPoly up_embed(const UPoly& a, const DescP& d) {
  UPoly r;
  r.reserve(a.size());
  for (auto& c : a) r.push_back(embed(c, d));
  return r;
}

std::string up_str(const UPoly& a, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << a[i].str() << ")";
    if (i > 0) os << "*" << var << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::string fresh_root_name(const DescP& d, const std::string& prefix) {
  for (int k = 1;; ++k) {
    std::string name = prefix + std::to_string(k);
    bool used = d->trans_index(name) >= 0;
    for (auto& e : d->exts) used = used || e.name == name;
    if (!used) return name;
  }
}

namespace {

UPoly deflate(const UPoly& f, const FieldElem& root) {
  // synthetic division by (t - root)
  int n = updeg(f);
  UPoly q(n, FieldElem::zero(root.d));
  FieldElem carry = f[n];
  for (int i = n - 1; i >= 0; --i) {
    q[i] = carry;
    carry = f[i] + carry * root;
  }
  return q;
}

// Rational roots of a polynomial with rational coefficients via the rational
// root theorem (with exact integer factorization).
std::vector<Rat> rational_roots(const std::vector<Rat>& coef, uint32_t p) {
  std::vector<Rat> out;
  if (p != 0) {
    // small prime field: exhaustive
    if (p > 20000) return out;
    for (uint64_t r = 0; r < p; ++r) {
      Rat acc(0), x((long)r);
      for (size_t i = coef.size(); i-- > 0;) acc = cnorm(acc * x + coef[i], p);
      if (acc == 0) out.emplace_back((long)r);
    }
    return out;
  }
  // clear denominators
  Int lcm(1);
  for (auto& c : coef) {
    Int den = c.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> ic;
  for (auto& c : coef) ic.push_back(Int(c * Rat(lcm)));
  size_t lo = 0;
  while (lo < ic.size() && ic[lo] == 0) ++lo;
  if (lo > 0) out.emplace_back(0);
  if (lo >= ic.size()) return out;
  Int a0 = ic[lo], ad = ic.back();
  auto f0 = factor_int(a0), fd = factor_int(ad);
  if (!f0 || !fd) return out;
  auto d0 = divisors_from_factors(*f0, 20000), dd = divisors_from_factors(*fd, 20000);
  if (!d0 || !dd) return out;
  auto evalq = [&](const Rat& x) {
    Rat acc(0);
    for (size_t i = ic.size(); i-- > lo;) acc = acc * x + Rat(ic[i]);
    return acc;
  };
  for (auto& pnum : *d0)
    for (auto& qden : *dd) {
      Rat cand(pnum, qden);
      cand.canonicalize();
      if (evalq(cand) == 0) out.push_back(cand);
      Rat nc = -cand;
      if (evalq(nc) == 0) out.push_back(nc);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

RootSearch roots_in_field(const UPoly& fin, const DescP& din, int adjoin_budget,
                          const std::vector<FieldElem>& candidates, const std::string& prefix) {
  RootSearch rs;
  rs.desc = din;
  UPoly g = up_monic(fin);
  if (updeg(g) <= 0) return rs;
  // square-free part
  {
    UPoly gp = up_derivative(g);
    if (!gp.empty()) {
      UPoly h = up_gcd(g, gp);
      if (updeg(h) > 0) g = up_divmod(g, h).first;
    }
  }
  bool progress = true;
  while (updeg(g) > 0 && progress) {
    progress = false;
    int dg = updeg(g);
    const DescP& d = rs.desc;
    if (dg == 1) {
      rs.roots.push_back(-g[0] / g[1]);
      g = UPoly{FieldElem::one(d)};
      break;
    }
    // provided candidates
    for (auto& cand : candidates) {
      if (updeg(g) <= 0) break;
      FieldElem c = cand.d.get() == d.get() ? cand : embed(cand, d);
      if (up_eval(g, c).is_zero()) {
        rs.roots.push_back(c);
        g = deflate(g, c);
        progress = true;
      }
    }
    if (updeg(g) <= 0) break;
    dg = updeg(g);
    if (dg == 1) continue;
    // rational roots when coefficients are rational
    {
      bool allrat = true;
      std::vector<Rat> rc;
      for (auto& c : g) {
        auto r = c.as_rational();
        if (!r) {
          allrat = false;
          break;
        }
        rc.push_back(*r);
      }
      if (allrat) {
        for (auto& r : rational_roots(rc, d->p)) {
          FieldElem root = FieldElem::from_rat(d, r);
          if (up_eval(g, root).is_zero()) {
            rs.roots.push_back(root);
            g = deflate(g, root);
            progress = true;
          }
        }
        if (updeg(g) <= 0) break;
        dg = updeg(g);
        if (dg == 1) continue;
        if (progress) continue;
      }
    }
    // quadratic formula
    if (dg == 2) {
      FieldElem a = g[2], b = g[1], c0 = g[0];
      FieldElem disc = b * b - FieldElem::from_int(rs.desc, 4) * a * c0;
      std::optional<FieldElem> sq = try_sqrt(disc);
      DescP nd = rs.desc;
      if (!sq && adjoin_budget > 0 && !disc.is_zero()) {
        std::string name = fresh_root_name(rs.desc, prefix);
        nd = adjoin_sqrt(rs.desc, name, disc);
        --adjoin_budget;
        sq = FieldElem::generator(nd, name);
      }
      if (sq) {
        if (nd.get() != rs.desc.get()) {
          for (auto& r : rs.roots) r = embed(r, nd);
          for (auto& u : rs.unsolved) u = up_embed(u, nd);
          g = up_embed(g, nd);
          a = g[2];
          b = g[1];
          rs.desc = nd;
        }
        FieldElem two_a = FieldElem::from_int(rs.desc, 2) * a;
        rs.roots.push_back((-b + *sq) / two_a);
        rs.roots.push_back((-b - *sq) / two_a);
        g = UPoly{FieldElem::one(rs.desc)};
        break;
      }
      break;  // irreducible quadratic, no budget
    }
    // affine symmetry: roots closed under t -> c - t makes h(s) := g(s + c/2) even
    {
      FieldElem dd = FieldElem::from_int(d, dg);
      FieldElem c = -(g[dg - 1] / g[dg]) * FieldElem::from_int(d, 2) / dd;  // = 2*mean of roots
      FieldElem half_c = c / FieldElem::from_int(d, 2);
      // h(s) = g(s + half_c) via Taylor shift (Horner)
      UPoly h{g[dg]};
      for (int i = dg - 1; i >= 0; --i) {
        // h = h * (s + half_c) + g[i]
        UPoly hs(h.size() + 1, FieldElem::zero(d));
        for (size_t k = 0; k < h.size(); ++k) {
          hs[k + 1] = hs[k + 1] + h[k];
          hs[k] = hs[k] + h[k] * half_c;
        }
        hs[0] = hs[0] + g[i];
        h = std::move(hs);
      }
      bool even = true;
      for (size_t i = 1; i < h.size() && even; i += 2) even = h[i].is_zero();
      if (even && dg >= 2 && dg % 2 == 0) {
        UPoly htilde;
        for (size_t i = 0; i < h.size(); i += 2) htilde.push_back(h[i]);
        RootSearch sub = roots_in_field(htilde, rs.desc, adjoin_budget, candidates, prefix);
        adjoin_budget -= (int)(sub.desc->exts.size() - rs.desc->exts.size());
        if (sub.desc.get() != rs.desc.get()) {
          for (auto& r : rs.roots) r = embed(r, sub.desc);
          for (auto& u : rs.unsolved) u = up_embed(u, sub.desc);
          g = up_embed(g, sub.desc);
          rs.desc = sub.desc;
        }
        bool any = false;
        for (auto& u0 : sub.roots) {
          FieldElem u = u0.d.get() == rs.desc.get() ? u0 : embed(u0, rs.desc);
          std::optional<FieldElem> s = try_sqrt(u);
          DescP nd = rs.desc;
          if (!s && adjoin_budget > 0 && !u.is_zero()) {
            std::string name = fresh_root_name(rs.desc, prefix);
            nd = adjoin_sqrt(rs.desc, name, u);
            --adjoin_budget;
            s = FieldElem::generator(nd, name);
          }
          if (!s) continue;
          if (nd.get() != rs.desc.get()) {
            for (auto& r : rs.roots) r = embed(r, nd);
            for (auto& uu : rs.unsolved) uu = up_embed(uu, nd);
            g = up_embed(g, nd);
            rs.desc = nd;
          }
          FieldElem hc = embed(half_c, rs.desc);
          for (int sgn = 0; sgn < 2; ++sgn) {
            FieldElem root = (sgn == 0 ? *s : -*s) + hc;
            if (up_eval(g, root).is_zero()) {
              rs.roots.push_back(root);
              g = deflate(g, root);
              any = true;
            }
            if (u.is_zero()) break;
          }
        }
        if (any) {
          progress = true;
          continue;
        }
      }
    }
  }
  if (updeg(g) > 0) rs.unsolved.push_back(up_monic(g));
  return rs;
}

UPoly minpoly_of_matrix(const Mat& m) {
  int n = m.rows;
  const DescP& d = m.d;
  UPoly result{FieldElem::one(d)};
  auto apply_poly = [&](const UPoly& f) {
    // f(M) applied as matrix; returns true if zero
    Mat acc(d, n, n);
    Mat pw = Mat::identity(d, n);
    for (size_t i = 0; i < f.size(); ++i) {
      if (!f[i].is_zero())
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) acc.at(r, c) = acc.at(r, c) + f[i] * pw.at(r, c);
      if (i + 1 < f.size()) pw = mat_mul(pw, m);
    }
    return mat_is_zero(acc);
  };
  for (int start = 0; start < n; ++start) {
    if (updeg(result) >= n) break;
    if (apply_poly(result)) break;
    // cyclic minimal polynomial from e_start
    Vec v(n, FieldElem::zero(d));
    v[start] = FieldElem::one(d);
    std::vector<Vec> krylov{v};
    // grow until dependent
    UPoly cyc;
    while (true) {
      // solve: is last vector in span of previous ones?
      int k = (int)krylov.size();
      Mat a(d, n, k - 1 >= 0 ? k - 1 : 0);
      if (k > 1) {
        for (int j = 0; j < k - 1; ++j)
          for (int i = 0; i < n; ++i) a.at(i, j) = krylov[j][i];
        auto sol = solve_linear(a, krylov.back());
        if (sol) {
          // monic dependency: t^{k-1} - sum sol_j t^j
          cyc.assign(k, FieldElem::zero(d));
          cyc[k - 1] = FieldElem::one(d);
          for (int j = 0; j < k - 1; ++j) cyc[j] = -(*sol)[j];
          break;
        }
      }
      krylov.push_back(mat_apply(m, krylov.back()));
      if ((int)krylov.size() > n + 1) fail(Err::Internal, "minpoly: runaway Krylov iteration");
    }
    // result = lcm(result, cyc)
    UPoly g = up_gcd(result, cyc);
    result = up_divmod(up_mul(result, cyc), g).first;
  }
  if (!apply_poly(result)) fail(Err::Internal, "minpoly verification failed");
  return up_monic(result);
}

}  // namespace axl
