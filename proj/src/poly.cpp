#include "axl/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace axl {

int mono_deg(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

int grevlex_cmp(const Mono& a, const Mono& b) {
  int da = mono_deg(a), db = mono_deg(b);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

int lex_cmp(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Poly Poly::constant(uint32_t p, int nvars, const Rat& c) {
  Poly r(p, nvars);
  Rat cc = cnorm(c, p);
  if (cc != 0) r.t.emplace_back(Mono(nvars, 0), cc);
  return r;
}

Poly Poly::variable(uint32_t p, int nvars, int idx, int exp) {
  Poly r(p, nvars);
  Mono m(nvars, 0);
  m[idx] = exp;
  r.t.emplace_back(std::move(m), Rat(1));
  return r;
}

int Poly::total_deg() const {
  int d = -1;
  for (auto& [m, c] : t) d = std::max(d, mono_deg(m));
  return d;
}

int Poly::deg_in(int var) const {
  int d = 0;
  for (auto& [m, c] : t) d = std::max(d, (int)m[var]);
  return d;
}

void Poly::normalize() {
  std::sort(t.begin(), t.end(),
            [](const auto& x, const auto& y) { return grevlex_cmp(x.first, y.first) > 0; });
  std::vector<std::pair<Mono, Rat>> out;
  for (auto& [m, c] : t) {
    if (!out.empty() && out.back().first == m)
      out.back().second += c;
    else
      out.emplace_back(m, c);
  }
  t.clear();
  for (auto& [m, c] : out) {
    Rat cc = cnorm(c, p);
    if (cc != 0) t.emplace_back(std::move(m), std::move(cc));
  }
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r(a.p, a.nvars);
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = grevlex_cmp(a.t[i].first, b.t[j].first);
    if (c > 0)
      r.t.push_back(a.t[i++]);
    else if (c < 0)
      r.t.push_back(b.t[j++]);
    else {
      Rat s = cnorm(a.t[i].second + b.t[j].second, a.p);
      if (s != 0) r.t.emplace_back(a.t[i].first, std::move(s));
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
  return r;
}

Poly operator-(const Poly& a) {
  Poly r(a);
  for (auto& [m, c] : r.t) c = cnorm(-c, r.p);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.p, a.nvars);
  if (a.is_zero() || b.is_zero()) return r;
  std::map<Mono, Rat, bool (*)(const Mono&, const Mono&)> acc(
      [](const Mono& x, const Mono& y) { return grevlex_cmp(x, y) > 0; });
  for (auto& [ma, ca] : a.t)
    for (auto& [mb, cb] : b.t) acc[mono_mul(ma, mb)] += ca * cb;
  for (auto& [m, c] : acc) {
    Rat cc = cnorm(c, a.p);
    if (cc != 0) r.t.emplace_back(m, std::move(cc));
  }
  return r;
}

Poly Poly::mul_term(const Mono& m, const Rat& c) const {
  Poly r(p, nvars);
  if (c == 0) return r;
  r.t.reserve(t.size());
  for (auto& [mm, cc] : t) {
    Rat v = cnorm(cc * c, p);
    if (v != 0) r.t.emplace_back(mono_mul(mm, m), std::move(v));
  }
  return r;
}

Poly Poly::mul_scalar(const Rat& c) const { return mul_term(Mono(nvars, 0), c); }

int poly_cmp(const Poly& a, const Poly& b) {
  size_t n = std::min(a.t.size(), b.t.size());
  for (size_t i = 0; i < n; ++i) {
    int c = grevlex_cmp(a.t[i].first, b.t[i].first);
    if (c != 0) return c;
    if (a.t[i].second != b.t[i].second) return a.t[i].second < b.t[i].second ? -1 : 1;
  }
  if (a.t.size() != b.t.size()) return a.t.size() < b.t.size() ? -1 : 1;
  return 0;
}

Poly poly_pow(const Poly& a, int e) {
  Poly r = Poly::constant(a.p, a.nvars, Rat(1));
  Poly base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly poly_derivative(const Poly& a, int var) {
  Poly r(a.p, a.nvars);
  for (auto& [m, c] : a.t) {
    if (m[var] == 0) continue;
    Rat cc = cnorm(c * m[var], a.p);
    if (cc == 0) continue;
    Mono mm(m);
    mm[var] -= 1;
    r.t.emplace_back(std::move(mm), std::move(cc));
  }
  r.normalize();
  return r;
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  Poly rem = a;
  Poly q(a.p, a.nvars);
  Rat blc_inv = cinv(b.lead_coeff(), b.p);
  while (!rem.is_zero()) {
    if (!mono_divides(b.lead_mono(), rem.lead_mono())) return std::nullopt;
    Mono qm = mono_div(rem.lead_mono(), b.lead_mono());
    Rat qc = cnorm(rem.lead_coeff() * blc_inv, a.p);
    q.t.emplace_back(qm, qc);
    rem = rem - b.mul_term(qm, qc);
  }
  q.normalize();
  return q;
}

namespace {

// View a as univariate in variable `var` with Poly coefficients.
std::vector<Poly> coeffs_in(const Poly& a, int var) {
  std::vector<Poly> cs(a.deg_in(var) + 1, Poly(a.p, a.nvars));
  for (auto& [m, c] : a.t) {
    Mono mm(m);
    int e = mm[var];
    mm[var] = 0;
    cs[e].t.emplace_back(std::move(mm), c);
  }
  for (auto& cp : cs) cp.normalize();
  return cs;
}

Poly from_coeffs(const std::vector<Poly>& cs, int var, uint32_t p, int nvars) {
  Poly r(p, nvars);
  for (size_t e = 0; e < cs.size(); ++e) {
    for (auto& [m, c] : cs[e].t) {
      Mono mm(m);
      mm[var] = (int)e;
      r.t.emplace_back(std::move(mm), c);
    }
  }
  r.normalize();
  return r;
}

int top_var(const Poly& a, const Poly& b) {
  for (int v = a.nvars - 1; v >= 0; --v)
    if (a.deg_in(v) > 0 || b.deg_in(v) > 0) return v;
  return -1;
}

Poly content_in(const Poly& a, int var) {
  auto cs = coeffs_in(a, var);
  Poly g(a.p, a.nvars);
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? poly_unit_normalize(c) : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable var.
Poly prem(const Poly& a, const Poly& b, int var) {
  auto ac = coeffs_in(a, var);
  auto bc = coeffs_in(b, var);
  int db = (int)bc.size() - 1;
  Poly blc = bc[db];
  std::vector<Poly> r = ac;
  while ((int)r.size() - 1 >= db) {
    int dr = (int)r.size() - 1;
    if (r[dr].is_zero()) {
      r.pop_back();
      continue;
    }
    Poly top = r[dr];
    for (auto& ri : r) ri = ri * blc;
    for (int k = 0; k <= db; ++k) r[dr - db + k] = r[dr - db + k] - top * bc[k];
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    if (r.empty()) break;
  }
  return from_coeffs(r, var, a.p, a.nvars);
}

Rat rat_content(const Poly& a) {
  // positive rational r with a/r integer, coprime coefficients
  Int g(0), l(1);
  for (auto& [m, c] : a.t) {
    Int num = abs(c.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    Int den = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  if (g == 0) g = 1;
  return Rat(g, l);
}

}  // namespace

Poly poly_unit_normalize(const Poly& a) {
  if (a.is_zero()) return a;
  if (a.p > 0) return a.mul_scalar(cinv(a.lead_coeff(), a.p));
  Rat c = rat_content(a);
  if (a.lead_coeff() < 0) c = -c;
  return a.mul_scalar(Rat(1) / c);
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return poly_unit_normalize(b);
  if (b.is_zero()) return poly_unit_normalize(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.p, a.nvars, Rat(1));
  int var = top_var(a, b);
  if (var < 0) return Poly::constant(a.p, a.nvars, Rat(1));

  Poly ca = content_in(a, var), cb = content_in(b, var);
  Poly cont = poly_gcd(ca, cb);
  Poly f = *poly_divide_exact(a, ca);
  Poly g = *poly_divide_exact(b, cb);
  if (f.deg_in(var) < g.deg_in(var)) std::swap(f, g);

  // Subresultant PRS (Brown).
  Poly h = Poly::constant(a.p, a.nvars, Rat(1));
  Poly s = h;
  while (true) {
    int delta = f.deg_in(var) - g.deg_in(var);
    Poly r = prem(f, g, var);
    if (r.is_zero()) break;
    if (r.deg_in(var) == 0) {
      g = r;
      break;
    }
    Poly divisor = s * poly_pow(h, delta);
    f = g;
    auto q = poly_divide_exact(r, divisor);
    g = q ? *q : poly_unit_normalize(r);  // fall back defensively; PRS theory says exact
    s = coeffs_in(f, var).back();
    if (delta > 0) {
      auto hh = poly_divide_exact(poly_pow(s, delta), poly_pow(h, delta - 1));
      h = hh ? *hh : poly_unit_normalize(poly_pow(s, delta));
    }
  }
  if (g.deg_in(var) == 0) return poly_unit_normalize(cont);
  Poly gp = *poly_divide_exact(g, content_in(g, var));
  return poly_unit_normalize(cont * gp);
}

Poly poly_squarefree_part(const Poly& a) {
  if (a.is_zero() || a.is_constant()) return a;
  Poly g = a;
  for (int v = 0; v < a.nvars; ++v) {
    if (g.deg_in(v) == 0) continue;
    Poly d = poly_derivative(g, v);
    if (d.is_zero()) continue;
    Poly h = poly_gcd(g, d);
    if (!h.is_constant()) {
      auto q = poly_divide_exact(g, h);
      if (q) g = *q;
    }
  }
  return poly_unit_normalize(g);
}

std::optional<Poly> poly_sqrt(const Poly& a) {
  if (a.is_zero()) return a;
  if (a.is_constant()) {
    auto r = rat_sqrt(a.constant_value(), a.p);
    if (!r) return std::nullopt;
    return Poly::constant(a.p, a.nvars, *r);
  }
  // Reconstruct term by term from the leading term downward.
  const Mono& lm = a.lead_mono();
  Mono gm(lm);
  for (auto& e : gm) {
    if (e % 2 != 0) return std::nullopt;
    e /= 2;
  }
  auto lc = rat_sqrt(a.lead_coeff(), a.p);
  if (!lc) return std::nullopt;
  Poly g(a.p, a.nvars);
  g.t.emplace_back(gm, *lc);
  Poly r = a - g * g;
  size_t guard = 4 * (a.t.size() + 2) * (a.t.size() + 2);
  while (!r.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    if (!mono_divides(gm, r.lead_mono())) return std::nullopt;
    Mono tm = mono_div(r.lead_mono(), gm);
    Rat tc = cnorm(r.lead_coeff() * cinv(Rat(2) * (*lc), a.p), a.p);
    Poly term(a.p, a.nvars);
    term.t.emplace_back(tm, tc);
    if (grevlex_cmp(tm, gm) >= 0) return std::nullopt;
    g = g + term;
    r = a - g * g;
  }
  return g;
}

Rat poly_eval(const Poly& a, const std::vector<Rat>& vals) {
  Rat acc(0);
  for (auto& [m, c] : a.t) {
    Rat term = c;
    for (int v = 0; v < a.nvars; ++v) {
      for (int e = 0; e < m[v]; ++e) term *= vals[v];
    }
    acc += term;
  }
  return cnorm(acc, a.p);
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t) {
    Rat cc = c;
    if (first) {
      if (cc < 0) {
        os << "-";
        cc = -cc;
      }
    } else {
      os << (cc < 0 ? " - " : " + ");
      if (cc < 0) cc = -cc;
    }
    first = false;
    bool has_var = mono_deg(m) > 0;
    if (!has_var || cc != 1) {
      os << cc.get_str();
      if (has_var) os << "*";
    }
    bool fv = true;
    for (int v = 0; v < nvars; ++v) {
      if (m[v] == 0) continue;
      if (!fv) os << "*";
      fv = false;
      os << names[v];
      if (m[v] > 1) os << "^" << m[v];
    }
  }
  return os.str();
}

}  // namespace axl
