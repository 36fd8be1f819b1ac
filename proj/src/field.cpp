#include "axl/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace axl {

namespace {

RatFunc rf_zero(uint32_t p, int nv) { return RatFunc{Poly(p, nv), Poly::constant(p, nv, Rat(1))}; }
RatFunc rf_const(uint32_t p, int nv, const Rat& r) {
  return RatFunc{Poly::constant(p, nv, r), Poly::constant(p, nv, Rat(1))};
}

RatFunc rf_reduce(Poly num, Poly den) {
  if (den.is_zero()) fail(Err::DivisionByZero, "zero denominator");
  if (num.is_zero()) return rf_zero(num.p, num.nvars);
  if (!den.is_constant()) {
    Poly g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = *poly_divide_exact(num, g);
      den = *poly_divide_exact(den, g);
    }
  }
  // denominator monic under grevlex
  Rat lc = den.lead_coeff();
  if (lc != 1) {
    Rat inv = cinv(lc, den.p);
    num = num.mul_scalar(inv);
    den = den.mul_scalar(inv);
  }
  return RatFunc{std::move(num), std::move(den)};
}

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  return rf_reduce(a.num * b.den + b.num * a.den, a.den * b.den);
}
RatFunc rf_sub(const RatFunc& a, const RatFunc& b) {
  return rf_reduce(a.num * b.den - b.num * a.den, a.den * b.den);
}
RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  return rf_reduce(a.num * b.num, a.den * b.den);
}
RatFunc rf_neg(const RatFunc& a) { return RatFunc{-a.num, a.den}; }
RatFunc rf_inv(const RatFunc& a) {
  if (a.is_zero()) fail(Err::DivisionByZero, "division by zero");
  return rf_reduce(a.den, a.num);
}

using Span = std::vector<RatFunc>;

Span span_zero(uint32_t p, int nv, size_t n) { return Span(n, rf_zero(p, nv)); }

Span span_add(const Span& a, const Span& b) {
  Span r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = rf_add(a[i], b[i]);
  return r;
}
Span span_sub(const Span& a, const Span& b) {
  Span r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = rf_sub(a[i], b[i]);
  return r;
}
Span span_neg(const Span& a) {
  Span r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = rf_neg(a[i]);
  return r;
}
bool span_is_zero(const Span& a) {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Span slice(const Span& a, size_t from, size_t len) {
  return Span(a.begin() + from, a.begin() + from + len);
}
Span join(Span lo, const Span& hi) {
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

// Multiplication at tower level m (span size 2^m); squares[i] is the defining
// square of extension i as a span of size 2^i.
Span span_mul(const Span& a, const Span& b, const std::vector<Span>& squares, int level) {
  if (level == 0) return Span{rf_mul(a[0], b[0])};
  size_t h = a.size() / 2;
  Span a0 = slice(a, 0, h), a1 = slice(a, h, h);
  Span b0 = slice(b, 0, h), b1 = slice(b, h, h);
  Span lo = span_add(span_mul(a0, b0, squares, level - 1),
                     span_mul(span_mul(a1, b1, squares, level - 1), squares[level - 1], squares,
                              level - 1));
  Span hi = span_add(span_mul(a0, b1, squares, level - 1), span_mul(a1, b0, squares, level - 1));
  return join(std::move(lo), hi);
}

Span span_inv(const Span& a, const std::vector<Span>& squares, int level) {
  if (level == 0) return Span{rf_inv(a[0])};
  size_t h = a.size() / 2;
  Span a0 = slice(a, 0, h), a1 = slice(a, h, h);
  Span norm =
      span_sub(span_mul(a0, a0, squares, level - 1),
               span_mul(span_mul(a1, a1, squares, level - 1), squares[level - 1], squares, level - 1));
  if (span_is_zero(norm)) {
    if (span_is_zero(a)) fail(Err::DivisionByZero, "division by zero");
    fail(Err::DivisionByZero, "non-invertible element: adjoined square is a square in the base");
  }
  Span ninv = span_inv(norm, squares, level - 1);
  Span lo = span_mul(a0, ninv, squares, level - 1);
  Span hi = span_neg(span_mul(a1, ninv, squares, level - 1));
  return join(std::move(lo), hi);
}

std::vector<Span> squares_of(const FieldDesc& d) {
  std::vector<Span> sq;
  sq.reserve(d.exts.size());
  for (auto& e : d.exts) sq.push_back(e.square);
  return sq;
}

void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.d.get() == b.d.get()) return;
  // Structurally equal descriptions are also fine.
  const FieldDesc &x = *a.d, &y = *b.d;
  if (x.p != y.p || x.trans != y.trans || x.exts.size() != y.exts.size())
    fail(Err::MixedFields, "operands live in different fields");
  for (size_t i = 0; i < x.exts.size(); ++i)
    if (x.exts[i].name != y.exts[i].name || !(x.exts[i].square == y.exts[i].square))
      fail(Err::MixedFields, "operands live in different fields");
}

}  // namespace

int FieldDesc::trans_index(const std::string& name) const {
  for (size_t i = 0; i < trans.size(); ++i)
    if (trans[i] == name) return (int)i;
  return -1;
}

DescP FieldDesc::make(uint32_t p, std::vector<std::string> trans) {
  if (p == 2) fail(Err::ExcludedParameter, "characteristic 2 is excluded");
  if (p != 0) {
    Int pz(p);
    if (mpz_probab_prime_p(pz.get_mpz_t(), 30) == 0)
      fail(Err::ExcludedParameter, "characteristic must be 0 or prime");
  }
  for (size_t i = 0; i < trans.size(); ++i)
    for (size_t j = i + 1; j < trans.size(); ++j)
      if (trans[i] == trans[j]) fail(Err::NameClash, "duplicate indeterminate " + trans[i]);
  auto d = std::make_shared<FieldDesc>();
  d->p = p;
  d->trans = std::move(trans);
  return d;
}

FieldElem FieldElem::zero(const DescP& d) {
  FieldElem e;
  e.d = d;
  e.c = span_zero(d->p, d->nvars(), d->ncomp());
  return e;
}

FieldElem FieldElem::one(const DescP& d) { return from_rat(d, Rat(1)); }

FieldElem FieldElem::from_rat(const DescP& d, const Rat& r) {
  FieldElem e = zero(d);
  e.c[0] = rf_const(d->p, d->nvars(), r);
  return e;
}

FieldElem FieldElem::generator(const DescP& d, const std::string& name) {
  int ti = d->trans_index(name);
  if (ti >= 0) {
    FieldElem e = zero(d);
    e.c[0] = RatFunc{Poly::variable(d->p, d->nvars(), ti),
                     Poly::constant(d->p, d->nvars(), Rat(1))};
    return e;
  }
  for (size_t i = 0; i < d->exts.size(); ++i) {
    if (d->exts[i].name == name) {
      FieldElem e = zero(d);
      e.c[size_t(1) << i] = rf_const(d->p, d->nvars(), Rat(1));
      return e;
    }
  }
  fail(Err::UnassignedIndeterminate, "unknown symbol " + name);
}

bool FieldElem::is_zero() const { return span_is_zero(c); }

bool FieldElem::is_rational() const {
  for (size_t i = 1; i < c.size(); ++i)
    if (!c[i].is_zero()) return false;
  return c[0].num.is_constant() && c[0].den.is_constant();
}

std::optional<Rat> FieldElem::as_rational() const {
  if (!is_rational()) return std::nullopt;
  if (c[0].num.is_zero()) return Rat(0);
  return cnorm(c[0].num.constant_value() / c[0].den.constant_value(), d->p);
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  FieldElem r;
  r.d = a.d;
  r.c = span_add(a.c, b.c);
  return r;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  FieldElem r;
  r.d = a.d;
  r.c = span_sub(a.c, b.c);
  return r;
}

FieldElem operator-(const FieldElem& a) {
  FieldElem r;
  r.d = a.d;
  r.c = span_neg(a.c);
  return r;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  FieldElem r;
  r.d = a.d;
  r.c = span_mul(a.c, b.c, squares_of(*a.d), (int)a.d->exts.size());
  return r;
}

FieldElem FieldElem::inv() const {
  FieldElem r;
  r.d = d;
  r.c = span_inv(c, squares_of(*d), (int)d->exts.size());
  return r;
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return a * b.inv();
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElem r = FieldElem::one(d);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  check_same(a, b);
  return a.c == b.c;
}

int fe_cmp(const FieldElem& a, const FieldElem& b) {
  for (size_t i = 0; i < a.c.size(); ++i) {
    int cn = poly_cmp(a.c[i].num, b.c[i].num);
    if (cn != 0) return cn;
    int cd = poly_cmp(a.c[i].den, b.c[i].den);
    if (cd != 0) return cd;
  }
  return 0;
}

FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  fail(Err::Internal, "bad op");
}

DescP adjoin_sqrt(const DescP& d, const std::string& name, const FieldElem& square) {
  if (square.is_zero()) fail(Err::ZeroSquare, "adjoined square must be nonzero");
  if (d->trans_index(name) >= 0) fail(Err::NameClash, "name in use: " + name);
  for (auto& e : d->exts)
    if (e.name == name) fail(Err::NameClash, "name in use: " + name);
  if (square.d.get() != d.get()) check_same(square, FieldElem::zero(d));
  auto nd = std::make_shared<FieldDesc>(*d);
  FieldDesc::Ext ext;
  ext.name = name;
  ext.square = square.c;
  nd->exts.push_back(std::move(ext));
  return nd;
}

bool desc_extends(const DescP& big, const DescP& small) {
  if (big->p != small->p || big->trans != small->trans) return false;
  if (big->exts.size() < small->exts.size()) return false;
  for (size_t i = 0; i < small->exts.size(); ++i) {
    if (big->exts[i].name != small->exts[i].name) return false;
    if (big->exts[i].square.size() != small->exts[i].square.size()) return false;
    if (!(std::equal(big->exts[i].square.begin(), big->exts[i].square.end(),
                     small->exts[i].square.begin(),
                     [](const RatFunc& a, const RatFunc& b) { return a == b; })))
      return false;
  }
  return true;
}

FieldElem embed(const FieldElem& x, const DescP& bigger) {
  if (!desc_extends(bigger, x.d)) fail(Err::MixedFields, "embed: target does not extend source");
  FieldElem r = FieldElem::zero(bigger);
  for (size_t i = 0; i < x.c.size(); ++i) r.c[i] = x.c[i];
  return r;
}

Specialized specialize(const FieldElem& x, const std::map<std::string, FieldElem>& assign,
                       const DescP& target_base) {
  const FieldDesc& sd = *x.d;
  if (target_base->p != sd.p) fail(Err::MixedFields, "specialize: characteristic mismatch");
  std::vector<FieldElem> vals;
  for (auto& t : sd.trans) {
    auto it = assign.find(t);
    if (it == assign.end()) fail(Err::UnassignedIndeterminate, "unassigned indeterminate " + t);
    vals.push_back(it->second);
  }
  // Rebuild the tower over the specialized base.
  DescP cur = target_base;
  std::vector<DescP> levels{cur};
  auto eval_poly = [&](const Poly& po, const DescP& dd) {
    FieldElem acc = FieldElem::zero(dd);
    for (auto& [m, co] : po.t) {
      FieldElem term = FieldElem::from_rat(dd, co);
      for (int v = 0; v < po.nvars; ++v)
        for (int e = 0; e < m[v]; ++e) term = term * embed(vals[v], dd);
      acc = acc + term;
    }
    return acc;
  };
  auto eval_rf = [&](const RatFunc& rf, const DescP& dd) {
    FieldElem den = eval_poly(rf.den, dd);
    if (den.is_zero()) fail(Err::DenominatorVanishes, "denominator vanishes under specialization");
    return eval_poly(rf.num, dd) / den;
  };
  for (size_t i = 0; i < sd.exts.size(); ++i) {
    // the square lives at level i: components over roots 0..i-1
    FieldElem sq = FieldElem::zero(cur);
    for (size_t s = 0; s < sd.exts[i].square.size(); ++s) {
      if (sd.exts[i].square[s].is_zero()) continue;
      FieldElem part = eval_rf(sd.exts[i].square[s], levels[0]);
      part = embed(part, cur);
      // multiply by the product of roots in subset s
      for (size_t b = 0; b < i; ++b)
        if (s & (size_t(1) << b)) part = part * FieldElem::generator(cur, sd.exts[b].name);
      sq = sq + part;
    }
    if (sq.is_zero()) fail(Err::ZeroSquare, "adjoined square vanishes under specialization");
    cur = adjoin_sqrt(cur, sd.exts[i].name, sq);
    levels.push_back(cur);
  }
  FieldElem out = FieldElem::zero(cur);
  for (size_t s = 0; s < x.c.size(); ++s) {
    if (x.c[s].is_zero()) continue;
    FieldElem part = embed(eval_rf(x.c[s], levels[0]), cur);
    for (size_t b = 0; b < sd.exts.size(); ++b)
      if (s & (size_t(1) << b)) part = part * FieldElem::generator(cur, sd.exts[b].name);
    out = out + part;
  }
  return Specialized{cur, out};
}

namespace {

std::optional<Span> span_sqrt(const Span& v, const std::vector<Span>& squares, int level);

std::optional<RatFunc> rf_sqrt(const RatFunc& a) {
  auto n = poly_sqrt(a.num);
  if (!n) return std::nullopt;
  auto d = poly_sqrt(a.den);
  if (!d) return std::nullopt;
  return rf_reduce(*n, *d);
}

std::optional<Span> span_sqrt(const Span& v, const std::vector<Span>& squares, int level) {
  if (level == 0) {
    auto r = rf_sqrt(v[0]);
    if (!r) return std::nullopt;
    return Span{*r};
  }
  size_t h = v.size() / 2;
  Span a = slice(v, 0, h), b = slice(v, h, h);
  const Span& s = squares[level - 1];
  uint32_t p = v[0].num.p;
  int nv = v[0].num.nvars;
  if (span_is_zero(b)) {
    if (auto r = span_sqrt(a, squares, level - 1)) return join(std::move(*r), span_zero(p, nv, h));
    // maybe sqrt = w * root: w^2 * s = a
    if (!span_is_zero(a)) {
      Span t = span_mul(a, span_inv(s, squares, level - 1), squares, level - 1);
      if (auto w = span_sqrt(t, squares, level - 1)) return join(span_zero(p, nv, h), *w);
    } else {
      return Span(v);  // zero
    }
    return std::nullopt;
  }
  // x = (al, be): al^2 + be^2 s = a, 2 al be = b. al^2 and be^2 s are roots of
  // z^2 - a z + s (b/2)^2.
  Span half_b = b;
  for (auto& q : half_b) q = rf_mul(q, rf_const(p, nv, Rat(1, 2)));
  Span prod = span_mul(span_mul(half_b, half_b, squares, level - 1), s, squares, level - 1);
  Span disc = span_sub(span_mul(a, a, squares, level - 1),
                       [&] {
                         Span f = prod;
                         for (auto& q : f) q = rf_mul(q, rf_const(p, nv, Rat(4)));
                         return f;
                       }());
  auto dr = span_sqrt(disc, squares, level - 1);
  if (!dr) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    Span z = sign == 0 ? span_add(a, *dr) : span_sub(a, *dr);
    for (auto& q : z) q = rf_mul(q, rf_const(p, nv, Rat(1, 2)));
    if (span_is_zero(z)) continue;
    auto al = span_sqrt(z, squares, level - 1);
    if (!al) continue;
    Span be = span_mul(half_b, span_inv(*al, squares, level - 1), squares, level - 1);
    // verify be^2 s == a - z
    Span chk = span_mul(span_mul(be, be, squares, level - 1), s, squares, level - 1);
    if (span_is_zero(span_sub(chk, span_sub(a, z)))) return join(std::move(*al), be);
  }
  return std::nullopt;
}

}  // namespace

std::optional<FieldElem> try_sqrt(const FieldElem& v) {
  auto r = span_sqrt(v.c, squares_of(*v.d), (int)v.d->exts.size());
  if (!r) return std::nullopt;
  FieldElem out;
  out.d = v.d;
  out.c = std::move(*r);
  // paranoia: exactness check
  if (!(out * out == v)) return std::nullopt;
  return out;
}

std::string FieldElem::str() const {
  const FieldDesc& dd = *d;
  auto rf_str = [&](const RatFunc& rf) {
    std::string n = rf.num.str(dd.trans);
    if (rf.den.is_constant() && rf.den.constant_value() == 1) {
      return rf.num.t.size() > 1 ? "(" + n + ")" : n;
    }
    return "(" + n + ")/(" + rf.den.str(dd.trans) + ")";
  };
  std::ostringstream os;
  bool first = true;
  for (size_t s = 0; s < c.size(); ++s) {
    if (c[s].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << rf_str(c[s]);
    for (size_t b = 0; b < dd.exts.size(); ++b)
      if (s & (size_t(1) << b)) os << "*" << dd.exts[b].name;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace axl
