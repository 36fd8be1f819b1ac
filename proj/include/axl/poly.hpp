#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axl/numbers.hpp"

namespace axl {

// Exponent vector; all polynomials of one field description share nvars.
using Mono = std::vector<int32_t>;

int mono_deg(const Mono& m);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // assumes divisibility
// grevlex: higher total degree first; ties broken by the last nonzero
// entry of a-b being negative.
int grevlex_cmp(const Mono& a, const Mono& b);
int lex_cmp(const Mono& a, const Mono& b);

// Multivariate polynomial over Q (char 0) or F_p, in a fixed number of
// variables. Terms are kept grevlex-descending with nonzero canonical
// coefficients; this makes equality a memberwise comparison.
class Poly {
 public:
  uint32_t p = 0;
  int nvars = 0;
  std::vector<std::pair<Mono, Rat>> t;

  Poly() = default;
  Poly(uint32_t p_, int nvars_) : p(p_), nvars(nvars_) {}
  static Poly constant(uint32_t p, int nvars, const Rat& c);
  static Poly variable(uint32_t p, int nvars, int idx, int exp = 1);

  bool is_zero() const { return t.empty(); }
  bool is_constant() const { return t.empty() || (t.size() == 1 && mono_deg(t[0].first) == 0); }
  Rat constant_value() const { return t.empty() ? Rat(0) : t[0].second; }
  int total_deg() const;
  int deg_in(int var) const;
  const Mono& lead_mono() const { return t.front().first; }
  const Rat& lead_coeff() const { return t.front().second; }

  void normalize();  // sort, merge, canonicalize coefficients, drop zeros

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly mul_term(const Mono& m, const Rat& c) const;
  Poly mul_scalar(const Rat& c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.p == b.p && a.t == b.t; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::vector<std::string>& names) const;
};

int poly_cmp(const Poly& a, const Poly& b);  // total order for canonical sorting

Poly poly_pow(const Poly& a, int e);
Poly poly_derivative(const Poly& a, int var);

// Exact division: returns quotient iff b divides a exactly.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

// GCD via recursive primitive subresultant PRS. The result is unit-normalized:
// monic lead over F_p, integer-primitive with positive lead over Q.
Poly poly_gcd(const Poly& a, const Poly& b);

Poly poly_unit_normalize(const Poly& a);

// Square-free part: a / gcd(a, a') over the main variable chain.
Poly poly_squarefree_part(const Poly& a);

// Exact square root if it exists.
std::optional<Poly> poly_sqrt(const Poly& a);

// Evaluate at rational points (all variables assigned).
Rat poly_eval(const Poly& a, const std::vector<Rat>& vals);

}  // namespace axl
