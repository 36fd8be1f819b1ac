#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axl/univar.hpp"

namespace axl {

enum class TermOrder { Grevlex, Lex, Elim1 };  // Elim1: variable 0 dominates, grevlex on the rest

int term_cmp(const Mono& a, const Mono& b, TermOrder ord);

// Multivariate polynomial over a FieldElem coefficient field; terms kept
// sorted descending in the carried order.
struct FPoly {
  DescP d;
  int nv = 0;
  TermOrder ord = TermOrder::Grevlex;
  std::vector<std::pair<Mono, FieldElem>> t;

  bool is_zero() const { return t.empty(); }
  const Mono& lm() const { return t.front().first; }
  const FieldElem& lc() const { return t.front().second; }
  void normalize();
  friend bool operator==(const FPoly& a, const FPoly& b) { return a.t == b.t; }
};

FPoly fp_const(const DescP& d, int nv, TermOrder ord, const FieldElem& c);
FPoly fp_var(const DescP& d, int nv, TermOrder ord, int idx);
FPoly fp_add(const FPoly& a, const FPoly& b);
FPoly fp_sub(const FPoly& a, const FPoly& b);
FPoly fp_mul(const FPoly& a, const FPoly& b);
FPoly fp_scale(const FPoly& a, const FieldElem& c);
FPoly fp_mul_term(const FPoly& a, const Mono& m, const FieldElem& c);
FPoly fp_monic(const FPoly& a);
FPoly fp_reorder(const FPoly& a, TermOrder ord);
FieldElem fp_eval(const FPoly& a, const std::vector<FieldElem>& vals);
FPoly fp_embed(const FPoly& a, const DescP& d);
// substitute variable `var` by a value; the result drops to nv-1 variables
FPoly fp_substitute(const FPoly& a, int var, const FieldElem& value);
std::string fp_str(const FPoly& a, const std::vector<std::string>& vars);

// Normal form of f modulo the (not necessarily reduced) basis G.
FPoly normal_form(const FPoly& f, const std::vector<FPoly>& G);

struct PolyIdeal {
  DescP d;
  int nv = 0;
  std::vector<std::string> vars;
  TermOrder ord = TermOrder::Grevlex;
  std::vector<FPoly> gens;
  std::optional<std::vector<FPoly>> gb;
};

// Buchberger with product/chain pair elimination; caches a reduced GB.
void groebner(PolyIdeal& I);
bool gb_contains_one(const PolyIdeal& I);
bool is_zero_dimensional(PolyIdeal& I);
// standard monomial basis of the quotient (requires zero-dimensionality)
std::vector<Mono> quotient_basis(PolyIdeal& I, size_t cap = 4096);

// I : f^infinity via Rabinowitsch elimination.
PolyIdeal saturate(const PolyIdeal& I, const FPoly& f);
PolyIdeal ideal_plus(const PolyIdeal& I, const FPoly& f);

struct DimensionSplit {
  std::vector<PolyIdeal> zero_dim_parts;
  std::vector<PolyIdeal> positive_parts;  // undecomposed or genuinely positive
};
// Recursive exact split V(I) = V(I : L^inf) u V(I + L) along the supplied
// polynomials; parts that stay positive-dimensional are returned as such.
DimensionSplit dimension_split(const PolyIdeal& I, const std::vector<FPoly>& split_polys);

struct SolutionSet {
  DescP desc;                              // final (possibly extended) field
  std::vector<std::vector<FieldElem>> points;
  bool complete = true;
  std::vector<UPoly> unsolved_minpolys;    // witnesses for missed branches
};

// Solve a zero-dimensional system exactly; adjoins square roots up to
// `adjoin_budget` levels when coordinates need them.
SolutionSet solve_zero_dim(PolyIdeal I, int adjoin_budget);

}  // namespace axl
