#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "axl/poly.hpp"

namespace axl {

// Reduced fraction of polynomials in the transcendentals; denominator monic
// under grevlex, numerator/denominator coprime.
struct RatFunc {
  Poly num, den;

  bool is_zero() const { return num.is_zero(); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num == b.num && a.den == b.den;
  }
};

class FieldDesc;
using DescP = std::shared_ptr<const FieldDesc>;

// Exact coefficient field: characteristic 0 or p, a rational function field in
// named transcendentals, and a tower of quadratic extensions (each adjoined
// root given by its square in the field below).
class FieldDesc : public std::enable_shared_from_this<FieldDesc> {
 public:
  uint32_t p = 0;
  std::vector<std::string> trans;
  struct Ext {
    std::string name;
    std::vector<RatFunc> square;  // element of the subfield: 2^level components
  };
  std::vector<Ext> exts;

  int nvars() const { return (int)trans.size(); }
  size_t ncomp() const { return size_t(1) << exts.size(); }
  int trans_index(const std::string& name) const;

  static DescP make(uint32_t p, std::vector<std::string> trans);
};

class FieldElem {
 public:
  DescP d;
  std::vector<RatFunc> c;  // indexed by squarefree root subsets (bitmask)

  FieldElem() = default;

  static FieldElem zero(const DescP& d);
  static FieldElem one(const DescP& d);
  static FieldElem from_rat(const DescP& d, const Rat& r);
  static FieldElem from_int(const DescP& d, long n) { return from_rat(d, Rat(n)); }
  static FieldElem generator(const DescP& d, const std::string& name);  // transcendental or root

  bool is_zero() const;
  bool is_rational() const;              // lies in the prime field / constants
  std::optional<Rat> as_rational() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem inv() const;
  FieldElem pow(long e) const;
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  std::string str() const;
};

int fe_cmp(const FieldElem& a, const FieldElem& b);  // total order (canonical forms)

struct FeLess {
  bool operator()(const FieldElem& a, const FieldElem& b) const { return fe_cmp(a, b) < 0; }
};

// field_arith with explicit op tag (spec surface; operators above are the
// idiomatic form).
enum class FieldOp { Add, Sub, Mul, Div };
FieldElem field_arith(const FieldElem& a, const FieldElem& b, FieldOp op);

// Adjoin a square root: new description, one more extension level.
DescP adjoin_sqrt(const DescP& d, const std::string& name, const FieldElem& square);

// Embed an element into a description extending its own (same char, same
// transcendentals, old extensions a prefix of the new ones).
FieldElem embed(const FieldElem& x, const DescP& bigger);
bool desc_extends(const DescP& big, const DescP& small);

// Evaluation homomorphism: every transcendental assigned a value in the target
// description's base; extensions are re-based over the specialized subfield.
// target_exts names must match x's; returns element of the returned desc.
struct Specialized {
  DescP desc;
  FieldElem value;
};
Specialized specialize(const FieldElem& x, const std::map<std::string, FieldElem>& assign,
                       const DescP& target_base);

// Exact square root within the field (tower-aware); nullopt if none exists.
std::optional<FieldElem> try_sqrt(const FieldElem& v);

// Expression text <-> elements. Symbols resolve via `syms` first, then the
// description's own transcendentals and roots.
FieldElem parse_expr(const DescP& d, const std::string& text,
                     const std::map<std::string, FieldElem>& syms = {});

}  // namespace axl
