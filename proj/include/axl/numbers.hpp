#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace axl {

using Int = mpz_class;
using Rat = mpq_class;

// Typed error codes; the CLI maps these to exit codes.
enum class Err {
  DivisionByZero,
  MixedFields,
  DenominatorVanishes,
  UnassignedIndeterminate,
  NameClash,
  ZeroSquare,
  ExcludedParameter,
  NotSquare,
  NotAnIdeal,
  NotOrthogonal,
  NotIdempotent,
  NoForm,
  NoIdentity,
  NotGraded,
  NotSemisimple,
  NotJordan,
  DimensionMismatch,
  FieldMismatch,
  NoUniqueRepair,
  SolverIncomplete,
  CorpusParseError,
  AxisOfLengthZero,
  Internal,
};

class AxlError : public std::runtime_error {
 public:
  AxlError(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw AxlError(code, msg); }

// Soft wall-clock deadline for long computations (0 = none). The Groebner
// engine polls this and raises SolverIncomplete when expired; enumeration
// surfaces come back flagged incomplete.
void set_deadline_ms(long ms_from_now);
void clear_deadline();
bool deadline_expired();

// ---- characteristic-aware coefficient helpers -------------------------------
//
// Base coefficients are mpq values. In characteristic p > 0 the canonical
// representative is an integer in [0, p) with denominator 1; arithmetic does
// the plain rational op and re-canonicalizes.

inline Rat cnorm(const Rat& x, uint32_t p) {
  if (p == 0) {
    // two-argument mpq construction does not canonicalize
    Rat y = x;
    y.canonicalize();
    return y;
  }
  Int num = x.get_num(), den = x.get_den();
  Int pz(p);
  num %= pz;
  if (num < 0) num += pz;
  if (den != 1) {
    Int dinv;
    Int dm = den % pz;
    if (dm < 0) dm += pz;
    if (mpz_invert(dinv.get_mpz_t(), dm.get_mpz_t(), pz.get_mpz_t()) == 0)
      fail(Err::DivisionByZero, "denominator not invertible mod " + std::to_string(p));
    num = (num * dinv) % pz;
  }
  return Rat(num);
}

inline Rat cinv(const Rat& x, uint32_t p) {
  if (x == 0) fail(Err::DivisionByZero, "inverse of zero");
  if (p == 0) return Rat(1) / x;
  return cnorm(Rat(x.get_den(), x.get_num()), p);
}

// Square root of a rational, exact; in char p a modular square root (p small).
std::optional<Rat> rat_sqrt(const Rat& x, uint32_t p);

// Factor |n| into primes. Trial division then Pollard-Brent rho; returns
// nullopt if a cofactor resists (practically never at our sizes).
std::optional<std::vector<Int>> factor_int(Int n);

// All positive divisors from a prime factorization, capped (nullopt if more).
std::optional<std::vector<Int>> divisors_from_factors(const std::vector<Int>& primes, size_t cap);

}  // namespace axl
