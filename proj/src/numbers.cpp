#include "axl/numbers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

namespace axl {

namespace {
std::atomic<long long> g_deadline{0};  // steady_clock ns since epoch; 0 = none
}

void set_deadline_ms(long ms_from_now) {
  auto t = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms_from_now);
  g_deadline.store(std::chrono::duration_cast<std::chrono::nanoseconds>(t.time_since_epoch())
                       .count());
}

void clear_deadline() { g_deadline.store(0); }

bool deadline_expired() {
  long long d = g_deadline.load(std::memory_order_relaxed);
  if (d == 0) return false;
  auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                 std::chrono::steady_clock::now().time_since_epoch())
                 .count();
  return now > d;
}

std::optional<Rat> rat_sqrt(const Rat& x, uint32_t p) {
  if (p == 0) {
    if (x < 0) return std::nullopt;
    Int num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rat(rn, rd);
  }
  Rat c = cnorm(x, p);
  Int a = c.get_num();
  // p is a small prime here (towers over F_p at desk scale); brute force.
  if (p > 2000000) return std::nullopt;
  for (uint64_t r = 0; r < p; ++r) {
    if ((Int(r) * Int(r) - a) % Int(p) == 0) return Rat(Int(r));
  }
  return std::nullopt;
}

namespace {

Int pollard_rho(const Int& n) {
  if (n % 2 == 0) return Int(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x9e3779b9UL);
  while (true) {
    Int x = rng.get_z_range(n - 2) + 2;
    Int y = x, c = rng.get_z_range(n - 1) + 1, d(1);
    long iter = 0;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      if (++iter > 2000000) return Int(0);
    }
    if (d != 0 && d != 1 && d != n) return d;
    if (d == 0) return Int(0);
  }
}

bool factor_rec(Int n, std::vector<Int>& out) {
  if (n == 1) return true;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out.push_back(n);
    return true;
  }
  Int d = pollard_rho(n);
  if (d == 0 || d == 1 || d == n) return false;
  return factor_rec(d, out) && factor_rec(n / d, out);
}

}  // namespace

std::optional<std::vector<Int>> factor_int(Int n) {
  std::vector<Int> out;
  if (n < 0) n = -n;
  if (n == 0) return std::nullopt;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % p == 0) {
      out.push_back(Int(p));
      n /= p;
    }
  }
  long d = 17;
  while (Int(d) * d <= n && d < 100000) {
    while (n % d == 0) {
      out.push_back(Int(d));
      n /= d;
    }
    d += 2;
  }
  if (n > 1 && !factor_rec(n, out)) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Int>> divisors_from_factors(const std::vector<Int>& primes, size_t cap) {
  std::vector<Int> divs{Int(1)};
  size_t i = 0;
  while (i < primes.size()) {
    size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    size_t mult = j - i;
    size_t base = divs.size();
    Int pw(1);
    for (size_t e = 1; e <= mult; ++e) {
      pw *= primes[i];
      for (size_t k = 0; k < base; ++k) {
        divs.push_back(divs[k] * pw);
        if (divs.size() > cap) return std::nullopt;
      }
    }
    i = j;
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

}  // namespace axl
