// Compares the OpenMP row-parallel exact linear algebra kernels against the
// serial reference implementations on catalog-shaped workloads.

#include <chrono>
#include <iostream>
#include <random>

#include "axl/catalog.hpp"

using namespace axl;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Mat random_rational_matrix(const DescP& d, int n, std::mt19937& rng, int digits) {
  std::uniform_int_distribution<long> num(-(1L << digits), 1L << digits);
  std::uniform_int_distribution<long> den(1, 1L << (digits / 2));
  Mat m(d, n, n);
  for (auto& e : m.a) e = FieldElem::from_rat(d, Rat(num(rng), den(rng)));
  return m;
}

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

}  // namespace

int main() {
  auto Q = FieldDesc::make(0, {});
  std::mt19937 rng(20240611);

  std::cout << "kernel, n, serial_ms, parallel_ms, speedup\n";

  for (int n : {8, 12, 16, 24}) {
    Mat m = random_rational_matrix(Q, n, rng, 18);
    Mat m1 = m, m2 = m;
    double ts = time_best_of(3, [&] {
      Mat c = m1;
      rref_serial(c);
    });
    double tp = time_best_of(3, [&] {
      Mat c = m2;
      rref(c);
    });
    std::cout << "rref, " << n << ", " << ts << ", " << tp << ", " << ts / tp << "\n";

    double ds = time_best_of(3, [&] { det_serial(m); });
    double dp = time_best_of(3, [&] { det(m); });
    std::cout << "bareiss_det, " << n << ", " << ds << ", " << dp << ", " << ds / dp << "\n";

    if (n <= 16) {
      double cs = time_best_of(2, [&] { charpoly_serial(m); });
      double cp = time_best_of(2, [&] { charpoly(m); });
      std::cout << "berkowitz, " << n << ", " << cs << ", " << cp << ", " << cs / cp << "\n";
    }
  }

  // symbolic workload: the 6A Gram matrix over Q(alpha)
  {
    auto Qa = FieldDesc::make(0, {"alpha"});
    auto br = build_family("6A", Qa, {{"alpha", FieldElem::generator(Qa, "alpha")}});
    const Mat& g = *br.A.form;
    double ds = time_best_of(2, [&] { det_serial(g); });
    double dp = time_best_of(2, [&] { det(g); });
    std::cout << "bareiss_det_6A_gram_symbolic, 8, " << ds << ", " << dp << ", " << ds / dp
              << "\n";
    double cs = time_best_of(2, [&] { charpoly_serial(g); });
    double cp = time_best_of(2, [&] { charpoly(g); });
    std::cout << "berkowitz_6A_gram_symbolic, 8, " << cs << ", " << cp << ", " << cs / cp << "\n";
  }
  return 0;
}
