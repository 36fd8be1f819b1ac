#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_util.hpp"

using namespace axl;
using namespace axl::testutil;

namespace {

Vec random_vec(const Algebra& A, std::mt19937& rng) {
  Vec v;
  for (int i = 0; i < A.n; ++i) v.push_back(random_fe(A.d, rng));
  return v;
}

}  // namespace

TEST_CASE("basis products from the tables") {
  auto d = Q();
  // 2B: a*b = 0
  auto b2 = build_family("2B", d, {});
  CHECK(vec_is_zero(b2.A.product(b2.A.axes[0], b2.A.axes[1])));
  // 4A: a0 * a2 = 0
  auto a4 = build_family("4A", d, P(d, {{"beta", Rat(2)}}));
  CHECK(vec_is_zero(a4.A.product(a4.A.axes[0], a4.A.axes[2])));
  // 3A: a0 a1 = (a+b)/2 (a0+a1) + (a-b)/2 a_{-1} + z
  auto da = FieldDesc::make(0, {"alpha", "beta"});
  auto a3 = build_family(
      "3A", da, {{"alpha", FieldElem::generator(da, "alpha")}, {"beta", FieldElem::generator(da, "beta")}});
  FieldElem al = FieldElem::generator(da, "alpha"), bt = FieldElem::generator(da, "beta");
  Vec expect = vec_add(
      vec_add(vec_scale(vec_add(a3.A.axes[0], a3.A.axes[1]), (al + bt) / fe(da, 2)),
              vec_scale(a3.A.axes[2], (al - bt) / fe(da, 2))),
      a3.named.at("z"));
  CHECK(a3.A.product(a3.A.axes[0], a3.A.axes[1]) == expect);
}

TEST_CASE("adjoint of z in 3A acts as a scalar on the whole algebra") {
  auto da = FieldDesc::make(0, {"alpha", "beta"});
  FieldElem al = FieldElem::generator(da, "alpha"), bt = FieldElem::generator(da, "beta");
  auto a3 = build_family("3A", da, {{"alpha", al}, {"beta", bt}});
  FieldElem lam = -al * (fe(da, 3) * al * al + fe(da, 3) * al * bt - bt - fe(da, 1)) /
                  (fe(da, 4) * (fe(da, 2) * al - fe(da, 1)));
  Mat ad = a3.A.adjoint(a3.named.at("z"));
  CHECK(ad == mat_scale(Mat::identity(da, 4), lam));
  CHECK(mat_is_zero(a3.A.adjoint(vec_zero(da, 4))));
}

TEST_CASE("adjoint of a0 in 4J has eigenvalues {1,0,2b,b} with dims (1,2,1,1)") {
  auto d = Q();
  auto j4 = build_family("4J", d, P(d, {{"beta", Rat(3)}}));
  Mat ad = j4.A.adjoint(j4.A.axes[0]);
  CHECK(eigenspace(ad, fe(d, 1)).dim() == 1);
  CHECK(eigenspace(ad, fe(d, 0)).dim() == 2);
  CHECK(eigenspace(ad, fe(d, 6)).dim() == 1);
  CHECK(eigenspace(ad, fe(d, 3)).dim() == 1);
}

TEST_CASE("subalgebra closure examples") {
  auto d = Q();
  // <<a0, a2>> in 4B is the 3-dimensional 3C(alpha), containing c
  auto b4 = build_family("4B", d, P(d, {{"alpha", Rat(3)}}));
  IdealSub s = subalgebra_closure(b4.A, {b4.A.axes[0], b4.A.axes[2]});
  CHECK(s.space.dim() == 3);
  CHECK(s.space.contains(b4.named.at("c")));
  // closure of a single idempotent generator is its span
  IdealSub s1 = subalgebra_closure(b4.A, {b4.A.axes[0]});
  CHECK(s1.space.dim() == 1);
  // <<d0, d1>> in 4A is <d0, d1, e>
  auto a4 = build_family("4A", d, P(d, {{"beta", Rat(3)}}));
  Vec d0 = vec_add(a4.A.axes[0], a4.A.axes[2]);
  Vec d1 = vec_add(a4.A.axes[1], a4.A.axes[3]);
  IdealSub s2 = subalgebra_closure(a4.A, {d0, d1});
  CHECK(s2.space.dim() == 3);
  CHECK(s2.space.contains(a4.named.at("e")));
}

TEST_CASE("ideal closure examples from IY5") {
  auto da = FieldDesc::make(0, {"alpha"});
  auto iy = build_family("IY5", da, {{"alpha", FieldElem::generator(da, "alpha")}});
  // (u3) = <u3, u4>
  IdealSub i3 = ideal_closure(iy.A, {iy.named.at("u3")});
  CHECK(i3.space.dim() == 2);
  CHECK(i3.space.contains(iy.named.at("u4")));
  // (u1) = R, which is 5-dimensional
  IdealSub i1 = ideal_closure(iy.A, {iy.named.at("u1")});
  CHECK(i1.space.dim() == 5);
  CHECK(ideal_closure(iy.A, {vec_zero(da, 6)}).space.dim() == 0);
  CHECK(is_ideal(iy.A, i1.space));
}

TEST_CASE("identity examples") {
  auto d = Q();
  // 4A: 1 = 8/(2b-1) e
  auto a4 = build_family("4A", d, P(d, {{"beta", Rat(3)}}));
  auto id = find_identity(a4.A);
  REQUIRE(id.has_value());
  CHECK(*id == vec_scale(a4.named.at("e"), fr(d, 8, 5)));
  // 6Y has no identity
  CHECK(!find_identity(build_family("6Y", d, {}).A).has_value());
  // 2B: identity a + b
  auto b2 = build_family("2B", d, {});
  CHECK(*find_identity(b2.A) == vec_add(b2.A.axes[0], b2.A.axes[1]));
}

TEST_CASE("annihilator examples") {
  auto d = Q();
  auto y6 = build_family("6Y", d, {});
  Subspace ann = annihilator(y6.A);
  CHECK(ann.dim() == 1);
  CHECK(ann.contains(y6.named.at("z")));
  auto da = FieldDesc::make(0, {"alpha"});
  auto iy = build_family("IY5", da, {{"alpha", FieldElem::generator(da, "alpha")}});
  Subspace ann5 = annihilator(iy.A);
  CHECK(ann5.dim() == 1);
  CHECK(ann5.contains(iy.named.at("u4")));
  // 3A with 3a^2+3ab-b-1 != 0 has trivial annihilator
  auto a3 = build_family("3A", d, P(d, {{"alpha", Rat(2)}, {"beta", Rat(3)}}));
  CHECK(annihilator(a3.A).dim() == 0);
}

TEST_CASE("quotient: A/0 = A and projection is a homomorphism") {
  auto d = Q();
  auto a3 = build_family("3A", d, P(d, {{"alpha", Rat(2)}, {"beta", Rat(3)}}));
  IdealSub zero{Subspace{d, a3.A.n, {}}, IdealSub::Flag::Ideal};
  Quotient q = quotient(a3.A, zero);
  CHECK(q.algebra.n == a3.A.n);
  for (size_t i = 0; i < a3.A.sc.size(); ++i) CHECK(q.algebra.sc[i] == a3.A.sc[i]);
  std::mt19937 rng(3);
  // pi(xy) = pi(x) pi(y) for a real ideal: 4A at beta = 1/2, ideal <e>
  auto a4 = build_family("4A", d, P(d, {{"beta", Rat(1, 2)}}));
  IdealSub I = ideal_closure(a4.A, {a4.named.at("e")});
  CHECK(I.space.dim() == 1);
  Quotient q2 = quotient(a4.A, I);
  CHECK(q2.algebra.n == 4);
  for (int t = 0; t < 20; ++t) {
    Vec x = random_vec(a4.A, rng), y = random_vec(a4.A, rng);
    CHECK(mat_apply(q2.projection, a4.A.product(x, y)) ==
          q2.algebra.product(mat_apply(q2.projection, x), mat_apply(q2.projection, y)));
  }
  // quotient by a non-ideal throws
  IdealSub bad{subspace_from_rows(d, 5, {a4.A.axes[0]}), IdealSub::Flag::Ideal};
  CHECK_THROWS_AS(quotient(a4.A, bad), AxlError);
}

TEST_CASE("4A(1/4,1/2)/radical is a 3-dimensional algebra with identity") {
  auto d = Q();
  auto a4 = build_family("4A", d, P(d, {{"beta", Rat(1, 2)}}));
  Subspace R = kernel(*a4.A.form);
  CHECK(R.dim() == 2);
  Quotient q = quotient(a4.A, {R, IdealSub::Flag::Ideal});
  CHECK(q.algebra.n == 3);
  CHECK(find_identity(q.algebra).has_value());
}

TEST_CASE("ideal closure output is invariant under random multipliers") {
  auto d = Q();
  auto y6 = build_family("6Y", d, {});
  IdealSub I = ideal_closure(y6.A, {y6.named.at("d")});
  std::mt19937 rng(8);
  for (int t = 0; t < 20; ++t) {
    Vec x = random_vec(y6.A, rng);
    for (auto& b : I.space.basis) CHECK(I.space.contains(y6.A.product(x, b)));
  }
}

TEST_CASE("identity, when present, fixes random elements") {
  auto d = Q();
  auto j4 = build_family("4J", d, P(d, {{"beta", Rat(3)}}));
  Vec id = *find_identity(j4.A);
  std::mt19937 rng(12);
  for (int t = 0; t < 20; ++t) {
    Vec x = random_vec(j4.A, rng);
    CHECK(j4.A.product(id, x) == x);
  }
}

TEST_CASE("Frobenius property holds on all basis triples for catalog algebras") {
  auto d = Q();
  for (auto& [fam, ps] : std::vector<std::pair<std::string, std::map<std::string, FieldElem>>>{
           {"5A", P(d, {{"alpha", Rat(3)}})}, {"6J", P(d, {{"beta", Rat(3)}})}}) {
    auto br = build_family(fam, d, ps);
    CHECK(validate(br).frobenius);
  }
}

TEST_CASE("dimension mismatch raises typed errors") {
  auto d = Q();
  auto b2 = build_family("2B", d, {});
  CHECK_THROWS_AS(b2.A.product(Vec{fe(d, 1)}, b2.A.axes[0]), AxlError);
}
