#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "axl/ideals.hpp"
#include "test_util.hpp"

using namespace axl;
using namespace axl::testutil;

TEST_CASE("check_axis: generic 3A axis is semisimple and primitive, dims (1,1,1,1)") {
  auto d = FieldDesc::make(0, {"alpha", "beta"});
  auto a3 = build_family(
      "3A", d, {{"alpha", FieldElem::generator(d, "alpha")}, {"beta", FieldElem::generator(d, "beta")}});
  AxisReport rep = check_axis(a3.A, a3.A.axes[0], a3.law);
  CHECK(rep.passes());
  CHECK(rep.primitive);
  std::vector<int> dims;
  for (auto& e : rep.eigenspaces) dims.push_back(e.dim());
  CHECK(dims == std::vector<int>{1, 1, 1, 1});
  // A_beta(a0) = <a1 - a_{-1}>
  CHECK(rep.eigenspaces[3].contains(vec_sub(a3.A.axes[1], a3.A.axes[2])));
}

TEST_CASE("1 - a0 in 3A is an M(1-a, 1-b)-axis") {
  auto d = Q();
  auto a3 = build_family("3A", d, P(d, {{"alpha", Rat(2)}, {"beta", Rat(3)}}));
  Vec id = *find_identity(a3.A);
  Vec u = vec_sub(id, a3.A.axes[0]);
  FusionLaw law = monster_law(fe(d, -1), fe(d, -2));
  AxisReport rep = check_axis(a3.A, u, law);
  CHECK(rep.passes());
  // dim A_0(a_0) = 1 here, so the complement axis is primitive (the X(4)
  // analogue is not: its 0-eigenspace is 2-dimensional)
  CHECK(rep.primitive);
  auto a4 = build_family("4A", d, P(d, {{"beta", Rat(3)}}));
  Vec u4 = vec_sub(*find_identity(a4.A), a4.A.axes[0]);
  AxisReport rep4 = check_axis(a4.A, u4, monster_law(fr(d, 3, 4), fe(d, -2)));
  CHECK(rep4.passes());
  CHECK(!rep4.primitive);
}

TEST_CASE("the zero vector is not an axis") {
  auto d = Q();
  auto a3 = build_family("3A", d, P(d, {{"alpha", Rat(2)}, {"beta", Rat(3)}}));
  AxisReport rep = check_axis(a3.A, vec_zero(d, 4), a3.law);
  CHECK(rep.idempotent);
  CHECK(!rep.primitive);
}

TEST_CASE("6A eigenspace dims (1,3,2,2) and the beta-eigenspace from the Lemma") {
  auto d = FieldDesc::make(0, {"alpha"});
  auto a6 = build_family("6A", d, {{"alpha", FieldElem::generator(d, "alpha")}});
  AxisReport rep = check_axis(a6.A, a6.A.axes[0], a6.law);
  CHECK(rep.passes());
  std::vector<int> dims;
  for (auto& e : rep.eigenspaces) dims.push_back(e.dim());
  CHECK(dims == std::vector<int>{1, 3, 2, 2});
  // <a1 - a_{-1}, a2 - a_{-2}>
  CHECK(rep.eigenspaces[3].contains(vec_sub(a6.A.axes[1], a6.A.axes[4])));
  CHECK(rep.eigenspaces[3].contains(vec_sub(a6.A.axes[2], a6.A.axes[5])));
}

TEST_CASE("miyamoto maps are involutive automorphisms; tau0 in 4A swaps a1, a_{-1}") {
  auto d = Q();
  auto a4 = build_family("4A", d, P(d, {{"beta", Rat(3)}}));
  Mat tau = miyamoto(a4.A, a4.A.axes[0], a4.law);
  CHECK(mat_mul(tau, tau) == Mat::identity(d, 5));
  CHECK(is_automorphism(a4.A, tau));
  CHECK(mat_apply(tau, a4.A.axes[1]) == a4.A.axes[3]);  // a1 -> a_{-1}
  CHECK(mat_apply(tau, a4.A.axes[0]) == a4.A.axes[0]);
}

TEST_CASE("tau_w = tau_0 tau_1 in 4J") {
  auto d = Q();
  auto j4 = build_family("4J", d, P(d, {{"beta", Rat(3)}}));
  Mat t0 = miyamoto(j4.A, j4.A.axes[0], j4.law);
  Mat t1 = miyamoto(j4.A, j4.A.axes[1], j4.law);
  // w is an M(4b, 2b)-axis; its involution equals tau0 tau1
  FusionLaw law_w = monster_law(fe(d, 12), fe(d, 6));
  Mat tw = miyamoto(j4.A, j4.named.at("w"), law_w);
  CHECK(tw == mat_mul(t0, t1));
}

TEST_CASE("axet closures and Miyamoto group orders") {
  auto d = Q();
  auto a3 = build_family("3A", d, P(d, {{"alpha", Rat(2)}, {"beta", Rat(3)}}));
  AxetClosure ax3 = axet_closure(a3.A, a3.A.axes, a3.law);
  CHECK(ax3.axes.size() == 3);
  CHECK(ax3.group_order == 6);  // S3
  auto y6 = build_family("6Y", d, {});
  AxetClosure ax6 = axet_closure(y6.A, y6.A.axes, y6.law);
  CHECK(ax6.axes.size() == 6);
  CHECK(ax6.group_order == 6);  // Miy = S3; <Miy, sigma> is the D12 of order 12
  {
    std::vector<Mat> gens = ax6.miyamoto_gens;
    gens.push_back(y6.sigma);
    CHECK(close_group(gens, d, y6.A.n).size() == 12);
  }
  auto a5 = build_family("5A", d, P(d, {{"alpha", Rat(3)}}));
  AxetClosure ax5 = axet_closure(a5.A, a5.A.axes, a5.law);
  CHECK(ax5.axes.size() == 5);
  CHECK(ax5.group_order == 10);
}

TEST_CASE("IY5 axets over F5, F7, F3 bases") {
  for (auto [p, expect] : std::vector<std::pair<uint32_t, size_t>>{{5, 5}, {7, 7}, {3, 9}}) {
    auto d = FieldDesc::make(p, {"alpha"});
    auto iy = build_family("IY5", d, {{"alpha", FieldElem::generator(d, "alpha")}});
    AxetClosure ax = axet_closure(iy.A, {iy.A.axes[0], iy.A.axes[1]}, iy.law, 32, 64);
    CHECK(!ax.axes_capped);
    CHECK(ax.axes.size() == expect);
  }
  // characteristic 0: the axet is infinite, reported via the cap
  auto d0 = FieldDesc::make(0, {"alpha"});
  auto iy0 = build_family("IY5", d0, {{"alpha", FieldElem::generator(d0, "alpha")}});
  AxetClosure ax0 = axet_closure(iy0.A, {iy0.A.axes[0], iy0.A.axes[1]}, iy0.law, 12, 64);
  CHECK(ax0.axes_capped);
}

TEST_CASE("double axes in 4A and 4J with the eigenvalue sum rule") {
  auto d = Q();
  auto a4 = build_family("4A", d, P(d, {{"beta", Rat(3)}}));
  Vec d0 = vec_add(a4.A.axes[0], a4.A.axes[2]);
  DoubleAxisResult r = double_axis(a4.A, a4.A.axes[0], a4.A.axes[2], a4.law);
  CHECK(r.axis == d0);
  CHECK(r.semisimple);
  // Monster type (1/2, 2b): check as an axis for that law
  FusionLaw law = monster_law(fr(d, 1, 2), fe(d, 6));
  AxisReport rep = check_axis(a4.A, d0, law);
  CHECK(rep.passes());
  // sum rule: A_nu(x) = sum over lambda+mu = nu of A_lambda(a) cap A_mu(b)
  Mat ada = a4.A.adjoint(a4.A.axes[0]), adb = a4.A.adjoint(a4.A.axes[2]);
  for (size_t k = 0; k < r.eigenvalues.size(); ++k) {
    Subspace expect;
    expect.d = d;
    expect.ambient = a4.A.n;
    for (auto& l : a4.law.evs)
      for (auto& m : a4.law.evs) {
        if (!(l + m == r.eigenvalues[k])) continue;
        expect = subspace_sum(expect,
                              subspace_intersect(eigenspace(ada, l), eigenspace(adb, m)));
      }
    CHECK(expect == r.eigenspaces[k]);
  }
  // 4J double axis is of Monster type (4b, 2b)
  auto j4 = build_family("4J", d, P(d, {{"beta", Rat(3)}}));
  Vec dj = vec_add(j4.A.axes[0], j4.A.axes[2]);
  CHECK(check_axis(j4.A, dj, monster_law(fe(d, 12), fe(d, 6))).passes());
  // non-orthogonal pair raises
  CHECK_THROWS_AS(double_axis(a4.A, a4.A.axes[0], a4.A.axes[1], a4.law), AxlError);
}

TEST_CASE("fusion law of an idempotent: c in 4B is a J(alpha)-axis with tau_c = tau0 tau1") {
  auto d = FieldDesc::make(0, {"alpha"});
  auto b4 = build_family("4B", d, {{"alpha", FieldElem::generator(d, "alpha")}});
  IdempotentLaw r = fusion_law_of_idempotent(b4.A, b4.named.at("c"));
  CHECK(r.diagonalizable);
  CHECK(r.classification == "J(" + FieldElem::generator(d, "alpha").str() + ")");
  REQUIRE(r.involution.has_value());
  Mat t0 = miyamoto(b4.A, b4.A.axes[0], b4.law);
  Mat t1 = miyamoto(b4.A, b4.A.axes[1], b4.law);
  CHECK(*r.involution == mat_mul(t0, t1));
}

TEST_CASE("fusion law of the identity is trivial") {
  auto d = Q();
  auto j4 = build_family("4J", d, P(d, {{"beta", Rat(3)}}));
  IdempotentLaw r = fusion_law_of_idempotent(j4.A, *find_identity(j4.A));
  CHECK(r.classification == "trivial");
  CHECK_THROWS_AS(fusion_law_of_idempotent(j4.A, vec_scale(j4.A.axes[0], fe(d, 2))), AxlError);
}

TEST_CASE("1/2 1 + y in 3A obeys the almost-Monster law generically") {
  // at (alpha, beta) = (2, 3): adjoin the table's root rt^2 = -(2a-1)/((3a-b-1)(2ab-a-b-1))
  auto d0 = Q();
  auto dr = adjoin_sqrt(d0, "rt", fr(d0, -1, 4));  // -(3)/((2)(6)) = -1/4 at (2,3)
  auto a3 = build_family("3A", dr, P(dr, {{"alpha", Rat(2)}, {"beta", Rat(3)}}));
  FieldElem rt = FieldElem::generator(dr, "rt");
  FieldElem al = fe(dr, 2), bt = fe(dr, 3);
  // y := (b-a)/(2a-1) rt a0 + rt(a1+a_{-1}) + 2(4ab+a-b-1) rt z / (a(3a^2+3ab-b-1))
  Vec y = vec_add(
      vec_add(vec_scale(a3.A.axes[0], (bt - al) / (fe(dr, 2) * al - fe(dr, 1)) * rt),
              vec_scale(vec_add(a3.A.axes[1], a3.A.axes[2]), rt)),
      vec_scale(a3.named.at("z"),
                fe(dr, 2) * (fe(dr, 4) * al * bt + al - bt - fe(dr, 1)) /
                    (al * (fe(dr, 3) * al * al + fe(dr, 3) * al * bt - bt - fe(dr, 1))) * rt));
  Vec u = vec_add(vec_scale(*find_identity(a3.A), fr(dr, 1, 2)), y);
  CHECK(a3.A.product(u, u) == u);
  IdempotentLaw r = fusion_law_of_idempotent(a3.A, u);
  CHECK(r.diagonalizable);
  CHECK(r.classification.rfind("AM(", 0) == 0);
}

TEST_CASE("axis lengths") {
  auto d = FieldDesc::make(0, {"beta"});
  auto j4 = build_family("4J", d, {{"beta", FieldElem::generator(d, "beta")}});
  FieldElem bt = FieldElem::generator(d, "beta");
  CHECK(axis_length(j4.A, j4.A.axes[0]) == fe(d, 1));
  // length(1) in 4J = 6/(4b+1)
  CHECK(axis_length(j4.A, *find_identity(j4.A)) == fe(d, 6) / (fe(d, 4) * bt + fe(d, 1)));
  // length(1_{B0} - a0) in 6Y = 0
  auto dq = Q();
  auto y6 = build_family("6Y", dq, {});
  Vec b0id = vec_scale(
      vec_add(vec_add(y6.A.basis_vec(0), y6.A.basis_vec(1)), y6.A.basis_vec(2)), fr(dq, 1, 3));
  CHECK(axis_length(y6.A, vec_sub(b0id, y6.A.axes[0])).is_zero());
}

TEST_CASE("ideals are invariant under the Miyamoto group") {
  auto d = Q();
  auto y6 = build_family("6Y", d, {});
  AxetClosure ax = axet_closure(y6.A, y6.A.axes, y6.law);
  IdealSub I = ideal_closure(y6.A, {y6.named.at("d")});
  CHECK(miyamoto_invariant(I.space, ax.miyamoto_gens));
}

TEST_CASE("miyamoto on an ungraded law raises NotGraded") {
  auto d = Q();
  auto a3 = build_family("3A", d, P(d, {{"alpha", Rat(2)}, {"beta", Rat(3)}}));
  FusionLaw law = a3.law;
  law.minus_set = 0;
  CHECK_THROWS_AS(miyamoto(a3.A, a3.A.axes[0], law), AxlError);
}
