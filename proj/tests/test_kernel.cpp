#include <catch2/catch_amalgamated.hpp>

#include "slicings/kernel.hpp"

using namespace slicings;

namespace {

// Builds c * x^i * v^j.
BiPoly t(long c, int i, int j) {
  PolyX cx(i + 1, Rat(0));
  cx[i] = Rat(c);
  return bp::term(cx, j);
}

}  // namespace

TEST_CASE("polynomial division is exact or throws") {
  // (1 - x)(1 + x) = 1 - x^2.
  CHECK(px::div_exact(PolyX{1, 0, -1}, PolyX{1, -1}) == PolyX{1, 1});
  CHECK_THROWS_AS(px::div_exact(PolyX{1, 1, 1}, PolyX{1, -1}), NonDivisible);
  // (1 - v)(1 + v) = 1 - v^2 with x-free coefficients.
  const BiPoly sq = bp::sub(bp::one(), t(1, 0, 2));
  CHECK(bp::div_exact(sq, bp::one_minus_v()) ==
        bp::add(bp::one(), t(1, 0, 1)));
  CHECK_THROWS_AS(bp::div_exact(bp::add(bp::one(), t(1, 0, 1)),
                                bp::one_minus_v()),
                  NonDivisible);
}

TEST_CASE("small determinants on record") {
  // |K_1| = (1 - v + xv^2) / (1 - v).
  const RationalFnV k1 = kernel_det(1);
  CHECK(k1.p == 1);
  CHECK(k1.num == bp::add(bp::one_minus_v(), t(1, 1, 2)));
  // |K_2| = 1 - 2xv + x^2 v^2 + xv / (1 - v).
  const RationalFnV k2 = kernel_det(2);
  CHECK(k2.p == 1);
  const BiPoly expect2 =
      bp::add(bp::mul(bp::add(bp::add(bp::one(), t(-2, 1, 1)), t(1, 2, 2)),
                      bp::one_minus_v()),
              t(1, 1, 1));
  CHECK(k2.num == expect2);
}

TEST_CASE("determinant recurrences") {
  CHECK(check_det_recurrences(5));
  CHECK(check_det_recurrences(8));
  CHECK_THROWS_AS(check_det_recurrences(2), std::invalid_argument);
}

TEST_CASE("perturbed determinants break the recurrences") {
  std::vector<RationalFnV> dets(6);
  for (int m = 1; m <= 5; ++m) dets[m] = kernel_det(m);
  CHECK(detail::det_recurrences_hold(dets, 5));
  dets[4] = rf_add(dets[4], RationalFnV::from(bp::xv()));
  CHECK_FALSE(detail::det_recurrences_hold(dets, 5));
}

TEST_CASE("cofactor closed forms") {
  CHECK(check_cofactor_forms(6));
}

TEST_CASE("regular roots on record") {
  for (int m = 3; m <= 5; ++m)
    for (int r = 1; r <= m - 2; ++r)
      CHECK(verify_kernel_root(m, r, printed_kernel_root(m, r)));
  // A wrong candidate leaves a residual.
  auto wrong = printed_kernel_root(3, 1);
  wrong[3] += 1;
  CHECK_FALSE(verify_kernel_root(3, 1, wrong));
  CHECK_THROWS_AS(printed_kernel_root(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_kernel_root(6, 1, wrong), std::invalid_argument);
}

TEST_CASE("root extension agrees with its seed") {
  const TruncatedSeries lam = extend_root_m3(10);
  const auto seed = printed_kernel_root(3, 1);
  for (size_t i = 0; i < seed.size(); ++i) CHECK(lam[i] == seed[i]);
  CHECK(verify_kernel_root(3, 1, lam));
}

TEST_CASE("worked system consistency") {
  CHECK(verify_kernel_solution_consistency(3, 10));
  CHECK(verify_kernel_solution_consistency(3, 6));
  CHECK_THROWS_AS(verify_kernel_solution_consistency(4, 10),
                  std::invalid_argument);
}

TEST_CASE("a corrupted component breaks the worked system") {
  const int order = 8;
  const TruncatedSeries lam = extend_root_m3(order);
  const SystemSolution sol =
      solve_system_full(SystemId::row_restricted(3), order);
  TruncatedSeries h23(order + 1, Rat(0));
  for (int i = 0; i <= order; ++i)
    h23[i] = sol.components[1][i] + sol.components[2][i];
  CHECK(detail::m3_equations_hold(lam, sol.components[0], h23, order,
                                  order - 4));
  TruncatedSeries bad_h1 = sol.components[0];
  bad_h1[2] += 1;
  CHECK_FALSE(detail::m3_equations_hold(lam, bad_h1, h23, order, order - 4));
}

TEST_CASE("regular root counts") {
  for (int m = 3; m <= 5; ++m) CHECK(check_regular_root_count(m));
}

TEST_CASE("rational function arithmetic stays reduced") {
  const RationalFnV ratio = RationalFnV::from(bp::xv(), 1);
  const RationalFnV sum = rf_sub(ratio, ratio);
  CHECK(rf_is_zero(sum));
  CHECK(sum.p == 0);
  const RationalFnV back =
      rf_mul(ratio, RationalFnV::from(bp::one_minus_v()));
  CHECK(back == RationalFnV::from(bp::xv()));
}
