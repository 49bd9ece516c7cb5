#include <doctest.h>

#include <cmath>

#include "splitquat/fuzz.hpp"
#include "splitquat/literal.hpp"
#include "splitquat/oracle.hpp"
#include "splitquat/solver.hpp"
#include "support/checks.hpp"

using namespace splitquat;

namespace {
SplitQuaternion sq(const char* s) { return parse_quaternion(s); }
}  // namespace

TEST_CASE("real system matches the product") {
  Rng rng(1);
  for (int n = 0; n < 1000; ++n) {
    const auto a = oracle::random_quat(rng), b = oracle::random_quat(rng), c = oracle::random_quat(rng),
               x = oracle::random_quat(rng);
    const auto f = real_system(a, b, c, x.coords());
    const auto g = oracle::eval_quadratic(a, b, c, x);
    for (int k = 0; k < 4; ++k) CHECK(f[k] == doctest::Approx(g[k]).epsilon(1e-12).scale(10));
  }
}

TEST_CASE("jacobian matches central differences") {
  Rng rng(2);
  double worst = 0;
  for (int n = 0; n < 500; ++n) {
    const auto a = oracle::random_quat(rng), b = oracle::random_quat(rng), c = oracle::random_quat(rng);
    const auto x = oracle::random_quat(rng).coords();
    const auto J = real_system_jacobian(a, b, x);
    const double h = 1e-5;
    for (int col = 0; col < 4; ++col) {
      auto xp = x, xm = x;
      xp[col] += h;
      xm[col] -= h;
      const auto fp = real_system(a, b, c, xp), fm = real_system(a, b, c, xm);
      for (int row = 0; row < 4; ++row)
        worst = std::max(worst, std::fabs((fp[row] - fm[row]) / (2 * h) - J[4 * row + col]));
    }
  }
  // the system is quadratic, so central differences are exact up to rounding
  CHECK(worst <= 1e-7);
}

TEST_CASE("x^2 = 1") {
  const auto roots = oracle_roots(1.0, 0.0, -1.0);
  CHECK(check::has_point(check::as_points(roots), 1.0, 1e-7));
  CHECK(check::has_point(check::as_points(roots), -1.0, 1e-7));
  int on_quadric = 0;
  for (const auto& x : roots) {
    CHECK(relative_residual(1.0, 0.0, -1.0, x) <= 1e-8);
    if (std::fabs(x.s0) <= 1e-6 && std::fabs(minkowski_form(x) - 1) <= 1e-6) ++on_quadric;
  }
  CHECK(on_quadric > 0);
}

TEST_CASE("two isolated roots with an irrational coefficient") {
  const double s11 = std::sqrt(11.0);
  const auto roots = oracle_roots(1.0, {0, 2, 0, s11}, sq("j+k"));
  const auto pts = check::as_points(roots);
  CHECK(check::has_point(pts, {0.5, -(2 + s11) / 2, 0.5, -(s11 + 4) / 2}, 1e-7));
  CHECK(check::has_point(pts, {-0.5, (s11 - 6) / 6, 1.0 / 6, (8 - 3 * s11) / 6}, 1e-7));
}

TEST_CASE("restricted search on the implicit family") {
  const double s2 = std::sqrt(2.0);
  const SplitQuaternion a{1, 0, s2 / 2, s2 / 2}, c{2, 1, 3 * s2 / 2, s2 / 2};
  FixedCoords fixed{std::nullopt, std::nullopt, 2.0, 3.0};
  OracleConfig cfg;
  cfg.starts = 128;
  const auto roots = oracle_roots(a, 0.0, c, cfg, fixed);
  const auto pts = check::as_points(roots);
  CHECK(check::has_point(pts, {0.1069, -3.9708, 2, 3}, 5e-4));
  CHECK(check::has_point(pts, {-0.1658, 3.7222, 2, 3}, 5e-4));
  for (const auto& x : roots) {
    CHECK(x.s2 == 2.0);
    CHECK(x.s3 == 3.0);
  }
}

TEST_CASE("deterministic under a fixed seed") {
  OracleConfig cfg;
  cfg.starts = 32;
  const auto r1 = oracle_roots(sq("1+j"), sq("i+j"), sq("-1+i"), cfg);
  const auto r2 = oracle_roots(sq("1+j"), sq("i+j"), sq("-1+i"), cfg);
  CHECK(r1 == r2);
}

TEST_CASE("oracle roots lie on the closed-form set") {
  Rng rng(404);
  OracleConfig cfg;
  cfg.starts = 32;
  double worst = 0, worst_res = 0;
  for (FuzzType t : {FuzzType::I, FuzzType::II, FuzzType::III, FuzzType::IV})
    for (int n = 0; n < 40; ++n) {
      const auto inst = planted_instance(t, rng);
      const auto s = solve(inst.a, inst.b, inst.c);
      for (const auto& x : oracle_roots(inst.a, inst.b, inst.c, cfg)) {
        worst = std::max(worst, membership_distance(s, x));
        worst_res = std::max(worst_res, relative_residual(inst.a, inst.b, inst.c, x));
      }
    }
  CHECK(worst <= 1e-5);
  CHECK(worst_res <= 1e-8);
}
