#include <doctest.h>

#include <cmath>

#include "splitquat/realroots.hpp"
#include "support/oracles.hpp"

using namespace splitquat;

TEST_CASE("quadratic roots") {
  CHECK(real_quadratic_roots(0, -1) == std::vector<double>{-1, 1});
  CHECK(real_quadratic_roots(0, 1).empty());
  CHECK(real_quadratic_roots(-4, 3) == std::vector<double>{1, 3});
  CHECK(real_quadratic_roots(-2, 1) == std::vector<double>{1});
  // cancellation-prone: t² − 1e8 t + 1
  const auto r = real_quadratic_roots(-1e8, 1);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(1e-8).epsilon(1e-12));
}

TEST_CASE("cubic classification, fixed instances") {
  auto c = classify_cubic(1, 4, 6);
  CHECK(c.case_tag == CubicCase::C1ii);
  REQUIRE(c.positive_roots.size() == 1);
  CHECK(c.positive_roots[0] == doctest::Approx(4).epsilon(1e-14));

  c = classify_cubic(-7, 0, -6);
  CHECK(c.case_tag == CubicCase::C3);
  REQUIRE(c.positive_roots.size() == 3);
  CHECK(c.positive_roots[0] == doctest::Approx(1).epsilon(1e-13));
  CHECK(c.positive_roots[1] == doctest::Approx(4).epsilon(1e-13));
  CHECK(c.positive_roots[2] == doctest::Approx(9).epsilon(1e-13));

  c = classify_cubic(0, -1, 1);
  CHECK(c.case_tag == CubicCase::C1i);
  CHECK(c.positive_roots.size() == 1);
  CHECK(oracle::scan_positive_roots(0, -1, 1) == 1);

  // double roots: both critical-value boundaries
  c = classify_cubic(-3, 0, 2);
  CHECK(c.case_tag == CubicCase::C2vi);
  REQUIRE(c.positive_roots.size() == 2);
  CHECK(c.positive_roots[0] == doctest::Approx(1).epsilon(1e-7));
  CHECK(c.positive_roots[1] == doctest::Approx(4).epsilon(1e-12));

  c = classify_cubic(-8, -5, -12);
  CHECK(c.case_tag == CubicCase::C2vii);
  REQUIRE(c.positive_roots.size() == 2);
  CHECK(c.positive_roots[0] == doctest::Approx(4).epsilon(1e-12));
  CHECK(c.positive_roots[1] == doctest::Approx(6).epsilon(1e-7));

  c = classify_cubic(1, 2, 0);
  CHECK(c.case_tag == CubicCase::D_zero);
  CHECK(c.positive_roots.empty());
}

TEST_CASE("cubic classification matches a dense sign scan") {
  Rng rng(2024);
  int mismatched = 0, bad_case = 0, bad_residual = 0;
  for (int n = 0; n < 10000; ++n) {
    const double s = n % 3 == 0 ? 1.0 : 10.0;
    const double B = rng.uniform(-s, s), E = rng.uniform(-s, s), D = rng.uniform(-s, s);
    if (D == 0) continue;
    const auto c = classify_cubic(B, E, D);
    if (static_cast<int>(c.positive_roots.size()) != oracle::scan_positive_roots(B, E, D)) ++mismatched;
    if (static_cast<int>(c.positive_roots.size()) != expected_positive_roots(c.case_tag)) ++bad_case;
    for (double z : c.positive_roots)
      if (!(z > 0) || std::fabs(oracle::cubic_f(B, E, D, z)) > 1e-9 * (1 + D * D + std::fabs(B * B * B)))
        ++bad_residual;
    if (B * B + 12 * E > 0) CHECK(c.F1 >= c.F2);
  }
  CHECK(mismatched == 0);
  CHECK(bad_case == 0);
  CHECK(bad_residual == 0);
}

TEST_CASE("quartic roots, fixed instances") {
  const double r2 = std::sqrt(2.0);
  auto r = real_quartic_roots(1, 5 * r2, 14.5, r2 / 2, -0.25);
  auto has = [&](double v) {
    return std::any_of(r.begin(), r.end(), [&](double t) { return std::fabs(t - v) <= 5e-5; });
  };
  CHECK(has(-0.1658));
  CHECK(has(0.1069));
  r = real_quartic_roots(1, 2, 13.0 / 4, -1, -0.25);
  CHECK(has(0.3914));
  CHECK(has(-0.1675));
  CHECK(real_quartic_roots(1, 0, 0, 0, -1) == std::vector<double>{-1, 1});
  const auto d = real_quartic_roots(1, -4, 6, -4, 1);  // (t − 1)⁴
  REQUIRE(d.size() == 1);
  CHECK(d[0] == doctest::Approx(1).epsilon(1e-3));
}

TEST_CASE("quartic roots agree with companion-matrix eigenvalues") {
  Rng rng(77);
  int mismatched = 0, bad_res = 0;
  for (int n = 0; n < 10000; ++n) {
    std::vector<double> c(5);
    for (auto& v : c) v = rng.normal();
    if (std::fabs(c[0]) < 0.05) c[0] = 1.0;
    const auto mine = real_quartic_roots(c[0], c[1], c[2], c[3], c[4]);
    const auto ref = oracle::companion_real_roots(c);
    double cmax = 0;
    for (double v : c) cmax = std::max(cmax, std::fabs(v));
    for (double t : mine)
      if (std::fabs(poly_eval(c, t)) > 1e-9 * (1 + cmax)) ++bad_res;
    // multiset comparison after merging near-equal eigenvalues
    std::vector<double> merged;
    for (double t : ref)
      if (merged.empty() || std::fabs(t - merged.back()) > 1e-8 * (1 + std::fabs(t))) merged.push_back(t);
    bool ok = merged.size() == mine.size();
    for (std::size_t k = 0; ok && k < mine.size(); ++k) ok = std::fabs(mine[k] - merged[k]) <= 1e-7 * (1 + std::fabs(mine[k]));
    if (!ok) ++mismatched;
  }
  CHECK(mismatched == 0);
  CHECK(bad_res == 0);
}

TEST_CASE("general polynomial roots") {
  const double c[] = {0.0, 2.0, -6.0, 4.0};  // leading zero stripped: 2(t−1)(t−2)
  const auto r = real_polynomial_roots(c);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == doctest::Approx(1));
  CHECK(r[1] == doctest::Approx(2));
  const double z[] = {0.0, 0.0};
  CHECK(real_polynomial_roots(z).empty());
}
