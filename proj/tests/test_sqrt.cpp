#include <doctest.h>

#include <cmath>

#include "splitquat/literal.hpp"
#include "splitquat/sqrt.hpp"
#include "support/oracles.hpp"

using namespace splitquat;

namespace {

bool contains(const std::vector<SplitQuaternion>& pts, const SplitQuaternion& x, double tol) {
  for (const auto& p : pts)
    if (oracle::qdist(p, x) <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("square roots of fixed radicands") {
  auto r = split_sqrt(parse_quaternion("1-3.5i-1j"));
  CHECK_FALSE(r.quadric);
  REQUIRE(r.points.size() == 2);
  const SplitQuaternion p{1.5, -7.0 / 6, -1.0 / 3, 0};
  CHECK(contains(r.points, p, 1e-14));
  CHECK(contains(r.points, -p, 1e-14));

  r = split_sqrt(1.0);
  REQUIRE(r.quadric);
  CHECK(r.quadric->level == 1.0);
  CHECK(r.quadric->x0 == 0.0);
  CHECK(contains(r.points, 1.0, 0.0));
  CHECK(contains(r.points, -1.0, 0.0));

  r = split_sqrt(parse_quaternion("-3-i-j-k"));
  CHECK(r.points.empty());
  CHECK_FALSE(r.quadric);

  r = split_sqrt(-2.0);
  REQUIRE(r.quadric);
  CHECK(r.quadric->level == -2.0);
  CHECK(r.points.empty());
}

TEST_CASE("square-root counts and accuracy on random radicands") {
  Rng rng(9);
  int tested = 0, bad_count = 0, bad_square = 0;
  while (tested < 10000) {
    const auto w = oracle::random_quat(rng, 3.0);
    const double iw = norm_form(w);
    if (iw < 0 || w.s0 + std::sqrt(iw) <= 1e-6) continue;
    ++tested;
    const auto r = split_sqrt(w);
    const bool four = w.s0 - std::sqrt(iw) > 1e-9;
    const bool two = !four && w.s0 - std::sqrt(iw) < -1e-9;
    if ((four && r.points.size() != 4) || (two && r.points.size() != 2)) ++bad_count;
    for (const auto& p : r.points)
      if (oracle::qdist(oracle::table_mul(p, p), w) > 1e-9 * (1 + euclid_norm(w))) ++bad_square;
  }
  CHECK(bad_count == 0);
  CHECK(bad_square == 0);
}

TEST_CASE("quadric samples square to the radicand") {
  for (double w0 : {-3.0, 0.0, 2.5}) {
    const auto r = split_sqrt(w0);
    REQUIRE(r.quadric);
    CertifyConfig cfg;
    int n = 0;
    for (const auto& params : sample_parameters(*r.quadric, cfg)) {
      std::vector<SplitQuaternion> pts;
      try {
        pts = instantiate(*r.quadric, params);
      } catch (const OutOfDomain&) {
        continue;
      }
      for (const auto& p : pts) {
        CHECK(oracle::qdist(oracle::table_mul(p, p), w0) <= 1e-10 * (1 + euclid_norm_sq(p)));
        ++n;
      }
    }
    CHECK(n >= 32);
  }
}
