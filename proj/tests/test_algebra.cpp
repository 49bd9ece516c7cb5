#include <doctest.h>

#include "splitquat/linear.hpp"
#include "splitquat/literal.hpp"
#include "splitquat/tolerance.hpp"
#include "support/oracles.hpp"

using namespace splitquat;

namespace {

bool same(const SplitQuaternion& x, const SplitQuaternion& y, double tol = 0.0) {
  return oracle::qdist(x, y) <= tol;
}

SplitQuaternion sq(const char* s) { return parse_quaternion(s); }

}  // namespace

TEST_CASE("multiplication table") {
  const auto one = SplitQuaternion(1.0), i = SplitQuaternion::i(), j = SplitQuaternion::j(), k = SplitQuaternion::k();
  CHECK(i * i == -one);
  CHECK(j * j == one);
  CHECK(k * k == one);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == -i);
  CHECK(k * j == i);
  CHECK(k * i == j);
  CHECK(i * k == -j);
  CHECK((i - j) * (i - j) == SplitQuaternion{});
  const auto x = sq("0.5-2i+3j+0.25k");
  CHECK(x * one == x);
  CHECK(one * x == x);
}

TEST_CASE("product agrees with the hand-written table") {
  Rng rng(1);
  for (int n = 0; n < 2000; ++n) {
    const auto x = oracle::random_quat(rng), y = oracle::random_quat(rng);
    CHECK(same(x * y, oracle::table_mul(x, y), 1e-14));
  }
}

TEST_CASE("forms") {
  auto f = forms(sq("1+i"), sq("1+i"));
  CHECK(f.I == 2.0);
  CHECK(f.P == 2.0);
  CHECK(norm_form(sq("1+j")) == 0.0);
  const auto b = sq("2j+3k"), c = sq("3+i+3j-k");
  CHECK(pairing(b, c) == -3.0);
  CHECK(norm_form(b) == -13.0);
  CHECK(norm_form(c) == 0.0);
  const auto x = sq("0.5-1.5i+2j+3k");
  CHECK(minkowski_form(x.imag()) == -norm_form(x.imag()));
  CHECK(pairing(x, x) == norm_form(x));
  CHECK(minkowski_pairing(x, x) == minkowski_form(x));
  CHECK(pairing(x, b) == (conj(b) * x).real());
}

TEST_CASE("inverse and zero divisors") {
  CHECK(*inverse(2.0) == SplitQuaternion(0.5));
  CHECK_FALSE(inverse(sq("1+j")).has_value());
  const auto x = sq("i+2j+k");
  const auto inv = inverse(x);
  REQUIRE(inv.has_value());
  CHECK(same(*inv, SplitQuaternion{0, -1, -2, -1} / -4.0));
  CHECK(same(x * *inv, 1.0, 1e-15));
  CHECK(same(*inv * x, 1.0, 1e-15));
}

TEST_CASE("Moore-Penrose inverse") {
  CHECK(mp_inverse(0.0) == SplitQuaternion{});
  const auto x = sq("2-i+0.5k");
  CHECK(mp_inverse(x) == *inverse(x));
  const auto a = sq("1+j");
  CHECK(same(mp_inverse(a), a / 4.0, 1e-15));
  CHECK(same(a * mp_inverse(a), a / 2.0, 1e-15));
  const auto n = sq("i-j");  // nilpotent
  const auto np = mp_inverse(n);
  CHECK(same(n * np * n, n, 1e-15));
  CHECK(same(np * n * np, np, 1e-15));
}

TEST_CASE("linear equations") {
  const auto q = sq("1-2i+3j-4k");
  auto s = solve_linear(1.0, q);
  REQUIRE(s.components.size() == 1);
  CHECK(std::get<Point>(s.components[0]).q == q);

  s = solve_linear(sq("1+j"), 1.0);
  CHECK(s.components.empty());
  REQUIRE(s.failed_conditions.size() == 1);

  const auto a = sq("1+j");
  s = solve_linear(a, a);
  REQUIRE(s.components.size() == 1);
  const auto* plane = std::get_if<AffinePlane>(&s.components[0]);
  REQUIRE(plane);
  CHECK(same(plane->base, a / 4.0 * a, 1e-15));
  for (double u : {-3.0, 0.0, 2.5})
    for (double v : {-1.0, 4.0}) {
      const auto y = plane->base + u * plane->dir1 + v * plane->dir2;
      CHECK(euclid_norm(a * y - a) <= 1e-14);
    }
  // The solution plane is base + (1 − a⁺a)·y over all y: a 2-dimensional set.
  Rng rng(3);
  const auto ap = mp_inverse(a);
  for (int n = 0; n < 50; ++n) {
    const auto y = ap * a + (SplitQuaternion(1.0) - ap * a) * oracle::random_quat(rng);
    CHECK(component_distance(*plane, y) <= 1e-12);
  }

  s = solve_linear(0.0, 0.0);
  REQUIRE(s.components.size() == 1);
  CHECK(std::holds_alternative<WholeSpace>(s.components[0]));
  CHECK(solve_linear(0.0, 1.0).components.empty());
}

TEST_CASE("exact classification for dyadic inputs") {
  CHECK(Tolerance::for_inputs({sq("1+j"), sq("0.25i"), sq("-3.5")}).exact);
  CHECK_FALSE(Tolerance::for_inputs({sq("0.1")}).exact);
  const Tolerance t = Tolerance::for_inputs({sq("1+j")});
  CHECK(t.zero(tracked_norm_form(sq("1+j"))));
  CHECK_FALSE(t.zero(Tracked(1e-9, 1.0)));
  Tolerance loose;
  CHECK(loose.zero(Tracked(1e-10, 1.0)));
}

TEST_CASE("algebra identities on random inputs") {
  Rng rng(11);
  int fail_norm = 0, fail_conj = 0, fail_xconj = 0, fail_assoc = 0, fail_penrose = 0, fail_sq = 0;
  for (int n = 0; n < 10000; ++n) {
    const auto x = oracle::random_quat(rng), y = oracle::random_quat(rng), z = oracle::random_quat(rng);
    const double lhs = norm_form(x * y), rhs = norm_form(x) * norm_form(y);
    if (std::fabs(lhs - rhs) > 1e-10 * (1 + euclid_norm_sq(x) * euclid_norm_sq(y))) ++fail_norm;
    if (oracle::qdist(conj(x * y), conj(y) * conj(x)) > 1e-14 * (1 + euclid_norm(x) * euclid_norm(y))) ++fail_conj;
    const auto xc = x * conj(x);
    if (std::fabs(xc.s1) + std::fabs(xc.s2) + std::fabs(xc.s3) > 1e-14 * euclid_norm_sq(x) ||
        std::fabs(xc.s0 - norm_form(x)) > 1e-14 * euclid_norm_sq(x))
      ++fail_xconj;
    if (oracle::qdist((x * y) * z, x * (y * z)) > 1e-12 * (1 + euclid_norm(x) * euclid_norm(y) * euclid_norm(z)))
      ++fail_assoc;
    if (oracle::qdist(x * x, 2 * x.s0 * x - SplitQuaternion(norm_form(x))) > 1e-12 * (1 + euclid_norm_sq(x)))
      ++fail_sq;
    // zero divisors built as t1 + t2·j with |t1| = |t2|
    const double r = rng.uniform(0.1, 2.0), p = rng.uniform(0, 6.28), q = rng.uniform(0, 6.28);
    for (const auto& w : {x, SplitQuaternion{r * std::cos(p), r * std::sin(p), r * std::cos(q), r * std::sin(q)}}) {
      const auto wp = mp_inverse(w);
      const double tw = 1e-10 * (1 + euclid_norm(w)), twp = 1e-10 * (1 + euclid_norm(wp));
      if (oracle::qdist(w * wp * w, w) > tw || oracle::qdist(wp * w * wp, wp) > twp) ++fail_penrose;
    }
  }
  CHECK(fail_norm == 0);
  CHECK(fail_conj == 0);
  CHECK(fail_xconj == 0);
  CHECK(fail_assoc == 0);
  CHECK(fail_penrose == 0);
  CHECK(fail_sq == 0);
}

TEST_CASE("exact identities on dyadic inputs") {
  Rng rng(5);
  for (int n = 0; n < 2000; ++n) {
    SplitQuaternion x, y;
    for (int k = 0; k < 4; ++k) {
      x = SplitQuaternion{std::ldexp(double(rng.below(64)) - 32, -2), x.s0, x.s1, x.s2};
      y = SplitQuaternion{std::ldexp(double(rng.below(64)) - 32, -3), y.s0, y.s1, y.s2};
    }
    CHECK(conj(x * y) == conj(y) * conj(x));
    CHECK(x * conj(x) == SplitQuaternion(norm_form(x)));
    CHECK(conj(conj(x)) == x);
  }
}

TEST_CASE("quaternion literals") {
  CHECK(sq("-0.25+2.5i+0.75j+2.5k") == SplitQuaternion{-0.25, 2.5, 0.75, 2.5});
  CHECK(sq(" 1 - j ") == SplitQuaternion{1, 0, -1, 0});
  CHECK(sq("k") == SplitQuaternion::k());
  CHECK(sq("2i+3i") == SplitQuaternion{0, 5, 0, 0});
  CHECK(sq("1e-3j") == SplitQuaternion{0, 0, 1e-3, 0});
  CHECK(sq("0") == SplitQuaternion{});
  CHECK_THROWS_AS(sq(""), ParseError);
  CHECK_THROWS_AS(sq("1+"), ParseError);
  CHECK_THROWS_AS(sq("1x"), ParseError);
  try {
    sq("1+2q");
    FAIL("accepted a bad literal");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  Rng rng(8);
  for (int n = 0; n < 500; ++n) {
    const auto x = SplitQuaternion{rng.normal(), rng.normal() * 1e-7, rng.normal() * 1e9, 0.0};
    CHECK(parse_quaternion(format_quaternion(x)) == x);
  }
  CHECK(format_quaternion(SplitQuaternion{}) == "0");
  CHECK_THROWS(SplitQuaternion::checked(1.0, NAN, 0, 0));
}
