#pragma once

#include <array>
#include <cmath>
#include <optional>

namespace splitquat {

/// Element s0 + s1·i + s2·j + s3·k of the split quaternions, with
/// i² = −1, j² = k² = +1, ij = k = −ji, jk = −i = −kj, ki = j = −ik.
struct SplitQuaternion {
  double s0 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  constexpr SplitQuaternion() = default;
  constexpr SplitQuaternion(double re) : s0(re) {}  // NOLINT: reals embed implicitly
  constexpr SplitQuaternion(double w, double x, double y, double z)
      : s0(w), s1(x), s2(y), s3(z) {}

  /// Throws std::invalid_argument unless all coordinates are finite.
  static SplitQuaternion checked(double w, double x, double y, double z);

  static constexpr SplitQuaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr SplitQuaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr SplitQuaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double operator[](std::size_t n) const {
    return n == 0 ? s0 : n == 1 ? s1 : n == 2 ? s2 : s3;
  }
  constexpr std::array<double, 4> coords() const { return {s0, s1, s2, s3}; }

  constexpr double real() const { return s0; }
  constexpr SplitQuaternion imag() const { return {0.0, s1, s2, s3}; }
  bool is_finite() const {
    return std::isfinite(s0) && std::isfinite(s1) && std::isfinite(s2) && std::isfinite(s3);
  }

  SplitQuaternion& operator+=(const SplitQuaternion& o) {
    s0 += o.s0; s1 += o.s1; s2 += o.s2; s3 += o.s3;
    return *this;
  }
  SplitQuaternion& operator-=(const SplitQuaternion& o) {
    s0 -= o.s0; s1 -= o.s1; s2 -= o.s2; s3 -= o.s3;
    return *this;
  }
  SplitQuaternion& operator*=(double t) {
    s0 *= t; s1 *= t; s2 *= t; s3 *= t;
    return *this;
  }
  SplitQuaternion& operator/=(double t) {
    s0 /= t; s1 /= t; s2 /= t; s3 /= t;
    return *this;
  }

  friend constexpr bool operator==(const SplitQuaternion&, const SplitQuaternion&) = default;
};

constexpr SplitQuaternion operator+(SplitQuaternion x, const SplitQuaternion& y) {
  return {x.s0 + y.s0, x.s1 + y.s1, x.s2 + y.s2, x.s3 + y.s3};
}
constexpr SplitQuaternion operator-(SplitQuaternion x, const SplitQuaternion& y) {
  return {x.s0 - y.s0, x.s1 - y.s1, x.s2 - y.s2, x.s3 - y.s3};
}
constexpr SplitQuaternion operator-(const SplitQuaternion& x) { return {-x.s0, -x.s1, -x.s2, -x.s3}; }
constexpr SplitQuaternion operator*(double t, const SplitQuaternion& x) {
  return {t * x.s0, t * x.s1, t * x.s2, t * x.s3};
}
constexpr SplitQuaternion operator*(const SplitQuaternion& x, double t) { return t * x; }
constexpr SplitQuaternion operator/(const SplitQuaternion& x, double t) {
  return {x.s0 / t, x.s1 / t, x.s2 / t, x.s3 / t};
}

/// Hamilton-style product under the split multiplication table.
constexpr SplitQuaternion mul(const SplitQuaternion& x, const SplitQuaternion& y) {
  return {x.s0 * y.s0 - x.s1 * y.s1 + x.s2 * y.s2 + x.s3 * y.s3,
          x.s0 * y.s1 + x.s1 * y.s0 - x.s2 * y.s3 + x.s3 * y.s2,
          x.s0 * y.s2 + x.s2 * y.s0 - x.s1 * y.s3 + x.s3 * y.s1,
          x.s0 * y.s3 + x.s3 * y.s0 + x.s1 * y.s2 - x.s2 * y.s1};
}
constexpr SplitQuaternion operator*(const SplitQuaternion& x, const SplitQuaternion& y) {
  return mul(x, y);
}

constexpr SplitQuaternion conj(const SplitQuaternion& x) { return {x.s0, -x.s1, -x.s2, -x.s3}; }

/// Euclidean norm of the four coordinates. Used for tolerances only; the
/// algebra's own quadratic form is `norm_form`.
double euclid_norm(const SplitQuaternion& x);
double euclid_norm_sq(const SplitQuaternion& x);
double distance(const SplitQuaternion& x, const SplitQuaternion& y);

// The indefinite forms. All four are evaluated with compensated (fma-based)
// dot products, so they are exact whenever the exact value is representable
// and the inputs are small dyadic rationals.

/// I_x = x0² + x1² − x2² − x3² = x·conj(x).
double norm_form(const SplitQuaternion& x);
/// M_x = −x1² + x2² + x3² (Minkowski form on the imaginary part).
double minkowski_form(const SplitQuaternion& x);
/// P_xy = x0y0 + x1y1 − x2y2 − x3y3 = Re(conj(y)·x).
double pairing(const SplitQuaternion& x, const SplitQuaternion& y);
/// K_xy = −x1y1 + x2y2 + x3y3.
double minkowski_pairing(const SplitQuaternion& x, const SplitQuaternion& y);

struct FormValues {
  double I = 0.0;  // I_x
  double M = 0.0;  // M_x
  double P = 0.0;  // P_xy
  double K = 0.0;  // K_xy
};

FormValues forms(const SplitQuaternion& x, const SplitQuaternion& y);

/// conj(x)/I_x when |I_x| > eps·(1+‖x‖²); std::nullopt marks a zero divisor
/// at this tolerance.
std::optional<SplitQuaternion> inverse(const SplitQuaternion& x, double eps = 1e-9);

/// Moore–Penrose inverse: 0 for x = 0, x⁻¹ for invertible x, and
/// (conj(t1) + t2·j)/(4|t1|²) for a zero divisor x = t1 + t2·j.
SplitQuaternion mp_inverse(const SplitQuaternion& x, double eps = 1e-9);

}  // namespace splitquat
