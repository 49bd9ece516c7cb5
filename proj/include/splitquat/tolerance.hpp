#pragma once

#include <cmath>
#include <initializer_list>
#include <span>

#include "splitquat/algebra.hpp"

namespace splitquat {

/// A real value paired with the sum of absolute values of the terms that
/// produced it. Branch predicates compare |v| against mag, so the zero test
/// scales with the size of what cancelled rather than with a fixed constant.
struct Tracked {
  double v = 0.0;
  double mag = 0.0;

  constexpr Tracked() = default;
  constexpr Tracked(double x) : v(x), mag(x < 0 ? -x : x) {}  // NOLINT
  constexpr Tracked(double x, double m) : v(x), mag(m) {}

  friend Tracked operator+(Tracked a, Tracked b) { return {a.v + b.v, a.mag + b.mag}; }
  friend Tracked operator-(Tracked a, Tracked b) { return {a.v - b.v, a.mag + b.mag}; }
  friend Tracked operator-(Tracked a) { return {-a.v, a.mag}; }
  friend Tracked operator*(Tracked a, Tracked b) { return {a.v * b.v, a.mag * b.mag}; }
  friend Tracked operator/(Tracked a, Tracked b) {
    const double d = std::fabs(b.v);
    return {a.v / b.v, d > 0 ? a.mag / d : a.mag};
  }
  Tracked& operator+=(Tracked b) { return *this = *this + b; }
  Tracked& operator-=(Tracked b) { return *this = *this - b; }
};

inline Tracked sqrt(Tracked a) { return {std::sqrt(a.v), std::sqrt(a.mag)}; }

/// Zero-classification policy for one equation.
///
/// Inexact mode: |v| ≤ eps·(1 + mag). Exact mode is selected when every input
/// coordinate is a small dyadic rational; arithmetic on such inputs is then
/// exact up to divisions, and the threshold drops to a rounding-error bound so
/// that rational instances branch exactly as the closed-form case analysis
/// prescribes.
struct Tolerance {
  static constexpr double kExactThreshold = 1e-12;

  double eps = 1e-9;
  bool exact = false;
  /// Relative residual bound used when filtering candidate points.
  double residual = 1e-8;

  double threshold() const { return exact ? kExactThreshold : eps; }

  bool zero(Tracked t) const {
    return std::fabs(t.v) <= threshold() * (exact ? t.mag : 1.0 + t.mag);
  }
  bool positive(Tracked t) const { return t.v > 0 && !zero(t); }
  bool negative(Tracked t) const { return t.v < 0 && !zero(t); }
  bool nonnegative(Tracked t) const { return t.v >= 0 || zero(t); }
  /// Quaternion is zero relative to the given scale.
  bool zero(const SplitQuaternion& q, double scale) const {
    return euclid_norm(q) <= threshold() * (exact ? scale : 1.0 + scale);
  }
  /// eps suitable for inverse(): the exact path uses the rounding bound.
  double inverse_eps() const { return exact ? kExactThreshold : eps; }

  /// Builds the policy for an equation from its coefficients.
  static Tolerance for_inputs(std::initializer_list<SplitQuaternion> coeffs, double eps = 1e-9);
  static Tolerance for_inputs(std::span<const SplitQuaternion> coeffs, double eps = 1e-9);
};

/// True when |v| ≤ 2^20 and v·2^20 is an integer.
bool is_small_dyadic(double v);

/// Tracked views of the forms; mag is the sum of absolute term values.
Tracked tracked_norm_form(const SplitQuaternion& x);
Tracked tracked_minkowski_form(const SplitQuaternion& x);
Tracked tracked_pairing(const SplitQuaternion& x, const SplitQuaternion& y);
Tracked tracked_minkowski_pairing(const SplitQuaternion& x, const SplitQuaternion& y);

}  // namespace splitquat
