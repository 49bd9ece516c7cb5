#include "splitquat/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "splitquat/tolerance.hpp"

namespace splitquat {

namespace {

// Ogita–Rump–Oishi Dot2: result as if accumulated in twice the working
// precision, then rounded once.
double dot2(const std::array<double, 4>& x, const std::array<double, 4>& y) {
  double p = x[0] * y[0];
  double s = std::fma(x[0], y[0], -p);
  for (std::size_t n = 1; n < 4; ++n) {
    const double h = x[n] * y[n];
    const double r = std::fma(x[n], y[n], -h);
    const double q = p;
    p = q + h;
    const double z = p - q;
    s += (q - (p - z)) + (h - z) + r;
  }
  return p + s;
}

}  // namespace

SplitQuaternion SplitQuaternion::checked(double w, double x, double y, double z) {
  SplitQuaternion q{w, x, y, z};
  if (!q.is_finite()) throw std::invalid_argument("split quaternion coordinates must be finite");
  return q;
}

double euclid_norm_sq(const SplitQuaternion& x) {
  return x.s0 * x.s0 + x.s1 * x.s1 + x.s2 * x.s2 + x.s3 * x.s3;
}

double euclid_norm(const SplitQuaternion& x) {
  return std::hypot(std::hypot(x.s0, x.s1), std::hypot(x.s2, x.s3));
}

double distance(const SplitQuaternion& x, const SplitQuaternion& y) { return euclid_norm(x - y); }

double norm_form(const SplitQuaternion& x) {
  return dot2({x.s0, x.s1, x.s2, x.s3}, {x.s0, x.s1, -x.s2, -x.s3});
}

double minkowski_form(const SplitQuaternion& x) {
  return dot2({0.0, x.s1, x.s2, x.s3}, {0.0, -x.s1, x.s2, x.s3});
}

double pairing(const SplitQuaternion& x, const SplitQuaternion& y) {
  return dot2({x.s0, x.s1, x.s2, x.s3}, {y.s0, y.s1, -y.s2, -y.s3});
}

double minkowski_pairing(const SplitQuaternion& x, const SplitQuaternion& y) {
  return dot2({0.0, x.s1, x.s2, x.s3}, {0.0, -y.s1, y.s2, y.s3});
}

FormValues forms(const SplitQuaternion& x, const SplitQuaternion& y) {
  return {norm_form(x), minkowski_form(x), pairing(x, y), minkowski_pairing(x, y)};
}

std::optional<SplitQuaternion> inverse(const SplitQuaternion& x, double eps) {
  const double ix = norm_form(x);
  if (std::fabs(ix) <= eps * (1.0 + euclid_norm_sq(x))) return std::nullopt;
  return conj(x) / ix;
}

SplitQuaternion mp_inverse(const SplitQuaternion& x, double eps) {
  if (x == SplitQuaternion{}) return {};
  if (auto inv = inverse(x, eps)) return *inv;
  // x = t1 + t2·j with t1 = s0 + s1·i, t2 = s2 + s3·i; t2·j = s2·j + s3·k.
  const double t1sq = x.s0 * x.s0 + x.s1 * x.s1;
  return SplitQuaternion{x.s0, -x.s1, x.s2, x.s3} / (4.0 * t1sq);
}

// --- tolerance helpers -------------------------------------------------------

bool is_small_dyadic(double v) {
  if (!std::isfinite(v) || std::fabs(v) > 1048576.0) return false;
  const double scaled = std::ldexp(v, 20);
  return scaled == std::nearbyint(scaled);
}

Tolerance Tolerance::for_inputs(std::span<const SplitQuaternion> coeffs, double eps) {
  Tolerance tol;
  tol.eps = eps;
  tol.exact = true;
  for (const auto& q : coeffs)
    for (double v : q.coords())
      if (!is_small_dyadic(v)) tol.exact = false;
  return tol;
}

Tolerance Tolerance::for_inputs(std::initializer_list<SplitQuaternion> coeffs, double eps) {
  return for_inputs(std::span<const SplitQuaternion>(coeffs.begin(), coeffs.size()), eps);
}

Tracked tracked_norm_form(const SplitQuaternion& x) { return {norm_form(x), euclid_norm_sq(x)}; }

Tracked tracked_minkowski_form(const SplitQuaternion& x) {
  return {minkowski_form(x), x.s1 * x.s1 + x.s2 * x.s2 + x.s3 * x.s3};
}

Tracked tracked_pairing(const SplitQuaternion& x, const SplitQuaternion& y) {
  return {pairing(x, y), std::fabs(x.s0 * y.s0) + std::fabs(x.s1 * y.s1) + std::fabs(x.s2 * y.s2) +
                             std::fabs(x.s3 * y.s3)};
}

Tracked tracked_minkowski_pairing(const SplitQuaternion& x, const SplitQuaternion& y) {
  return {minkowski_pairing(x, y),
          std::fabs(x.s1 * y.s1) + std::fabs(x.s2 * y.s2) + std::fabs(x.s3 * y.s3)};
}

}  // namespace splitquat
