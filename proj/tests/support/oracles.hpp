#pragma once

// Reference computations for the tests. None of these call into the
// library's root finders; they are deliberately slow and simple.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "splitquat/algebra.hpp"
#include "splitquat/rng.hpp"

namespace oracle {

using splitquat::SplitQuaternion;

/// Real eigenvalues of the companion matrix of a polynomial (descending
/// coefficients, leading one nonzero), Newton-polished in long double.
inline std::vector<double> companion_real_roots(const std::vector<double>& c, double imag_tol = 1e-7) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) M(0, k) = -c[k + 1] / c[0];
  for (int k = 1; k < n; ++k) M(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    const std::complex<double> z = es.eigenvalues()[k];
    if (std::fabs(z.imag()) > imag_tol * (1.0 + std::abs(z))) continue;
    long double t = z.real();
    for (int it = 0; it < 8; ++it) {
      long double f = 0, df = 0;
      for (double ci : c) {
        df = df * t + f;
        f = f * t + ci;
      }
      if (df == 0) break;
      const long double next = t - f / df;
      if (!std::isfinite(static_cast<double>(next)) || std::fabs(static_cast<double>(next - t)) > 1e-3 * (1 + std::fabs(static_cast<double>(t)))) break;
      t = next;
    }
    out.push_back(static_cast<double>(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline double cubic_f(double B, double E, double D, double z) {
  return ((z + 2 * B) * z + (B * B - 4 * E)) * z - D * D;
}

/// Counts positive roots of z³ + 2Bz² + (B² − 4E)z − D² by scanning a dense
/// grid (linear and geometric) for sign changes. Wherever |f| dips between
/// samples without a sign change the cell is searched by golden-section for
/// a hidden pair of crossings.
inline int scan_positive_roots(double B, double E, double D) {
  const double zmax = 1 + 2 * std::fabs(B) + 2 * std::sqrt(std::fabs(B * B - 4 * E)) + std::fabs(D);
  std::vector<double> z;
  const int n = 4000;
  for (int k = 1; k <= n; ++k) z.push_back(zmax * k / n);
  for (int k = 0; k <= n; ++k) z.push_back(zmax * std::pow(1e-14, 1.0 - static_cast<double>(k) / n));
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  std::vector<double> f(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) f[k] = cubic_f(B, E, D, z[k]);
  int count = 0;
  for (std::size_t k = 0; k + 1 < z.size(); ++k)
    if ((f[k] < 0) != (f[k + 1] < 0)) ++count;
  for (std::size_t k = 1; k + 1 < z.size(); ++k) {
    if ((f[k - 1] < 0) != (f[k] < 0) || (f[k] < 0) != (f[k + 1] < 0)) continue;
    const bool neg = f[k] < 0;
    // Local extremum of f pointing toward zero.
    const bool dip = neg ? (f[k] >= f[k - 1] && f[k] >= f[k + 1]) : (f[k] <= f[k - 1] && f[k] <= f[k + 1]);
    if (!dip) continue;
    double lo = z[k - 1], hi = z[k + 1];
    const double g = 0.5 * (std::sqrt(5.0) - 1);
    auto h = [&](double t) { return neg ? -cubic_f(B, E, D, t) : cubic_f(B, E, D, t); };
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1 + hi); ++it) {
      const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
      if (h(m1) < h(m2)) hi = m2; else lo = m1;
      if (h(0.5 * (lo + hi)) < 0) break;
    }
    if (h(0.5 * (lo + hi)) < 0) count += 2;
  }
  return count;
}

inline SplitQuaternion random_quat(splitquat::Rng& rng, double scale = 2.0) {
  return {rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale),
          rng.uniform(-scale, scale)};
}

/// Product written from the multiplication table by hand, entry by entry.
inline SplitQuaternion table_mul(const SplitQuaternion& x, const SplitQuaternion& y) {
  // basis products e_p·e_q = sign·e_r with 1, i, j, k = 0..3
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const double sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, 1, -1}, {1, 1, 1, 1}};
  double r[4] = {0, 0, 0, 0};
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) r[idx[p][q]] += sgn[p][q] * x[p] * y[q];
  return {r[0], r[1], r[2], r[3]};
}

inline SplitQuaternion eval_quadratic(const SplitQuaternion& a, const SplitQuaternion& b,
                                      const SplitQuaternion& c, const SplitQuaternion& x) {
  return table_mul(a, table_mul(x, x)) + table_mul(b, x) + c;
}

inline double qdist(const SplitQuaternion& x, const SplitQuaternion& y) {
  double s = 0;
  for (int n = 0; n < 4; ++n) s += (x[n] - y[n]) * (x[n] - y[n]);
  return std::sqrt(s);
}

}  // namespace oracle
