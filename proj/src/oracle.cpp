#include "splitquat/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "splitquat/rng.hpp"

namespace splitquat {

namespace {

// fixed capacity: no heap traffic inside the inner loop
using JacMat = Eigen::Matrix<double, 4, Eigen::Dynamic, 0, 4, 4>;
using SqMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1>;


constexpr double kMergeRadius = 1e-7;

double scale_of(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                const std::array<double, 4>& x) {
  const double nx = std::hypot(std::hypot(x[0], x[1]), std::hypot(x[2], x[3]));
  return 1.0 + euclid_norm(a) * nx * nx + euclid_norm(b) * nx + euclid_norm(c);
}

double norm4(const std::array<double, 4>& f) { return std::hypot(std::hypot(f[0], f[1]), std::hypot(f[2], f[3])); }

}  // namespace

std::array<double, 4> real_system(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                                  const std::array<double, 4>& x) {
  const auto [x0, x1, x2, x3] = x;
  const double q = x0 * x0 - x1 * x1 + x2 * x2 + x3 * x3;
  return {
      a.s0 * q - 2 * a.s1 * x0 * x1 + 2 * a.s2 * x0 * x2 + 2 * a.s3 * x0 * x3 + b.s0 * x0 - b.s1 * x1 + b.s2 * x2 +
          b.s3 * x3 + c.s0,
      2 * a.s0 * x0 * x1 + a.s1 * q - 2 * a.s2 * x0 * x3 + 2 * a.s3 * x0 * x2 + b.s0 * x1 + b.s1 * x0 - b.s2 * x3 +
          b.s3 * x2 + c.s1,
      2 * a.s0 * x0 * x2 - 2 * a.s1 * x0 * x3 + a.s2 * q + 2 * a.s3 * x0 * x1 + b.s0 * x2 - b.s1 * x3 + b.s2 * x0 +
          b.s3 * x1 + c.s2,
      2 * a.s0 * x0 * x3 + 2 * a.s1 * x0 * x2 - 2 * a.s2 * x0 * x1 + a.s3 * q + b.s0 * x3 + b.s1 * x2 - b.s2 * x1 +
          b.s3 * x0 + c.s3,
  };
}

std::array<double, 16> real_system_jacobian(const SplitQuaternion& a, const SplitQuaternion& b,
                                            const std::array<double, 4>& x) {
  const auto [x0, x1, x2, x3] = x;
  const double a0 = a.s0, a1 = a.s1, a2 = a.s2, a3 = a.s3;
  const double b0 = b.s0, b1 = b.s1, b2 = b.s2, b3 = b.s3;
  return {
      2 * a0 * x0 - 2 * a1 * x1 + 2 * a2 * x2 + 2 * a3 * x3 + b0,
      -2 * a0 * x1 - 2 * a1 * x0 - b1,
      2 * a0 * x2 + 2 * a2 * x0 + b2,
      2 * a0 * x3 + 2 * a3 * x0 + b3,

      2 * a0 * x1 + 2 * a1 * x0 - 2 * a2 * x3 + 2 * a3 * x2 + b1,
      2 * a0 * x0 - 2 * a1 * x1 + b0,
      2 * a1 * x2 + 2 * a3 * x0 + b3,
      2 * a1 * x3 - 2 * a2 * x0 - b2,

      2 * a0 * x2 - 2 * a1 * x3 + 2 * a2 * x0 + 2 * a3 * x1 + b2,
      -2 * a2 * x1 + 2 * a3 * x0 + b3,
      2 * a0 * x0 + 2 * a2 * x2 + b0,
      -2 * a1 * x0 + 2 * a2 * x3 - b1,

      2 * a0 * x3 + 2 * a1 * x2 - 2 * a2 * x1 + 2 * a3 * x0 + b3,
      -2 * a2 * x0 - 2 * a3 * x1 - b2,
      2 * a1 * x0 + 2 * a3 * x2 + b1,
      2 * a0 * x0 + 2 * a3 * x3 + b0,
  };
}

std::vector<SplitQuaternion> oracle_roots(const SplitQuaternion& a, const SplitQuaternion& b,
                                          const SplitQuaternion& c, const OracleConfig& cfg,
                                          const FixedCoords& fixed) {
  std::vector<int> free;
  for (int n = 0; n < 4; ++n)
    if (!fixed[n]) free.push_back(n);
  const int nf = static_cast<int>(free.size());

  Rng rng(cfg.seed);
  std::vector<SplitQuaternion> found;
  for (int s = 0; s < cfg.starts; ++s) {
    std::array<double, 4> x{};
    for (int n = 0; n < 4; ++n) x[n] = fixed[n] ? *fixed[n] : rng.uniform(-cfg.box, cfg.box);
    if (nf == 0) {
      if (norm4(real_system(a, b, c, x)) <= cfg.tol * scale_of(a, b, c, x)) found.push_back({x[0], x[1], x[2], x[3]});
      continue;
    }
    auto f = real_system(a, b, c, x);
    double cost = norm4(f);
    double lambda = 1e-3;
    for (int it = 0; it < cfg.max_iter && cost > 0.5 * cfg.tol * scale_of(a, b, c, x); ++it) {
      const auto jf = real_system_jacobian(a, b, x);
      JacMat J(4, nf);
      for (int r = 0; r < 4; ++r)
        for (int k = 0; k < nf; ++k) J(r, k) = jf[4 * r + free[k]];
      const Eigen::Vector4d F(f[0], f[1], f[2], f[3]);
      const SqMat JtJ = J.transpose() * J;
      const Vec g = J.transpose() * F;
      bool improved = false;
      for (int tries = 0; tries < 12 && !improved; ++tries) {
        SqMat H = JtJ;
        H.diagonal().array() += lambda * (1.0 + JtJ.diagonal().array());
        const Vec step = H.ldlt().solve(-g);
        std::array<double, 4> y = x;
        for (int k = 0; k < nf; ++k) y[free[k]] += step[k];
        const auto fy = real_system(a, b, c, y);
        const double cy = norm4(fy);
        if (std::isfinite(cy) && cy < cost) {
          x = y;
          f = fy;
          cost = cy;
          lambda = std::max(lambda * 0.1, 1e-15);
          improved = true;
        } else {
          lambda *= 10.0;
        }
      }
      if (!improved) break;
    }
    // LM damping stalls near singular roots; finish with undamped
    // Gauss–Newton steps (minimum-norm least squares) and backtracking.
    for (int it = 0; it < 50 && cost > 0.0; ++it) {
      const auto jf = real_system_jacobian(a, b, x);
      JacMat J(4, nf);
      for (int r = 0; r < 4; ++r)
        for (int k = 0; k < nf; ++k) J(r, k) = jf[4 * r + free[k]];
      const Eigen::Vector4d F(f[0], f[1], f[2], f[3]);
      const Vec step = J.completeOrthogonalDecomposition().solve(-F);
      if (!step.allFinite()) break;
      bool improved = false;
      for (double t = 1.0; t >= 0x1.0p-20 && !improved; t *= 0.5) {
        std::array<double, 4> y = x;
        for (int k = 0; k < nf; ++k) y[free[k]] += t * step[k];
        const auto fy = real_system(a, b, c, y);
        const double cy = norm4(fy);
        if (cy < cost) {
          x = y;
          f = fy;
          cost = cy;
          improved = true;
        }
      }
      if (!improved) break;
    }
    if (cost <= cfg.tol * scale_of(a, b, c, x)) found.push_back({x[0], x[1], x[2], x[3]});
  }

  std::sort(found.begin(), found.end(), [](const SplitQuaternion& p, const SplitQuaternion& q) {
    return p.coords() < q.coords();
  });
  std::vector<SplitQuaternion> out;
  for (const auto& p : found) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const SplitQuaternion& q) {
      return distance(p, q) <= kMergeRadius * (1.0 + euclid_norm(q));
    });
    if (!dup) out.push_back(p);
  }
  return out;
}

}  // namespace splitquat
