#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "splitquat/algebra.hpp"

namespace splitquat {

struct OracleConfig {
  int starts = 256;
  double box = 8.0;  // seeds uniform in [−box, box]⁴
  std::uint64_t seed = 42;
  double tol = 1e-10;  // on the relative residual
  int max_iter = 200;
};

/// Coordinates held fixed during the search; nullopt entries are free.
using FixedCoords = std::array<std::optional<double>, 4>;

/// The four real equations of a·x² + b·x + c = 0 written out coordinatewise,
/// and their Jacobian (row-major, 4×4) with respect to (x0, x1, x2, x3).
std::array<double, 4> real_system(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                                  const std::array<double, 4>& x);
std::array<double, 16> real_system_jacobian(const SplitQuaternion& a, const SplitQuaternion& b,
                                            const std::array<double, 4>& x);

/// Multistart Levenberg–Marquardt on the real system. Converged points are
/// sorted and merged within 1e−7. Families are represented by whatever
/// points the starts land on; the result is not exhaustive.
std::vector<SplitQuaternion> oracle_roots(const SplitQuaternion& a, const SplitQuaternion& b,
                                          const SplitQuaternion& c, const OracleConfig& cfg = {},
                                          const FixedCoords& fixed = {});

}  // namespace splitquat
