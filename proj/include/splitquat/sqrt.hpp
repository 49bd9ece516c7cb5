#pragma once

#include <optional>
#include <vector>

#include "splitquat/algebra.hpp"
#include "splitquat/solset.hpp"
#include "splitquat/tolerance.hpp"

namespace splitquat {

struct SqrtResult {
  std::vector<SplitQuaternion> points;
  std::optional<QuadricFamily> quadric;  // only for real w
};

/// All x with x² = w. Real w gives the quadric −x1² + x2² + x3² = w0 (plus
/// ±√w0 when w0 > 0); otherwise two or four points, or none.
SqrtResult split_sqrt(const SplitQuaternion& w, const Tolerance& tol);
SqrtResult split_sqrt(const SplitQuaternion& w);

}  // namespace splitquat
