#pragma once

#include "splitquat/algebra.hpp"
#include "splitquat/solset.hpp"
#include "splitquat/tolerance.hpp"

namespace splitquat {

/// All x with a·x = d: a point for invertible a; for a zero divisor the plane
/// a⁺d + (1 − a⁺a)·y when a·a⁺·d = d, else empty; for a = 0 the whole space
/// when d = 0, else empty.
SolutionSet solve_linear(const SplitQuaternion& a, const SplitQuaternion& d, const Tolerance& tol);
SolutionSet solve_linear(const SplitQuaternion& a, const SplitQuaternion& d, double eps = 1e-9);

}  // namespace splitquat
