#pragma once

#include <string_view>

#include "splitquat/algebra.hpp"
#include "splitquat/solset.hpp"
#include "splitquat/tolerance.hpp"

namespace splitquat {

enum class EquationKind { Linear, EqI, EqII, EqIII, EqIV };

std::string_view to_string(EquationKind k);

/// Normal form of a·y² + b·y + c = 0. Solutions x of the normal form map back
/// by y = x − shift.
///
///   Linear: a·x = d            (fields a, d)
///   EqI:    x² + b0·x + c = 0  (b real, b0 = b.s0)
///   EqII:   x² + b·x + c = 0   (b pure imaginary, nonzero)
///   EqIII:  a·x² + c = 0       (a = 1 + a2·j + a3·k, a2² + a3² = 1)
///   EqIV:   a·x² + b·x + c = 0 (a as in EqIII, b pure imaginary, nonzero)
struct ReducedEquation {
  EquationKind kind = EquationKind::Linear;
  SplitQuaternion a;
  SplitQuaternion b;
  SplitQuaternion c;
  SplitQuaternion d;
  double shift = 0.0;
  Tolerance tol;

  double b0() const { return b.s0; }
};

/// Normalizes the original equation; the returned tolerance is the policy
/// for the original inputs.
ReducedEquation classify(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                         double eps = 1e-9);
ReducedEquation classify(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                         const Tolerance& tol);

/// Translates every component by −shift in the scalar coordinate.
SolutionSet pull_back(const SolutionSet& s, double shift);

}  // namespace splitquat
