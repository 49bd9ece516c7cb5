#include <Eigen/Dense>

#include "splitquat/linear.hpp"
#include "splitquat/solver.hpp"

namespace splitquat {

namespace {

void append(SolutionSet& into, SolutionSet&& more) {
  for (auto& c : more.components) into.components.push_back(std::move(c));
  for (auto& f : more.failed_conditions) into.failed_conditions.push_back(std::move(f));
}

Eigen::Vector4d vec(const SplitQuaternion& q) { return {q.s0, q.s1, q.s2, q.s3}; }

}  // namespace

SolutionSet solve_reduced(const ReducedEquation& r) {
  switch (r.kind) {
    case EquationKind::Linear:
      return solve_linear(r.a, r.d, r.tol);
    case EquationKind::EqI:
      return solve_eq1(r.b0(), r.c, r.tol);
    case EquationKind::EqII: {
      SolutionSet s = solve_eq2_sz(r.b, r.c, r.tol);
      append(s, solve_eq2_si(r.b, r.c, r.tol));
      return s;
    }
    case EquationKind::EqIII:
      return solve_eq3(r.a, r.c, r.tol);
    case EquationKind::EqIV: {
      SolutionSet s = solve_eq4_sz(r.a, r.b, r.c, r.tol);
      append(s, solve_eq4_si(r.a, r.b, r.c, r.tol));
      return s;
    }
  }
  return {};
}

SplitQuaternion polish_root(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                            const SplitQuaternion& x, int iterations) {
  SplitQuaternion best = x;
  double best_res = residual(a, b, c, x);
  for (int it = 0; it < iterations && best_res > 0.0; ++it) {
    // d/dx of a·x² + b·x + c in direction e is a·(e·x + x·e) + b·e.
    Eigen::Matrix4d J;
    for (int n = 0; n < 4; ++n) {
      const SplitQuaternion e{n == 0 ? 1.0 : 0.0, n == 1 ? 1.0 : 0.0, n == 2 ? 1.0 : 0.0, n == 3 ? 1.0 : 0.0};
      J.col(n) = vec(a * (e * best + best * e) + b * e);
    }
    const Eigen::Vector4d F = vec(a * best * best + b * best + c);
    const Eigen::Vector4d step = J.completeOrthogonalDecomposition().solve(-F);
    if (!step.allFinite()) break;
    const SplitQuaternion dx{step[0], step[1], step[2], step[3]};
    // backtrack: near a double root the full step tends to overshoot
    bool moved = false;
    for (double t = 1.0; t >= 0x1.0p-10 && !moved; t *= 0.5) {
      const SplitQuaternion next = best + t * dx;
      const double res = residual(a, b, c, next);
      if (res < best_res) {
        best = next;
        best_res = res;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return best;
}

CertifiedSolutionSet solve(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                           const SolveConfig& cfg) {
  const Tolerance tol = Tolerance::for_inputs({a, b, c}, cfg.eps);
  const ReducedEquation r = classify(a, b, c, tol);
  SolutionSet s = pull_back(solve_reduced(r), r.shift);
  if (cfg.polish)
    for (auto& comp : s.components)
      if (auto* p = std::get_if<Point>(&comp)) p->q = polish_root(a, b, c, p->q);
  s.components = dedupe(std::move(s.components));
  return certify(a, b, c, s, cfg.certify);
}

}  // namespace splitquat
