#include <algorithm>
#include <cmath>

#include "splitquat/solver.hpp"
#include "splitquat/sqrt.hpp"

namespace splitquat {

namespace {

// Pre-filter for candidates built from necessary conditions; spurious ones
// miss by O(1). Certification applies the real bound later.
constexpr double kCandidateResidual = 1e-6;

Tracked tsq(Tracked x) { return x * x; }

std::vector<TNPair> tn_pairs_tracked(Tracked B, Tracked E, Tracked D, const Tolerance& tol) {
  std::vector<TNPair> out;
  auto add = [&](double T, double N) {
    for (const auto& p : out)
      if (std::fabs(p.T - T) <= 1e-12 * (1.0 + std::fabs(T)) && std::fabs(p.N - N) <= 1e-12 * (1.0 + std::fabs(N)))
        return;
    out.push_back({T, N});
  };
  if (tol.zero(D)) {
    const Tracked disc = tsq(B) - Tracked(4.0) * E;
    if (tol.nonnegative(disc)) {
      if (tol.zero(disc)) {
        add(0.0, B.v / 2.0);
      } else {
        const double sd = std::sqrt(disc.v);
        add(0.0, (B.v - sd) / 2.0);
        add(0.0, (B.v + sd) / 2.0);
      }
    }
    if (tol.nonnegative(E)) {
      const Tracked se = sqrt(Tracked(std::max(E.v, 0.0), E.mag));
      const Tracked lower = Tracked(-2.0) * se - B;
      const Tracked upper = Tracked(2.0) * se - B;
      if (tol.nonnegative(lower)) {
        const double t = tol.zero(lower) ? 0.0 : std::sqrt(lower.v);
        add(t, -se.v);
        add(-t, -se.v);
      }
      if (tol.nonnegative(upper)) {
        const double t = tol.zero(upper) ? 0.0 : std::sqrt(upper.v);
        add(t, se.v);
        add(-t, se.v);
      }
    }
    return out;
  }
  const CubicAnalysis an = classify_cubic(B.v, E.v, D.v);
  std::vector<double> zs = an.positive_roots;
  if (!tol.exact) {
    // Two close roots can be merged by the sign tests; the direct roots
    // supply the missing one and the residual filter drops spurious ones.
    const double coeffs[] = {1.0, 2.0 * B.v, B.v * B.v - 4.0 * E.v, -D.v * D.v};
    for (double z : real_polynomial_roots(coeffs))
      if (z > 0) zs.push_back(z);
  }
  for (double z : zs) {
    for (double sgn : {1.0, -1.0}) {
      const double T = sgn * std::sqrt(z);
      add(T, (T * T * T + B.v * T + D.v) / (2.0 * T));
    }
  }
  return out;
}

}  // namespace

SolutionSet solve_eq1(double b0, const SplitQuaternion& c, const Tolerance& tol) {
  SolutionSet out;
  const SplitQuaternion w = SplitQuaternion(b0 * b0 / 4.0) - c;
  const SqrtResult root = split_sqrt(w, tol);
  const double h = -b0 / 2.0;
  if (root.quadric) out.components.push_back(QuadricFamily{h, root.quadric->level});
  for (const auto& p : root.points) out.components.push_back(Point{SplitQuaternion(h) + p});
  if (out.components.empty()) out.failed_conditions.push_back("sqrt_nonempty");
  return out;
}

ConditionReport condition_a(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol) {
  ConditionReport rep;
  rep.condition = ConditionKind::A;
  const Tracked mb = tracked_minkowski_form(b);
  const Tracked mc = tracked_minkowski_form(c);
  rep.diagnostics["M_b"] = mb.v;
  rep.diagnostics["M_c"] = mc.v;
  if (!tol.nonnegative(mb) || !tol.nonnegative(mc)) return rep;

  const Tracked b1(b.s1), b2(b.s2), b3(b.s3), c0(c.s0), c1(c.s1), c2(c.s2), c3(c.s3);
  const Tracked s = b2 * b2 + b3 * b3;
  const Tracked den = b2 * c3 - b3 * c2;
  const Tracked inner = b2 * c2 + b3 * c3;
  rep.diagnostics["b2c3-b3c2"] = den.v;

  const double rabs = std::sqrt(std::max(mb.v, 0.0)) / 2.0;
  std::vector<double> candidates{rabs};
  if (rabs > 0) candidates.push_back(-rabs);
  for (double r : candidates) {
    const Tracked clause = Tracked(2.0) * den * Tracked(r) - b1 * inner + c1 * s;
    rep.diagnostics[r >= 0 ? "clause1(+r)" : "clause1(-r)"] = clause.v;
    if (tol.zero(clause)) rep.witnesses.push_back(r);
  }
  if (tol.zero(den)) {
    const Tracked clause2 = c0 * s + c2 * c2 + c3 * c3;
    rep.diagnostics["clause2"] = clause2.v;
    rep.holds = tol.zero(clause2) && !rep.witnesses.empty();
  } else {
    rep.holds = !rep.witnesses.empty();
  }
  return rep;
}

SolutionSet solve_eq2_sz(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol) {
  SolutionSet out;
  const ConditionReport rep = condition_a(b, c, tol);
  if (!rep.holds) {
    out.failed_conditions.push_back("condition_A");
    return out;
  }
  const double b1 = b.s1, b2 = b.s2, b3 = b.s3;
  const double c0 = c.s0, c1 = c.s1, c2 = c.s2, c3 = c.s3;
  const double s = b2 * b2 + b3 * b3;
  const double mb = minkowski_form(b);
  const double den = b2 * c3 - b3 * c2;
  auto coeffs = [&](double r) {
    const double a21 = (-mb * b2 / 2.0 - (b1 * b3 + 2.0 * c2) * r - b1 * c3) / s;
    const double a22 = (b1 * b2 - 2.0 * b3 * r) / s;
    const double a31 = (-mb * b3 / 2.0 + (b1 * b2 - 2.0 * c3) * r + b1 * c2) / s;
    const double a32 = (b1 * b3 + 2.0 * b2 * r) / s;
    return std::array<double, 4>{a21, a22, a31, a32};
  };
  if (!tol.zero(Tracked(den, std::fabs(b2 * c3) + std::fabs(b3 * c2)))) {
    // Single point; take the witness nearest the closed-form r.
    const double rf = (b1 * (b2 * c2 + b3 * c3) - c1 * s) / (2.0 * den);
    double r = rep.witnesses.front();
    for (double w : rep.witnesses)
      if (std::fabs(w - rf) < std::fabs(r - rf)) r = w;
    const double x1 = (c0 * s + b1 * (b3 * c2 - b2 * c3) + c2 * c2 + c3 * c3) / (2.0 * den);
    const auto k = coeffs(r);
    out.components.push_back(Point{{r, x1, k[0] + k[1] * x1, k[2] + k[3] * x1}});
    return out;
  }
  for (double r : rep.witnesses) {
    const auto k = coeffs(r);
    out.components.push_back(make_line({r, 0.0, k[0], k[2]}, {0.0, 1.0, k[1], k[3]}, "x1"));
  }
  return out;
}

std::vector<TNPair> tn_pairs(double B, double E, double D, const Tolerance& tol) {
  return tn_pairs_tracked(Tracked(B), Tracked(E), Tracked(D), tol);
}

std::vector<TNPair> tn_pairs(double B, double E, double D) {
  Tolerance tol;
  tol.exact = is_small_dyadic(B) && is_small_dyadic(E) && is_small_dyadic(D);
  return tn_pairs(B, E, D, tol);
}

SystemCoefficients eq2_system(const SplitQuaternion& b, const SplitQuaternion& c) {
  return {Tracked(2.0 * c.s0) + tracked_norm_form(b), tracked_norm_form(c), Tracked(2.0) * tracked_pairing(b, c)};
}

PairOutcome evaluate_pair(const SplitQuaternion& b, const SplitQuaternion& c, TNPair p, const Tolerance& tol) {
  PairOutcome out{p, std::nullopt, "ok"};
  const SplitQuaternion q = SplitQuaternion(p.T) + b;
  const Tracked iq = tracked_norm_form(q);
  if (tol.zero(iq)) {
    out.reason = "zero_divisor";
    return out;
  }
  const SplitQuaternion x = (conj(q) / iq.v) * (SplitQuaternion(p.N) - c);
  if (!(relative_residual(1.0, b, c, x) <= kCandidateResidual)) {
    out.reason = "residual";
    return out;
  }
  out.x = x;
  return out;
}

std::vector<PairOutcome> eq2_si_pairs(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol) {
  const SystemCoefficients sys = eq2_system(b, c);
  std::vector<PairOutcome> out;
  for (const auto& p : tn_pairs_tracked(sys.B, sys.E, sys.D, tol)) out.push_back(evaluate_pair(b, c, p, tol));
  return out;
}

SolutionSet solve_eq2_si(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol) {
  SolutionSet out;
  for (const auto& o : eq2_si_pairs(b, c, tol))
    if (o.x) out.components.push_back(Point{*o.x});
  return out;
}

bool predict_zero_divisor_T(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol) {
  const Tracked k = tracked_minkowski_pairing(b, c);
  return tol.zero(tracked_minkowski_form(b) * tracked_minkowski_form(c) - k * k);
}

}  // namespace splitquat
