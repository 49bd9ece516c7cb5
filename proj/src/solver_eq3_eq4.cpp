#include <cmath>

#include "splitquat/solver.hpp"

namespace splitquat {

namespace {

constexpr double kCandidateResidual = 1e-6;

struct Eq4Terms {
  Tracked a2, a3, b1, b2, b3, c0, c1, c2, c3;
  Tracked delta, t1, t2;
};

Eq4Terms eq4_terms(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c) {
  Eq4Terms t{Tracked(a.s2), Tracked(a.s3), Tracked(b.s1), Tracked(b.s2), Tracked(b.s3),
             Tracked(c.s0), Tracked(c.s1), Tracked(c.s2), Tracked(c.s3), {}, {}, {}};
  t.delta = t.a2 * t.b3 - t.a3 * t.b2 + t.b1;
  t.t1 = t.c2 - t.c0 * t.a2 - t.a3 * t.c1;
  t.t2 = t.c3 - t.c0 * t.a3 + t.a2 * t.c1;
  return t;
}

bool solvable_ac2c(const SplitQuaternion& a, const SplitQuaternion& c, const Tolerance& tol) {
  return tol.zero(a * c - 2.0 * c, 2.0 * euclid_norm(c));
}

// x = (T·a + b)⁻¹(a·N − c) when T·a + b is invertible and the result checks.
std::optional<SplitQuaternion> reconstruct(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                                           double T, double N, const Tolerance& tol) {
  const SplitQuaternion q = T * a + b;
  const Tracked iq = tracked_norm_form(q);
  if (tol.zero(iq)) return std::nullopt;
  const SplitQuaternion x = (conj(q) / iq.v) * (N * a - c);
  if (!(relative_residual(a, b, c, x) <= kCandidateResidual)) return std::nullopt;
  return x;
}

struct DefB {
  Tracked x0, k1, k2, m, d1, d2, R, L, F;
};

DefB definition_b(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c) {
  const Eq4Terms t = eq4_terms(a, b, c);
  const Tracked ib = tracked_norm_form(b);
  const Tracked pab = tracked_pairing(a, b);
  const Tracked two(2.0);
  DefB r;
  r.x0 = -ib / (Tracked(4.0) * pab);
  r.k1 = two * t.b2 * t.delta - t.a3 * ib;
  r.k2 = Tracked(-2.0) * t.b3 * t.delta - t.a2 * ib;
  r.m = two * t.b1 * t.delta - ib;
  r.d1 = (-pab * t.t1 - t.delta * t.t2) / r.m;
  r.d2 = (t.delta * t.t1 - pab * t.t2) / r.m;
  const Tracked x0 = r.x0, k1 = r.k1, k2 = r.k2, m = r.m, d1 = r.d1, d2 = r.d2;
  r.R = (two * k1 * d1 - two * k2 * d2 + t.b2 * k1 - t.b3 * k2 + two * (t.a2 * k1 - t.a3 * k2) * x0 - m * t.b1) / m;
  r.L = t.b2 * d1 + t.b3 * d2 + d1 * d1 + d2 * d2 + t.c0 + two * (t.a2 * k2 + t.a3 * k1 + m) / m * x0 * x0 +
        (two * k2 * d1 + two * k1 * d2 + t.b2 * k2 + t.b3 * k1 + two * t.a2 * d1 * m + two * t.a3 * d2 * m) / m * x0;
  r.F = (two * t.a3 * k2 - two * t.a2 * k1) / m * x0 * x0 +
        ((t.b3 * k2 - t.b2 * k1) / m + two * t.a3 * d1 - two * t.a2 * d2 + t.b1) * x0 + t.b3 * d1 - t.b2 * d2 + t.c1;
  return r;
}

}  // namespace

SolutionSet solve_eq3(const SplitQuaternion& a, const SplitQuaternion& c, const Tolerance& tol) {
  SolutionSet out;
  if (!solvable_ac2c(a, c, tol)) {
    out.failed_conditions.push_back("ac=2c");
    return out;
  }
  const double nc = euclid_norm(c);
  const double a2 = a.s2, a3 = a.s3;
  if (tol.zero(Tracked(c.s1, nc))) {
    out.components.push_back(QuadricFamily{0.0, -c.s0});
    const Tracked mc0(-c.s0, nc);
    if (tol.nonnegative(mc0)) out.components.push_back(TiltedPlanePair{tol.zero(mc0) ? 0.0 : c.s0, a2, a3, 0.0});
  } else {
    out.components.push_back(ImplicitQuarticFamily{ImplicitCase::NoLinearTerm, a2, a3, 0.0, c.s0, c.s1, 0.0});
  }
  return out;
}

ConditionReport condition_b(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                            const Tolerance& tol) {
  const DefB d = definition_b(a, b, c);
  ConditionReport rep;
  rep.condition = ConditionKind::B;
  rep.diagnostics = {{"x0", d.x0.v}, {"k1", d.k1.v}, {"k2", d.k2.v}, {"m", d.m.v}, {"Delta1", d.d1.v},
                     {"Delta2", d.d2.v}, {"R", d.R.v}, {"L", d.L.v}, {"F", d.F.v}};
  rep.holds = tol.zero(d.F) && (!tol.zero(d.R) || tol.zero(d.L));
  return rep;
}

ConditionReport condition_c(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                            const Tolerance& tol) {
  const Eq4Terms t = eq4_terms(a, b, c);
  ConditionReport rep;
  rep.condition = ConditionKind::C;
  const Tracked two(2.0);
  const Tracked g = t.a2 * t.t1 + t.a3 * t.t2;
  const Tracked gap = t.delta - two * t.b1;
  rep.diagnostics = {{"delta", t.delta.v}, {"t1", t.t1.v}, {"t2", t.t2.v}, {"a2t1+a3t2", g.v}};
  if (!tol.zero(gap)) return rep;
  if (!tol.zero(g)) {
    rep.holds = true;
    return rep;
  }
  const Tracked e1 = t.a2 * t.t2 - t.a3 * t.t1 - two * t.c1;
  const Tracked e2 = t.t1 * t.t1 + t.t2 * t.t2 + Tracked(4.0) * t.b1 * t.b1 * t.c0;
  rep.diagnostics["a2t2-a3t1-2c1"] = e1.v;
  rep.diagnostics["t1^2+t2^2+4b1^2c0"] = e2.v;
  rep.holds = tol.zero(e1) && tol.zero(e2);
  return rep;
}

std::array<double, 9> eq4_sz_matrix(const SplitQuaternion& a, const SplitQuaternion& b) {
  const double a2 = a.s2, a3 = a.s3, b1 = b.s1, b2 = b.s2, b3 = b.s3;
  const double x0 = -norm_form(b) / (4.0 * pairing(a, b));
  const double d = a2 * b3 - a3 * b2 + b1;
  return {2 * x0,          b3 + 2 * a3 * x0,       -b2 - 2 * a2 * x0,  //
          -a2 * b1 - b3,   a2 * b2 + a3 * b3,      d,                  //
          -a3 * b1 + b2,   a3 * b2 - a2 * b3 - b1, a2 * b2 + a3 * b3};
}

SolutionSet solve_eq4_sz(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                         const Tolerance& tol) {
  SolutionSet out;
  const Tracked pab = tracked_pairing(a, b);
  if (!tol.zero(pab)) {
    if (!condition_b(a, b, c, tol).holds) {
      out.failed_conditions.push_back("condition_B");
      return out;
    }
    const DefB d = definition_b(a, b, c);
    const double x0 = d.x0.v, m = d.m.v, k1 = d.k1.v / m, k2 = d.k2.v / m;
    if (!tol.zero(d.R)) {
      const double x1 = -d.L.v / d.R.v;
      out.components.push_back(Point{{x0, x1, k1 * x1 + k2 * x0 + d.d1.v, -k2 * x1 + k1 * x0 + d.d2.v}});
    } else {
      out.components.push_back(
          make_line({x0, 0.0, k2 * x0 + d.d1.v, k1 * x0 + d.d2.v}, {0.0, 1.0, k1, -k2}, "x1"));
    }
    return out;
  }
  if (!tol.zero(tracked_norm_form(b))) {
    out.failed_conditions.push_back("I_b=0");
    return out;
  }
  const Eq4Terms t = eq4_terms(a, b, c);
  const double a2 = a.s2, a3 = a.s3, b1 = b.s1, c0 = c.s0, c1 = c.s1;
  if (tol.zero(t.delta - Tracked(2.0) * t.b1)) {
    if (!condition_c(a, b, c, tol).holds) {
      out.failed_conditions.push_back("condition_C");
      return out;
    }
    const double t1 = t.t1.v, t2 = t.t2.v;
    const Tracked g = t.a2 * t.t1 + t.a3 * t.t2;
    if (!tol.zero(g)) {
      const double x0 = (a3 * t1 - a2 * t2 + 2.0 * c1) * b1 / (2.0 * g.v);
      const double x1 = -(t1 * t1 + t2 * t2 + 2.0 * b1 * b1 * g.v + 4.0 * b1 * b1 * c0) / (4.0 * b1 * g.v);
      out.components.push_back(
          Point{{x0, x1, -a2 * x0 - a3 * x1 - t2 / (2.0 * b1), -a3 * x0 + a2 * x1 + t1 / (2.0 * b1)}});
    } else {
      out.components.push_back(make_plane({0.0, 0.0, -t2 / (2.0 * b1), t1 / (2.0 * b1)}, {1.0, 0.0, -a2, -a3},
                                          {0.0, 1.0, -a3, a2}, "x0", "x1"));
    }
    return out;
  }
  if (!tol.zero(t.delta)) {
    out.failed_conditions.push_back("delta in {0, 2b1}");
    return out;
  }
  if (!solvable_ac2c(a, c, tol)) {
    out.failed_conditions.push_back("ac=2c");
    return out;
  }
  const ImplicitCase zero_trace =
      tol.zero(Tracked(a2, 1.0)) ? ImplicitCase::TraceZeroA2Zero : ImplicitCase::TraceZeroA2Nonzero;
  out.components.push_back(ImplicitQuarticFamily{zero_trace, zero_trace == ImplicitCase::TraceZeroA2Zero ? 0.0 : a2,
                                                 a3, b1, c0, c1, 0.0});
  out.components.push_back(ImplicitQuarticFamily{ImplicitCase::TraceNonzero, a2, a3, b1, c0, c1, 0.0});
  ParabolicCurve pc;
  pc.p2 = 1.0 / b1;
  pc.p1 = 2.0 * c1 / (b1 * b1);
  pc.p0 = c1 * c1 / (b1 * b1 * b1) - b1 / 4.0 + c0 / b1;
  pc.q0 = a2 * c1 / b1 - a3 * b1 / 2.0;
  pc.q1 = -a3;
  pc.r0 = a3 * c1 / b1 + a2 * b1 / 2.0;
  pc.r1 = a2;
  out.components.push_back(pc);
  return out;
}

SolutionSet solve_eq4_si(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                         const Tolerance& tol) {
  SolutionSet out;
  const Tracked pab = tracked_pairing(a, b);
  const Tracked pac = tracked_pairing(a, c);
  const Tracked pbc = tracked_pairing(b, c);
  const Tracked ib = tracked_norm_form(b);
  const Tracked ic = tracked_norm_form(c);
  const Tracked q = Tracked(2.0) * pac + ib;
  auto emit = [&](double T, double N) {
    if (auto x = reconstruct(a, b, c, T, N, tol)) out.components.push_back(Point{*x});
  };
  if (!tol.zero(pab)) {
    const double P = pab.v, Q = q.v, Pbc = pbc.v, Ic = ic.v;
    const double cubic[4] = {4.0 * P * P, 4.0 * P * Q, 4.0 * P * Pbc + Q * Q, 2.0 * Pbc * Q - 2.0 * P * Ic};
    for (double T : real_polynomial_roots(cubic)) emit(T, (2.0 * P * T * T + Q * T + 2.0 * Pbc) / (2.0 * P));
    return out;
  }
  if (!tol.zero(q)) {
    emit(-2.0 * pbc.v / q.v, ic.v / q.v);
    return out;
  }
  if (!tol.zero(ic) || !tol.zero(pbc) || tol.zero(ib)) {
    out.failed_conditions.push_back("I_c=0, P_bc=0, I_b!=0");
    return out;
  }
  const Eq4Terms t = eq4_terms(a, b, c);
  const Tracked F = t.t1 * t.t1 + t.t2 * t.t2 + (t.b3 * t.t1 - t.b2 * t.t2) * t.delta + t.c0 * t.delta * t.delta;
  if (!tol.zero(F)) {
    out.failed_conditions.push_back("F=0");
    return out;
  }
  const double d = t.delta.v, a2 = a.s2, a3 = a.s3, b1 = b.s1, b2 = b.s2, b3 = b.s3;
  const double u = (a2 * b1 + b3) / d;
  const double v = (a3 * b1 - b2) / d;
  out.components.push_back(
      make_plane({0.0, 0.0, -t.t2.v / d, t.t1.v / d}, {1.0, 0.0, -u, -v}, {0.0, 1.0, -v, u}, "x0", "x1"));
  return out;
}

}  // namespace splitquat
