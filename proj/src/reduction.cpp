#include "splitquat/reduction.hpp"

#include <cassert>
#include <cmath>

namespace splitquat {

std::string_view to_string(EquationKind k) {
  switch (k) {
    case EquationKind::Linear: return "linear";
    case EquationKind::EqI: return "I";
    case EquationKind::EqII: return "II";
    case EquationKind::EqIII: return "III";
    case EquationKind::EqIV: return "IV";
  }
  return "?";
}

ReducedEquation classify(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c, double eps) {
  return classify(a, b, c, Tolerance::for_inputs({a, b, c}, eps));
}

ReducedEquation classify(const SplitQuaternion& a0, const SplitQuaternion& b0, const SplitQuaternion& c0,
                         const Tolerance& tol) {
  ReducedEquation r;
  r.tol = tol;
  const double na = euclid_norm(a0);
  if (na == 0.0 || tol.zero(a0, euclid_norm(b0) + euclid_norm(c0))) {
    r.kind = EquationKind::Linear;
    r.a = b0;
    r.d = -c0;
    return r;
  }
  // Dividing by the real ‖a‖ leaves the solution set alone and makes the
  // zero-divisor test scale free.
  const SplitQuaternion a = a0 / na;
  const SplitQuaternion b = b0 / na;
  const SplitQuaternion c = c0 / na;
  const double scale = 1.0 + euclid_norm(b) + euclid_norm(c);

  if (!tol.zero(tracked_norm_form(a))) {
    const SplitQuaternion ai = conj(a) / norm_form(a);
    const SplitQuaternion d = ai * b;
    const SplitQuaternion f = ai * c;
    if (tol.zero(d.imag(), euclid_norm(d))) {
      r.kind = EquationKind::EqI;
      r.a = SplitQuaternion(1.0);
      r.b = SplitQuaternion(d.s0);
      r.c = f;
      return r;
    }
    const double h = d.s0 / 2.0;
    r.kind = EquationKind::EqII;
    r.a = SplitQuaternion(1.0);
    r.b = d.imag();
    r.c = f - h * (d - SplitQuaternion(h));
    r.shift = h;
    return r;
  }

  // a = d1 + d2·j with d1 = a0 + a1·i; |d1| = |d2| > 0 for a zero divisor.
  const SplitQuaternion d1{a.s0, a.s1, 0.0, 0.0};
  const double n1 = a.s0 * a.s0 + a.s1 * a.s1;
  assert(n1 > 0);
  const SplitQuaternion d1i = conj(d1) / n1;
  SplitQuaternion lead = d1i * a;  // 1 + (d1⁻¹d2)·j
  const double rn = std::hypot(lead.s2, lead.s3);
  lead = {1.0, 0.0, lead.s2 / rn, lead.s3 / rn};
  const SplitQuaternion e = d1i * b;
  const double k0 = e.s0;
  SplitQuaternion bb = e - k0 * lead;
  bb.s0 = 0.0;
  const SplitQuaternion cc = d1i * c - (k0 / 2.0) * e + (k0 * k0 / 4.0) * lead;

  r.a = lead;
  r.c = cc;
  r.shift = k0 / 2.0;
  if (tol.zero(bb, scale)) {
    r.kind = EquationKind::EqIII;
  } else {
    r.kind = EquationKind::EqIV;
    r.b = bb;
  }
  return r;
}

SolutionSet pull_back(const SolutionSet& s, double shift) {
  SolutionSet out;
  out.failed_conditions = s.failed_conditions;
  for (const auto& comp : s.components) out.components.push_back(shift == 0.0 ? comp : translate(comp, shift));
  return out;
}

}  // namespace splitquat
