#include "splitquat/sqrt.hpp"

#include <cmath>

namespace splitquat {

SqrtResult split_sqrt(const SplitQuaternion& w) { return split_sqrt(w, Tolerance::for_inputs({w})); }

SqrtResult split_sqrt(const SplitQuaternion& w, const Tolerance& tol) {
  SqrtResult out;
  const double nw = euclid_norm(w);
  if (tol.zero(w.imag(), std::fabs(w.s0) + nw)) {
    const double w0 = w.s0;
    out.quadric = QuadricFamily{0.0, w0};
    if (tol.positive(Tracked(w0, nw))) {
      const double r = std::sqrt(w0);
      out.points = {SplitQuaternion(r), SplitQuaternion(-r)};
    }
    return out;
  }

  const Tracked iw = tracked_norm_form(w);
  if (!tol.nonnegative(iw)) return out;
  const double s = std::sqrt(std::max(iw.v, 0.0));
  const double plus = w.s0 + s;
  if (!(plus > tol.threshold() * (1.0 + nw))) return out;

  const SplitQuaternion up = (w + SplitQuaternion(s)) / std::sqrt(2.0 * plus);
  out.points = {up, -up};
  // w0 − √I_w = M_w / (w0 + √I_w), without the cancellation.
  const Tracked mw = tracked_minkowski_form(w);
  if (tol.positive(mw) && !tol.zero(iw)) {
    const double minus = mw.v / plus;
    const SplitQuaternion down = (w - SplitQuaternion(s)) / std::sqrt(2.0 * minus);
    out.points.push_back(down);
    out.points.push_back(-down);
  }
  return out;
}

}  // namespace splitquat
