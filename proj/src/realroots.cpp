#include "splitquat/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace splitquat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double poly_scale(std::span<const double> c, double t) {
  double s = 0.0;
  const double at = std::fabs(t);
  for (double v : c) s = s * at + std::fabs(v);
  return s;
}

std::vector<double> derivative(std::span<const double> c) {
  const std::size_t n = c.size() - 1;
  std::vector<double> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = c[k] * static_cast<double>(n - k);
  return d;
}

double poly_deriv(std::span<const double> c, double t) {
  double p = 0.0;
  double dp = 0.0;
  for (double v : c) {
    dp = dp * t + p;
    p = p * t + v;
  }
  return dp;
}

// Root of f in [lo, hi] given f(lo)·f(hi) < 0; Newton steps that stay inside
// the current bracket, bisection otherwise.
double bracketed_root(std::span<const double> c, double lo, double hi, double flo) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    const double fx = poly_eval(c, x);
    if (fx == 0.0) return x;
    if ((fx < 0) == (flo < 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    if (hi - lo <= 2.0 * kEps * std::max(std::fabs(lo), std::fabs(hi))) break;
    const double d = poly_deriv(c, x);
    double next = d != 0.0 ? x - fx / d : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) break;
    x = next;
  }
  const double flo2 = std::fabs(poly_eval(c, lo));
  const double fhi2 = std::fabs(poly_eval(c, hi));
  const double fx = std::fabs(poly_eval(c, x));
  if (fx <= flo2 && fx <= fhi2) return x;
  return flo2 <= fhi2 ? lo : hi;
}

// Root in [lo, hi] when the interval is known to contain one; falls back to
// the endpoint with the smaller |f| if rounding hid the sign change.
double root_in(std::span<const double> c, double lo, double hi) {
  const double flo = poly_eval(c, lo);
  const double fhi = poly_eval(c, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) != (fhi < 0)) return bracketed_root(c, lo, hi, flo);
  return std::fabs(flo) <= std::fabs(fhi) ? lo : hi;
}

void merge_sorted(std::vector<double>& r, std::span<const double> c) {
  std::sort(r.begin(), r.end());
  std::vector<double> out;
  for (double v : r) {
    if (!out.empty() && v - out.back() <= 1e-8 * (1.0 + std::fabs(v))) {
      if (std::fabs(poly_eval(c, v)) < std::fabs(poly_eval(c, out.back()))) out.back() = v;
      continue;
    }
    out.push_back(v);
  }
  r = std::move(out);
}

}  // namespace

double poly_eval(std::span<const double> c, double t) {
  double p = 0.0;
  for (double v : c) p = p * t + v;
  return p;
}

std::vector<double> real_quadratic_roots(double p, double q) {
  const double disc = p * p - 4.0 * q;
  if (disc < 0) return {};
  if (disc == 0) return {-0.5 * p};
  // Avoid cancellation: the larger-magnitude root first, then Vieta.
  const double s = std::sqrt(disc);
  const double big = -0.5 * (p + std::copysign(s, p == 0.0 ? 1.0 : p));
  double r1 = big;
  double r2 = big != 0.0 ? q / big : 0.0;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

std::vector<double> real_polynomial_roots(std::span<const double> coeffs) {
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0.0) ++first;
  std::span<const double> c = coeffs.subspan(first);
  if (c.size() <= 1) return {};
  if (c.size() == 2) return {-c[1] / c[0]};
  if (c.size() == 3) return real_quadratic_roots(c[1] / c[0], c[2] / c[0]);

  double bound = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k) bound = std::max(bound, std::fabs(c[k] / c[0]));
  bound += 1.0;

  const std::vector<double> dc = derivative(c);
  std::vector<double> nodes{-bound};
  for (double z : real_polynomial_roots(dc))
    if (z > -bound && z < bound) nodes.push_back(z);
  nodes.push_back(bound);

  // A critical point where f vanishes to rounding accuracy is a multiple root.
  std::vector<bool> zero(nodes.size(), false);
  std::vector<double> roots;
  for (std::size_t k = 1; k + 1 < nodes.size(); ++k) {
    if (std::fabs(poly_eval(c, nodes[k])) <= 64.0 * kEps * poly_scale(c, nodes[k])) {
      zero[k] = true;
      roots.push_back(nodes[k]);
    }
  }
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    if (zero[k] || zero[k + 1]) continue;
    const double lo = nodes[k];
    const double hi = nodes[k + 1];
    const double flo = poly_eval(c, lo);
    const double fhi = poly_eval(c, hi);
    if (flo == 0.0) {
      roots.push_back(lo);
    } else if (fhi == 0.0) {
      roots.push_back(hi);
    } else if ((flo < 0) != (fhi < 0)) {
      roots.push_back(bracketed_root(c, lo, hi, flo));
    }
  }
  merge_sorted(roots, c);
  return roots;
}

std::vector<double> real_quartic_roots(double c4, double c3, double c2, double c1, double c0) {
  const double c[5] = {c4, c3, c2, c1, c0};
  return real_polynomial_roots(c);
}

std::string_view to_string(CubicCase c) {
  switch (c) {
    case CubicCase::C1i: return "C1i";
    case CubicCase::C1ii: return "C1ii";
    case CubicCase::C1iii: return "C1iii";
    case CubicCase::C1iv: return "C1iv";
    case CubicCase::C1v: return "C1v";
    case CubicCase::C2vi: return "C2vi";
    case CubicCase::C2vii: return "C2vii";
    case CubicCase::C3: return "C3";
    case CubicCase::D_zero: return "D_zero";
  }
  return "?";
}

int expected_positive_roots(CubicCase c) {
  switch (c) {
    case CubicCase::C2vi:
    case CubicCase::C2vii: return 2;
    case CubicCase::C3: return 3;
    case CubicCase::D_zero: return 0;
    default: return 1;
  }
}

CubicAnalysis classify_cubic(double B, double E, double D) {
  CubicAnalysis out;
  out.B = B;
  out.E = E;
  out.D = D;
  const double delta = B * B + 12.0 * E;
  const double f1c = B * B - 4.0 * E;  // f'(0)
  const double coeffs[4] = {1.0, 2.0 * B, f1c, -D * D};

  // 27·F evaluated directly keeps integer inputs integral.
  double sq = 0.0;
  double zc1 = 0.0;
  double zc2 = 0.0;
  bool f1_zero = false;
  bool f2_zero = false;
  if (delta > 0) {
    sq = std::sqrt(delta);
    const double pow15 = delta * sq;
    const double base = -2.0 * B * B * B + 72.0 * E * B - 27.0 * D * D;
    const double mag = std::fabs(2.0 * B * B * B) + 2.0 * pow15 + std::fabs(72.0 * E * B) + 27.0 * D * D;
    const double f1 = base + 2.0 * pow15;
    const double f2 = base - 2.0 * pow15;
    out.F1 = f1 / 27.0;
    out.F2 = f2 / 27.0;
    f1_zero = std::fabs(f1) <= 1e-9 * mag;
    f2_zero = std::fabs(f2) <= 1e-9 * mag;
    zc1 = (-2.0 * B - sq) / 3.0;
    zc2 = (-2.0 * B + sq) / 3.0;
  } else {
    const double base = (-2.0 * B * B * B + 72.0 * E * B - 27.0 * D * D) / 27.0;
    out.F1 = out.F2 = base;
  }
  if (D == 0.0) {
    out.case_tag = CubicCase::D_zero;
    return out;
  }

  double bound = 1.0 + std::max({std::fabs(2.0 * B), std::fabs(f1c), D * D});
  auto& roots = out.positive_roots;
  if (delta <= 0) {
    out.case_tag = CubicCase::C1i;
    roots.push_back(root_in(coeffs, 0.0, bound));
  } else if (B >= 0) {
    out.case_tag = CubicCase::C1ii;
    roots.push_back(root_in(coeffs, std::max(0.0, zc2), bound));
  } else if (f1c <= 0) {
    // f'(0) = 0 with B < 0 puts z1 at the origin; f still falls then rises on
    // (0, ∞), the same shape as f'(0) < 0.
    out.case_tag = CubicCase::C1iii;
    roots.push_back(root_in(coeffs, std::max(0.0, zc2), bound));
  } else if (f1_zero) {
    out.case_tag = CubicCase::C2vi;
    roots.push_back(zc1);
    roots.push_back(root_in(coeffs, zc2, bound));
  } else if (f2_zero) {
    out.case_tag = CubicCase::C2vii;
    roots.push_back(root_in(coeffs, 0.0, zc1));
    roots.push_back(zc2);
  } else if (out.F1 < 0) {
    out.case_tag = CubicCase::C1iv;
    roots.push_back(root_in(coeffs, zc2, bound));
  } else if (out.F2 > 0) {
    out.case_tag = CubicCase::C1v;
    roots.push_back(root_in(coeffs, 0.0, zc1));
  } else {
    out.case_tag = CubicCase::C3;
    roots.push_back(root_in(coeffs, 0.0, zc1));
    roots.push_back(root_in(coeffs, zc1, zc2));
    roots.push_back(root_in(coeffs, zc2, bound));
  }
  std::sort(roots.begin(), roots.end());
  return out;
}

}  // namespace splitquat
