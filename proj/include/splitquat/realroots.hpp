#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace splitquat {

/// Real roots of t² + p·t + q, ascending. A double root is reported once.
std::vector<double> real_quadratic_roots(double p, double q);

/// Real roots of the polynomial with coefficients in descending order
/// (coeffs[0]·t^n + ... + coeffs[n]), ascending and deduplicated. Leading
/// zeros are stripped; the zero polynomial yields no roots. Degrees above 4
/// are accepted but not the intended use.
std::vector<double> real_polynomial_roots(std::span<const double> coeffs);

/// Real roots of c4·t⁴ + c3·t³ + c2·t² + c1·t + c0, c4 ≠ 0.
std::vector<double> real_quartic_roots(double c4, double c3, double c2, double c1, double c0);

/// Horner evaluation, coefficients descending.
double poly_eval(std::span<const double> coeffs, double t);

enum class CubicCase { C1i, C1ii, C1iii, C1iv, C1v, C2vi, C2vii, C3, D_zero };

std::string_view to_string(CubicCase c);
/// 1, 2 or 3 for the D ≠ 0 cases; 0 for D_zero.
int expected_positive_roots(CubicCase c);

/// Positive-root analysis of f(z) = z³ + 2B·z² + (B² − 4E)·z − D².
struct CubicAnalysis {
  double B = 0.0;
  double E = 0.0;
  double D = 0.0;
  double F1 = 0.0;  // f at the left critical point (meaningful when B²+12E > 0)
  double F2 = 0.0;  // f at the right critical point
  CubicCase case_tag = CubicCase::D_zero;
  std::vector<double> positive_roots;  // ascending
};

/// Classifies by sign tests on B, B²+12E, B²−4E, F1, F2 and brackets the
/// positive roots between the critical points. |F| within 1e−9 of zero (scaled
/// by the magnitude of its terms) counts as zero. D == 0 returns D_zero with
/// no roots.
CubicAnalysis classify_cubic(double B, double E, double D);

}  // namespace splitquat
