#include "splitquat/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace splitquat {

namespace {

constexpr std::size_t kKeptFailures = 10;

double coord(Rng& rng) { return rng.uniform(-2.0, 2.0); }

SplitQuaternion random_quat(Rng& rng) { return {coord(rng), coord(rng), coord(rng), coord(rng)}; }
SplitQuaternion random_imag(Rng& rng) { return {0.0, coord(rng), coord(rng), coord(rng)}; }

SplitQuaternion random_invertible(Rng& rng) {
  for (;;) {
    const SplitQuaternion u = random_quat(rng);
    if (std::fabs(norm_form(u)) >= 0.25 * euclid_norm_sq(u) && euclid_norm(u) >= 0.5) return u;
  }
}

/// Nonzero complex number s0 + s1·i with modulus in [0.5, 2].
SplitQuaternion random_complex(Rng& rng) {
  const double r = rng.uniform(0.5, 2.0), phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return {r * std::cos(phi), r * std::sin(phi), 0.0, 0.0};
}

/// Reduced leading coefficient 1 + cosθ·j + sinθ·k.
SplitQuaternion random_lead(Rng& rng) {
  const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return {1.0, 0.0, std::cos(th), std::sin(th)};
}

/// From a reduced equation a'·y² + b'·y + c' = 0 with root y, builds
/// u·a'·x² + u·(2h·a' + b')·x + u·(a'h² + b'h + c') = 0 with root x = y − h.
PlantedInstance lift(const SplitQuaternion& u, double h, const SplitQuaternion& ar, const SplitQuaternion& br,
                     const SplitQuaternion& y, std::string variant) {
  const SplitQuaternion cr = -(ar * y * y + br * y);
  PlantedInstance p;
  p.a = u * ar;
  p.b = u * (2.0 * h * ar + br);
  p.c = u * (h * h * ar + h * br + cr);
  p.root = y - h;
  p.variant = std::move(variant);
  return p;
}

PlantedInstance planted_i(Rng& rng) {
  const SplitQuaternion u = random_invertible(rng);
  return lift(u, 0.0, 1.0, coord(rng), random_quat(rng), "I");
}

PlantedInstance planted_ii(Rng& rng) {
  const SplitQuaternion u = random_invertible(rng);
  const double h = coord(rng);
  if (rng.uniform() < 0.6) {
    SplitQuaternion b;
    do b = random_imag(rng);
    while (euclid_norm(b) < 0.25);
    return lift(u, h, 1.0, b, random_quat(rng), "II_SI");
  }
  // 2y0 + b is a zero divisor exactly when 4y0² = M_b.
  SplitQuaternion b;
  do b = random_imag(rng);
  while (minkowski_form(b) < 0.25);
  SplitQuaternion y = random_quat(rng);
  y.s0 = (rng.uniform() < 0.5 ? -0.5 : 0.5) * std::sqrt(minkowski_form(b));
  return lift(u, h, 1.0, b, y, "II_SZ");
}

PlantedInstance planted_iii(Rng& rng) {
  const double h = rng.uniform() < 0.5 ? 0.0 : coord(rng);
  return lift(random_complex(rng), h, random_lead(rng), 0.0, random_quat(rng), "III");
}

PlantedInstance planted_iv(Rng& rng) {
  const SplitQuaternion u = random_complex(rng);
  const double h = coord(rng);
  const SplitQuaternion a = random_lead(rng);
  const double a2 = a.s2, a3 = a.s3;
  const double pick = rng.uniform();
  SplitQuaternion y = random_quat(rng);
  if (pick < 0.4) {
    SplitQuaternion b;
    do b = random_imag(rng);
    while (std::fabs(pairing(a, b)) < 0.25);
    return lift(u, h, a, b, y, "IV_SI");
  }
  if (pick < 0.6) {
    // P_ab ≠ 0 and x0 = −I_b/(4P_ab) makes 2x0·a + b a zero divisor.
    SplitQuaternion b;
    do b = random_imag(rng);
    while (std::fabs(pairing(a, b)) < 0.25 || std::fabs(norm_form(b) / pairing(a, b)) > 8.0);
    y.s0 = -norm_form(b) / (4.0 * pairing(a, b));
    return lift(u, h, a, b, y, "IV_SZ_B");
  }
  // P_ab = 0: b = b1·i + t·(−a3·j + a2·k); I_b = b1² − t², δ = b1 + t.
  double b1;
  do b1 = coord(rng);
  while (std::fabs(b1) < 0.25);
  if (pick < 0.7) return lift(u, h, a, {0.0, b1, -b1 * a3, b1 * a2}, y, "IV_SZ_C");
  if (pick < 0.8) return lift(u, h, a, {0.0, b1, b1 * a3, -b1 * a2}, y, "IV_SZ_trace_zero_delta");
  double t;
  do t = coord(rng);
  while (std::fabs(std::fabs(t) - std::fabs(b1)) < 0.25);
  return lift(u, h, a, {0.0, b1, -t * a3, t * a2}, y, "IV_SI_P0");
}

}  // namespace

std::string_view to_string(FuzzType t) {
  switch (t) {
    case FuzzType::I: return "I";
    case FuzzType::II: return "II";
    case FuzzType::III: return "III";
    case FuzzType::IV: return "IV";
  }
  return "?";
}

std::optional<FuzzType> parse_fuzz_type(std::string_view s) {
  for (FuzzType t : {FuzzType::I, FuzzType::II, FuzzType::III, FuzzType::IV})
    if (s == to_string(t)) return t;
  return std::nullopt;
}

PlantedInstance planted_instance(FuzzType t, Rng& rng) {
  switch (t) {
    case FuzzType::I: return planted_i(rng);
    case FuzzType::II: return planted_ii(rng);
    case FuzzType::III: return planted_iii(rng);
    case FuzzType::IV: return planted_iv(rng);
  }
  return planted_i(rng);
}

FuzzStats run_fuzz(FuzzType t, int trials, std::uint64_t seed, double radius, const SolveConfig& cfg) {
  FuzzStats st;
  st.type = t;
  Rng rng(seed);
  for (int n = 0; n < trials; ++n) {
    const PlantedInstance p = planted_instance(t, rng);
    const CertifiedSolutionSet s = solve(p.a, p.b, p.c, cfg);
    for (std::size_t k = 0; k < s.components.size(); ++k) {
      if (s.report[k].dropped)
        ++st.dropped_components;
      else
        st.max_residual = std::max(st.max_residual, s.report[k].max_residual);
    }
    const double d = membership_distance(s, p.root);
    ++st.trials;
    if (d <= radius) {
      ++st.recovered;
      st.max_distance = std::max(st.max_distance, d);
    } else if (st.failures.size() < kKeptFailures) {
      st.failures.push_back({n, p, d});
    }
  }
  return st;
}

}  // namespace splitquat
