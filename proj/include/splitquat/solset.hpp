#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "splitquat/algebra.hpp"

namespace splitquat {

/// Thrown by instantiate when the parameters fall outside a family's domain.
class OutOfDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Point {
  SplitQuaternion q;
};

/// base + t·dir, dir of unit Euclidean norm.
struct AffineLine {
  SplitQuaternion base;
  SplitQuaternion dir;
  std::string param = "x1";
};

/// base + s·dir1 + t·dir2 with orthonormal directions.
struct AffinePlane {
  SplitQuaternion base;
  SplitQuaternion dir1;
  SplitQuaternion dir2;
  std::string param1 = "x0";
  std::string param2 = "x1";
};

/// {x0 + x1·i + x2·j + x3·k : −x1² + x2² + x3² = level}; chart (x2, x3).
struct QuadricFamily {
  double x0 = 0.0;
  double level = 0.0;
};

/// The pair of planes
///   x = offset ± √(−c0) − a2·x2 − a3·x3 + (a2·x3 − a3·x2)·i + x2·j + x3·k,
/// c0 ≤ 0, parametrized by (x2, x3). One plane when c0 = 0.
struct TiltedPlanePair {
  double c0 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
  double offset = 0.0;
};

/// Families whose points come from real roots of a parameter-dependent
/// polynomial, for leading coefficient 1 + a2·j + a3·k and linear coefficient
/// b1·i + a3·b1·j − a2·b1·k (or zero).
enum class ImplicitCase {
  NoLinearTerm,        // b = 0, c1 ≠ 0; params (x2, x3); quartic in the trace
  TraceZeroA2Zero,     // x0 = 0, a2 = 0; param x1; two branches
  TraceZeroA2Nonzero,  // x0 = 0, a2 ≠ 0; param x3; two branches
  TraceNonzero,        // x0 ≠ 0; params (x2, x3); quartic in x0
};

struct ImplicitQuarticFamily {
  ImplicitCase tag = ImplicitCase::NoLinearTerm;
  double a2 = 0.0;
  double a3 = 0.0;
  double b1 = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;
  double offset = 0.0;
};

/// x = (offset + x0) + x1·i + x2·j + x3·k with x1 = p2·x0² + p1·x0 + p0,
/// x2 = q0 + q1·x1, x3 = r0 + r1·x1; param x0.
struct ParabolicCurve {
  double p2 = 0.0, p1 = 0.0, p0 = 0.0;
  double q0 = 0.0, q1 = 0.0;
  double r0 = 0.0, r1 = 0.0;
  double offset = 0.0;
};

/// Every split quaternion (0·x² + 0·x + 0 = 0).
struct WholeSpace {};

using SolutionComponent = std::variant<Point, AffineLine, AffinePlane, QuadricFamily, TiltedPlanePair,
                                       ImplicitQuarticFamily, ParabolicCurve, WholeSpace>;

/// Builds a line from an arbitrary nonzero direction (normalized, first
/// nonzero coordinate made positive).
AffineLine make_line(const SplitQuaternion& base, const SplitQuaternion& dir, std::string param = "x1");
/// Builds a plane from two independent directions (Gram–Schmidt).
AffinePlane make_plane(const SplitQuaternion& base, const SplitQuaternion& d1, const SplitQuaternion& d2,
                       std::string p1 = "x0", std::string p2 = "x1");

/// Serialized kind tag ("point", "affine_line", ...).
std::string kind_name(const SolutionComponent& c);
/// Case string for implicit families, e.g. "thm5_3_2_1".
std::string case_name(ImplicitCase c);
std::optional<ImplicitCase> parse_case_name(const std::string& s);
/// Names of the free parameters, in instantiate order.
std::vector<std::string> parameter_names(const SolutionComponent& c);
std::size_t parameter_count(const SolutionComponent& c);

/// Points of the component at the given parameters; throws OutOfDomain.
std::vector<SplitQuaternion> instantiate(const SolutionComponent& c, std::span<const double> params);

/// Parameters whose instantiation is closest to x, by chart projection.
std::vector<double> chart_params(const SolutionComponent& c, const SplitQuaternion& x);

/// Translates the scalar coordinate by −shift.
SolutionComponent translate(const SolutionComponent& c, double shift);

/// Upper bound on the Euclidean distance from x to the component (exact for
/// points, lines, planes, tilted planes and the whole space).
double component_distance(const SolutionComponent& c, const SplitQuaternion& x);

/// ‖a·x² + b·x + c‖.
double residual(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                const SplitQuaternion& x);
/// residual / (1 + ‖a‖‖x‖² + ‖b‖‖x‖ + ‖c‖).
double relative_residual(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                         const SplitQuaternion& x);

/// Uncertified solver output. failed_conditions names solvability predicates
/// that ruled out a branch.
struct SolutionSet {
  std::vector<SolutionComponent> components;
  std::vector<std::string> failed_conditions;
};

struct ComponentReport {
  double max_residual = 0.0;  // relative residual over all samples
  int samples = 0;
  bool dropped = false;
  std::optional<std::string> failed_condition;
};

struct CertifiedSolutionSet {
  std::vector<SolutionComponent> components;
  std::vector<ComponentReport> report;  // parallel to components
  std::vector<std::string> failed_conditions;

  /// Components that passed certification.
  std::vector<SolutionComponent> retained() const;
  bool empty() const;
};

struct CertifyConfig {
  int grid = 16;
  int random = 16;
  std::uint64_t seed = 42;
  double tol = 1e-8;
};

/// Samples every component (grid plus seeded random parameters, spread
/// 1 + ‖base‖), records the worst relative residual and drops components
/// whose residual exceeds cfg.tol or that yield no sample at all.
CertifiedSolutionSet certify(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                             const SolutionSet& set, const CertifyConfig& cfg = {});
CertifiedSolutionSet certify(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                             const CertifiedSolutionSet& set, const CertifyConfig& cfg = {});

/// Infimum over retained components; +∞ for an empty set.
double membership_distance(const CertifiedSolutionSet& set, const SplitQuaternion& x);
double membership_distance(std::span<const SolutionComponent> comps, const SplitQuaternion& x);

/// Merges duplicate points (radius·(1 + ‖p‖)), points on families, repeated
/// families, and sorts canonically.
std::vector<SolutionComponent> dedupe(std::vector<SolutionComponent> comps, double radius = 1e-8);
/// Sort by kind, then lexicographically by stored coefficients.
void canonical_sort(std::vector<SolutionComponent>& comps);
/// Stored coefficients in serialization order (used for sorting and equality).
std::vector<double> coefficient_vector(const SolutionComponent& c);

/// Parameter values used by certify for the n-th sample of the component.
std::vector<std::vector<double>> sample_parameters(const SolutionComponent& c, const CertifyConfig& cfg);

}  // namespace splitquat
