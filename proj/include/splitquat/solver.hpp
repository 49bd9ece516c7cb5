#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitquat/algebra.hpp"
#include "splitquat/realroots.hpp"
#include "splitquat/reduction.hpp"
#include "splitquat/solset.hpp"
#include "splitquat/tolerance.hpp"

namespace splitquat {

/// Trace T = 2·x0 and norm N = I_x of a candidate root.
struct TNPair {
  double T = 0.0;
  double N = 0.0;
};

enum class ConditionKind { A, B, C };

struct ConditionReport {
  ConditionKind condition = ConditionKind::A;
  bool holds = false;
  std::vector<double> witnesses;              // admissible r for A
  std::map<std::string, double> diagnostics;  // quantities actually tested
};

/// Outcome of one (T, N) pair for Equation II: the reconstructed point, or
/// the reason there is none.
struct PairOutcome {
  TNPair pair;
  std::optional<SplitQuaternion> x;
  std::string reason;  // "ok", "zero_divisor", "residual"
};

struct SolveConfig {
  double eps = 1e-9;
  bool polish = true;
  CertifyConfig certify;
};

// --- Equation I: x² + b0·x + c = 0 ------------------------------------------

SolutionSet solve_eq1(double b0, const SplitQuaternion& c, const Tolerance& tol);

// --- Equation II: x² + b·x + c = 0, b pure imaginary --------------------------

ConditionReport condition_a(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol);
SolutionSet solve_eq2_sz(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol);

/// Real solutions of N² − (B + T²)·N + E = 0, T³ + (B − 2N)·T + D = 0,
/// deduplicated.
std::vector<TNPair> tn_pairs(double B, double E, double D, const Tolerance& tol);
std::vector<TNPair> tn_pairs(double B, double E, double D);

/// B = 2c0 + I_b, E = I_c, D = 2P_bc.
struct SystemCoefficients {
  Tracked B, E, D;
};
SystemCoefficients eq2_system(const SplitQuaternion& b, const SplitQuaternion& c);

/// x = (T + b)⁻¹(N − c) with the residual check; no point when T + b is a
/// zero divisor.
PairOutcome evaluate_pair(const SplitQuaternion& b, const SplitQuaternion& c, TNPair p, const Tolerance& tol);
std::vector<PairOutcome> eq2_si_pairs(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol);
SolutionSet solve_eq2_si(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol);

/// M_b·M_c = K_bc² at tolerance: some cubic-branch T makes T + b a zero divisor.
bool predict_zero_divisor_T(const SplitQuaternion& b, const SplitQuaternion& c, const Tolerance& tol);

// --- Equation III: a·x² + c = 0, a = 1 + a2·j + a3·k ---------------------------

SolutionSet solve_eq3(const SplitQuaternion& a, const SplitQuaternion& c, const Tolerance& tol);

// --- Equation IV: a·x² + b·x + c = 0 ----------------------------------------

ConditionReport condition_b(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                            const Tolerance& tol);
ConditionReport condition_c(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                            const Tolerance& tol);
SolutionSet solve_eq4_sz(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                         const Tolerance& tol);
SolutionSet solve_eq4_si(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                         const Tolerance& tol);

/// The 3×3 matrix of the linear system for (x1, x2, x3) at x0 = −I_b/(4P_ab);
/// row-major.
std::array<double, 9> eq4_sz_matrix(const SplitQuaternion& a, const SplitQuaternion& b);

// --- Top level ----------------------------------------------------------------

/// Solutions of the reduced equation in its own variable (before pull_back).
SolutionSet solve_reduced(const ReducedEquation& r);

/// classify → solve the reduced equation (SZ ∪ SI where both exist) →
/// pull_back → polish points → dedupe → certify.
CertifiedSolutionSet solve(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                           const SolveConfig& cfg = {});

/// Newton refinement of a root; returns x unchanged when no step helps.
SplitQuaternion polish_root(const SplitQuaternion& a, const SplitQuaternion& b, const SplitQuaternion& c,
                            const SplitQuaternion& x, int iterations = 12);

}  // namespace splitquat
