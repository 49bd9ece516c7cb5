#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splitquat/algebra.hpp"
#include "splitquat/rng.hpp"
#include "splitquat/solver.hpp"

namespace splitquat {

/// Which reduced equation a generated instance lands in.
enum class FuzzType { I, II, III, IV };

std::string_view to_string(FuzzType t);
std::optional<FuzzType> parse_fuzz_type(std::string_view s);

/// Coefficients with a known root. Instances are built in reduced form and
/// then mapped back through a random left multiplier and shift, so they
/// exercise the reduction too. `variant` names the branch the root was
/// planted in.
struct PlantedInstance {
  SplitQuaternion a, b, c;
  SplitQuaternion root;
  std::string variant;
};

PlantedInstance planted_instance(FuzzType t, Rng& rng);

struct FuzzFailure {
  int trial = 0;
  PlantedInstance instance;
  double distance = 0.0;
};

struct FuzzStats {
  FuzzType type = FuzzType::I;
  int trials = 0;
  int recovered = 0;
  double max_distance = 0.0;       // over recovered trials
  double max_residual = 0.0;       // over retained components
  int dropped_components = 0;
  std::vector<FuzzFailure> failures;  // first few only

  double rate() const { return trials ? static_cast<double>(recovered) / trials : 1.0; }
};

FuzzStats run_fuzz(FuzzType t, int trials, std::uint64_t seed = 42, double radius = 1e-6,
                   const SolveConfig& cfg = {});

}  // namespace splitquat
