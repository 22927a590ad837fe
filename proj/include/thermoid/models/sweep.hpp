#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "thermoid/models/gas_model.hpp"

namespace thermoid::models {

/// Symbolic value versus finite-difference oracle for a batch of coded derivatives.
struct SweepResult {
  std::size_t checked = 0;
  /// Specs skipped because a coordinate pair is not a chart at the state.
  std::size_t degenerate = 0;
  /// Largest |symbolic - oracle| / max(1, |symbolic|).
  double max_deviation = 0;
  std::string worst;
};

/// All 336 strict triples at s.
SweepResult sweep_triples(const GasModel& model, StatePoint s);

/// Second derivatives in a fixed-seed shuffle of all 18,816, until `sample` of them
/// defined at s have been compared. Undefined ones are counted in `degenerate`.
SweepResult sweep_seconds(const GasModel& model, StatePoint s, std::size_t sample, std::uint64_t seed);

}  // namespace thermoid::models
