#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "thermoid/models/gas_model.hpp"

namespace thermoid::models {

/// n x m grid with inclusive endpoints, x varying slowest.
std::vector<StatePoint> state_grid(double x0, double x1, std::size_t n, double y0, double y1,
                                   std::size_t m);

/// "x0:x1:n,y0:y1:m". Throws UsageError on malformed input.
std::vector<StatePoint> parse_state_grid(std::string_view text);

/// "x,y". Throws UsageError on malformed input.
StatePoint parse_state(std::string_view text);

/// Decimal ("1.4") or integer fraction ("7/5").
double parse_number(std::string_view text);

}  // namespace thermoid::models
