#pragma once

#include <vector>

#include "regen/types.hpp"

namespace regen {

// Per-provider traffic amounts in Mb, ordered like the plan's provider list.
using TrafficVector = std::vector<double>;

// Uniform per-provider amount. Msr: M/(k(d-k+1)), the convention consistent
// with alpha = M/k. Eval: M/(d(d-k+1)), kept to mirror evaluation-style
// magnitudes.
double uniform_beta(const CodeParams& code, BetaMode mode = BetaMode::Msr);

// Capacity-proportional amounts minimizing the star regeneration time for a
// fixed provider set. With capacities sorted ascending c_1 <= ... <= c_d,
//   beta*_i = c_i       * M / (k * sum_{r<=d-k+1} c_r)   for i <= d-k+1
//   beta*_i = c_{d-k+1} * M / (k * sum_{r<=d-k+1} c_r)   otherwise,
// returned in the caller's original capacity order. Ties sort stably by
// original index so the assignment is deterministic.
TrafficVector flexible_beta(const std::vector<double>& capacities, const CodeParams& code);

// max_i traffic_i / capacity_i: all providers transmit simultaneously, the
// slowest link finishes last.
double star_regen_time(const TrafficVector& traffic, const std::vector<double>& capacities);

// Closed form M / (k * sum of the d-k+1 smallest capacities); identical to
// star_regen_time(flexible_beta(c), c).
double flexible_regen_time(const std::vector<double>& capacities, const CodeParams& code);

}  // namespace regen
