#pragma once

#include <utility>
#include <vector>

#include "regen/overlay.hpp"
#include "regen/rng.hpp"
#include "regen/traffic.hpp"

namespace regen {

struct RepairPlan {
    Scheme scheme = Scheme::RS;
    int newcomer = 0;              // node id from V_n
    std::vector<int> providers;    // d node ids from V_p
    TrafficVector traffic;         // Mb per provider, same order
    double bottleneck_mbps = 0;    // min provider->newcomer bandwidth
};

// Provider->newcomer capacities of a plan, in plan provider order.
std::vector<double> plan_capacities(const OverlayNetwork& net, const RepairPlan& plan);

// Uniform random newcomer and uniform random d-subset of providers
// (partial Fisher-Yates), uniform traffic.
RepairPlan select_rs(const OverlayNetwork& net, Rng& rng, BetaMode mode = BetaMode::Msr);

// Greedy scan of all bipartite links sorted by bandwidth descending; the
// first newcomer candidate to collect d incident links wins. The resulting
// bottleneck is the best achievable over all plans.
RepairPlan select_spsn(const OverlayNetwork& net, BetaMode mode = BetaMode::Msr);

// For each newcomer candidate, take its d largest incident links and score
// t' = M / (k * sum of the d-k+1 smallest of those); minimize over
// candidates. Returns the plan with capacity-proportional traffic and the
// minimal time.
std::pair<RepairPlan, double> select_flex(const OverlayNetwork& net);

// RS node choice, flexible traffic. Shares select_rs's draw sequence, so
// the same rng state yields the same nodes as RS.
std::pair<RepairPlan, double> select_frs(const OverlayNetwork& net, Rng& rng);

// Exhaustive oracles. Guarded: C(n-1, d) * |V_n| must not exceed this.
inline constexpr double kBruteForceLimit = 1e7;

// Enumerates every (d-subset, newcomer) pair, maximizes the bottleneck.
// Ties: smallest newcomer id, then lexicographically smallest provider set.
RepairPlan brute_force_uniform(const OverlayNetwork& net, BetaMode mode = BetaMode::Msr);

// Same enumeration, minimizing M / (k * sum of d-k+1 smallest capacities).
std::pair<RepairPlan, double> brute_force_flex(const OverlayNetwork& net);

}  // namespace regen
