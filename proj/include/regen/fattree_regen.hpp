#pragma once

#include <vector>

#include "regen/fattree.hpp"
#include "regen/select.hpp"

namespace regen {

struct Epoch {
    double duration = 0;                           // seconds
    std::vector<std::pair<int, double>> rates;     // (provider id, Mbps), active flows only
};

struct RegenReport {
    double total_time = 0;
    std::vector<Epoch> epochs;      // one per flow completion, durations sum to total_time
    std::vector<int> finish_order;  // provider ids
    Scheme scheme = Scheme::RSF;
    BetaMode beta_mode = BetaMode::Msr;
};

// Progressive-filling max-min allocation over shared links. paths[i] lists
// link ids; capacities/counts are indexed by link id, counts[l] must equal
// the number of paths crossing l. Repeatedly saturates the link with the
// smallest per-path share c(l)/q(l), freezes every path through it at that
// share, and releases the frozen rate from the paths' other links.
std::vector<double> maxmin_allocate(const std::vector<std::vector<int>>& paths,
                                    std::vector<double> capacities, std::vector<int> counts);

// Epoch loop: allocate max-min rates over unfinished flows, advance to the
// next completion, release that flow's links, repeat d times. Requires
// uniform traffic; paths come from route().
RegenReport regen_time_fattree(const FatTreeNetwork& net, const RepairPlan& plan);

RepairPlan select_rs_f(const FatTreeNetwork& net, const CodeParams& code, const Roles& roles,
                       Rng& rng, BetaMode mode = BetaMode::Msr);

// Newcomer: the candidate host with the largest host-edge link capacity.
// Providers: start from all of V_p and delete one candidate per round; the
// victim is the path whose occupancy bit-string over the links sorted by
// ascending share is lexicographically largest, i.e. the path sitting on
// the worst shared links.
RepairPlan select_spsn_f(const FatTreeNetwork& net, const CodeParams& code, const Roles& roles,
                         BetaMode mode = BetaMode::Msr);

// Independent check for regen_time_fattree: time-stepped fluid simulation
// that recomputes max-min rates from scratch with a separate water-filling
// routine, refining steps to flow-completion boundaries so the result does
// not depend on dt.
double fluid_oracle(const FatTreeNetwork& net, const RepairPlan& plan, double dt = 1e-3);

}  // namespace regen
