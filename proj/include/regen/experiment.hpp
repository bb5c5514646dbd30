#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "regen/fattree.hpp"
#include "regen/overlay.hpp"
#include "regen/types.hpp"

namespace regen {

// One evaluation point: either an overlay (N, n, k, d, dist) or a fat-tree
// (K, n, k, d, tier dists) configuration.
struct SweepPoint {
    std::string kind;  // "overlay" | "fattree"
    CodeParams code;
    BandwidthDistribution dist{10, 120};                       // overlay only
    int arity = 0;                                             // fattree only
    std::array<BandwidthDistribution, 3> tier_dists{};         // fattree only
};

struct SweepSpec {
    std::string kind = "overlay";
    std::vector<int> num_nodes_list;    // N axis (overlay)
    std::vector<int> coded_nodes_list;  // n axis
    std::vector<int> d_list;
    std::vector<int> arity_list;        // K axis (fattree)
    int k = 0;
    double file_mb = 0;
    std::vector<BandwidthDistribution> dists;            // overlay axis
    std::array<BandwidthDistribution, 3> tier_dists{};   // fattree, fixed
    std::vector<Scheme> schemes;
    int trials = 100;
    uint64_t base_seed = 0;
    BetaMode beta_mode = BetaMode::Msr;

    std::vector<SweepPoint> points() const;
    void validate() const;
};

struct TrialOutcome {
    double time_s = 0;
    double bottleneck_mbps = 0;  // 0 where not meaningful (fat-tree)
};

struct PointRecord {
    size_t point_index = 0;
    SweepPoint point;
    Scheme scheme = Scheme::RS;
    double mean = 0, stddev = 0, min = 0, max = 0;
    std::vector<TrialOutcome> trials;
    std::vector<uint64_t> seeds;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<PointRecord> records;  // points x schemes
};

// Trial seed for (base, point, trial). Sub-seeds for the topology, the
// selection rng and the fat-tree placement are split off the trial seed
// with fixed salts, so adding axes or trials never shifts other streams.
uint64_t trial_seed(uint64_t base_seed, size_t point_index, int trial_index);

// Builds the topology, runs the scheme's selector and the matching
// evaluator. Deterministic per (point, scheme, seed).
TrialOutcome run_trial(const SweepPoint& point, Scheme scheme, BetaMode mode, uint64_t seed);

SweepResult run_sweep(const SweepSpec& spec);

// Expected bottleneck of a random d-provider star: the mean of the minimum
// of d i.i.d. uniforms, low + (high - low)/(d + 1).
double analytic_rs_bottleneck(const BandwidthDistribution& dist, int d);

// One row per trial; byte-stable formatting so reruns diff clean.
std::string sweep_csv(const SweepResult& result);

// Minimal line chart: mean time per point, one polyline per scheme.
std::string sweep_svg(const SweepResult& result);

}  // namespace regen
