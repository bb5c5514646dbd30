#pragma once

#include <cstdint>
#include <vector>

#include "regen/types.hpp"

namespace regen {

// Bipartite view of the storage overlay around one failed node: provider
// candidates (the n-1 survivors) on one side, newcomer candidates (the
// N-n nodes holding no coded blocks) on the other, with the measured
// available bandwidth of every provider->newcomer pair.
struct OverlayNetwork {
    CodeParams code;
    int failed_node = 0;
    std::vector<int> provider_candidates;          // V_p, id order
    std::vector<int> newcomer_candidates;          // V_n, id order
    std::vector<std::vector<double>> bandwidth;    // [provider idx][newcomer idx], Mbps

    double bw(int p_idx, int n_idx) const { return bandwidth[p_idx][n_idx]; }

    void validate() const;
};

// Node 0 fails, nodes 1..n-1 are provider candidates, the rest newcomer
// candidates. Bandwidths are i.i.d. uniform draws on [low, high], filled
// row by row (provider-major) so a seed pins the whole matrix.
OverlayNetwork gen_overlay(const CodeParams& code, const BandwidthDistribution& dist,
                           uint64_t seed);

}  // namespace regen
