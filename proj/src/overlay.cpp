#include "regen/overlay.hpp"

#include <cmath>
#include <set>

#include "regen/rng.hpp"

namespace regen {

void OverlayNetwork::validate() const {
    code.validate();
    std::set<int> vp(provider_candidates.begin(), provider_candidates.end());
    std::set<int> vn(newcomer_candidates.begin(), newcomer_candidates.end());
    if (vp.size() != provider_candidates.size() || vn.size() != newcomer_candidates.size())
        throw std::invalid_argument("overlay: duplicate node ids in a candidate set");
    for (int v : vn)
        if (vp.count(v)) throw std::invalid_argument("overlay: V_p and V_n overlap");
    if (vp.count(failed_node) || vn.count(failed_node))
        throw std::invalid_argument("overlay: failed node listed as a candidate");
    if ((int)provider_candidates.size() < code.d)
        throw std::invalid_argument("overlay: fewer provider candidates than d");
    if (newcomer_candidates.empty())
        throw std::invalid_argument("overlay: no newcomer candidates");
    if (bandwidth.size() != provider_candidates.size())
        throw std::invalid_argument("overlay: bandwidth matrix row count mismatch");
    for (const auto& row : bandwidth) {
        if (row.size() != newcomer_candidates.size())
            throw std::invalid_argument("overlay: bandwidth matrix column count mismatch");
        for (double b : row)
            if (!(b > 0) || !std::isfinite(b))
                throw std::invalid_argument("overlay: bandwidth entries must be positive and finite");
    }
}

OverlayNetwork gen_overlay(const CodeParams& code, const BandwidthDistribution& dist,
                           uint64_t seed) {
    code.validate();
    dist.validate();

    OverlayNetwork net;
    net.code = code;
    net.failed_node = 0;
    for (int i = 1; i < code.coded_nodes; ++i) net.provider_candidates.push_back(i);
    for (int i = code.coded_nodes; i < code.num_nodes; ++i) net.newcomer_candidates.push_back(i);

    Rng rng(seed);
    net.bandwidth.assign(net.provider_candidates.size(),
                         std::vector<double>(net.newcomer_candidates.size(), 0.0));
    for (auto& row : net.bandwidth)
        for (double& b : row) b = dist.low == dist.high ? dist.low : rng.uniform(dist.low, dist.high);

    net.validate();
    return net;
}

}  // namespace regen
