#include "regen/fattree.hpp"

#include <algorithm>
#include <numeric>

#include "regen/rng.hpp"

namespace regen {

std::string to_string(LinkTier t) {
    switch (t) {
        case LinkTier::HostEdge: return "host-edge";
        case LinkTier::EdgeAgg: return "edge-agg";
        case LinkTier::AggCore: return "agg-core";
    }
    return "?";
}

LinkTier tier_from_string(const std::string& s) {
    if (s == "host-edge") return LinkTier::HostEdge;
    if (s == "edge-agg") return LinkTier::EdgeAgg;
    if (s == "agg-core") return LinkTier::AggCore;
    throw std::invalid_argument("unknown link tier: " + s);
}

void FatTreeNetwork::validate() const {
    if (arity < 4 || arity % 2 != 0)
        throw std::invalid_argument("fat-tree: K must be even and >= 4");
    if ((int)links.size() != 3 * num_hosts())
        throw std::invalid_argument("fat-tree: wrong link count");
    for (const auto& l : links)
        if (!(l.capacity > 0))
            throw std::invalid_argument("fat-tree: link capacities must be > 0");
}

std::array<BandwidthDistribution, 3> default_tier_dists() {
    return {BandwidthDistribution{1, 120}, BandwidthDistribution{5, 600},
            BandwidthDistribution{10, 1200}};
}

FatTreeNetwork build_fattree(int arity, const std::array<BandwidthDistribution, 3>& tier_dists,
                             uint64_t seed) {
    if (arity < 4 || arity % 2 != 0)
        throw std::invalid_argument("fat-tree: K must be even and >= 4");
    for (const auto& d : tier_dists) d.validate();

    FatTreeNetwork net;
    net.arity = arity;
    const int half = net.half();
    Rng rng(seed);

    net.links.reserve(3 * net.num_hosts());
    for (int h = 0; h < net.num_hosts(); ++h) {
        int e = net.edge_id(net.host_pod(h), net.host_edge_off(h));
        net.links.push_back({net.host_edge_link(h), h, e, LinkTier::HostEdge,
                             rng.uniform(tier_dists[0].low, tier_dists[0].high)});
    }
    for (int pod = 0; pod < arity; ++pod)
        for (int e = 0; e < half; ++e)
            for (int a = 0; a < half; ++a)
                net.links.push_back({net.edge_agg_link(pod, e, a), net.edge_id(pod, e),
                                     net.agg_id(pod, a), LinkTier::EdgeAgg,
                                     rng.uniform(tier_dists[1].low, tier_dists[1].high)});
    for (int pod = 0; pod < arity; ++pod)
        for (int a = 0; a < half; ++a)
            for (int c = 0; c < half; ++c)
                net.links.push_back({net.agg_core_link(pod, a, c), net.agg_id(pod, a),
                                     net.core_id(a, c), LinkTier::AggCore,
                                     rng.uniform(tier_dists[2].low, tier_dists[2].high)});

    net.validate();
    return net;
}

Path route(const FatTreeNetwork& net, int src, int dst) {
    if (src == dst) throw std::invalid_argument("route: src and dst must differ");
    if (src < 0 || dst < 0 || src >= net.num_hosts() || dst >= net.num_hosts())
        throw std::invalid_argument("route: endpoints must be hosts");

    Path p;
    p.provider = src;
    p.newcomer = dst;

    const int sp = net.host_pod(src), se = net.host_edge_off(src);
    const int dp = net.host_pod(dst), de = net.host_edge_off(dst);
    const int pick = (src + dst) % net.half();

    p.links.push_back(net.host_edge_link(src));
    if (sp == dp && se == de) {
        // same edge switch, nothing more to climb
    } else if (sp == dp) {
        p.links.push_back(net.edge_agg_link(sp, se, pick));
        p.links.push_back(net.edge_agg_link(dp, de, pick));
    } else {
        p.links.push_back(net.edge_agg_link(sp, se, pick));
        p.links.push_back(net.agg_core_link(sp, pick, pick));
        p.links.push_back(net.agg_core_link(dp, pick, pick));
        p.links.push_back(net.edge_agg_link(dp, de, pick));
    }
    p.links.push_back(net.host_edge_link(dst));
    return p;
}

Roles fattree_roles(const FatTreeNetwork& net, const CodeParams& code, uint64_t placement_seed) {
    code.validate();
    const int hosts = net.num_hosts();
    const int n = code.coded_nodes;
    if (n >= hosts)
        throw std::invalid_argument("fat-tree roles: need n < host count so that |V_n| >= 1");

    std::vector<int> ids(hosts);
    std::iota(ids.begin(), ids.end(), 0);
    Rng rng(placement_seed);
    for (int i = 0; i < n; ++i)
        std::swap(ids[i], ids[i + rng.uniform_int(hosts - i)]);

    Roles roles;
    roles.failed_node = ids[0];
    roles.provider_candidates.assign(ids.begin() + 1, ids.begin() + n);
    roles.newcomer_candidates.assign(ids.begin() + n, ids.end());
    std::sort(roles.provider_candidates.begin(), roles.provider_candidates.end());
    std::sort(roles.newcomer_candidates.begin(), roles.newcomer_candidates.end());
    return roles;
}

}  // namespace regen
