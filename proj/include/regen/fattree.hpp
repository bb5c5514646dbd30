#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "regen/types.hpp"

namespace regen {

enum class LinkTier { HostEdge, EdgeAgg, AggCore };

std::string to_string(LinkTier t);
LinkTier tier_from_string(const std::string& s);

struct LinkRecord {
    int id = 0;
    int a = 0;  // lower-tier endpoint device id
    int b = 0;  // upper-tier endpoint device id
    LinkTier tier = LinkTier::HostEdge;
    double capacity = 0;  // Mbps
};

// Ordered link sequence from provider up to the common ancestor switch and
// back down to the newcomer. 2, 4 or 6 links depending on locality.
struct Path {
    int provider = 0;
    int newcomer = 0;
    std::vector<int> links;
};

// Three-tier K-ary fat-tree: K pods, K/2 edge and K/2 aggregation switches
// per pod, (K/2)^2 core switches, K^3/4 hosts. Device ids are dense:
// hosts first, then edge, aggregation, core switches. Link ids are dense
// too: host-edge links [0, H), edge-agg [H, 2H), agg-core [2H, 3H) with
// H = K^3/4.
struct FatTreeNetwork {
    int arity = 0;  // K
    std::vector<LinkRecord> links;

    int half() const { return arity / 2; }
    int num_hosts() const { return arity * arity * arity / 4; }
    int num_edge() const { return arity * arity / 2; }
    int num_agg() const { return arity * arity / 2; }
    int num_core() const { return arity * arity / 4; }

    // host id -> coordinates
    int host_pod(int h) const { return h / (half() * half()); }
    int host_edge_off(int h) const { return (h / half()) % half(); }
    int host_port(int h) const { return h % half(); }

    // device ids
    int edge_id(int pod, int off) const { return num_hosts() + pod * half() + off; }
    int agg_id(int pod, int off) const { return num_hosts() + num_edge() + pod * half() + off; }
    int core_id(int agg_off, int c) const {
        return num_hosts() + num_edge() + num_agg() + agg_off * half() + c;
    }

    // link ids
    int host_edge_link(int host) const { return host; }
    int edge_agg_link(int pod, int e, int a) const {
        return num_hosts() + (pod * half() + e) * half() + a;
    }
    int agg_core_link(int pod, int a, int c) const {
        return 2 * num_hosts() + (pod * half() + a) * half() + c;
    }

    void validate() const;
};

// Capacities drawn per tier: tier_dists[0] for host-edge, [1] for edge-agg,
// [2] for agg-core, each link an independent draw, in link-id order.
FatTreeNetwork build_fattree(int arity, const std::array<BandwidthDistribution, 3>& tier_dists,
                             uint64_t seed);

// Bottom U[1,120], middle and top scaled 5x and 10x.
std::array<BandwidthDistribution, 3> default_tier_dists();

// Shortest up-down path. The aggregation switch and core port are both
// picked as (src + dst) mod K/2, which makes the link set symmetric in
// (src, dst) and spreads load like a static ECMP hash.
Path route(const FatTreeNetwork& net, int src, int dst);

struct Roles {
    int failed_node = 0;
    std::vector<int> provider_candidates;  // hosts, |V_p| = n-1
    std::vector<int> newcomer_candidates;  // hosts, all others
};

// Places the n coded-block holders on distinct hosts uniformly at random
// and fails one of them.
Roles fattree_roles(const FatTreeNetwork& net, const CodeParams& code, uint64_t placement_seed);

}  // namespace regen
