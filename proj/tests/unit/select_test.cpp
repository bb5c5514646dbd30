#include <algorithm>
#include <map>

#include "doctest.h"
#include "regen/overlay.hpp"
#include "regen/select.hpp"

using namespace regen;

namespace {

OverlayNetwork fig1_overlay() {
    OverlayNetwork net;
    net.code = CodeParams::mds(7, 5, 2, 3, 480.0);
    net.failed_node = 0;
    net.provider_candidates = {1, 2, 3, 4};
    net.newcomer_candidates = {5, 6};
    net.bandwidth = {{30, 80}, {60, 90}, {50, 85}, {45, 20}};
    return net;
}

// small random instance family used against the oracles
OverlayNetwork random_instance(uint64_t seed) {
    Rng rng(seed);
    int n = 3 + (int)rng.uniform_int(6);                       // 3..8
    int d = 2 + (int)rng.uniform_int(std::min(6, n - 1) - 1);  // 2..min(6, n-1)
    int k = 1 + (int)rng.uniform_int(d);                       // 1..d
    int N = n + 1 + (int)rng.uniform_int(20 - n);              // n+1..20
    auto code = CodeParams::mds(N, n, k, d, 100.0);
    return gen_overlay(code, {1, 120}, mix_seed(seed, 99));
}

}  // namespace

TEST_CASE("SPSN on the worked example avoids the 30 Mbps link") {
    OverlayNetwork net = fig1_overlay();
    RepairPlan plan = select_spsn(net);
    CHECK(plan.newcomer == 6);
    CHECK(plan.bottleneck_mbps == 80.0);
    CHECK(plan.traffic[0] / plan.bottleneck_mbps == 1.5);

    // the random pick toward newcomer 5 with the 30 Mbps link costs 4 s
    CHECK(star_regen_time({120, 120, 120}, {30, 60, 50}) == 4.0);

    RepairPlan oracle = brute_force_uniform(net);
    CHECK(oracle.bottleneck_mbps == 80.0);
}

TEST_CASE("SPSN equals the uniform brute-force bottleneck") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        OverlayNetwork net = random_instance(seed);
        RepairPlan spsn = select_spsn(net);
        RepairPlan oracle = brute_force_uniform(net);
        CHECK(spsn.bottleneck_mbps == oracle.bottleneck_mbps);
    }
}

TEST_CASE("FLEX equals the flexible brute-force time") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        OverlayNetwork net = random_instance(seed);
        auto [plan, t] = select_flex(net);
        auto [oplan, ot] = brute_force_flex(net);
        CHECK(t == doctest::Approx(ot).epsilon(1e-12));
    }
}

TEST_CASE("RS forced and deterministic selections") {
    OverlayNetwork net;
    net.code = CodeParams::mds(5, 4, 2, 3, 100.0);
    net.failed_node = 0;
    net.provider_candidates = {1, 2, 3};
    net.newcomer_candidates = {4};
    net.bandwidth = {{10}, {20}, {30}};

    Rng rng(5);
    RepairPlan plan = select_rs(net, rng);
    CHECK(plan.newcomer == 4);
    std::vector<int> sorted = plan.providers;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{1, 2, 3});
    CHECK(plan.bottleneck_mbps == 10.0);

    OverlayNetwork big = random_instance(3);
    Rng r1(9), r2(9);
    RepairPlan a = select_rs(big, r1);
    RepairPlan b = select_rs(big, r2);
    CHECK(a.newcomer == b.newcomer);
    CHECK(a.providers == b.providers);
}

TEST_CASE("RS newcomer draw is uniform (chi-square, fixed seed)") {
    auto code = CodeParams::mds(20, 6, 2, 3, 100.0);
    OverlayNetwork net = gen_overlay(code, {10, 120}, 4);
    const int bins = (int)net.newcomer_candidates.size();
    const int draws = 100000;
    std::map<int, int> counts;
    Rng rng(31337);
    for (int i = 0; i < draws; ++i) ++counts[select_rs(net, rng).newcomer];
    double expected = (double)draws / bins;
    double chi2 = 0;
    for (int v : net.newcomer_candidates) {
        double diff = counts[v] - expected;
        chi2 += diff * diff / expected;
    }
    // dof = 13, 3-sigma-ish bound
    CHECK(chi2 < 40.0);
}

TEST_CASE("FRS shares the RS node choice and never does worse") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        OverlayNetwork net = random_instance(seed);
        Rng r1(seed), r2(seed);
        RepairPlan rs = select_rs(net, r1);
        auto [frs, frs_time] = select_frs(net, r2);
        CHECK(rs.newcomer == frs.newcomer);
        CHECK(rs.providers == frs.providers);
        double rs_time = rs.traffic[0] / rs.bottleneck_mbps;
        CHECK(frs_time <= rs_time + 1e-12 * rs_time);
    }

    // homogeneous bandwidths: flexible traffic buys nothing
    auto code = CodeParams::mds(20, 6, 2, 3, 120.0);
    OverlayNetwork flat = gen_overlay(code, {40, 40}, 8);
    Rng r1(2), r2(2);
    RepairPlan rs = select_rs(flat, r1);
    auto [frs, t] = select_frs(flat, r2);
    CHECK(t == doctest::Approx(rs.traffic[0] / rs.bottleneck_mbps).epsilon(1e-12));
}

TEST_CASE("per-instance scheme dominance: FLEX <= SPSN <= RS") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        OverlayNetwork net = random_instance(seed);
        Rng rng(seed);
        RepairPlan rs = select_rs(net, rng);
        RepairPlan spsn = select_spsn(net);
        auto [flex, flex_time] = select_flex(net);
        double rs_time = rs.traffic[0] / rs.bottleneck_mbps;
        double spsn_time = spsn.traffic[0] / spsn.bottleneck_mbps;
        CHECK(spsn_time <= rs_time * (1 + 1e-12));
        CHECK(flex_time <= spsn_time * (1 + 1e-12));
    }
}

TEST_CASE("scaling all bandwidths leaves selections fixed and scales times") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        OverlayNetwork net = random_instance(seed);
        OverlayNetwork scaled = net;
        const double f = 3.5;
        for (auto& row : scaled.bandwidth)
            for (double& b : row) b *= f;

        RepairPlan s1 = select_spsn(net), s2 = select_spsn(scaled);
        CHECK(s1.newcomer == s2.newcomer);
        CHECK(s1.providers == s2.providers);
        CHECK(s2.bottleneck_mbps == doctest::Approx(s1.bottleneck_mbps * f).epsilon(1e-12));

        auto [f1, t1] = select_flex(net);
        auto [f2, t2] = select_flex(scaled);
        CHECK(f1.newcomer == f2.newcomer);
        CHECK(f1.providers == f2.providers);
        CHECK(t2 == doctest::Approx(t1 / f).epsilon(1e-12));
    }
}

TEST_CASE("ties everywhere still give a valid optimal plan") {
    auto code = CodeParams::mds(12, 6, 2, 4, 100.0);
    OverlayNetwork net = gen_overlay(code, {25, 25}, 6);
    RepairPlan plan = select_spsn(net);
    CHECK(plan.bottleneck_mbps == 25.0);
    CHECK(plan.providers.size() == 4);
}

TEST_CASE("brute force rejects oversized instances") {
    auto code = CodeParams::mds(2000, 30, 8, 14, 100.0);
    OverlayNetwork net = gen_overlay(code, {10, 120}, 1);
    CHECK_THROWS_AS(brute_force_uniform(net), std::invalid_argument);
}
