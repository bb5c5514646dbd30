#include "regen/select.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace regen {

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::RS: return "RS";
        case Scheme::SPSN: return "SPSN";
        case Scheme::FRS: return "FRS";
        case Scheme::FLEX: return "FLEX";
        case Scheme::RSF: return "RS-F";
        case Scheme::SPSNF: return "SPSN-F";
        case Scheme::Oracle: return "ORACLE";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "RS") return Scheme::RS;
    if (s == "SPSN") return Scheme::SPSN;
    if (s == "FRS") return Scheme::FRS;
    if (s == "FLEX") return Scheme::FLEX;
    if (s == "RS-F") return Scheme::RSF;
    if (s == "SPSN-F") return Scheme::SPSNF;
    if (s == "ORACLE") return Scheme::Oracle;
    throw std::invalid_argument("unknown scheme: " + s);
}

std::string to_string(BetaMode m) { return m == BetaMode::Msr ? "msr" : "eval"; }

BetaMode beta_mode_from_string(const std::string& s) {
    if (s == "msr") return BetaMode::Msr;
    if (s == "eval") return BetaMode::Eval;
    throw std::invalid_argument("unknown beta mode: " + s);
}

namespace {

int index_of(const std::vector<int>& ids, int id, const char* what) {
    auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end())
        throw std::invalid_argument(std::string("plan references unknown ") + what);
    return (int)(it - ids.begin());
}

double bottleneck_of(const OverlayNetwork& net, const std::vector<int>& p_idx, int n_idx) {
    double b = std::numeric_limits<double>::infinity();
    for (int p : p_idx) b = std::min(b, net.bw(p, n_idx));
    return b;
}

}  // namespace

std::vector<double> plan_capacities(const OverlayNetwork& net, const RepairPlan& plan) {
    int n_idx = index_of(net.newcomer_candidates, plan.newcomer, "newcomer");
    std::vector<double> caps;
    caps.reserve(plan.providers.size());
    for (int p : plan.providers)
        caps.push_back(net.bw(index_of(net.provider_candidates, p, "provider"), n_idx));
    return caps;
}

RepairPlan select_rs(const OverlayNetwork& net, Rng& rng, BetaMode mode) {
    net.validate();
    const int d = net.code.d;

    RepairPlan plan;
    plan.scheme = Scheme::RS;
    plan.newcomer = net.newcomer_candidates[rng.uniform_int(net.newcomer_candidates.size())];

    std::vector<int> pool(net.provider_candidates.size());
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < d; ++i)
        std::swap(pool[i], pool[i + rng.uniform_int(pool.size() - i)]);

    int n_idx = index_of(net.newcomer_candidates, plan.newcomer, "newcomer");
    std::vector<int> chosen(pool.begin(), pool.begin() + d);
    for (int p : chosen) plan.providers.push_back(net.provider_candidates[p]);
    plan.bottleneck_mbps = bottleneck_of(net, chosen, n_idx);
    plan.traffic.assign(d, uniform_beta(net.code, mode));
    return plan;
}

RepairPlan select_spsn(const OverlayNetwork& net, BetaMode mode) {
    net.validate();
    const int d = net.code.d;
    const int np = (int)net.provider_candidates.size();
    const int nn = (int)net.newcomer_candidates.size();

    struct Link {
        double bw;
        int p, n;
    };
    std::vector<Link> links;
    links.reserve((size_t)np * nn);
    for (int p = 0; p < np; ++p)
        for (int n = 0; n < nn; ++n) links.push_back({net.bw(p, n), p, n});
    std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
        if (a.bw != b.bw) return a.bw > b.bw;
        if (a.p != b.p) return a.p < b.p;
        return a.n < b.n;
    });

    std::vector<int> indeg(nn, 0);
    std::vector<std::vector<int>> provset(nn);
    for (const Link& l : links) {
        provset[l.n].push_back(l.p);
        if (++indeg[l.n] >= d) {
            RepairPlan plan;
            plan.scheme = Scheme::SPSN;
            plan.newcomer = net.newcomer_candidates[l.n];
            for (int p : provset[l.n]) plan.providers.push_back(net.provider_candidates[p]);
            plan.bottleneck_mbps = l.bw;  // links were scanned in descending order
            plan.traffic.assign(d, uniform_beta(net.code, mode));
            return plan;
        }
    }
    throw std::logic_error("SPSN scan exhausted without a plan");  // unreachable: |V_p| >= d
}

std::pair<RepairPlan, double> select_flex(const OverlayNetwork& net) {
    net.validate();
    const CodeParams& code = net.code;
    const int d = code.d;
    const int np = (int)net.provider_candidates.size();
    const int nn = (int)net.newcomer_candidates.size();
    const int slow = d - code.k + 1;

    double best_time = std::numeric_limits<double>::infinity();
    int best_n = -1;
    std::vector<int> best_prov;

    std::vector<int> order(np);
    for (int n = 0; n < nn; ++n) {
        std::iota(order.begin(), order.end(), 0);
        std::partial_sort(order.begin(), order.begin() + d, order.end(), [&](int a, int b) {
            if (net.bw(a, n) != net.bw(b, n)) return net.bw(a, n) > net.bw(b, n);
            return a < b;
        });
        double slow_sum = 0;  // the d-k+1 smallest of the top d are ranks d-slow..d-1
        for (int r = d - slow; r < d; ++r) slow_sum += net.bw(order[r], n);
        double t = code.file_mb / (code.k * slow_sum);
        if (t < best_time) {
            best_time = t;
            best_n = n;
            best_prov.assign(order.begin(), order.begin() + d);
        }
    }

    RepairPlan plan;
    plan.scheme = Scheme::FLEX;
    plan.newcomer = net.newcomer_candidates[best_n];
    std::sort(best_prov.begin(), best_prov.end());
    std::vector<double> caps;
    for (int p : best_prov) {
        plan.providers.push_back(net.provider_candidates[p]);
        caps.push_back(net.bw(p, best_n));
    }
    plan.bottleneck_mbps = bottleneck_of(net, best_prov, best_n);
    plan.traffic = flexible_beta(caps, code);
    return {plan, best_time};
}

std::pair<RepairPlan, double> select_frs(const OverlayNetwork& net, Rng& rng) {
    RepairPlan plan = select_rs(net, rng);
    plan.scheme = Scheme::FRS;
    std::vector<double> caps = plan_capacities(net, plan);
    plan.traffic = flexible_beta(caps, net.code);
    return {plan, flexible_regen_time(caps, net.code)};
}

namespace {

void check_enumerable(const OverlayNetwork& net) {
    const int np = (int)net.provider_candidates.size();
    const int d = net.code.d;
    double combos = 1;
    for (int i = 0; i < d; ++i) combos = combos * (np - i) / (i + 1);
    if (combos * net.newcomer_candidates.size() > kBruteForceLimit)
        throw std::invalid_argument("brute force: instance too large to enumerate");
}

// Visits d-subsets of [0, np) in lexicographic order.
template <typename F>
void for_each_subset(int np, int d, F&& visit) {
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(idx);
        int i = d - 1;
        while (i >= 0 && idx[i] == np - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

RepairPlan brute_force_uniform(const OverlayNetwork& net, BetaMode mode) {
    net.validate();
    check_enumerable(net);
    const int np = (int)net.provider_candidates.size();
    const int nn = (int)net.newcomer_candidates.size();
    const int d = net.code.d;

    double best = -1;
    int best_n = -1;
    std::vector<int> best_prov;
    for (int n = 0; n < nn; ++n) {
        for_each_subset(np, d, [&](const std::vector<int>& idx) {
            double b = bottleneck_of(net, idx, n);
            if (b > best) {
                best = b;
                best_n = n;
                best_prov = idx;
            }
        });
    }

    RepairPlan plan;
    plan.scheme = Scheme::Oracle;
    plan.newcomer = net.newcomer_candidates[best_n];
    for (int p : best_prov) plan.providers.push_back(net.provider_candidates[p]);
    plan.bottleneck_mbps = best;
    plan.traffic.assign(d, uniform_beta(net.code, mode));
    return plan;
}

std::pair<RepairPlan, double> brute_force_flex(const OverlayNetwork& net) {
    net.validate();
    check_enumerable(net);
    const CodeParams& code = net.code;
    const int np = (int)net.provider_candidates.size();
    const int nn = (int)net.newcomer_candidates.size();
    const int d = code.d;
    const int slow = d - code.k + 1;

    double best_time = std::numeric_limits<double>::infinity();
    int best_n = -1;
    std::vector<int> best_prov;
    std::vector<double> caps(d);
    for (int n = 0; n < nn; ++n) {
        for_each_subset(np, d, [&](const std::vector<int>& idx) {
            for (int i = 0; i < d; ++i) caps[i] = net.bw(idx[i], n);
            std::sort(caps.begin(), caps.end());
            double slow_sum = std::accumulate(caps.begin(), caps.begin() + slow, 0.0);
            double t = code.file_mb / (code.k * slow_sum);
            if (t < best_time) {
                best_time = t;
                best_n = n;
                best_prov = idx;
            }
        });
    }

    RepairPlan plan;
    plan.scheme = Scheme::Oracle;
    plan.newcomer = net.newcomer_candidates[best_n];
    std::vector<double> chosen_caps;
    for (int p : best_prov) {
        plan.providers.push_back(net.provider_candidates[p]);
        chosen_caps.push_back(net.bw(p, best_n));
    }
    plan.bottleneck_mbps = bottleneck_of(net, best_prov, best_n);
    plan.traffic = flexible_beta(chosen_caps, code);
    return {plan, best_time};
}

}  // namespace regen
