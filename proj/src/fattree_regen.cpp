#include "regen/fattree_regen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace regen {

namespace {
constexpr double kEps = 1e-12;
}

std::vector<double> maxmin_allocate(const std::vector<std::vector<int>>& paths,
                                    std::vector<double> capacities, std::vector<int> counts) {
    std::vector<int> check(counts.size(), 0);
    for (const auto& path : paths)
        for (int l : path) {
            if (l < 0 || l >= (int)capacities.size())
                throw std::logic_error("maxmin: path references unknown link");
            ++check[l];
        }
    for (size_t l = 0; l < counts.size(); ++l)
        if (check[l] != counts[l])
            throw std::logic_error("maxmin: counts inconsistent with path set");

    std::vector<double> rates(paths.size(), 0.0);
    std::vector<bool> frozen(paths.size(), false);
    size_t left = paths.size();
    while (left > 0) {
        int bottleneck = -1;
        double share = std::numeric_limits<double>::infinity();
        for (size_t l = 0; l < capacities.size(); ++l) {
            if (counts[l] <= 0) continue;
            double s = capacities[l] / counts[l];
            if (s < share) {
                share = s;
                bottleneck = (int)l;
            }
        }
        if (bottleneck < 0) throw std::logic_error("maxmin: no saturable link left");
        for (size_t i = 0; i < paths.size(); ++i) {
            if (frozen[i]) continue;
            if (std::find(paths[i].begin(), paths[i].end(), bottleneck) == paths[i].end())
                continue;
            rates[i] = share;
            frozen[i] = true;
            --left;
            for (int l : paths[i]) {
                capacities[l] = std::max(0.0, capacities[l] - share);
                --counts[l];
            }
        }
    }
    return rates;
}

RegenReport regen_time_fattree(const FatTreeNetwork& net, const RepairPlan& plan) {
    const int d = (int)plan.providers.size();
    if (d == 0 || (int)plan.traffic.size() != d)
        throw std::invalid_argument("fat-tree regen: plan traffic length must equal d");
    for (double b : plan.traffic)
        if (std::abs(b - plan.traffic[0]) > 1e-12 * std::max(1.0, plan.traffic[0]))
            throw std::invalid_argument("fat-tree regen: traffic must be uniform");

    struct Flow {
        int provider;
        std::vector<int> path;
        double remaining;
    };
    std::vector<Flow> flows;
    for (int i = 0; i < d; ++i)
        flows.push_back({plan.providers[i], route(net, plan.providers[i], plan.newcomer).links,
                         plan.traffic[i]});

    const int nlinks = (int)net.links.size();
    RegenReport report;
    report.scheme = plan.scheme;

    while (!flows.empty()) {
        std::vector<std::vector<int>> paths;
        for (const Flow& f : flows) paths.push_back(f.path);
        std::vector<double> caps(nlinks);
        for (const auto& l : net.links) caps[l.id] = l.capacity;
        std::vector<int> counts(nlinks, 0);
        for (const auto& p : paths)
            for (int l : p) ++counts[l];

        std::vector<double> rates = maxmin_allocate(paths, std::move(caps), std::move(counts));

        // next completion; tie broken toward the smallest provider id
        int finisher = 0;
        double dt = flows[0].remaining / rates[0];
        for (size_t i = 1; i < flows.size(); ++i) {
            double t = flows[i].remaining / rates[i];
            double tol = kEps * std::max(1.0, dt);
            if (t < dt - tol) {
                dt = t;
                finisher = (int)i;
            } else if (t <= dt + tol && flows[i].provider < flows[finisher].provider) {
                dt = std::min(dt, t);
                finisher = (int)i;
            }
        }
        dt = std::max(0.0, dt);

        Epoch epoch;
        epoch.duration = dt;
        for (size_t i = 0; i < flows.size(); ++i) {
            epoch.rates.emplace_back(flows[i].provider, rates[i]);
            flows[i].remaining = std::max(0.0, flows[i].remaining - dt * rates[i]);
        }
        report.epochs.push_back(std::move(epoch));
        report.total_time += dt;
        report.finish_order.push_back(flows[finisher].provider);
        flows.erase(flows.begin() + finisher);
    }
    return report;
}

RepairPlan select_rs_f(const FatTreeNetwork& net, const CodeParams& code, const Roles& roles,
                       Rng& rng, BetaMode mode) {
    if (roles.newcomer_candidates.empty())
        throw std::invalid_argument("RS-F: no newcomer candidates");
    if ((int)roles.provider_candidates.size() < code.d)
        throw std::invalid_argument("RS-F: fewer provider candidates than d");

    RepairPlan plan;
    plan.scheme = Scheme::RSF;
    plan.newcomer = roles.newcomer_candidates[rng.uniform_int(roles.newcomer_candidates.size())];

    std::vector<int> pool = roles.provider_candidates;
    for (int i = 0; i < code.d; ++i)
        std::swap(pool[i], pool[i + rng.uniform_int(pool.size() - i)]);
    plan.providers.assign(pool.begin(), pool.begin() + code.d);
    plan.traffic.assign(code.d, uniform_beta(code, mode));
    (void)net;
    return plan;
}

RepairPlan select_spsn_f(const FatTreeNetwork& net, const CodeParams& code, const Roles& roles,
                         BetaMode mode) {
    if (roles.newcomer_candidates.empty())
        throw std::invalid_argument("SPSN-F: no newcomer candidates");
    if ((int)roles.provider_candidates.size() < code.d)
        throw std::invalid_argument("SPSN-F: fewer provider candidates than d");

    // newcomer: largest host-edge capacity, smaller host id on ties
    int newcomer = roles.newcomer_candidates[0];
    double best_cap = net.links[net.host_edge_link(newcomer)].capacity;
    for (int h : roles.newcomer_candidates) {
        double c = net.links[net.host_edge_link(h)].capacity;
        if (c > best_cap) {
            best_cap = c;
            newcomer = h;
        }
    }

    struct Cand {
        int provider;
        std::vector<int> path;
    };
    std::vector<Cand> cands;
    for (int p : roles.provider_candidates)
        cands.push_back({p, route(net, p, newcomer).links});

    const int nlinks = (int)net.links.size();
    std::vector<int> q(nlinks, 0);
    for (const Cand& c : cands)
        for (int l : c.path) ++q[l];

    while ((int)cands.size() > code.d) {
        // links still carrying candidate paths, sorted by ascending share
        std::vector<int> live;
        for (int l = 0; l < nlinks; ++l)
            if (q[l] > 0) live.push_back(l);
        std::sort(live.begin(), live.end(), [&](int a, int b) {
            double sa = net.links[a].capacity / q[a];
            double sb = net.links[b].capacity / q[b];
            if (sa != sb) return sa < sb;
            return a < b;
        });
        std::vector<int> rank(nlinks, -1);
        for (size_t i = 0; i < live.size(); ++i) rank[live[i]] = (int)i;

        // occupancy bit-string per candidate, most significant bit = worst link
        std::vector<std::vector<char>> bits(cands.size(), std::vector<char>(live.size(), 0));
        for (size_t j = 0; j < cands.size(); ++j)
            for (int l : cands[j].path) bits[j][rank[l]] = 1;

        size_t victim = 0;
        for (size_t j = 1; j < cands.size(); ++j) {
            if (bits[j] > bits[victim] ||
                (bits[j] == bits[victim] && cands[j].provider > cands[victim].provider))
                victim = j;
        }
        for (int l : cands[victim].path) --q[l];
        cands.erase(cands.begin() + victim);
    }

    RepairPlan plan;
    plan.scheme = Scheme::SPSNF;
    plan.newcomer = newcomer;
    for (const Cand& c : cands) plan.providers.push_back(c.provider);
    std::sort(plan.providers.begin(), plan.providers.end());
    plan.traffic.assign(code.d, uniform_beta(code, mode));
    return plan;
}

namespace {

// Water-filling kept separate from maxmin_allocate on purpose: it freezes
// one path per round (the one with the globally smallest fair share)
// instead of a whole link's worth, and recomputes shares from the residual
// capacities each round.
std::vector<double> waterfill_rates(const std::vector<std::vector<int>>& paths,
                                    const std::vector<double>& capacities) {
    std::vector<double> residual = capacities;
    std::vector<int> free_count(capacities.size(), 0);
    for (const auto& p : paths)
        for (int l : p) ++free_count[l];

    std::vector<double> rates(paths.size(), 0.0);
    std::vector<bool> fixed(paths.size(), false);
    for (size_t round = 0; round < paths.size(); ++round) {
        int tightest = -1;
        double level = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < paths.size(); ++i) {
            if (fixed[i]) continue;
            double s = std::numeric_limits<double>::infinity();
            for (int l : paths[i]) s = std::min(s, residual[l] / free_count[l]);
            if (s < level) {
                level = s;
                tightest = (int)i;
            }
        }
        rates[tightest] = level;
        fixed[tightest] = true;
        for (int l : paths[tightest]) {
            residual[l] = std::max(0.0, residual[l] - level);
            --free_count[l];
        }
    }
    return rates;
}

}  // namespace

double fluid_oracle(const FatTreeNetwork& net, const RepairPlan& plan, double dt) {
    if (!(dt > 0)) throw std::invalid_argument("fluid oracle: dt must be > 0");

    const size_t d = plan.providers.size();
    std::vector<std::vector<int>> all_paths;
    for (int p : plan.providers) all_paths.push_back(route(net, p, plan.newcomer).links);

    std::vector<double> caps(net.links.size());
    for (const auto& l : net.links) caps[l.id] = l.capacity;

    std::vector<double> remaining = plan.traffic;
    std::vector<bool> done(d, false);
    size_t active = d;
    double now = 0;

    while (active > 0) {
        std::vector<std::vector<int>> paths;
        std::vector<size_t> who;
        for (size_t i = 0; i < d; ++i)
            if (!done[i]) {
                paths.push_back(all_paths[i]);
                who.push_back(i);
            }
        std::vector<double> rates = waterfill_rates(paths, caps);

        // refine the step to the earliest completion inside it
        double step = dt;
        for (size_t j = 0; j < who.size(); ++j)
            step = std::min(step, remaining[who[j]] / rates[j]);

        bool finished_any = false;
        for (size_t j = 0; j < who.size(); ++j) {
            remaining[who[j]] -= step * rates[j];
            if (remaining[who[j]] <= kEps * plan.traffic[who[j]] + kEps) {
                remaining[who[j]] = 0;
                done[who[j]] = true;
                --active;
                finished_any = true;
            }
        }
        now += step;
        (void)finished_any;
    }
    return now;
}

}  // namespace regen
