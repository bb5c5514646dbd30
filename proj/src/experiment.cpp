#include "regen/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "regen/fattree_regen.hpp"
#include "regen/rng.hpp"
#include "regen/select.hpp"
#include "regen/traffic.hpp"

namespace regen {

void SweepSpec::validate() const {
    if (kind != "overlay" && kind != "fattree")
        throw std::invalid_argument("sweep: kind must be overlay or fattree");
    if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    if (schemes.empty()) throw std::invalid_argument("sweep: no schemes");
    for (Scheme s : schemes) {
        if (kind == "overlay" && !scheme_is_overlay(s))
            throw std::invalid_argument("sweep: scheme " + to_string(s) + " needs a fat-tree");
        if (kind == "fattree" && !scheme_is_fattree(s))
            throw std::invalid_argument("sweep: scheme " + to_string(s) + " needs an overlay");
    }
    for (const SweepPoint& p : points()) p.code.validate();
}

std::vector<SweepPoint> SweepSpec::points() const {
    std::vector<SweepPoint> pts;
    if (kind == "overlay") {
        if (num_nodes_list.empty() || coded_nodes_list.empty() || d_list.empty() || dists.empty())
            throw std::invalid_argument("sweep: overlay needs N, n, d and distribution axes");
        for (int N : num_nodes_list)
            for (int n : coded_nodes_list)
                for (int d : d_list)
                    for (const auto& dist : dists) {
                        SweepPoint p;
                        p.kind = kind;
                        p.code = CodeParams::mds(N, n, k, d, file_mb);
                        p.dist = dist;
                        pts.push_back(p);
                    }
    } else {
        if (arity_list.empty() || coded_nodes_list.empty() || d_list.empty())
            throw std::invalid_argument("sweep: fattree needs K, n and d axes");
        for (int K : arity_list)
            for (int n : coded_nodes_list)
                for (int d : d_list) {
                    SweepPoint p;
                    p.kind = kind;
                    p.arity = K;
                    p.tier_dists = tier_dists;
                    p.code = CodeParams::mds(K * K * K / 4, n, k, d, file_mb);
                    pts.push_back(p);
                }
    }
    return pts;
}

uint64_t trial_seed(uint64_t base_seed, size_t point_index, int trial_index) {
    return mix_seed(mix_seed(base_seed, point_index), (uint64_t)trial_index);
}

TrialOutcome run_trial(const SweepPoint& point, Scheme scheme, BetaMode mode, uint64_t seed) {
    const uint64_t topo_seed = mix_seed(seed, 0);
    const uint64_t select_seed = mix_seed(seed, 1);
    const uint64_t place_seed = mix_seed(seed, 2);

    TrialOutcome out;
    if (point.kind == "overlay") {
        OverlayNetwork net = gen_overlay(point.code, point.dist, topo_seed);
        Rng rng(select_seed);
        switch (scheme) {
            case Scheme::RS: {
                RepairPlan plan = select_rs(net, rng, mode);
                out.bottleneck_mbps = plan.bottleneck_mbps;
                out.time_s = plan.traffic[0] / plan.bottleneck_mbps;
                break;
            }
            case Scheme::SPSN: {
                RepairPlan plan = select_spsn(net, mode);
                out.bottleneck_mbps = plan.bottleneck_mbps;
                out.time_s = plan.traffic[0] / plan.bottleneck_mbps;
                break;
            }
            case Scheme::FRS: {
                auto [plan, t] = select_frs(net, rng);
                out.bottleneck_mbps = plan.bottleneck_mbps;
                out.time_s = t;
                break;
            }
            case Scheme::FLEX: {
                auto [plan, t] = select_flex(net);
                out.bottleneck_mbps = plan.bottleneck_mbps;
                out.time_s = t;
                break;
            }
            default:
                throw std::invalid_argument("run_trial: scheme needs a fat-tree point");
        }
    } else {
        FatTreeNetwork net = build_fattree(point.arity, point.tier_dists, topo_seed);
        Roles roles = fattree_roles(net, point.code, place_seed);
        RepairPlan plan;
        if (scheme == Scheme::RSF) {
            Rng rng(select_seed);
            plan = select_rs_f(net, point.code, roles, rng, mode);
        } else if (scheme == Scheme::SPSNF) {
            plan = select_spsn_f(net, point.code, roles, mode);
        } else {
            throw std::invalid_argument("run_trial: scheme needs an overlay point");
        }
        out.time_s = regen_time_fattree(net, plan).total_time;
        out.bottleneck_mbps = 0;
    }
    return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult result;
    result.spec = spec;

    std::vector<SweepPoint> pts = spec.points();
    for (size_t pi = 0; pi < pts.size(); ++pi) {
        for (Scheme scheme : spec.schemes) {
            PointRecord rec;
            rec.point_index = pi;
            rec.point = pts[pi];
            rec.scheme = scheme;
            double sum = 0, sumsq = 0;
            for (int t = 0; t < spec.trials; ++t) {
                uint64_t seed = trial_seed(spec.base_seed, pi, t);
                TrialOutcome o = run_trial(pts[pi], scheme, spec.beta_mode, seed);
                rec.trials.push_back(o);
                rec.seeds.push_back(seed);
                sum += o.time_s;
                sumsq += o.time_s * o.time_s;
            }
            const int n = spec.trials;
            rec.mean = sum / n;
            rec.stddev = n > 1 ? std::sqrt(std::max(0.0, (sumsq - sum * sum / n) / (n - 1))) : 0;
            auto cmp = [](const TrialOutcome& a, const TrialOutcome& b) { return a.time_s < b.time_s; };
            rec.min = std::min_element(rec.trials.begin(), rec.trials.end(), cmp)->time_s;
            rec.max = std::max_element(rec.trials.begin(), rec.trials.end(), cmp)->time_s;
            result.records.push_back(std::move(rec));
        }
    }
    return result;
}

double analytic_rs_bottleneck(const BandwidthDistribution& dist, int d) {
    dist.validate();
    if (d < 1) throw std::invalid_argument("analytic_rs_bottleneck: d must be >= 1");
    return dist.low + (dist.high - dist.low) / (d + 1);
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "# rng=" << rng_algorithm_name() << " base_seed=" << result.spec.base_seed << "\n";
    os << "kind,N,n,k,d,K,dist_low,dist_high,scheme,trial,time_s,bottleneck_mbps,model,beta_mode,seed\n";
    for (const PointRecord& rec : result.records) {
        const SweepPoint& p = rec.point;
        for (size_t t = 0; t < rec.trials.size(); ++t) {
            os << p.kind << ',' << p.code.num_nodes << ',' << p.code.coded_nodes << ','
               << p.code.k << ',' << p.code.d << ',' << p.arity << ','
               << fmt(p.kind == "overlay" ? p.dist.low : p.tier_dists[0].low) << ','
               << fmt(p.kind == "overlay" ? p.dist.high : p.tier_dists[0].high) << ','
               << to_string(rec.scheme) << ',' << t << ',' << fmt(rec.trials[t].time_s) << ',';
            if (p.kind == "overlay") os << fmt(rec.trials[t].bottleneck_mbps);
            os << ",fluid," << to_string(result.spec.beta_mode) << ',' << rec.seeds[t] << "\n";
        }
    }
    return os.str();
}

std::string sweep_svg(const SweepResult& result) {
    const int W = 640, H = 400, ML = 60, MB = 40, MT = 20, MR = 20;
    size_t npoints = 0;
    double ymax = 0;
    for (const auto& r : result.records) {
        npoints = std::max(npoints, r.point_index + 1);
        ymax = std::max(ymax, r.mean);
    }
    if (ymax <= 0) ymax = 1;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR << "\" y2=\""
       << H - MB << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML << "\" y2=\"" << H - MB
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << ML - 50 << "\" y=\"" << MT + 10 << "\" font-size=\"11\">"
       << fmt(ymax) << "s</text>\n";

    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    int ci = 0;
    for (Scheme s : result.spec.schemes) {
        std::ostringstream pl;
        for (const auto& r : result.records) {
            if (r.scheme != s) continue;
            double x = npoints > 1
                           ? ML + (double)r.point_index / (npoints - 1) * (W - ML - MR)
                           : (ML + W - MR) / 2.0;
            double y = H - MB - r.mean / ymax * (H - MB - MT);
            pl << fmt(x) << ',' << fmt(y) << ' ';
        }
        os << "<polyline fill=\"none\" stroke=\"" << colors[ci % 6] << "\" points=\"" << pl.str()
           << "\"/>\n";
        os << "<text x=\"" << W - MR - 80 << "\" y=\"" << MT + 15 * (ci + 1) << "\" fill=\""
           << colors[ci % 6] << "\" font-size=\"12\">" << to_string(s) << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace regen
