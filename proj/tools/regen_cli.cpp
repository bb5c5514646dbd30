#include <cstdio>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "regen/experiment.hpp"
#include "regen/fattree_regen.hpp"
#include "regen/json_io.hpp"
#include "regen/rng.hpp"
#include "regen/select.hpp"
#include "regen/traffic.hpp"

using namespace regen;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GenOpts {
    bool overlay = false, fattree = false;
    int n_total = 0, n = 0, k = 0, d = 0;
    double file_mb = 100.0;
    double low = 10.0, high = 120.0;
    int code_k = 0;
    uint64_t seed = 0, place_seed = 0;
    bool place_seed_set = false;
    std::string out = "topology.json";
};

int cmd_gen(const GenOpts& o) {
    if (o.overlay == o.fattree) {
        std::cerr << "gen: pass exactly one of --overlay / --fattree\n";
        return kExitUsage;
    }
    if (o.overlay) {
        CodeParams code = CodeParams::mds(o.n_total, o.n, o.k, o.d, o.file_mb);
        OverlayNetwork net = gen_overlay(code, {o.low, o.high}, o.seed);
        write_text_file(o.out, overlay_to_json(net, {rng_algorithm_name(), o.seed}).dump(2) + "\n");
        std::printf("overlay: %d nodes, |V_p|=%zu, |V_n|=%zu -> %s\n", code.num_nodes,
                    net.provider_candidates.size(), net.newcomer_candidates.size(), o.out.c_str());
    } else {
        FatTreeNetwork net = build_fattree(o.k, default_tier_dists(), o.seed);
        std::optional<CodeParams> code;
        std::optional<Roles> roles;
        if (o.n > 0) {
            code = CodeParams::mds(net.num_hosts(), o.n, o.code_k, o.d, o.file_mb);
            uint64_t ps = o.place_seed_set ? o.place_seed : mix_seed(o.seed, 2);
            roles = fattree_roles(net, *code, ps);
        }
        write_text_file(o.out,
                        fattree_to_json(net, {rng_algorithm_name(), o.seed}, code, roles).dump(2) +
                            "\n");
        std::printf("fattree: K=%d, %d hosts, %zu links -> %s\n", net.arity, net.num_hosts(),
                    net.links.size(), o.out.c_str());
    }
    return 0;
}

struct SelectOpts {
    std::string topo, scheme_name, out;
    uint64_t seed = 0;
    std::string beta_mode = "msr";
    bool oracle = false;
    double dt = 1e-3;
};

int cmd_select(const SelectOpts& o) {
    json topo = load_json_file(o.topo);
    Scheme scheme = scheme_from_string(o.scheme_name);
    BetaMode mode = beta_mode_from_string(o.beta_mode);
    json out;

    if (topo.value("kind", "") == "overlay") {
        if (!scheme_is_overlay(scheme)) {
            std::cerr << "select: scheme " << o.scheme_name << " requires a fat-tree topology\n";
            return kExitUsage;
        }
        OverlayNetwork net = overlay_from_json(topo);
        Rng rng(o.seed);
        RepairPlan plan;
        double time_s = 0;
        switch (scheme) {
            case Scheme::RS:
                plan = select_rs(net, rng, mode);
                time_s = plan.traffic[0] / plan.bottleneck_mbps;
                break;
            case Scheme::SPSN:
                plan = select_spsn(net, mode);
                time_s = plan.traffic[0] / plan.bottleneck_mbps;
                break;
            case Scheme::FRS:
                std::tie(plan, time_s) = select_frs(net, rng);
                break;
            default:
                std::tie(plan, time_s) = select_flex(net);
                break;
        }
        out = plan_to_json(plan, time_s, true);
        if (o.oracle) {
            double gap;
            if (scheme_is_flexible(scheme)) {
                auto [oplan, otime] = brute_force_flex(net);
                gap = otime > 0 ? (time_s - otime) / otime : 0;
                out["oracle"] = {{"scheme", "brute-force-flex"}, {"time_s", otime}, {"gap", gap}};
            } else {
                RepairPlan oplan = brute_force_uniform(net, mode);
                double otime = oplan.traffic[0] / oplan.bottleneck_mbps;
                gap = otime > 0 ? (time_s - otime) / otime : 0;
                out["oracle"] = {{"scheme", "brute-force-uniform"},
                                 {"time_s", otime},
                                 {"bottleneck_mbps", oplan.bottleneck_mbps},
                                 {"gap", gap}};
            }
        }
    } else if (topo.value("kind", "") == "fattree") {
        if (!scheme_is_fattree(scheme)) {
            std::cerr << "select: scheme " << o.scheme_name << " requires an overlay topology\n";
            return kExitUsage;
        }
        FatTreeNetwork net = fattree_from_json(topo);
        auto code = fattree_code_from_json(topo);
        auto roles = fattree_roles_from_json(topo);
        if (!code || !roles) {
            std::cerr << "select: fat-tree topology lacks code_params/roles "
                         "(regenerate with gen --fattree --n ...)\n";
            return kExitUsage;
        }
        RepairPlan plan;
        if (scheme == Scheme::RSF) {
            Rng rng(o.seed);
            plan = select_rs_f(net, *code, *roles, rng, mode);
        } else {
            plan = select_spsn_f(net, *code, *roles, mode);
        }
        RegenReport report = regen_time_fattree(net, plan);
        report.beta_mode = mode;
        out = plan_to_json(plan, report.total_time, false);
        out["report"] = report_to_json(report);
        if (o.oracle) {
            double otime = fluid_oracle(net, plan, o.dt);
            double gap = otime > 0 ? (report.total_time - otime) / otime : 0;
            out["oracle"] = {{"scheme", "fluid"}, {"dt", o.dt}, {"time_s", otime}, {"gap", gap}};
        }
    } else {
        std::cerr << "select: unrecognized topology kind\n";
        return kExitUsage;
    }

    std::string text = out.dump(2) + "\n";
    if (!o.out.empty()) write_text_file(o.out, text);
    std::cout << text;
    return 0;
}

struct SweepOpts {
    std::string spec, out_dir = ".";
    int trials_override = 0;
};

int cmd_sweep(const SweepOpts& o) {
    SweepSpec spec = sweep_spec_from_json(load_json_file(o.spec));
    if (o.trials_override > 0) spec.trials = o.trials_override;
    SweepResult result = run_sweep(spec);

    std::filesystem::create_directories(o.out_dir);
    std::string csv_path = o.out_dir + "/sweep.csv";
    std::string svg_path = o.out_dir + "/sweep.svg";
    write_text_file(csv_path, sweep_csv(result));
    write_text_file(svg_path, sweep_svg(result));

    std::printf("%-8s %6s %4s %4s %4s %12s %12s %12s\n", "scheme", "N", "n", "d", "K", "mean_s",
                "std_s", "min..max_s");
    for (const PointRecord& r : result.records)
        std::printf("%-8s %6d %4d %4d %4d %12.6f %12.6f %.4f..%.4f\n",
                    to_string(r.scheme).c_str(), r.point.code.num_nodes, r.point.code.coded_nodes,
                    r.point.code.d, r.point.arity, r.mean, r.stddev, r.min, r.max);
    std::printf("%zu records -> %s, %s\n", result.records.size(), csv_path.c_str(),
                svg_path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"repair planning and regeneration-time evaluation for "
                 "heterogeneous erasure-coded storage"};
    app.require_subcommand(1);

    GenOpts g;
    auto* gen = app.add_subcommand("gen", "generate a topology file");
    gen->add_flag("--overlay", g.overlay, "overlay bipartite topology");
    gen->add_flag("--fattree", g.fattree, "fat-tree topology");
    gen->add_option("--n-total", g.n_total, "N, total node count (overlay)");
    gen->add_option("--n", g.n, "n, coded-block holders");
    gen->add_option("--k", g.k, "code k (overlay) or fat-tree arity K (fattree)");
    gen->add_option("--code-k", g.code_k, "code k for fat-tree role placement");
    gen->add_option("--d", g.d, "d, provider count");
    gen->add_option("--m", g.file_mb, "file size, Mb");
    gen->add_option("--low", g.low, "bandwidth interval low, Mbps (overlay)");
    gen->add_option("--high", g.high, "bandwidth interval high, Mbps (overlay)");
    gen->add_option("--seed", g.seed, "rng seed")->envname("REGEN_SEED");
    gen->add_option("--place-seed", g.place_seed, "fat-tree role placement seed")
        ->each([&](const std::string&) { g.place_seed_set = true; });
    gen->add_option("--out", g.out, "output path");

    SelectOpts s;
    auto* sel = app.add_subcommand("select", "run a selection scheme on a topology file");
    sel->add_option("--topo", s.topo, "topology JSON")->required();
    sel->add_option("--scheme", s.scheme_name, "RS|SPSN|FRS|FLEX|RS-F|SPSN-F")->required();
    sel->add_option("--seed", s.seed, "rng seed for random schemes")->envname("REGEN_SEED");
    sel->add_option("--beta-mode", s.beta_mode, "msr|eval");
    sel->add_flag("--oracle", s.oracle, "also run the matching oracle and report the gap");
    sel->add_option("--dt", s.dt, "fluid oracle step, seconds");
    sel->add_option("--out", s.out, "write the plan JSON here too");

    SweepOpts w;
    auto* swp = app.add_subcommand("sweep", "run a parameter sweep from a spec file");
    swp->add_option("--spec", w.spec, "sweep spec JSON")->required();
    swp->add_option("--out-dir", w.out_dir, "output directory");
    swp->add_option("--trials", w.trials_override, "override trials per point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(g);
        if (sel->parsed()) return cmd_select(s);
        return cmd_sweep(w);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
