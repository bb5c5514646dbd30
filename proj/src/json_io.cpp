#include "regen/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace regen {

using nlohmann::json;

namespace {

json code_to_json(const CodeParams& c) {
    return {{"N", c.num_nodes}, {"n", c.coded_nodes}, {"k", c.k},
            {"d", c.d},         {"M", c.file_mb},     {"alpha", c.alpha_mb}};
}

CodeParams code_from_json(const json& j) {
    CodeParams c;
    c.num_nodes = j.at("N").get<int>();
    c.coded_nodes = j.at("n").get<int>();
    c.k = j.at("k").get<int>();
    c.d = j.at("d").get<int>();
    c.file_mb = j.at("M").get<double>();
    c.alpha_mb = j.value("alpha", c.file_mb / c.k);
    c.validate();
    return c;
}

json rng_to_json(const RngHeader& r) {
    return {{"algorithm", r.algorithm}, {"seed", r.seed}};
}

BandwidthDistribution dist_from_json(const json& j) {
    BandwidthDistribution d{j.at("low").get<double>(), j.at("high").get<double>()};
    d.validate();
    return d;
}

}  // namespace

json overlay_to_json(const OverlayNetwork& net, const RngHeader& rng) {
    json j;
    j["kind"] = "overlay";
    j["rng"] = rng_to_json(rng);
    j["code_params"] = code_to_json(net.code);
    j["failed_node"] = net.failed_node;
    j["provider_candidates"] = net.provider_candidates;
    j["newcomer_candidates"] = net.newcomer_candidates;
    j["bandwidth"] = net.bandwidth;  // rows = provider candidates in id order
    return j;
}

OverlayNetwork overlay_from_json(const json& j) {
    if (j.value("kind", "") != "overlay")
        throw std::invalid_argument("topology file is not an overlay");
    OverlayNetwork net;
    net.code = code_from_json(j.at("code_params"));
    net.failed_node = j.at("failed_node").get<int>();
    net.provider_candidates = j.at("provider_candidates").get<std::vector<int>>();
    net.newcomer_candidates = j.at("newcomer_candidates").get<std::vector<int>>();
    net.bandwidth = j.at("bandwidth").get<std::vector<std::vector<double>>>();
    net.validate();
    return net;
}

json fattree_to_json(const FatTreeNetwork& net, const RngHeader& rng,
                     const std::optional<CodeParams>& code, const std::optional<Roles>& roles) {
    json j;
    j["kind"] = "fattree";
    j["rng"] = rng_to_json(rng);
    j["K"] = net.arity;
    json hosts = json::array();
    for (int h = 0; h < net.num_hosts(); ++h)
        hosts.push_back({{"id", h},
                         {"pod", net.host_pod(h)},
                         {"edge", net.host_edge_off(h)},
                         {"port", net.host_port(h)}});
    j["hosts"] = hosts;
    json links = json::array();
    for (const auto& l : net.links)
        links.push_back({{"id", l.id},
                         {"a", l.a},
                         {"b", l.b},
                         {"tier", to_string(l.tier)},
                         {"capacity", l.capacity}});
    j["links"] = links;
    if (code) j["code_params"] = code_to_json(*code);
    if (roles)
        j["roles"] = {{"failed_node", roles->failed_node},
                      {"provider_candidates", roles->provider_candidates},
                      {"newcomer_candidates", roles->newcomer_candidates}};
    return j;
}

FatTreeNetwork fattree_from_json(const json& j) {
    if (j.value("kind", "") != "fattree")
        throw std::invalid_argument("topology file is not a fat-tree");
    FatTreeNetwork net;
    net.arity = j.at("K").get<int>();
    for (const auto& lj : j.at("links"))
        net.links.push_back({lj.at("id").get<int>(), lj.at("a").get<int>(), lj.at("b").get<int>(),
                             tier_from_string(lj.at("tier").get<std::string>()),
                             lj.at("capacity").get<double>()});
    std::sort(net.links.begin(), net.links.end(),
              [](const LinkRecord& a, const LinkRecord& b) { return a.id < b.id; });
    net.validate();
    return net;
}

std::optional<CodeParams> fattree_code_from_json(const json& j) {
    if (!j.contains("code_params")) return std::nullopt;
    return code_from_json(j.at("code_params"));
}

std::optional<Roles> fattree_roles_from_json(const json& j) {
    if (!j.contains("roles")) return std::nullopt;
    Roles r;
    const json& rj = j.at("roles");
    r.failed_node = rj.at("failed_node").get<int>();
    r.provider_candidates = rj.at("provider_candidates").get<std::vector<int>>();
    r.newcomer_candidates = rj.at("newcomer_candidates").get<std::vector<int>>();
    return r;
}

json plan_to_json(const RepairPlan& plan, double time_s, bool with_bottleneck) {
    json j;
    j["scheme"] = to_string(plan.scheme);
    j["newcomer"] = plan.newcomer;
    j["providers"] = plan.providers;
    j["traffic"] = plan.traffic;
    j["time_s"] = time_s;
    if (with_bottleneck) j["bottleneck_mbps"] = plan.bottleneck_mbps;
    return j;
}

json report_to_json(const RegenReport& report) {
    json j;
    j["total_time"] = report.total_time;
    j["scheme"] = to_string(report.scheme);
    j["beta_mode"] = to_string(report.beta_mode);
    j["finish_order"] = report.finish_order;
    json epochs = json::array();
    for (const Epoch& e : report.epochs) {
        json rates = json::array();
        for (auto& [prov, rate] : e.rates) rates.push_back({{"provider", prov}, {"rate", rate}});
        epochs.push_back({{"duration", e.duration}, {"rates", rates}});
    }
    j["epochs"] = epochs;
    return j;
}

SweepSpec sweep_spec_from_json(const json& j) {
    SweepSpec s;
    s.kind = j.at("kind").get<std::string>();
    s.k = j.at("k").get<int>();
    s.file_mb = j.at("M").get<double>();
    if (j.contains("N")) s.num_nodes_list = j.at("N").get<std::vector<int>>();
    s.coded_nodes_list = j.at("n").get<std::vector<int>>();
    s.d_list = j.at("d").get<std::vector<int>>();
    if (j.contains("K")) s.arity_list = j.at("K").get<std::vector<int>>();
    if (j.contains("distributions"))
        for (const auto& dj : j.at("distributions")) s.dists.push_back(dist_from_json(dj));
    if (j.contains("tier_distributions")) {
        const auto& td = j.at("tier_distributions");
        if (td.size() != 3)
            throw std::invalid_argument("sweep spec: tier_distributions needs 3 entries");
        for (int i = 0; i < 3; ++i) s.tier_dists[i] = dist_from_json(td[i]);
    } else {
        s.tier_dists = default_tier_dists();
    }
    for (const auto& sj : j.at("schemes"))
        s.schemes.push_back(scheme_from_string(sj.get<std::string>()));
    s.trials = j.value("trials", 100);
    s.base_seed = j.value("base_seed", (uint64_t)0);
    s.beta_mode = beta_mode_from_string(j.value("beta_mode", "msr"));
    s.validate();
    return s;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

}  // namespace regen
