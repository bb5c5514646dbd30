#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "regen/experiment.hpp"
#include "regen/fattree.hpp"
#include "regen/fattree_regen.hpp"
#include "regen/overlay.hpp"
#include "regen/select.hpp"

namespace regen {

// Topology files carry the generator name and seed in a header so every
// output is reproducible from the file alone.
struct RngHeader {
    std::string algorithm = rng_algorithm_name();
    uint64_t seed = 0;
};

nlohmann::json overlay_to_json(const OverlayNetwork& net, const RngHeader& rng);
OverlayNetwork overlay_from_json(const nlohmann::json& j);

nlohmann::json fattree_to_json(const FatTreeNetwork& net, const RngHeader& rng,
                               const std::optional<CodeParams>& code,
                               const std::optional<Roles>& roles);
FatTreeNetwork fattree_from_json(const nlohmann::json& j);
std::optional<CodeParams> fattree_code_from_json(const nlohmann::json& j);
std::optional<Roles> fattree_roles_from_json(const nlohmann::json& j);

nlohmann::json plan_to_json(const RepairPlan& plan, double time_s, bool with_bottleneck);
nlohmann::json report_to_json(const RegenReport& report);

SweepSpec sweep_spec_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace regen
