#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace froblab {

/// Result of one registry scenario. `verdict` is "pass" or "fail"; witnesses
/// and counts carry the scenario-specific evidence.
struct ScenarioReport {
    std::string scenario;
    std::string verdict;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    std::int64_t runtime_ms = 0;
    bool pass() const { return verdict == "pass"; }
    nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& scenario_names();
ScenarioReport run_named_scenario(const std::string& name);

}  // namespace froblab
