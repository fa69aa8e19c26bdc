#pragma once

#include <json.hpp>

#include "ris/scenario.hpp"

namespace ris {

// In-memory form of the scenario file; used by the CLI to apply flat
// key=value overrides before deserializing.
nlohmann::json scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const nlohmann::json& j);

}  // namespace ris
