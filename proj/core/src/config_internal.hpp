#pragma once

#include <nlohmann/json.hpp>

#include "bergtoep/config.hpp"

namespace bergtoep::detail {

nlohmann::json symbol_to_json(const QuasiHomogeneousSymbol& sym);
QuasiHomogeneousSymbol symbol_from_json(const nlohmann::json& j, int n, int l,
                                        const std::string& path);

/// Fully resolved config (defaults materialized) for embedding into reports.
nlohmann::json resolved_config_json(const ExperimentConfig& cfg);

} // namespace bergtoep::detail
