#pragma once

#include "bergtoep/config.hpp"

namespace bergtoep {

struct CheckOutcome {
    std::string check;
    bool pass = false;
    std::string report_path; // primary artifact written by the check
};

/// Runs the selected checks, writes reports under cfg.output_dir and returns
/// one outcome per check. Outputs are byte-identical across runs for a fixed
/// config (seeds included); every JSON report embeds the resolved config and
/// the tool version.
std::vector<CheckOutcome> run_checks(const ExperimentConfig& cfg);

} // namespace bergtoep
