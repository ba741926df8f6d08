#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergtoep/oracle.hpp"

namespace bergtoep {

/// Pass thresholds used by the runner; scale is an exploratory multiplier
/// applied on top of every threshold.
struct ToleranceSet {
    double commute = 1e-9;
    double separation = 1e-3;
    double oracle = 1e-6;
    double geometry = 1e-12;
    double bracket = 1e-8;
    double recompose = 1e-13;
    double spectrum = 1e-9; // closed-form vs numeric cross-check in run_spectrum
    double scale = 1.0;

    double eff(double base) const { return base * scale; }
};

/// One experiment: a space family (n, m values, partition), a symbol list and
/// the checks to run. Parsed from versioned JSON (share/config.schema.json).
struct ExperimentConfig {
    int n = 1;
    std::vector<int> m_values{1};
    std::vector<int> partition{1};
    std::vector<std::optional<int>> bounds_h; // size l; nullopt on blocks with k_j = 1
    std::vector<QuasiHomogeneousSymbol> symbols;
    std::vector<std::string> checks;
    ToleranceSet tolerances;
    QuadratureSpec quadrature;
    McConfig mc;
    int geometry_samples = 1000;
    std::string output_dir = "out";
};

/// Parses and validates against every module precondition; ValidationError
/// messages carry the offending field path.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config_file(const std::string& path);

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<double> tolerance_scale;
    std::optional<std::string> output_dir;
    std::vector<std::string> checks;
};

void apply_overrides(ExperimentConfig& cfg, const Overrides& ov);

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{"spectrum", "assemble", "commute",
                                                "oracle",   "geometry", "rkh-algebra"};
    return names;
}

} // namespace bergtoep
