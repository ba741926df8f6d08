#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bergtoep/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz operators with quasi-radial quasi-homogeneous symbols on the "
                 "weighted Bergman spaces of projective space: config-driven checks"};

    std::string config_path;
    std::string out_dir;
    std::vector<std::string> checks;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tolerance_scale = 0.0;
    bool scale_set = false;

    app.add_option("--config", config_path, "Experiment config (JSON)")->required();
    app.add_option("--out", out_dir, "Output directory (overrides config)");
    app.add_option("--check", checks, "Check to run (repeatable; overrides config)");
    app.add_option("--seed", seed, "Seed override for Monte-Carlo and sampling")
        ->each([&](const std::string&) { seed_set = true; });
    app.add_option("--tolerance-scale", tolerance_scale,
                   "Multiplies every pass threshold (exploratory runs only)")
        ->each([&](const std::string&) { scale_set = true; });

    CLI11_PARSE(app, argc, argv);

    try {
        bergtoep::ExperimentConfig cfg = bergtoep::load_config_file(config_path);
        bergtoep::Overrides ov;
        if (seed_set) ov.seed = seed;
        if (scale_set) ov.tolerance_scale = tolerance_scale;
        if (!out_dir.empty()) ov.output_dir = out_dir;
        ov.checks = checks;
        bergtoep::apply_overrides(cfg, ov);

        const auto outcomes = bergtoep::run_checks(cfg);
        bool all = true;
        for (const auto& oc : outcomes) {
            std::printf("[%s] %-12s %s\n", oc.pass ? "PASS" : "FAIL", oc.check.c_str(),
                        oc.report_path.c_str());
            all = all && oc.pass;
        }
        return all ? 0 : 1;
    } catch (const bergtoep::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
