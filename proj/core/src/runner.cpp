#include "bergtoep/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>

#include "bergtoep/geometry.hpp"
#include "bergtoep/rng.hpp"
#include "config_internal.hpp"

namespace bergtoep {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string alpha_label(const MultiIndex& a) {
    std::string s;
    for (int i = 0; i < a.size(); ++i) {
        if (i > 0) s += ' ';
        s += std::to_string(a[i]);
    }
    return s;
}

void write_json_report(const fs::path& path, json body, const json& resolved) {
    body["config"] = resolved;
    body["version"] = version_string;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write report '" + path.string() + "'");
    out << body.dump(2) << '\n';
}

struct RunContext {
    const ExperimentConfig& cfg;
    Partition k;
    json resolved;
    fs::path out_dir;
    std::map<int, std::unique_ptr<BergmanSpace>> spaces;

    explicit RunContext(const ExperimentConfig& c)
        : cfg(c), k(c.partition), resolved(detail::resolved_config_json(c)), out_dir(c.output_dir) {}

    const BergmanSpace& space(int m) {
        auto it = spaces.find(m);
        if (it == spaces.end())
            it = spaces.emplace(m, std::make_unique<BergmanSpace>(cfg.n, m)).first;
        return *it->second;
    }
};

CheckOutcome run_spectrum(RunContext& ctx) {
    const ExperimentConfig& cfg = ctx.cfg;
    bool pass = true;
    double worst_crosscheck = 0.0;
    json files = json::array();
    for (std::size_t si = 0; si < cfg.symbols.size(); ++si) {
        const QuasiHomogeneousSymbol& sym = cfg.symbols[si];
        const bool closed = sym.radial().closed_form();
        const char* method = closed ? "closed-form" : "numeric";
        for (int m : cfg.m_values) {
            const BergmanSpace& sp = ctx.space(m);
            const fs::path file =
                ctx.out_dir / ("spectrum_s" + std::to_string(si) + "_m" + std::to_string(m) + ".csv");
            std::ofstream out(file, std::ios::binary);
            out << "alpha";
            for (int j = 0; j < ctx.k.block_count(); ++j) out << ",s" << (j + 1);
            out << ",value_re,value_im,method\n";
            for (std::size_t i = 0; i < sp.dim(); ++i) {
                const MultiIndex& alpha = sp.basis().at(i);
                const std::vector<int> s = block_degrees(alpha, ctx.k);
                Complex value{0.0, 0.0};
                const auto beta = try_subtract(alpha + sym.p(), sym.q());
                if (beta.has_value() && beta->degree() <= m) {
                    value = sym.is_quasi_radial()
                                ? gamma_quasi_radial(sym.radial(), ctx.k, m, s, cfg.quadrature)
                                : gamma_tilde(sym.radial(), ctx.k, sym.p(), sym.q(), m, alpha,
                                              cfg.quadrature);
                    if (closed) {
                        const Complex numeric =
                            sym.is_quasi_radial()
                                ? gamma_quasi_radial(sym.radial(), ctx.k, m, s, cfg.quadrature,
                                                     IntegralPath::numeric)
                                : gamma_tilde(sym.radial(), ctx.k, sym.p(), sym.q(), m, alpha,
                                              cfg.quadrature, IntegralPath::numeric);
                        const double scale = std::max(1.0, std::abs(value));
                        worst_crosscheck =
                            std::max(worst_crosscheck, std::abs(value - numeric) / scale);
                    }
                }
                out << alpha_label(alpha);
                for (int sj : s) out << ',' << sj;
                out << ',' << fmt_double(value.real()) << ',' << fmt_double(value.imag()) << ','
                    << method << '\n';
            }
            files.push_back(file.filename().string());
        }
    }
    if (worst_crosscheck > cfg.tolerances.eff(cfg.tolerances.spectrum)) pass = false;
    const fs::path report = ctx.out_dir / "spectrum_summary.json";
    write_json_report(report,
                      json{{"check", "spectrum"},
                           {"files", files},
                           {"max_crosscheck_rel_diff", worst_crosscheck},
                           {"pass", pass}},
                      ctx.resolved);
    return {"spectrum", pass, report.string()};
}

CheckOutcome run_assemble(RunContext& ctx) {
    const ExperimentConfig& cfg = ctx.cfg;
    json files = json::array();
    for (std::size_t si = 0; si < cfg.symbols.size(); ++si) {
        for (int m : cfg.m_values) {
            const BergmanSpace& sp = ctx.space(m);
            const OperatorMatrix op = assemble(cfg.symbols[si], ctx.k, sp, cfg.quadrature);
            const std::string stem = "assemble_s" + std::to_string(si) + "_m" + std::to_string(m);
            {
                std::ofstream out(ctx.out_dir / (stem + ".csv"), std::ios::binary);
                write_matrix_csv(op, out);
            }
            {
                std::ofstream out(ctx.out_dir / (stem + ".json"), std::ios::binary);
                write_matrix_json(op, out);
            }
            files.push_back(stem + ".csv");
            files.push_back(stem + ".json");
        }
    }
    const fs::path report = ctx.out_dir / "assemble_summary.json";
    write_json_report(report, json{{"check", "assemble"}, {"files", files}, {"pass", true}},
                      ctx.resolved);
    return {"assemble", true, report.string()};
}

CheckOutcome run_commute(RunContext& ctx) {
    const ExperimentConfig& cfg = ctx.cfg;
    const double tol = cfg.tolerances.eff(cfg.tolerances.commute);
    const double floor = cfg.tolerances.eff(cfg.tolerances.separation);
    bool pass = true;
    json rows = json::array();
    for (std::size_t i = 0; i < cfg.symbols.size(); ++i) {
        for (std::size_t j = i + 1; j < cfg.symbols.size(); ++j) {
            json row;
            row["sym1"] = detail::symbol_to_json(cfg.symbols[i]);
            row["sym2"] = detail::symbol_to_json(cfg.symbols[j]);
            const std::vector<int> dp = block_degrees(cfg.symbols[i].p(), ctx.k);
            const std::vector<int> dq = block_degrees(cfg.symbols[i].q(), ctx.k);
            const std::vector<int> du = block_degrees(cfg.symbols[j].p(), ctx.k);
            const std::vector<int> dv = block_degrees(cfg.symbols[j].q(), ctx.k);
            if (dp != dq || du != dv) {
                row["skipped"] = "symbols are not block-balanced";
                rows.push_back(std::move(row));
                continue;
            }
            const bool predicted = predict_commutes(cfg.symbols[i], cfg.symbols[j], ctx.k);
            double measured = 0.0;
            for (int m : cfg.m_values) {
                const BergmanSpace& sp = ctx.space(m);
                const OperatorMatrix a = assemble(cfg.symbols[i], ctx.k, sp, cfg.quadrature);
                const OperatorMatrix b = assemble(cfg.symbols[j], ctx.k, sp, cfg.quadrature);
                measured = std::max(measured, commutator_norm(a, b));
            }
            const bool row_pass = predicted ? measured <= tol : measured >= floor;
            row["predicted"] = predicted;
            row["measured_norm"] = measured;
            row["pass"] = row_pass;
            pass = pass && row_pass;
            rows.push_back(std::move(row));
        }
    }
    const fs::path report = ctx.out_dir / "commute.json";
    write_json_report(report, json{{"check", "commute"}, {"pairs", rows}, {"pass", pass}},
                      ctx.resolved);
    return {"commute", pass, report.string()};
}

CheckOutcome run_verify(RunContext& ctx) {
    const ExperimentConfig& cfg = ctx.cfg;
    const bool separated = cfg.mc.method == McConfig::Method::separated;
    const double tol = cfg.tolerances.eff(cfg.tolerances.oracle);
    bool pass = true;
    json rows = json::array();
    for (std::size_t si = 0; si < cfg.symbols.size(); ++si) {
        const QuasiHomogeneousSymbol& sym = cfg.symbols[si];
        for (int m : cfg.m_values) {
            const BergmanSpace& sp = ctx.space(m);
            const OperatorMatrix spectral = assemble(sym, ctx.k, sp, cfg.quadrature);
            json row;
            row["space"] = {{"n", cfg.n}, {"m", m}, {"partition", cfg.partition}};
            row["symbol"] = detail::symbol_to_json(sym);
            row["seed"] = cfg.mc.seed;
            bool row_pass = true;
            if (separated) {
                const OperatorMatrix direct =
                    assemble_direct(sym, ctx.k, sp, cfg.mc, cfg.quadrature);
                const ComparisonReport rep = compare_matrices(spectral, direct);
                row["method"] = "separated";
                row["max_abs_diff"] = rep.max_abs_diff;
                row_pass = rep.max_abs_diff <= tol;
            } else {
                // Structural entries beta = alpha + p - q against per-entry 3 sigma.
                double worst_diff = 0.0;
                double worst_ratio = 0.0;
                for (std::size_t ia = 0; ia < sp.dim(); ++ia) {
                    const MultiIndex& alpha = sp.basis().at(ia);
                    const auto beta = try_subtract(alpha + sym.p(), sym.q());
                    if (!beta.has_value() || beta->degree() > m) continue;
                    const std::size_t ib = *sp.index_of(*beta);
                    const Estimate est =
                        inner_product_direct(sym, alpha, *beta, sp, ctx.k, cfg.mc, cfg.quadrature);
                    const double cc = sp.normalizer(ia) * sp.normalizer(ib);
                    const double diff = std::abs(
                        spectral.entries(static_cast<Eigen::Index>(ib),
                                         static_cast<Eigen::Index>(ia)) -
                        est.value * cc);
                    const double sigma3 = 3.0 * est.stderr_ * cc + 1e-12;
                    worst_diff = std::max(worst_diff, diff);
                    worst_ratio = std::max(worst_ratio, diff / sigma3);
                }
                row["method"] = "montecarlo";
                row["samples"] = cfg.mc.sample_count;
                row["max_abs_diff"] = worst_diff;
                row["max_3sigma_ratio"] = worst_ratio;
                row_pass = worst_ratio <= 1.0;
            }
            row["pass"] = row_pass;
            pass = pass && row_pass;
            rows.push_back(std::move(row));
        }
    }
    const fs::path report = ctx.out_dir / "verify.json";
    write_json_report(report, json{{"check", "oracle"}, {"rows", rows}, {"pass", pass}},
                      ctx.resolved);
    return {"oracle", pass, report.string()};
}

CheckOutcome run_geometry(RunContext& ctx) {
    const ExperimentConfig& cfg = ctx.cfg;
    const Partition& k = ctx.k;
    const double tol = cfg.tolerances.eff(cfg.tolerances.geometry);
    const double tol_bracket = cfg.tolerances.eff(cfg.tolerances.bracket);
    const double tol_recompose = cfg.tolerances.eff(cfg.tolerances.recompose);
    const double eps = 1e-4;

    json ambients = json::array();
    bool pass = true;
    for (const Ambient amb : {Ambient::projective_chart, Ambient::ball}) {
        const auto points = sample_points_vk(k, amb, cfg.geometry_samples, cfg.mc.seed);
        double lagr = 0.0, orth = 0.0, brack = 0.0, pik_inv = 0.0, bk_eq = 0.0, iso = 0.0,
               recomp = 0.0, bconstraint = 0.0;
        Rng rng(mix_seed(cfg.mc.seed, amb == Ambient::ball ? 11 : 10));
        for (std::size_t pi = 0; pi < points.size(); ++pi) {
            const ChartPoint& at = points[pi];
            lagr = std::max(lagr, lagrangian_deviation(at, k));
            orth = std::max(orth, frame_orthogonality(at, k));
            for (int i = 0; i < k.block_count(); ++i)
                for (int j = i; j < k.block_count(); ++j)
                    brack = std::max(brack, bracket_fd(i, j, at, k, eps));

            const std::uint64_t ps = mix_seed(cfg.mc.seed, 1000 + pi);
            const GroupElement a = random_ak_element(k, ps);
            pik_inv = std::max(
                pik_inv, proj_distance(pi_k(ChartPoint{a.apply(at.z), Ambient::projective_chart}, k),
                                       pi_k(at, k)));
            const GroupElement b = random_bk_element(k, ps + 1);
            bk_eq = std::max(bk_eq, bk_equivariance(b, at, k));

            const GroupElement t = random_torus_element(k.dimension(), ps + 2);
            Tangent v(k.dimension()), w(k.dimension());
            for (int i = 0; i < k.dimension(); ++i) {
                v[i] = rng.gaussian();
                w[i] = rng.gaussian();
            }
            iso = std::max(iso, isometry_deviation(t, at, v, w));

            std::vector<Complex> c(static_cast<std::size_t>(k.dimension()));
            for (auto& ci : c) ci = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.2));
            const auto [ga, gb] = ak_decompose(c, k);
            for (int i = 0; i < k.dimension(); ++i)
                recomp = std::max(recomp,
                                  std::abs(ga.coords()[static_cast<std::size_t>(i)] *
                                               gb.coords()[static_cast<std::size_t>(i)] -
                                           c[static_cast<std::size_t>(i)]));
            for (int j = 0; j < k.block_count(); ++j) {
                Complex prod{1.0, 0.0};
                for (int i = 0; i < k.part(j); ++i)
                    prod *= gb.coords()[static_cast<std::size_t>(k.offset(j) + i)];
                bconstraint = std::max(bconstraint, std::abs(prod - Complex{1.0, 0.0}));
            }
        }
        const bool amb_pass = lagr <= tol && orth <= tol && brack <= tol_bracket &&
                              pik_inv <= tol && bk_eq <= tol && iso <= tol &&
                              recomp <= tol_recompose && bconstraint <= tol;
        pass = pass && amb_pass;
        ambients.push_back(json{{"ambient", amb == Ambient::ball ? "ball" : "projective-chart"},
                                {"samples", cfg.geometry_samples},
                                {"epsilon", eps},
                                {"lagrangian_max", lagr},
                                {"orthogonality_max", orth},
                                {"bracket_max", brack},
                                {"pik_ak_invariance_max", pik_inv},
                                {"bk_equivariance_max", bk_eq},
                                {"isometry_max", iso},
                                {"ak_recompose_max", recomp},
                                {"bk_constraint_max", bconstraint},
                                {"pass", amb_pass}});
    }
    const fs::path report = ctx.out_dir / "geometry.json";
    write_json_report(report,
                      json{{"check", "geometry"},
                           {"seed", cfg.mc.seed},
                           {"ambients", ambients},
                           {"pass", pass}},
                      ctx.resolved);
    return {"geometry", pass, report.string()};
}

CheckOutcome run_rkh(RunContext& ctx) {
    const ExperimentConfig& cfg = ctx.cfg;
    const double tol = cfg.tolerances.eff(cfg.tolerances.commute);
    const SymbolClassRkh cls(ctx.k, cfg.bounds_h);
    const auto generators = rkh_generator_family(cls, 10);
    bool pass = true;
    json per_m = json::array();
    double overall = 0.0;
    for (int m : cfg.m_values) {
        const BergmanSpace& sp = ctx.space(m);
        std::vector<OperatorMatrix> ops;
        ops.reserve(generators.size());
        for (const auto& g : generators) ops.push_back(assemble(g, ctx.k, sp, cfg.quadrature));
        double worst = 0.0;
        for (std::size_t i = 0; i < ops.size(); ++i)
            for (std::size_t j = i + 1; j < ops.size(); ++j)
                worst = std::max(worst, commutator_norm(ops[i], ops[j]));
        overall = std::max(overall, worst);
        per_m.push_back(json{{"m", m}, {"max_pairwise_commutator", worst}});
    }
    pass = overall <= tol;
    const fs::path report = ctx.out_dir / "rkh_algebra.json";
    write_json_report(report,
                      json{{"check", "rkh-algebra"},
                           {"generator_count", generators.size()},
                           {"per_m", per_m},
                           {"max_pairwise_commutator", overall},
                           {"pass", pass}},
                      ctx.resolved);
    return {"rkh-algebra", pass, report.string()};
}

} // namespace

std::vector<CheckOutcome> run_checks(const ExperimentConfig& cfg) {
    RunContext ctx(cfg);
    fs::create_directories(ctx.out_dir);
    std::vector<CheckOutcome> outcomes;
    for (const std::string& name : cfg.checks) {
        if (name == "spectrum")
            outcomes.push_back(run_spectrum(ctx));
        else if (name == "assemble")
            outcomes.push_back(run_assemble(ctx));
        else if (name == "commute")
            outcomes.push_back(run_commute(ctx));
        else if (name == "oracle")
            outcomes.push_back(run_verify(ctx));
        else if (name == "geometry")
            outcomes.push_back(run_geometry(ctx));
        else if (name == "rkh-algebra")
            outcomes.push_back(run_rkh(ctx));
        else
            throw ValidationError("unknown check '" + name + "'");
    }
    json summary;
    summary["checks"] = json::array();
    bool all = true;
    for (const CheckOutcome& oc : outcomes) {
        summary["checks"].push_back(
            json{{"check", oc.check}, {"pass", oc.pass}, {"report", fs::path(oc.report_path).filename().string()}});
        all = all && oc.pass;
    }
    summary["pass"] = all;
    write_json_report(ctx.out_dir / "summary.json", std::move(summary), ctx.resolved);
    return outcomes;
}

} // namespace bergtoep
