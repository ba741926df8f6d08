#include "bergtoep/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "config_internal.hpp"

namespace bergtoep {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ValidationError(path + ": " + what);
}

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

Complex parse_complex(const json& j, const std::string& path) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    fail(path, "expected a number or [re, im]");
}

std::vector<int> parse_int_vector(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(require_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace

namespace detail {

json symbol_to_json(const QuasiHomogeneousSymbol& sym) {
    json j;
    const QuasiRadialSymbol& a = sym.radial();
    switch (a.family()) {
        case QuasiRadialSymbol::Family::constant:
            j["family"] = "constant";
            j["value"] = {a.coefficient().real(), a.coefficient().imag()};
            break;
        case QuasiRadialSymbol::Family::radial_monomial:
            j["family"] = "radial_monomial";
            j["c"] = a.powers();
            j["coeff"] = {a.coefficient().real(), a.coefficient().imag()};
            break;
        case QuasiRadialSymbol::Family::inverse_power:
            j["family"] = "inverse_power";
            j["t"] = a.inverse_t();
            j["coeff"] = {a.coefficient().real(), a.coefficient().imag()};
            break;
        case QuasiRadialSymbol::Family::bounded_rational:
            j["family"] = "bounded_rational";
            j["c"] = a.powers();
            j["t"] = a.inverse_t();
            j["coeff"] = {a.coefficient().real(), a.coefficient().imag()};
            break;
        case QuasiRadialSymbol::Family::tabulated:
            j["family"] = "tabulated";
            break;
    }
    j["p"] = sym.p().entries();
    j["q"] = sym.q().entries();
    return j;
}

QuasiHomogeneousSymbol symbol_from_json(const json& j, int n, int l, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a symbol object");
    if (!j.contains("family") || !j["family"].is_string()) fail(path + ".family", "required");
    const std::string family = j["family"].get<std::string>();

    QuasiRadialSymbol radial = QuasiRadialSymbol::constant(1.0);
    if (family == "constant") {
        const Complex v =
            j.contains("value") ? parse_complex(j["value"], path + ".value") : Complex{1.0, 0.0};
        radial = QuasiRadialSymbol::constant(v);
    } else if (family == "radial_monomial" || family == "bounded_rational") {
        if (!j.contains("c")) fail(path + ".c", "required");
        std::vector<int> c = parse_int_vector(j["c"], path + ".c");
        if (static_cast<int>(c.size()) != l)
            fail(path + ".c", "length " + std::to_string(c.size()) + ", expected l = " +
                                  std::to_string(l));
        const Complex coeff =
            j.contains("coeff") ? parse_complex(j["coeff"], path + ".coeff") : Complex{1.0, 0.0};
        if (family == "radial_monomial") {
            radial = QuasiRadialSymbol::radial_monomial(std::move(c), coeff);
        } else {
            if (!j.contains("t")) fail(path + ".t", "required");
            radial = QuasiRadialSymbol::bounded_rational(std::move(c),
                                                         require_int(j["t"], path + ".t"), coeff);
        }
    } else if (family == "inverse_power") {
        if (!j.contains("t")) fail(path + ".t", "required");
        const Complex coeff =
            j.contains("coeff") ? parse_complex(j["coeff"], path + ".coeff") : Complex{1.0, 0.0};
        radial = QuasiRadialSymbol::inverse_power(require_int(j["t"], path + ".t"), coeff);
    } else {
        fail(path + ".family", "unknown family '" + family + "'");
    }

    MultiIndex p = MultiIndex::zero(n);
    MultiIndex q = MultiIndex::zero(n);
    if (j.contains("p")) {
        std::vector<int> pv = parse_int_vector(j["p"], path + ".p");
        if (static_cast<int>(pv.size()) != n)
            fail(path + ".p", "length " + std::to_string(pv.size()) + ", expected n = " +
                                  std::to_string(n));
        p = MultiIndex(std::move(pv));
    }
    if (j.contains("q")) {
        std::vector<int> qv = parse_int_vector(j["q"], path + ".q");
        if (static_cast<int>(qv.size()) != n)
            fail(path + ".q", "length " + std::to_string(qv.size()) + ", expected n = " +
                                  std::to_string(n));
        q = MultiIndex(std::move(qv));
    }
    if (!validate_orthogonal(p, q)) fail(path, "p.q must vanish");
    return QuasiHomogeneousSymbol(std::move(radial), std::move(p), std::move(q));
}

json resolved_config_json(const ExperimentConfig& cfg) {
    json j;
    j["schema_version"] = 1;
    j["n"] = cfg.n;
    j["m"] = cfg.m_values;
    j["partition"] = cfg.partition;
    json h = json::array();
    for (const auto& hj : cfg.bounds_h) {
        if (hj.has_value())
            h.push_back(*hj);
        else
            h.push_back(nullptr);
    }
    j["bounds_h"] = std::move(h);
    json syms = json::array();
    for (const auto& s : cfg.symbols) syms.push_back(symbol_to_json(s));
    j["symbols"] = std::move(syms);
    j["checks"] = cfg.checks;
    j["tolerances"] = {{"commute", cfg.tolerances.commute},
                       {"separation", cfg.tolerances.separation},
                       {"oracle", cfg.tolerances.oracle},
                       {"geometry", cfg.tolerances.geometry},
                       {"bracket", cfg.tolerances.bracket},
                       {"recompose", cfg.tolerances.recompose},
                       {"spectrum", cfg.tolerances.spectrum},
                       {"scale", cfg.tolerances.scale}};
    j["quadrature"] = {{"nodes_per_axis", cfg.quadrature.nodes_per_axis}};
    j["montecarlo"] = {
        {"samples", cfg.mc.sample_count},
        {"seed", cfg.mc.seed},
        {"method", cfg.mc.method == McConfig::Method::separated ? "separated" : "montecarlo"},
        {"batch_size", cfg.mc.batch_size}};
    j["geometry_samples"] = cfg.geometry_samples;
    j["output_dir"] = cfg.output_dir;
    return j;
}

} // namespace detail

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config: top level must be an object");

    ExperimentConfig cfg;
    if (j.contains("schema_version") && require_int(j["schema_version"], "schema_version") != 1)
        fail("schema_version", "unsupported (expected 1)");

    if (!j.contains("n")) fail("n", "required");
    cfg.n = require_int(j["n"], "n");
    if (cfg.n < 1) fail("n", "must be >= 1");

    if (!j.contains("m")) fail("m", "required");
    if (j["m"].is_number_integer()) {
        cfg.m_values = {j["m"].get<int>()};
    } else {
        cfg.m_values = parse_int_vector(j["m"], "m");
    }
    if (cfg.m_values.empty()) fail("m", "at least one weight required");
    for (int m : cfg.m_values)
        if (m < 0) fail("m", "weights must be >= 0");
    std::sort(cfg.m_values.begin(), cfg.m_values.end());

    cfg.partition = j.contains("partition") ? parse_int_vector(j["partition"], "partition")
                                            : std::vector<int>{cfg.n};
    Partition k = [&] {
        try {
            return Partition(cfg.partition);
        } catch (const Error& e) {
            fail("partition", e.what());
        }
    }();
    if (k.dimension() != cfg.n)
        fail("partition", "blocks sum to " + std::to_string(k.dimension()) + ", expected n = " +
                              std::to_string(cfg.n));
    const int l = k.block_count();

    cfg.bounds_h.assign(static_cast<std::size_t>(l), std::nullopt);
    for (int jdx = 0; jdx < l; ++jdx)
        if (k.part(jdx) >= 2) cfg.bounds_h[static_cast<std::size_t>(jdx)] = 1;
    if (j.contains("bounds_h")) {
        const json& h = j["bounds_h"];
        if (!h.is_array() || static_cast<int>(h.size()) != l)
            fail("bounds_h", "expected an array with one entry per block");
        for (int jdx = 0; jdx < l; ++jdx) {
            const std::string path = "bounds_h[" + std::to_string(jdx) + "]";
            if (h[static_cast<std::size_t>(jdx)].is_null()) {
                if (k.part(jdx) != 1) fail(path, "only blocks with k_j = 1 may omit h_j");
                cfg.bounds_h[static_cast<std::size_t>(jdx)] = std::nullopt;
            } else {
                const int hj = require_int(h[static_cast<std::size_t>(jdx)], path);
                if (k.part(jdx) == 1) fail(path, "blocks with k_j = 1 carry no h_j");
                if (hj < 1 || hj > k.part(jdx) - 1)
                    fail(path, "must satisfy 1 <= h_j <= k_j - 1");
                cfg.bounds_h[static_cast<std::size_t>(jdx)] = hj;
            }
        }
    }

    if (j.contains("symbols")) {
        if (!j["symbols"].is_array()) fail("symbols", "expected an array");
        for (std::size_t i = 0; i < j["symbols"].size(); ++i) {
            const std::string path = "symbols[" + std::to_string(i) + "]";
            QuasiHomogeneousSymbol sym =
                detail::symbol_from_json(j["symbols"][i], cfg.n, l, path);
            // Matrix checks sweep the whole basis, so the convergence window
            // has to hold at top degree: |c| <= t.
            if (sym.radial().growth_degree() > sym.radial().growth_decay())
                fail(path, "divergent radial growth: needs |c| <= t for full-basis checks");
            cfg.symbols.push_back(std::move(sym));
        }
    }

    if (j.contains("checks")) {
        if (!j["checks"].is_array()) fail("checks", "expected an array of check names");
        for (std::size_t i = 0; i < j["checks"].size(); ++i) {
            const json& c = j["checks"][i];
            if (!c.is_string()) fail("checks[" + std::to_string(i) + "]", "expected a string");
            const std::string name = c.get<std::string>();
            if (std::find(known_checks().begin(), known_checks().end(), name) ==
                known_checks().end())
                fail("checks[" + std::to_string(i) + "]", "unknown check '" + name + "'");
            cfg.checks.push_back(name);
        }
    } else {
        cfg.checks = known_checks();
    }

    if (j.contains("tolerances")) {
        const json& t = j["tolerances"];
        if (!t.is_object()) fail("tolerances", "expected an object");
        auto grab = [&](const char* name, double& slot) {
            if (t.contains(name)) {
                if (!t[name].is_number()) fail(std::string("tolerances.") + name, "expected a number");
                slot = t[name].get<double>();
                if (slot <= 0.0) fail(std::string("tolerances.") + name, "must be positive");
            }
        };
        grab("commute", cfg.tolerances.commute);
        grab("separation", cfg.tolerances.separation);
        grab("oracle", cfg.tolerances.oracle);
        grab("geometry", cfg.tolerances.geometry);
        grab("bracket", cfg.tolerances.bracket);
        grab("recompose", cfg.tolerances.recompose);
        grab("spectrum", cfg.tolerances.spectrum);
        grab("scale", cfg.tolerances.scale);
    }

    if (j.contains("quadrature")) {
        const json& q = j["quadrature"];
        if (!q.is_object()) fail("quadrature", "expected an object");
        if (q.contains("nodes_per_axis")) {
            cfg.quadrature.nodes_per_axis = require_int(q["nodes_per_axis"], "quadrature.nodes_per_axis");
            if (cfg.quadrature.nodes_per_axis < 8)
                fail("quadrature.nodes_per_axis", "must be >= 8");
        }
    }

    if (j.contains("montecarlo")) {
        const json& mc = j["montecarlo"];
        if (!mc.is_object()) fail("montecarlo", "expected an object");
        if (mc.contains("samples")) {
            if (!mc["samples"].is_number_integer()) fail("montecarlo.samples", "expected an integer");
            cfg.mc.sample_count = mc["samples"].get<std::int64_t>();
            if (cfg.mc.sample_count < 10'000) fail("montecarlo.samples", "must be >= 10^4");
        }
        if (mc.contains("seed")) {
            if (!mc["seed"].is_number_unsigned() && !mc["seed"].is_number_integer())
                fail("montecarlo.seed", "expected an unsigned integer");
            cfg.mc.seed = mc["seed"].get<std::uint64_t>();
        }
        if (mc.contains("method")) {
            const std::string meth = mc["method"].is_string() ? mc["method"].get<std::string>() : "";
            if (meth == "separated")
                cfg.mc.method = McConfig::Method::separated;
            else if (meth == "montecarlo")
                cfg.mc.method = McConfig::Method::montecarlo;
            else
                fail("montecarlo.method", "expected 'separated' or 'montecarlo'");
        }
        if (mc.contains("batch_size")) {
            if (!mc["batch_size"].is_number_integer())
                fail("montecarlo.batch_size", "expected an integer");
            cfg.mc.batch_size = mc["batch_size"].get<std::int64_t>();
            if (cfg.mc.batch_size < 1) fail("montecarlo.batch_size", "must be >= 1");
        }
    }

    if (j.contains("geometry_samples")) {
        cfg.geometry_samples = require_int(j["geometry_samples"], "geometry_samples");
        if (cfg.geometry_samples < 1) fail("geometry_samples", "must be >= 1");
    }
    if (j.contains("output_dir")) {
        if (!j["output_dir"].is_string()) fail("output_dir", "expected a string");
        cfg.output_dir = j["output_dir"].get<std::string>();
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void apply_overrides(ExperimentConfig& cfg, const Overrides& ov) {
    if (ov.seed.has_value()) cfg.mc.seed = *ov.seed;
    if (ov.tolerance_scale.has_value()) {
        if (*ov.tolerance_scale <= 0.0)
            throw ValidationError("tolerance-scale: must be positive");
        cfg.tolerances.scale = *ov.tolerance_scale;
    }
    if (ov.output_dir.has_value()) cfg.output_dir = *ov.output_dir;
    if (!ov.checks.empty()) {
        for (const std::string& name : ov.checks) {
            if (std::find(known_checks().begin(), known_checks().end(), name) ==
                known_checks().end())
                throw ValidationError("check: unknown check '" + name + "'");
        }
        cfg.checks = ov.checks;
    }
}

} // namespace bergtoep
