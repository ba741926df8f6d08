// Acceptance suite: every criterion pinned with its tolerance, one PASS/FAIL
// line each, nonzero exit when anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bergtoep/geometry.hpp"
#include "bergtoep/oracle.hpp"
#include "bergtoep/rng.hpp"
#include "bergtoep/runner.hpp"

using namespace bergtoep;
namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass;
    std::string detail;
    double seconds;
};

std::vector<Criterion> g_results;

void record(int id, const std::string& label, bool pass, const std::string& detail,
            double seconds) {
    g_results.push_back({id, label, pass, detail, seconds});
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

const QuasiRadialSymbol kOne = QuasiRadialSymbol::constant(1.0);
constexpr std::uint64_t kSeed = 20250809;

// ---------------------------------------------------------------- criterion 1
void c1_probability_normalization() {
    const auto t0 = clock_type::now();
    double worst_quad = 0.0;
    double worst_sigma = 0.0;
    bool pass = true;
    for (int n = 1; n <= 3; ++n) {
        for (int m : {0, 1, 2, 5}) {
            worst_quad = std::max(worst_quad, std::abs(fs_normalization(n, m) - 1.0));
            const BergmanSpace sp(n, m);
            const Partition k({n});
            McConfig mc;
            mc.method = McConfig::Method::montecarlo;
            mc.sample_count = 2'000'000;
            mc.seed = mix_seed(kSeed, static_cast<std::uint64_t>(16 * n + m));
            const Estimate est =
                inner_product_direct(QuasiHomogeneousSymbol(kOne, n), MultiIndex::zero(n),
                                     MultiIndex::zero(n), sp, k, mc);
            const double sigma = std::abs(est.value - Complex{1.0, 0.0}) / est.stderr_;
            worst_sigma = std::max(worst_sigma, sigma);
        }
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    pass = worst_quad <= 1e-10 && worst_sigma <= 3.0 && dt < 30.0;
    record(1, "probability normalization of dnu_m", pass,
           "max quad dev " + fmt(worst_quad) + ", max mc sigma " + fmt(worst_sigma), dt);
}

// ---------------------------------------------------------------- criterion 2
void c2_unit_symbol_identity() {
    const auto t0 = clock_type::now();
    double worst_numeric = 0.0;
    bool exact_ok = true;
    const std::map<int, std::vector<std::vector<int>>> partitions = {
        {1, {{1}}},
        {2, {{2}, {1, 1}}},
        {3, {{3}, {1, 1, 1}, {1, 2}}},
        {4, {{4}, {1, 1, 1, 1}, {2, 2}}},
    };
    for (const auto& [n, parts] : partitions) {
        for (const auto& pv : parts) {
            const Partition k(pv);
            for (int m = 0; m <= 6; ++m) {
                const BergmanSpace sp(n, m);
                std::set<std::vector<int>> seen;
                for (std::size_t i = 0; i < sp.dim(); ++i) {
                    const auto s = block_degrees(sp.basis().at(i), k);
                    if (!seen.insert(s).second) continue;
                    const auto exact = gamma_quasi_radial_exact(kOne, k, m, s);
                    if (!exact.has_value() || *exact != Rational(1)) exact_ok = false;
                    const Complex numeric =
                        gamma_quasi_radial(kOne, k, m, s, {}, IntegralPath::numeric);
                    worst_numeric = std::max(worst_numeric, std::abs(numeric - Complex{1.0, 0.0}));
                }
            }
        }
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool pass = exact_ok && worst_numeric <= 1e-12 && dt < 30.0;
    record(2, "T_1 = I on every space and partition", pass,
           std::string("closed path exact: ") + (exact_ok ? "yes" : "NO") + ", max numeric dev " +
               fmt(worst_numeric),
           dt);
}

// ---------------------------------------------------------------- criterion 3
void c3_closed_form_eigenvalues() {
    const auto t0 = clock_type::now();
    const auto inv = QuasiRadialSymbol::inverse_power(1);
    double worst = 0.0;
    double worst_oracle = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const Partition k({n});
        const auto comp = QuasiRadialSymbol::bounded_rational({1}, 1);
        for (int m = 0; m <= 5; ++m) {
            for (int s = 0; s <= m; ++s) {
                const double expect = static_cast<double>(m - s + 1) / (n + m + 1);
                for (const IntegralPath path :
                     {IntegralPath::closed_form, IntegralPath::numeric}) {
                    worst = std::max(worst, std::abs(gamma_quasi_radial(inv, k, m, {s}, {}, path) -
                                                     Complex{expect, 0.0}));
                    worst = std::max(worst, std::abs(gamma_quasi_radial(comp, k, m, {s}, {}, path) -
                                                     Complex{1.0 - expect, 0.0}));
                }
            }
            // separately-radial partition gives the same eigenvalues
            const Partition fine(std::vector<int>(static_cast<std::size_t>(n), 1));
            const BergmanSpace sp(n, m);
            std::set<std::vector<int>> seen;
            for (std::size_t i = 0; i < sp.dim(); ++i) {
                const MultiIndex& alpha = sp.basis().at(i);
                const auto s = block_degrees(alpha, fine);
                if (!seen.insert(s).second) continue;
                const double expect =
                    static_cast<double>(m - alpha.degree() + 1) / (n + m + 1);
                worst = std::max(
                    worst, std::abs(gamma_quasi_radial(inv, fine, m, s) - Complex{expect, 0.0}));
            }
            // oracle agreement on the single-block partition
            McConfig sep;
            sep.method = McConfig::Method::separated;
            const OperatorMatrix direct =
                assemble_direct(QuasiHomogeneousSymbol(inv, n), k, sp, sep);
            const OperatorMatrix spectral = assemble_quasi_radial(inv, k, sp);
            worst_oracle = std::max(worst_oracle, compare_matrices(spectral, direct).max_abs_diff);
        }
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool pass = worst <= 1e-10 && worst_oracle <= 1e-6;
    record(3, "closed-form eigenvalues of (1+r^2)^{-1} and complement", pass,
           "max dev " + fmt(worst) + ", oracle dev " + fmt(worst_oracle), dt);
}

// ---------------------------------------------------------------- criterion 4
void c4_gamma_tilde_pinpoint() {
    const auto t0 = clock_type::now();
    const Partition k({2});
    const BergmanSpace sp(2, 1);
    const MultiIndex p({1, 0}), q({0, 1}), alpha({0, 1});
    const QuasiHomogeneousSymbol sym(kOne, p, q);

    const Complex spectral = gamma_tilde(kOne, k, p, q, 1, alpha);
    const double dev_spectral = std::abs(spectral - Complex{1.0 / 3.0, 0.0});

    McConfig sep;
    sep.method = McConfig::Method::separated;
    const OperatorMatrix direct = assemble_direct(sym, k, sp, sep);
    const auto row = static_cast<Eigen::Index>(*sp.index_of(MultiIndex({1, 0})));
    const auto col = static_cast<Eigen::Index>(*sp.index_of(alpha));
    const double dev_direct = std::abs(direct.entries(row, col) - Complex{1.0 / 3.0, 0.0});

    McConfig mc;
    mc.method = McConfig::Method::montecarlo;
    mc.sample_count = 2'000'000;
    mc.seed = mix_seed(kSeed, 4);
    const Estimate est = inner_product_direct(sym, alpha, MultiIndex({1, 0}), sp, k, mc);
    const double sigma = std::abs(est.value - Complex{1.0 / 3.0, 0.0}) / est.stderr_;

    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool pass = dev_spectral <= 1e-10 && dev_direct <= 1e-6 && sigma <= 3.0 && dt < 10.0;
    record(4, "gamma~ pinpoint value 1/3", pass,
           "spectral dev " + fmt(dev_spectral) + ", direct dev " + fmt(dev_direct) + ", mc sigma " +
               fmt(sigma),
           dt);
}

// ---------------------------------------------------------------- criterion 5
std::vector<QuasiHomogeneousSymbol> battery_for(const Partition& k) {
    const int n = k.dimension();
    const int l = k.block_count();
    std::vector<QuasiHomogeneousSymbol> syms;
    syms.emplace_back(kOne, n);
    syms.emplace_back(QuasiRadialSymbol::inverse_power(1), n);
    syms.emplace_back(QuasiRadialSymbol::inverse_power(2), n);
    {
        std::vector<int> c(static_cast<std::size_t>(l), 0);
        c[0] = 1;
        syms.emplace_back(QuasiRadialSymbol::bounded_rational(c, 1), n);
        std::vector<int> c2(static_cast<std::size_t>(l), 0);
        c2.back() = 1;
        syms.emplace_back(QuasiRadialSymbol::bounded_rational(c2, 1), n);
    }
    // unbalanced single-sided shift across the first two coordinates
    {
        std::vector<int> p(static_cast<std::size_t>(n), 0), q(static_cast<std::size_t>(n), 0);
        p[0] = 1;
        q[1] = 1;
        syms.emplace_back(kOne, MultiIndex(p), MultiIndex(q));
        syms.emplace_back(QuasiRadialSymbol::inverse_power(1), MultiIndex(p), MultiIndex(q));
    }
    // balanced shift inside the last block when it has at least 2 slots
    if (k.part(l - 1) >= 2) {
        std::vector<int> p(static_cast<std::size_t>(n), 0), q(static_cast<std::size_t>(n), 0);
        p[static_cast<std::size_t>(k.offset(l - 1))] = 1;
        q[static_cast<std::size_t>(k.offset(l - 1) + 1)] = 1;
        syms.emplace_back(kOne, MultiIndex(p), MultiIndex(q));
        syms.emplace_back(QuasiRadialSymbol::inverse_power(1), MultiIndex(p), MultiIndex(q));
    } else if (n >= 2) {
        std::vector<int> p(static_cast<std::size_t>(n), 0), q(static_cast<std::size_t>(n), 0);
        p[static_cast<std::size_t>(n - 1)] = 2;
        q[0] = 1;
        syms.emplace_back(kOne, MultiIndex(p), MultiIndex(q));
    }
    return syms;
}

void c5_oracle_equivalence() {
    const auto t0 = clock_type::now();
    struct Space {
        int n, m;
        std::vector<int> parts;
    };
    const std::vector<Space> spaces = {{2, 3, {1, 1}}, {3, 2, {1, 2}}, {4, 2, {2, 2}}};
    double worst = 0.0;
    std::size_t worst_battery = SIZE_MAX;
    bool dims_ok = true;
    McConfig sep;
    sep.method = McConfig::Method::separated;
    for (const auto& s : spaces) {
        const Partition k(s.parts);
        const BergmanSpace sp(s.n, s.m);
        dims_ok = dims_ok && sp.dim() <= 15;
        const auto battery = battery_for(k);
        worst_battery = std::min(worst_battery, battery.size());
        for (const auto& sym : battery) {
            const OperatorMatrix spectral = assemble(sym, k, sp);
            const OperatorMatrix direct = assemble_direct(sym, k, sp, sep);
            worst = std::max(worst, compare_matrices(spectral, direct).max_abs_diff);
        }
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool pass = worst <= 1e-6 && worst_battery >= 8 && dims_ok && dt < 120.0;
    record(5, "spectral vs direct oracle over symbol batteries", pass,
           "max entrywise dev " + fmt(worst) + ", battery size >= " +
               std::to_string(worst_battery),
           dt);
}

// ---------------------------------------------------------------- criterion 6
void c6_commutation_iff_balance() {
    const auto t0 = clock_type::now();
    double worst_balanced = 0.0;
    double best_unbalanced = 1e300;
    int unbalanced_count = 0;

    // The radial partner of each unbalanced counterexample must separate the
    // block degrees that the shift actually moves; a symbol depending only on
    // the total degree commutes with any degree-preserving shift.
    const auto inv = QuasiRadialSymbol::inverse_power(1);
    const auto block_sensitive_2 = QuasiRadialSymbol::bounded_rational({1, 0}, 1);
    struct Setup {
        std::vector<int> parts;
        std::vector<int> p, q;
        QuasiRadialSymbol a;
        bool balanced;
    };
    const std::vector<Setup> setups = {
        {{2}, {1, 0}, {0, 1}, inv, true},
        {{2}, {2, 0}, {0, 2}, inv, true},
        {{2, 2}, {1, 0, 1, 0}, {0, 1, 0, 1}, block_sensitive_2, true},
        {{1, 2}, {0, 1, 0}, {0, 0, 1}, block_sensitive_2, true},
        {{2}, {1, 0}, {0, 2}, inv, false},
        {{2}, {2, 0}, {0, 1}, inv, false},
        {{2, 2}, {1, 0, 0, 0}, {0, 0, 0, 1}, block_sensitive_2, false},
        {{1, 1}, {1, 0}, {0, 1}, block_sensitive_2, false},
    };
    for (const auto& su : setups) {
        const Partition k(su.parts);
        const QuasiHomogeneousSymbol sym(su.a, MultiIndex(su.p), MultiIndex(su.q));
        double measured = 0.0;
        for (int m = 0; m <= 4; ++m) {
            const BergmanSpace sp(k.dimension(), m);
            const OperatorMatrix ta = assemble_quasi_radial(su.a, k, sp);
            const OperatorMatrix tphi = assemble(sym, k, sp);
            measured = std::max(measured, commutator_norm(ta, tphi));
        }
        if (su.balanced) {
            worst_balanced = std::max(worst_balanced, measured);
        } else {
            best_unbalanced = std::min(best_unbalanced, measured);
            ++unbalanced_count;
        }
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool pass = worst_balanced <= 1e-9 && best_unbalanced >= 1e-3 && unbalanced_count >= 3;
    record(6, "radial commutation iff block balance", pass,
           "balanced max " + fmt(worst_balanced) + ", unbalanced min " + fmt(best_unbalanced) +
               " over " + std::to_string(unbalanced_count) + " counterexamples",
           dt);
}

// ---------------------------------------------------------------- criterion 7
void c7_commutative_iff_sweep() {
    const auto t0 = clock_type::now();
    const Partition k({2, 2});
    const auto a = QuasiRadialSymbol::inverse_power(1);
    const auto b = QuasiRadialSymbol::bounded_rational({0, 1}, 1);

    // all block-balanced (p, q) with entries <= 1 and p.q = 0 on k = (2,2)
    std::vector<std::pair<MultiIndex, MultiIndex>> shifts;
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> block_opts = {
        {{0, 0}, {0, 0}}, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}};
    for (const auto& [p1, q1] : block_opts) {
        for (const auto& [p2, q2] : block_opts) {
            std::vector<int> p = {p1[0], p1[1], p2[0], p2[1]};
            std::vector<int> q = {q1[0], q1[1], q2[0], q2[1]};
            shifts.emplace_back(MultiIndex(p), MultiIndex(q));
        }
    }

    std::vector<std::vector<OperatorMatrix>> ops_a, ops_b;
    std::vector<BergmanSpace> spaces;
    for (int m = 0; m <= 3; ++m) spaces.emplace_back(4, m);
    for (const auto& [p, q] : shifts) {
        std::vector<OperatorMatrix> oa, ob;
        for (const auto& sp : spaces) {
            oa.push_back(assemble(QuasiHomogeneousSymbol(a, p, q), k, sp));
            ob.push_back(assemble(QuasiHomogeneousSymbol(b, p, q), k, sp));
        }
        ops_a.push_back(std::move(oa));
        ops_b.push_back(std::move(ob));
    }

    int cases = 0, matches = 0;
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        for (std::size_t j = 0; j < shifts.size(); ++j) {
            const QuasiHomogeneousSymbol s1(a, shifts[i].first, shifts[i].second);
            const QuasiHomogeneousSymbol s2(b, shifts[j].first, shifts[j].second);
            const bool predicted = predict_commutes(s1, s2, k);
            double measured = 0.0;
            for (std::size_t mi = 0; mi < spaces.size(); ++mi)
                measured = std::max(measured, commutator_norm(ops_a[i][mi], ops_b[j][mi]));
            const bool match = predicted ? measured <= 1e-9 : measured >= 1e-3;
            ++cases;
            if (match) ++matches;
        }
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool pass = cases == matches && dt < 120.0;
    record(7, "commutativity-iff sweep on k=(2,2)", pass,
           std::to_string(matches) + "/" + std::to_string(cases) + " predictions match", dt);
}

// ---------------------------------------------------------------- criterion 8
void c8_product_identities() {
    const auto t0 = clock_type::now();
    const auto a = QuasiRadialSymbol::inverse_power(1);
    double worst = 0.0;
    struct Space {
        int n, m;
        std::vector<int> parts;
    };
    const std::vector<Space> spaces = {{2, 3, {1, 1}}, {3, 2, {1, 2}}, {4, 2, {2, 2}}};
    for (const auto& s : spaces) {
        const Partition k(s.parts);
        const BergmanSpace sp(s.n, s.m);
        // block-balanced (p, q): supported inside blocks with k_j >= 2; the
        // all-ones partition admits only the trivial pair.
        std::vector<int> p(static_cast<std::size_t>(s.n), 0), q(static_cast<std::size_t>(s.n), 0);
        for (int j = 0; j < k.block_count(); ++j) {
            if (k.part(j) >= 2) {
                p[static_cast<std::size_t>(k.offset(j))] = 1;
                q[static_cast<std::size_t>(k.offset(j) + 1)] = 1;
            }
        }
        const QuasiHomogeneousSymbol shift(kOne, MultiIndex(p), MultiIndex(q));
        const QuasiHomogeneousSymbol mixed(a, MultiIndex(p), MultiIndex(q));
        const Eigen::MatrixXcd Ta = assemble_quasi_radial(a, k, sp).entries;
        const Eigen::MatrixXcd Tphi = assemble(shift, k, sp).entries;
        const Eigen::MatrixXcd Taphi = assemble(mixed, k, sp).entries;
        worst = std::max(worst, spectral_norm(Ta * Tphi - Taphi));
        worst = std::max(worst, spectral_norm(Tphi * Ta - Taphi));

        // factorized shifts multiply to the full shift and commute pairwise
        std::vector<OperatorMatrix> factors;
        for (int j = 0; j < k.block_count(); ++j) {
            if (k.part(j) < 2) continue;
            std::vector<int> pj(static_cast<std::size_t>(s.n), 0),
                qj(static_cast<std::size_t>(s.n), 0);
            pj[static_cast<std::size_t>(k.offset(j))] = 1;
            qj[static_cast<std::size_t>(k.offset(j) + 1)] = 1;
            factors.push_back(assemble(QuasiHomogeneousSymbol(kOne, MultiIndex(pj), MultiIndex(qj)),
                                       k, sp));
        }
        if (!factors.empty()) {
            Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(
                static_cast<Eigen::Index>(sp.dim()), static_cast<Eigen::Index>(sp.dim()));
            for (const auto& f : factors) prod = prod * f.entries;
            worst = std::max(worst, spectral_norm(prod - Tphi));
            for (std::size_t i = 0; i < factors.size(); ++i)
                for (std::size_t j = i + 1; j < factors.size(); ++j)
                    worst = std::max(worst, commutator_norm(factors[i], factors[j]));
        }
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    record(8, "product and factorization identities", worst <= 1e-9, "max dev " + fmt(worst), dt);
}

// ---------------------------------------------------------------- criterion 9
void c9_rkh_banach_algebra() {
    const auto t0 = clock_type::now();
    double worst = 0.0;
    std::size_t min_generators = SIZE_MAX;
    struct Setup {
        std::vector<int> parts;
        std::vector<std::optional<int>> h;
    };
    const std::vector<Setup> setups = {{{2, 2}, {1, 1}}, {{2, 3}, {1, 1}}};
    for (const auto& su : setups) {
        const Partition k(su.parts);
        const SymbolClassRkh cls(k, su.h);
        const auto generators = rkh_generator_family(cls, 10);
        min_generators = std::min(min_generators, generators.size());
        for (int m = 0; m <= 4; ++m) {
            const BergmanSpace sp(k.dimension(), m);
            std::vector<OperatorMatrix> ops;
            ops.reserve(generators.size());
            for (const auto& g : generators) ops.push_back(assemble(g, k, sp));
            for (std::size_t i = 0; i < ops.size(); ++i)
                for (std::size_t j = i + 1; j < ops.size(); ++j)
                    worst = std::max(worst, commutator_norm(ops[i], ops[j]));
        }
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool pass = worst <= 1e-9 && min_generators >= 10;
    record(9, "R_k(h) generators commute pairwise", pass,
           "max commutator " + fmt(worst) + ", generators >= " + std::to_string(min_generators),
           dt);
}

// --------------------------------------------------------------- criterion 10
void c10_torus_characterization() {
    const auto t0 = clock_type::now();
    const Partition k({2, 2});
    const SymbolClassRkh cls(k, {1, 1});
    const auto generators = rkh_generator_family(cls, 20);
    const auto samples_cp = sample_points_vk(k, Ambient::projective_chart, 50, mix_seed(kSeed, 101));
    std::vector<PointXcd> samples;
    for (const auto& p : samples_cp) samples.push_back(p.z);

    double worst_invariance = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const GroupElement tk = random_tk_element(k, mix_seed(kSeed, 200 + trial));
        const TorusElement t(tk.coords());
        for (const auto& sym : generators)
            worst_invariance = std::max(worst_invariance, invariance_deviation(sym, t, k, samples));
    }

    // witness detection at the equal-mass point, where |xi_r xi_s| = 1/2
    PointXcd zstar(4);
    zstar << Complex{1, 0}, Complex{1, 0}, Complex{1, 0}, Complex{1, 0};
    int detected = 0, outside = 0;
    std::uint64_t stream = 0;
    while (outside < 50 && stream < 5000) {
        const GroupElement g = random_torus_element(4, mix_seed(kSeed, 300 + stream));
        ++stream;
        const TorusElement t(g.coords());
        if (is_in_Tk(t, k, 1e-9)) continue;
        ++outside;
        double best = 0.0, gap = 0.0;
        for (int j0 = 0; j0 < k.block_count(); ++j0) {
            const Complex tr = t[k.offset(j0)];
            const Complex ts = t[k.offset(j0) + 1];
            gap = std::max(gap, std::abs(1.0 - tr * std::conj(ts)));
            const auto witness = rkh_witness_symbol(cls, j0, 0, 1);
            best = std::max(best, invariance_deviation(witness, t, k, {zstar}));
        }
        if (best >= 0.1 * gap) ++detected;
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool pass = worst_invariance <= 1e-12 && outside == 50 && detected == 50;
    record(10, "torus subgroup characterizes R_k(h) invariance", pass,
           "invariance max " + fmt(worst_invariance) + ", witness detections " +
               std::to_string(detected) + "/" + std::to_string(outside),
           dt);
}

// --------------------------------------------------------------- criterion 11
void c11_geometry_suite() {
    const auto t0 = clock_type::now();
    const Partition k({2, 2});
    const double eps = 1e-4;
    double lagr = 0.0, orth = 0.0, brack = 0.0, pik = 0.0, bkeq = 0.0, iso = 0.0, recomp = 0.0;
    Rng rng(mix_seed(kSeed, 400));
    for (const Ambient amb : {Ambient::projective_chart, Ambient::ball}) {
        const auto pts = sample_points_vk(k, amb, 1000, mix_seed(kSeed, amb == Ambient::ball));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const ChartPoint& at = pts[i];
            lagr = std::max(lagr, lagrangian_deviation(at, k));
            orth = std::max(orth, frame_orthogonality(at, k));
            for (int bi = 0; bi < k.block_count(); ++bi)
                for (int bj = bi; bj < k.block_count(); ++bj)
                    brack = std::max(brack, bracket_fd(bi, bj, at, k, eps));

            const std::uint64_t ps = mix_seed(kSeed, 500 + i);
            const GroupElement a = random_ak_element(k, ps);
            pik = std::max(pik,
                           proj_distance(pi_k(ChartPoint{a.apply(at.z), Ambient::projective_chart}, k),
                                         pi_k(at, k)));
            bkeq = std::max(bkeq, bk_equivariance(random_bk_element(k, ps + 1), at, k));

            const GroupElement t = random_torus_element(4, ps + 2);
            Tangent v(4), w(4);
            for (int ci = 0; ci < 4; ++ci) {
                v[ci] = rng.gaussian();
                w[ci] = rng.gaussian();
            }
            iso = std::max(iso, isometry_deviation(t, at, v, w));

            std::vector<Complex> c(4);
            for (auto& ci : c) ci = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.2));
            const auto [ga, gb] = ak_decompose(c, k);
            for (int ci = 0; ci < 4; ++ci)
                recomp = std::max(recomp, std::abs(ga.coords()[static_cast<std::size_t>(ci)] *
                                                       gb.coords()[static_cast<std::size_t>(ci)] -
                                                   c[static_cast<std::size_t>(ci)]));
        }
    }
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    const bool pass = lagr <= 1e-12 && orth <= 1e-12 && brack <= 1e-8 && pik <= 1e-12 &&
                      bkeq <= 1e-12 && iso <= 1e-12 && recomp <= 1e-13 && dt < 60.0;
    record(11, "Lagrangian-frame and bundle geometry suite", pass,
           "lagr " + fmt(lagr) + ", orth " + fmt(orth) + ", bracket " + fmt(brack) + ", pik " +
               fmt(pik) + ", bk " + fmt(bkeq) + ", iso " + fmt(iso) + ", recomp " + fmt(recomp),
           dt);
}

// --------------------------------------------------------------- criterion 12
void c12_determinism() {
    const auto t0 = clock_type::now();
    const fs::path dir = fs::temp_directory_path() / "bergtoep_acceptance_determinism";
    fs::remove_all(dir);
    std::string text = R"({
        "schema_version": 1,
        "n": 2,
        "m": [0, 1, 2],
        "partition": [2],
        "bounds_h": [1],
        "symbols": [
            {"family": "constant", "value": 1.0},
            {"family": "inverse_power", "t": 1},
            {"family": "constant", "p": [1, 0], "q": [0, 1]}
        ],
        "checks": ["spectrum", "assemble", "commute", "oracle", "geometry", "rkh-algebra"],
        "montecarlo": {"samples": 50000, "seed": 20250809, "method": "montecarlo"},
        "geometry_samples": 100,
        "output_dir": "OUTDIR"
    })";
    text.replace(text.find("OUTDIR"), 6, dir.string());
    const ExperimentConfig cfg = parse_config(text);

    bool runs_pass = true;
    for (const auto& oc : run_checks(cfg)) runs_pass = runs_pass && oc.pass;
    std::map<std::string, std::string> snapshot;
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        snapshot[entry.path().filename().string()] = ss.str();
    }
    for (const auto& oc : run_checks(cfg)) runs_pass = runs_pass && oc.pass;
    bool identical = true;
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        ++files;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        auto it = snapshot.find(entry.path().filename().string());
        if (it == snapshot.end() || it->second != ss.str()) identical = false;
    }
    identical = identical && files == snapshot.size() && files > 0;
    fs::remove_all(dir);
    const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
    record(12, "byte-identical reports across repeated runs", runs_pass && identical,
           std::to_string(files) + " report files compared", dt);
}

} // namespace

int main() {
    c1_probability_normalization();
    c2_unit_symbol_identity();
    c3_closed_form_eigenvalues();
    c4_gamma_tilde_pinpoint();
    c5_oracle_equivalence();
    c6_commutation_iff_balance();
    c7_commutative_iff_sweep();
    c8_product_identities();
    c9_rkh_banach_algebra();
    c10_torus_characterization();
    c11_geometry_suite();
    c12_determinism();

    int failures = 0;
    for (const auto& c : g_results) {
        if (!c.pass) ++failures;
        std::printf("[%s] C%-2d %s (%s; %.1fs)\n", c.pass ? "PASS" : "FAIL", c.id, c.label.c_str(),
                    c.detail.c_str(), c.seconds);
    }
    std::printf("%zu/%zu criteria passed\n", g_results.size() - failures, g_results.size());
    return failures == 0 ? 0 : 1;
}
