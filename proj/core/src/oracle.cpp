#include "bergtoep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <thread>

#include "bergtoep/rng.hpp"

namespace bergtoep {

namespace {

Complex ipow(Complex base, int e) {
    Complex r{1.0, 0.0};
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

struct BatchSum {
    Complex sum{0.0, 0.0};
    double sumsq = 0.0;
    std::int64_t count = 0;
};

BatchSum operator+(const BatchSum& a, const BatchSum& b) {
    return {a.sum + b.sum, a.sumsq + b.sumsq, a.count + b.count};
}

/// Pairwise tree reduction; associativity order is fixed by the batch layout,
/// so the total is bit-identical for any thread count.
BatchSum tree_reduce(std::vector<BatchSum> v) {
    if (v.empty()) return {};
    while (v.size() > 1) {
        std::vector<BatchSum> next;
        next.reserve((v.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] + v[i + 1]);
        if (v.size() % 2 == 1) next.push_back(v.back());
        v = std::move(next);
    }
    return v[0];
}

void run_batches(std::int64_t total, std::int64_t batch_size, int threads,
                 const std::function<BatchSum(std::int64_t, std::int64_t)>& body,
                 std::vector<BatchSum>& out) {
    const std::int64_t batches = (total + batch_size - 1) / batch_size;
    out.assign(static_cast<std::size_t>(batches), BatchSum{});
    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max<int>(1, static_cast<int>(std::min<std::int64_t>(nthreads, batches)));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::int64_t b = t; b < batches; b += nthreads) {
                const std::int64_t count = std::min(batch_size, total - b * batch_size);
                out[static_cast<std::size_t>(b)] = body(b, count);
            }
        });
    }
    for (auto& th : pool) th.join();
}

/// Raw <sym z^alpha, z^beta>_m by block-polar separation.
Complex separated_raw(const QuasiHomogeneousSymbol& sym, const MultiIndex& alpha,
                      const MultiIndex& beta, int n, int m, const Partition& k,
                      const QuadratureSpec& spec,
                      std::map<std::vector<int>, Complex>* radial_cache) {
    const MultiIndex left = alpha + sym.p();
    const MultiIndex right = beta + sym.q();
    if (left != right) return {0.0, 0.0}; // sphere integral vanishes exactly

    const int l = k.block_count();
    const std::vector<int> s_alpha = block_degrees(alpha, k);
    const std::vector<int> s_beta = block_degrees(beta, k);
    const std::vector<int> s_left = block_degrees(left, k);

    // prod_j 2 pi^{k_j} cancels pi^n in the measure, leaving 2^l (n+m)!/m!.
    double logpref = l * std::log(2.0) + log_factorial(n + m) - log_factorial(m) +
                     log_multi_factorial(left);
    RadialIntegrand ig;
    ig.power = n + m + 1;
    ig.radial = sym.radial();
    for (int j = 0; j < l; ++j) {
        logpref -= log_factorial(k.part(j) - 1 + s_left[static_cast<std::size_t>(j)]);
        ig.exponents.push_back(s_alpha[static_cast<std::size_t>(j)] +
                               s_beta[static_cast<std::size_t>(j)] + 2 * k.part(j) - 1);
    }

    // The tensor rule keeps this route independent of the Beta/cascade
    // structure of the spectral path; rel_change is held an order of
    // magnitude under the oracle's own 1e-6 budget.
    const auto integrate = [&]() {
        if (ig.exponents.size() <= 3) {
            QuadratureSpec boosted = spec;
            boosted.nodes_per_axis = std::max(boosted.nodes_per_axis, 160);
            const NumericResult r = radial_integral_tensor(ig, boosted);
            if (r.rel_change > 1e-7)
                throw QuadratureError("oracle: tensor integral not stable to 1e-7");
            return r.value;
        }
        const NumericResult r = radial_integral_numeric(ig, spec);
        if (r.rel_change > 1e-8)
            throw QuadratureError("oracle: unstable numeric radial integral");
        return r.value;
    };

    Complex radial;
    if (radial_cache != nullptr) {
        auto it = radial_cache->find(ig.exponents);
        if (it == radial_cache->end()) it = radial_cache->emplace(ig.exponents, integrate()).first;
        radial = it->second;
    } else {
        radial = integrate();
    }
    return std::exp(logpref) * radial;
}

struct McSampler {
    const QuasiHomogeneousSymbol& sym;
    const Partition& k;
    int n;
    int m;
    double binom; // binom(n+m, m)

    /// One batch of the estimator f = sym(z) z^alpha conj(z^beta) W (1+|z|^2)^{-m}
    /// written in sphere coordinates so every kernel factor stays bounded.
    BatchSum run(std::uint64_t batch_seed, std::int64_t count, const MultiIndex& alpha,
                 const MultiIndex& beta) const {
        Rng rng(batch_seed);
        BatchSum acc;
        Eigen::VectorXcd w(n + 1);
        Eigen::VectorXcd z(n);
        for (std::int64_t s = 0; s < count; ++s) {
            double norm2 = 0.0;
            do {
                norm2 = 0.0;
                for (int i = 0; i <= n; ++i) {
                    w[i] = rng.gaussian();
                    norm2 += std::norm(w[i]);
                }
            } while (norm2 == 0.0 || std::norm(w[0]) / norm2 < 1e-24); // w_0 underflow: resample
            const double inv = 1.0 / std::sqrt(norm2);
            for (int i = 0; i <= n; ++i) w[i] *= inv;
            for (int i = 0; i < n; ++i) z[i] = w[i + 1] / w[0];

            Complex kernel_part{binom, 0.0};
            for (int i = 0; i < n; ++i) {
                if (alpha[i] > 0) kernel_part *= ipow(w[i + 1], alpha[i]);
                if (beta[i] > 0) kernel_part *= ipow(std::conj(w[i + 1]), beta[i]);
            }
            kernel_part *= ipow(w[0], m - alpha.degree());
            kernel_part *= ipow(std::conj(w[0]), m - beta.degree());

            const Complex f = evaluate(sym, z, k) * kernel_part;
            acc.sum += f;
            acc.sumsq += std::norm(f);
            acc.count += 1;
        }
        return acc;
    }
};

Estimate finish_estimate(const BatchSum& total) {
    Estimate est;
    est.samples = total.count;
    if (total.count == 0) return est;
    const double inv = 1.0 / static_cast<double>(total.count);
    est.value = total.sum * inv;
    const double var = std::max(0.0, total.sumsq * inv - std::norm(est.value));
    est.stderr_ = std::sqrt(var * inv);
    return est;
}

} // namespace

Estimate inner_product_direct(const QuasiHomogeneousSymbol& sym, const MultiIndex& alpha,
                              const MultiIndex& beta, const BergmanSpace& space,
                              const Partition& k, const McConfig& cfg,
                              const QuadratureSpec& spec) {
    const int n = space.n();
    const int m = space.m();
    if (alpha.size() != n || beta.size() != n || sym.dimension() != n ||
        k.dimension() != n)
        throw DimensionError("inner_product_direct: dimension mismatch");
    if (alpha.degree() > m || beta.degree() > m)
        throw ValidationError("inner_product_direct: degree exceeds weight m");
    if (cfg.sample_count < 10'000)
        throw ValidationError("oracle: sample_count must be at least 10^4");

    if (cfg.method == McConfig::Method::separated) {
        return {separated_raw(sym, alpha, beta, n, m, k, spec, nullptr), 0.0, 0};
    }

    McSampler sampler{sym, k, n, m, static_cast<double>(binomial_u64(n + m, m))};
    std::vector<BatchSum> batches;
    run_batches(cfg.sample_count, cfg.batch_size, cfg.threads,
                [&](std::int64_t b, std::int64_t count) {
                    return sampler.run(mix_seed(cfg.seed, static_cast<std::uint64_t>(b)), count,
                                       alpha, beta);
                },
                batches);
    return finish_estimate(tree_reduce(std::move(batches)));
}

OperatorMatrix assemble_direct(const QuasiHomogeneousSymbol& sym, const Partition& k,
                               const BergmanSpace& space, const McConfig& cfg,
                               const QuadratureSpec& spec) {
    if (k.dimension() != space.n() || sym.dimension() != space.n())
        throw DimensionError("assemble_direct: dimension mismatch");
    const auto dim = static_cast<Eigen::Index>(space.dim());
    OperatorMatrix out{&space, Eigen::MatrixXcd::Zero(dim, dim)};
    std::map<std::vector<int>, Complex> radial_cache;
    for (std::size_t ia = 0; ia < space.dim(); ++ia) {
        for (std::size_t ib = 0; ib < space.dim(); ++ib) {
            const MultiIndex& alpha = space.basis().at(ia);
            const MultiIndex& beta = space.basis().at(ib);
            Complex raw;
            if (cfg.method == McConfig::Method::separated) {
                raw = separated_raw(sym, alpha, beta, space.n(), space.m(), k, spec,
                                    &radial_cache);
            } else {
                raw = inner_product_direct(sym, alpha, beta, space, k, cfg, spec).value;
            }
            out.entries(static_cast<Eigen::Index>(ib), static_cast<Eigen::Index>(ia)) =
                raw * (space.normalizer(ia) * space.normalizer(ib));
        }
    }
    return out;
}

ReproducingResult reproducing_check(const MultiIndex& alpha, const BergmanSpace& space,
                                    const McConfig& cfg, const QuadratureSpec& spec) {
    const int n = space.n();
    if (alpha.size() != n) throw DimensionError("reproducing_check: dimension mismatch");
    if (alpha.degree() > space.m())
        throw ValidationError("reproducing_check: degree exceeds weight m");
    const Partition fine(std::vector<int>(static_cast<std::size_t>(n), 1));
    const QuasiHomogeneousSymbol one(QuasiRadialSymbol::constant(1.0), n);

    ReproducingResult res;
    const std::size_t ia = *space.index_of(alpha);
    for (std::size_t ib = 0; ib < space.dim(); ++ib) {
        const MultiIndex& beta = space.basis().at(ib);
        Complex raw;
        double se = 0.0;
        if (cfg.method == McConfig::Method::separated) {
            raw = separated_raw(one, alpha, beta, n, space.m(), fine, spec, nullptr);
        } else {
            const Estimate est = inner_product_direct(one, alpha, beta, space, fine, cfg, spec);
            raw = est.value;
            se = est.stderr_;
        }
        const Complex coeff = raw * space.normalizer(ib);
        const Complex expected =
            ib == ia ? Complex{std::sqrt(space.norm_sq(ia)), 0.0} : Complex{0.0, 0.0};
        res.deviation = std::max(res.deviation, std::abs(coeff - expected));
        res.stderr_ = std::max(res.stderr_, se * space.normalizer(ib));
    }
    return res;
}

ComparisonReport compare_matrices(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.entries.rows() != b.entries.rows() || a.entries.cols() != b.entries.cols())
        throw DimensionError("compare_matrices: shape mismatch");
    ComparisonReport rep;
    double total = 0.0;
    for (Eigen::Index r = 0; r < a.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.entries.cols(); ++c) {
            const double d = std::abs(a.entries(r, c) - b.entries(r, c));
            rep.max_abs_diff = std::max(rep.max_abs_diff, d);
            total += d;
        }
    }
    rep.mean_abs_diff = total / static_cast<double>(a.entries.size());
    return rep;
}

} // namespace bergtoep
