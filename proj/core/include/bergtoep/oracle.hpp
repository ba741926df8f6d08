#pragma once

#include <cstdint>

#include "bergtoep/toeplitz.hpp"

namespace bergtoep {

/// Configuration of the brute-force oracle.
struct McConfig {
    enum class Method { separated, montecarlo };
    std::int64_t sample_count = 2'000'000;
    std::uint64_t seed = 1;
    Method method = Method::separated;
    std::int64_t batch_size = 65536; // reduction runs per batch, pairwise tree
    int threads = 0;                 // 0 = hardware concurrency
};

struct Estimate {
    Complex value{0.0, 0.0};
    double stderr_ = 0.0;
    std::int64_t samples = 0;
};

/// <sym z^alpha, z^beta>_m computed directly from the definitions.
///
/// separated: polar change of variables per block; the sphere integral
/// enforces the exact selection rule alpha_(j) + p_(j) = beta_(j) + q_(j)
/// (returned value is exactly zero when it fails) and the radial factor is
/// integrated numerically.
///
/// montecarlo: w drawn uniformly on the unit sphere of C^{n+1} (normalized
/// standard complex Gaussian), z_i = w_i / w_0 -- the exact pushforward onto
/// the Fubini-Study probability measure -- then averages
/// sym(z) z^alpha conj(z^beta) binom(n+m, m) (1+|z|^2)^{-m}.
Estimate inner_product_direct(const QuasiHomogeneousSymbol& sym, const MultiIndex& alpha,
                              const MultiIndex& beta, const BergmanSpace& space,
                              const Partition& k, const McConfig& cfg,
                              const QuadratureSpec& spec = {});

/// Full matrix of <sym e_alpha, e_beta> over normalized monomials; equals the
/// Toeplitz matrix because the Bergman projection is orthogonal.
OperatorMatrix assemble_direct(const QuasiHomogeneousSymbol& sym, const Partition& k,
                               const BergmanSpace& space, const McConfig& cfg,
                               const QuadratureSpec& spec = {});

struct ReproducingResult {
    double deviation = 0.0;  // max |coefficient - expected|
    double stderr_ = 0.0;    // largest per-coefficient standard error (MC only)
};

/// Kernel-free reproducing check: coefficients <z^alpha, e_beta> for all beta
/// against the expected vector (norm constant at beta = alpha, zero elsewhere).
ReproducingResult reproducing_check(const MultiIndex& alpha, const BergmanSpace& space,
                                    const McConfig& cfg, const QuadratureSpec& spec = {});

struct ComparisonReport {
    double max_abs_diff = 0.0;
    double mean_abs_diff = 0.0;
    double stderr_ = 0.0;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
};

ComparisonReport compare_matrices(const OperatorMatrix& a, const OperatorMatrix& b);

} // namespace bergtoep
