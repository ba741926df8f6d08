#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bergtoep/symbols.hpp"

namespace bergtoep {

/// Tensor Gauss-Legendre setup; every semi-infinite axis is mapped through
/// r = u/(1-u), u in (0,1).
struct QuadratureSpec {
    int nodes_per_axis = 80;
};

enum class IntegralPath { automatic, closed_form, numeric };

/// Nodes and weights of the N-point Gauss-Legendre rule on (0,1); cached.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_01(int n);

/// Dirichlet-type moment: integral over R_+^l of
///   prod_j s_j^{d_j - 1} (1 + sum_j s_j)^{-D} ds = prod_j Gamma(d_j) Gamma(D - sum d) / Gamma(D).
double beta_moment(const std::vector<double>& d, double D);
/// Exact rational value for integer parameters (d_j >= 1, D > sum d).
Rational beta_moment_exact(const std::vector<int>& d, int D);

/// integral over R_+^l of a(r) (1 + r^2)^{-D} prod_j r_j^{e_j} dr.
struct RadialIntegrand {
    std::vector<int> exponents;                                  // e_j, one per block
    int power = 1;                                               // D (= n+m+1 in spectral use)
    QuasiRadialSymbol radial = QuasiRadialSymbol::constant(1.0); // a(r)
};

struct NumericResult {
    Complex value;
    double rel_change = 0.0; // node-doubling estimate |I_2N - I_N| / |I_2N|
};

/// Closed Beta path for the rational symbol families (exact to ~1e-13 relative),
/// numeric quadrature otherwise. Throws DivergenceError outside the convergence
/// window and QuadratureError when node-doubling moves the numeric value by
/// more than 1e-8 relative.
Complex radial_integral(const RadialIntegrand& ig, const QuadratureSpec& spec = {},
                        IntegralPath path = IntegralPath::automatic);

/// Forced numeric evaluation with the doubling estimate attached.
/// Closed-form integrands reduce axis-by-axis through the exact scaling
/// r_j -> sqrt(A) x and integrate one-dimensional moments by Gauss-Legendre
/// (exponentially convergent); tabulated symbols fall back to the tensor rule.
NumericResult radial_integral_numeric(const RadialIntegrand& ig, const QuadratureSpec& spec = {});

/// Plain tensor-product rule on the mapped axes, any symbol family, at most
/// 3 axes. Convergence on the joint kernel (1+|r|^2)^{-D} is only algebraic
/// (the mapped integrand has poles that approach u = 1 when the other radii
/// are large), so mind the reported rel_change when sizing nodes_per_axis.
NumericResult radial_integral_tensor(const RadialIntegrand& ig, const QuadratureSpec& spec = {});

/// Exact rational radial integral for unit-coefficient closed-form symbols
/// when every Dirichlet parameter is an integer; nullopt otherwise.
std::optional<Rational> radial_integral_exact(const RadialIntegrand& ig);

/// Numeric check that dnu_m is a probability measure: integrates dnu_m over
/// C^n by polar reduction and returns the result (expected 1).
double fs_normalization(int n, int m, const QuadratureSpec& spec = {});

} // namespace bergtoep
