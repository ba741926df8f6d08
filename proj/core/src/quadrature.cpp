#include "bergtoep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace bergtoep {

namespace {

std::pair<std::vector<double>, std::vector<double>> compute_gauss_legendre_01(int n) {
    // Newton iteration on P_n over [-1,1], then affine map onto (0,1).
    std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        const double weight = 2.0 / ((1.0 - z * z) * pp * pp);
        x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - z);
        x[static_cast<std::size_t>(n - 1 - i)] = 0.5 * (1.0 + z);
        w[static_cast<std::size_t>(i)] = 0.5 * weight;
        w[static_cast<std::size_t>(n - 1 - i)] = 0.5 * weight;
    }
    return {std::move(x), std::move(w)};
}

} // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre_01(int n) {
    if (n < 2) throw ValidationError("gauss_legendre_01: need at least 2 nodes");
    static std::mutex mu;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre_01(n)).first;
    return it->second;
}

double beta_moment(const std::vector<double>& d, double D) {
    double sum = 0.0;
    double lg = 0.0;
    for (double dj : d) {
        if (dj <= 0.0) throw ValidationError("beta_moment: parameters must be positive");
        sum += dj;
        lg += std::lgamma(dj);
    }
    if (sum >= D)
        throw DivergenceError("beta_moment: divergent, sum d >= D");
    return std::exp(lg + std::lgamma(D - sum) - std::lgamma(D));
}

Rational beta_moment_exact(const std::vector<int>& d, int D) {
    int sum = 0;
    BigInt num = 1;
    for (int dj : d) {
        if (dj < 1) throw ValidationError("beta_moment_exact: parameters must be >= 1");
        sum += dj;
        num *= factorial_exact(dj - 1);
    }
    if (sum >= D)
        throw DivergenceError("beta_moment_exact: divergent, sum d >= D");
    num *= factorial_exact(D - sum - 1);
    return Rational(num, factorial_exact(D - 1));
}

namespace {

struct MappedAxis {
    std::vector<double> r;       // u/(1-u)
    std::vector<double> logr;
    std::vector<double> r2;
    std::vector<double> jw;      // weight / (1-u)^2
};

MappedAxis mapped_axis(int nodes) {
    const auto& [u, w] = gauss_legendre_01(nodes);
    MappedAxis ax;
    const std::size_t n = u.size();
    ax.r.resize(n);
    ax.logr.resize(n);
    ax.r2.resize(n);
    ax.jw.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double om = 1.0 - u[i];
        ax.r[i] = u[i] / om;
        ax.logr[i] = std::log(ax.r[i]);
        ax.r2[i] = ax.r[i] * ax.r[i];
        ax.jw[i] = w[i] / (om * om);
    }
    return ax;
}

void check_convergence(const RadialIntegrand& ig) {
    if (ig.exponents.empty())
        throw ValidationError("radial integral: at least one axis required");
    for (int e : ig.exponents)
        if (e < 0) throw ValidationError("radial integral: exponents must be nonnegative");
    double half = 0.0;
    for (int e : ig.exponents) half += 0.5 * (e + 1);
    const double growth = ig.radial.growth_degree() - ig.radial.growth_decay();
    if (half + growth >= static_cast<double>(ig.power))
        throw DivergenceError("radial integral: divergent for these exponents");
    if (ig.radial.closed_form() && !ig.radial.powers().empty() &&
        ig.radial.powers().size() != ig.exponents.size())
        throw DimensionError("radial integral: symbol block count != axis count");
}

/// Tensor-product evaluation at the given node count; l <= 3.
Complex tensor_value(const RadialIntegrand& ig, int nodes) {
    const int l = static_cast<int>(ig.exponents.size());
    const MappedAxis ax = mapped_axis(nodes);
    const std::size_t nn = ax.r.size();
    const double D = static_cast<double>(ig.power);

    std::vector<double> radii(static_cast<std::size_t>(l));
    Complex total{0.0, 0.0};
    if (l == 1) {
        const double e0 = ig.exponents[0];
        for (std::size_t i = 0; i < nn; ++i) {
            radii[0] = ax.r[i];
            const double structural =
                std::exp(e0 * ax.logr[i] - D * std::log1p(ax.r2[i]));
            total += ig.radial.eval(radii) * (structural * ax.jw[i]);
        }
        return total;
    }
    if (l == 2) {
        const double e0 = ig.exponents[0], e1 = ig.exponents[1];
        for (std::size_t i = 0; i < nn; ++i) {
            radii[0] = ax.r[i];
            const double part = e0 * ax.logr[i];
            Complex row{0.0, 0.0};
            for (std::size_t j = 0; j < nn; ++j) {
                radii[1] = ax.r[j];
                const double structural =
                    std::exp(part + e1 * ax.logr[j] - D * std::log1p(ax.r2[i] + ax.r2[j]));
                row += ig.radial.eval(radii) * (structural * ax.jw[j]);
            }
            total += row * ax.jw[i];
        }
        return total;
    }
    const double e0 = ig.exponents[0], e1 = ig.exponents[1], e2 = ig.exponents[2];
    for (std::size_t i = 0; i < nn; ++i) {
        radii[0] = ax.r[i];
        Complex plane{0.0, 0.0};
        for (std::size_t j = 0; j < nn; ++j) {
            radii[1] = ax.r[j];
            const double part = e0 * ax.logr[i] + e1 * ax.logr[j];
            const double s2 = ax.r2[i] + ax.r2[j];
            Complex row{0.0, 0.0};
            for (std::size_t kk = 0; kk < nn; ++kk) {
                radii[2] = ax.r[kk];
                const double structural =
                    std::exp(part + e2 * ax.logr[kk] - D * std::log1p(s2 + ax.r2[kk]));
                row += ig.radial.eval(radii) * (structural * ax.jw[kk]);
            }
            plane += row * ax.jw[j];
        }
        total += plane * ax.jw[i];
    }
    return total;
}

/// One-dimensional moment C(E, Dx) = int_0^inf x^E (1+x^2)^{-Dx} dx by GL.
double axis_moment(double E, double Dx, int nodes) {
    const MappedAxis ax = mapped_axis(nodes);
    double acc = 0.0;
    for (std::size_t i = 0; i < ax.r.size(); ++i)
        acc += std::exp(E * ax.logr[i] - Dx * std::log1p(ax.r2[i])) * ax.jw[i];
    return acc;
}

/// Closed-form integrands with l >= 4 blocks: fold the symbol into the
/// exponents and peel axes through the exact scaling r_j = sqrt(A) x, which
/// turns the integral into a product of one-dimensional moments.
double cascade_value(const std::vector<double>& eff_exponents, double Dtot, int nodes) {
    double value = 1.0;
    double Dx = Dtot;
    for (std::size_t j = eff_exponents.size(); j-- > 0;) {
        value *= axis_moment(eff_exponents[j], Dx, nodes);
        Dx -= 0.5 * (eff_exponents[j] + 1.0);
    }
    return value;
}

} // namespace

NumericResult radial_integral_tensor(const RadialIntegrand& ig, const QuadratureSpec& spec) {
    if (spec.nodes_per_axis < 8)
        throw ValidationError("quadrature spec: nodes_per_axis must be >= 8");
    check_convergence(ig);
    if (ig.exponents.size() > 3)
        throw ValidationError("radial integral: tensor rule supports at most 3 axes");
    const Complex coarse = tensor_value(ig, spec.nodes_per_axis);
    const Complex fine = tensor_value(ig, 2 * spec.nodes_per_axis);
    const double scale = std::abs(fine);
    const double rel = scale > 0.0 ? std::abs(fine - coarse) / scale : std::abs(fine - coarse);
    return {fine, rel};
}

NumericResult radial_integral_numeric(const RadialIntegrand& ig, const QuadratureSpec& spec) {
    if (spec.nodes_per_axis < 8)
        throw ValidationError("quadrature spec: nodes_per_axis must be >= 8");
    check_convergence(ig);

    if (!ig.radial.closed_form()) return radial_integral_tensor(ig, spec);

    std::vector<double> eff(ig.exponents.begin(), ig.exponents.end());
    const auto& c = ig.radial.powers();
    for (std::size_t j = 0; j < c.size(); ++j) eff[j] += 2.0 * c[j];
    const double Dtot = ig.power + ig.radial.inverse_t();
    const double coarse = cascade_value(eff, Dtot, spec.nodes_per_axis);
    const double fine = cascade_value(eff, Dtot, 2 * spec.nodes_per_axis);
    const double rel = fine != 0.0 ? std::abs(fine - coarse) / std::abs(fine) : 0.0;
    return {ig.radial.coefficient() * fine, rel};
}

std::optional<Rational> radial_integral_exact(const RadialIntegrand& ig) {
    check_convergence(ig);
    if (!ig.radial.closed_form() || ig.radial.coefficient() != Complex{1.0, 0.0})
        return std::nullopt;
    std::vector<int> d;
    d.reserve(ig.exponents.size());
    for (std::size_t j = 0; j < ig.exponents.size(); ++j) {
        const int e = ig.exponents[j];
        if (e % 2 == 0) return std::nullopt; // half-integer Dirichlet parameter
        int dj = (e + 1) / 2;
        if (j < ig.radial.powers().size()) dj += ig.radial.powers()[j];
        d.push_back(dj);
    }
    Rational r = beta_moment_exact(d, ig.power + ig.radial.inverse_t());
    const Rational half(1, 2);
    for (std::size_t j = 0; j < ig.exponents.size(); ++j) r *= half;
    return r;
}

Complex radial_integral(const RadialIntegrand& ig, const QuadratureSpec& spec,
                        IntegralPath path) {
    check_convergence(ig);
    const bool closed = ig.radial.closed_form();
    if (path == IntegralPath::closed_form && !closed)
        throw ValidationError("radial integral: no closed form for tabulated symbols");

    if (closed && path != IntegralPath::numeric) {
        // Substitute s_j = r_j^2 (factor 2^{-l}) and read off the Dirichlet moment.
        std::vector<double> d;
        d.reserve(ig.exponents.size());
        for (std::size_t j = 0; j < ig.exponents.size(); ++j) {
            double dj = 0.5 * (ig.exponents[j] + 1.0);
            if (j < ig.radial.powers().size()) dj += ig.radial.powers()[j];
            d.push_back(dj);
        }
        const double moment = beta_moment(d, static_cast<double>(ig.power + ig.radial.inverse_t()));
        return ig.radial.coefficient() * std::ldexp(moment, -static_cast<int>(ig.exponents.size()));
    }

    const NumericResult res = radial_integral_numeric(ig, spec);
    if (res.rel_change > 1e-8)
        throw QuadratureError("radial integral: node-doubling changed the value by more than 1e-8");
    return res.value;
}

double fs_normalization(int n, int m, const QuadratureSpec& spec) {
    if (n < 1 || m < 0) throw ValidationError("fs_normalization: need n >= 1, m >= 0");
    // Polar reduction with a single block: the sphere factor of C^n contributes
    // 2 pi^n / (n-1)! which combines with (n+m)!/(pi^n m!) in front.
    RadialIntegrand ig;
    ig.exponents = {2 * n - 1};
    ig.power = n + m + 1;
    const NumericResult radial = radial_integral_numeric(ig, spec);
    if (radial.rel_change > 1e-8)
        throw QuadratureError("fs_normalization: unstable numeric integral");
    const double logpref = log_factorial(n + m) - log_factorial(m) + std::log(2.0) -
                           log_factorial(n - 1);
    return std::exp(logpref) * radial.value.real();
}

} // namespace bergtoep
