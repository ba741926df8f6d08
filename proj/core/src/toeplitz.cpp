#include "bergtoep/toeplitz.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include <Eigen/SVD>

#include <nlohmann/json.hpp>

namespace bergtoep {

namespace {

void check_block_degrees(const Partition& k, int m, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != k.block_count())
        throw DimensionError("gamma: block-degree vector length != block count");
    int total = 0;
    for (int sj : s) {
        if (sj < 0) throw ValidationError("gamma: block degrees must be nonnegative");
        total += sj;
    }
    if (total > m) throw ValidationError("gamma: |s| exceeds weight m");
}

} // namespace

Complex gamma_quasi_radial(const QuasiRadialSymbol& a, const Partition& k, int m,
                           const std::vector<int>& s, const QuadratureSpec& spec,
                           IntegralPath path) {
    check_block_degrees(k, m, s);
    const int n = k.dimension();
    const int l = k.block_count();
    int total = 0;
    double logpref = l * std::log(2.0) + log_factorial(n + m);
    RadialIntegrand ig;
    ig.power = n + m + 1;
    ig.radial = a;
    ig.exponents.reserve(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) {
        const int sj = s[static_cast<std::size_t>(j)];
        total += sj;
        logpref -= log_factorial(k.part(j) - 1 + sj);
        ig.exponents.push_back(2 * sj + 2 * k.part(j) - 1);
    }
    logpref -= log_factorial(m - total);
    return std::exp(logpref) * radial_integral(ig, spec, path);
}

std::optional<Rational> gamma_quasi_radial_exact(const QuasiRadialSymbol& a, const Partition& k,
                                                 int m, const std::vector<int>& s) {
    check_block_degrees(k, m, s);
    const int n = k.dimension();
    const int l = k.block_count();
    RadialIntegrand ig;
    ig.power = n + m + 1;
    ig.radial = a;
    int total = 0;
    BigInt denom = 1;
    for (int j = 0; j < l; ++j) {
        const int sj = s[static_cast<std::size_t>(j)];
        total += sj;
        denom *= factorial_exact(k.part(j) - 1 + sj);
        ig.exponents.push_back(2 * sj + 2 * k.part(j) - 1);
    }
    const std::optional<Rational> integral = radial_integral_exact(ig);
    if (!integral.has_value()) return std::nullopt;
    Rational pref(BigInt(1) << l, 1);
    pref *= Rational(factorial_exact(n + m), denom * factorial_exact(m - total));
    return pref * *integral;
}

Complex gamma_tilde(const QuasiRadialSymbol& a, const Partition& k, const MultiIndex& p,
                    const MultiIndex& q, int m, const MultiIndex& alpha,
                    const QuadratureSpec& spec, IntegralPath path) {
    const int n = k.dimension();
    const int l = k.block_count();
    if (p.size() != n || q.size() != n || alpha.size() != n)
        throw DimensionError("gamma_tilde: multi-index length != partition dimension");
    if (!validate_orthogonal(p, q))
        throw ValidationError("gamma_tilde: p.q must vanish");
    if (alpha.degree() > m)
        throw ValidationError("gamma_tilde: |alpha| exceeds weight m");
    const MultiIndex ap = alpha + p;
    const std::optional<MultiIndex> beta = try_subtract(ap, q);
    if (!beta.has_value() || beta->degree() > m)
        throw ValidationError("gamma_tilde: alpha + p - q leaves J_n(m)");

    const std::vector<int> s_alpha = block_degrees(alpha, k);
    const std::vector<int> s_beta = block_degrees(*beta, k);
    const std::vector<int> s_ap = block_degrees(ap, k);

    double logpref = l * std::log(2.0) + log_multi_factorial(ap) + log_factorial(n + m) -
                     log_multi_factorial(*beta) - log_factorial(m - beta->degree());
    RadialIntegrand ig;
    ig.power = n + m + 1;
    ig.radial = a;
    for (int j = 0; j < l; ++j) {
        logpref -= log_factorial(k.part(j) - 1 + s_ap[static_cast<std::size_t>(j)]);
        ig.exponents.push_back(s_alpha[static_cast<std::size_t>(j)] +
                               s_beta[static_cast<std::size_t>(j)] + 2 * k.part(j) - 1);
    }
    return std::exp(logpref) * radial_integral(ig, spec, path);
}

OperatorMatrix assemble_quasi_radial(const QuasiRadialSymbol& a, const Partition& k,
                                     const BergmanSpace& space, const QuadratureSpec& spec,
                                     IntegralPath path) {
    if (k.dimension() != space.n())
        throw DimensionError("assemble: partition dimension != space dimension");
    const auto dim = static_cast<Eigen::Index>(space.dim());
    OperatorMatrix out{&space, Eigen::MatrixXcd::Zero(dim, dim)};
    std::map<std::vector<int>, Complex> cache; // equal block degrees share eigenvalues
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const std::vector<int> s = block_degrees(space.basis().at(i), k);
        auto it = cache.find(s);
        if (it == cache.end())
            it = cache.emplace(s, gamma_quasi_radial(a, k, space.m(), s, spec, path)).first;
        out.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = it->second;
    }
    return out;
}

OperatorMatrix assemble_quasi_homogeneous(const QuasiHomogeneousSymbol& sym, const Partition& k,
                                          const BergmanSpace& space, const QuadratureSpec& spec,
                                          IntegralPath path) {
    if (k.dimension() != space.n() || sym.dimension() != space.n())
        throw DimensionError("assemble: dimension mismatch");
    const auto dim = static_cast<Eigen::Index>(space.dim());
    OperatorMatrix out{&space, Eigen::MatrixXcd::Zero(dim, dim)};
    for (std::size_t ia = 0; ia < space.dim(); ++ia) {
        const MultiIndex& alpha = space.basis().at(ia);
        const std::optional<MultiIndex> beta = try_subtract(alpha + sym.p(), sym.q());
        if (!beta.has_value() || beta->degree() > space.m()) continue; // zero column
        const std::size_t ib = *space.index_of(*beta);
        const Complex g =
            gamma_tilde(sym.radial(), k, sym.p(), sym.q(), space.m(), alpha, spec, path);
        // Orthonormal-basis entry <T e_alpha, e_beta> = (c_alpha / c_beta) gamma~.
        out.entries(static_cast<Eigen::Index>(ib), static_cast<Eigen::Index>(ia)) =
            g * (space.normalizer(ia) / space.normalizer(ib));
    }
    return out;
}

OperatorMatrix assemble(const QuasiHomogeneousSymbol& sym, const Partition& k,
                        const BergmanSpace& space, const QuadratureSpec& spec,
                        IntegralPath path) {
    if (sym.is_quasi_radial()) return assemble_quasi_radial(sym.radial(), k, space, spec, path);
    return assemble_quasi_homogeneous(sym, k, space, spec, path);
}

double spectral_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

double frobenius_norm(const Eigen::MatrixXcd& m) { return m.norm(); }

double commutator_norm(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.entries.rows() != b.entries.rows() || a.entries.cols() != b.entries.cols())
        throw DimensionError("commutator_norm: operators live on different spaces");
    return spectral_norm(a.entries * b.entries - b.entries * a.entries);
}

bool predict_commutes(const QuasiHomogeneousSymbol& sym1, const QuasiHomogeneousSymbol& sym2,
                      const Partition& k) {
    if (sym1.dimension() != k.dimension() || sym2.dimension() != k.dimension())
        throw DimensionError("predict_commutes: dimension mismatch");
    const std::vector<int> dp = block_degrees(sym1.p(), k);
    const std::vector<int> dq = block_degrees(sym1.q(), k);
    const std::vector<int> du = block_degrees(sym2.p(), k);
    const std::vector<int> dv = block_degrees(sym2.q(), k);
    if (dp != dq || du != dv)
        throw ValidationError("predict_commutes: symbols must be block-balanced");
    for (int i = 0; i < k.dimension(); ++i) {
        const int pi = sym1.p()[i], qi = sym1.q()[i];
        const int ui = sym2.p()[i], vi = sym2.q()[i];
        const bool ok = (pi == 0 && qi == 0) || (ui == 0 && vi == 0) ||
                        (pi == 0 && ui == 0) || (qi == 0 && vi == 0);
        if (!ok) return false;
    }
    return true;
}

void write_matrix_csv(const OperatorMatrix& m, std::ostream& out) {
    out << "row,col,re,im\n";
    char buf[64];
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
            const Complex v = m.entries(r, c);
            if (v == Complex{0.0, 0.0}) continue;
            out << r << ',' << c << ',';
            std::snprintf(buf, sizeof buf, "%.17g", v.real());
            out << buf << ',';
            std::snprintf(buf, sizeof buf, "%.17g", v.imag());
            out << buf << '\n';
        }
    }
}

void write_matrix_json(const OperatorMatrix& m, std::ostream& out) {
    nlohmann::json j;
    j["dim"] = m.entries.rows();
    if (m.space != nullptr) {
        j["space"] = {{"n", m.space->n()}, {"m", m.space->m()}};
    }
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
            const Complex v = m.entries(r, c);
            if (v == Complex{0.0, 0.0}) continue;
            entries.push_back({r, c, v.real(), v.imag()});
        }
    }
    j["entries"] = std::move(entries);
    out << j.dump(2) << '\n';
}

} // namespace bergtoep
