#include "bergtoep/bergman.hpp"

#include <cmath>

namespace bergtoep {

BergmanSpace::BergmanSpace(int n, int m) : basis_(n, m) {
    norm_sq_.reserve(basis_.size());
    normalizer_.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const double ns = monomial_norm_sq(basis_.at(i), m);
        norm_sq_.push_back(ns);
        normalizer_.push_back(1.0 / std::sqrt(ns));
    }
}

Complex kernel(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w, int m) {
    if (z.size() != w.size()) throw DimensionError("kernel: point dimension mismatch");
    Complex pairing{1.0, 0.0};
    for (Eigen::Index i = 0; i < z.size(); ++i) pairing += z[i] * std::conj(w[i]);
    Complex out{1.0, 0.0};
    for (int i = 0; i < m; ++i) out *= pairing;
    return out;
}

Complex inner_product_monomials(const MultiIndex& alpha, const MultiIndex& beta, int m) {
    if (alpha.size() != beta.size())
        throw DimensionError("inner_product_monomials: length mismatch");
    if (alpha.degree() > m || beta.degree() > m)
        throw ValidationError("inner_product_monomials: degree exceeds weight m");
    if (alpha != beta) return {0.0, 0.0};
    return {monomial_norm_sq(alpha, m), 0.0};
}

Complex monomial_value(const MultiIndex& alpha, const Eigen::VectorXcd& z) {
    if (alpha.size() != z.size()) throw DimensionError("monomial_value: dimension mismatch");
    Complex out{1.0, 0.0};
    for (int i = 0; i < alpha.size(); ++i) {
        Complex base = z[i];
        int e = alpha[i];
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
    }
    return out;
}

Complex evaluate_section(const SectionPoly& s, const Eigen::VectorXcd& z) {
    if (s.space == nullptr) throw ValidationError("evaluate_section: missing space");
    const BergmanSpace& sp = *s.space;
    if (s.coeffs.size() != static_cast<Eigen::Index>(sp.dim()))
        throw DimensionError("evaluate_section: coefficient length != space dimension");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < sp.dim(); ++i) {
        if (s.coeffs[static_cast<Eigen::Index>(i)] == Complex{0.0, 0.0}) continue;
        acc += s.coeffs[static_cast<Eigen::Index>(i)] * sp.normalizer(i) *
               monomial_value(sp.basis().at(i), z);
    }
    return acc;
}

} // namespace bergtoep
