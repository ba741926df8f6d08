#pragma once

#include <Eigen/Core>

#include "bergtoep/multiindex.hpp"

namespace bergtoep {

/// Finite-dimensional weighted Bergman space: polynomials of degree <= m on
/// C^n with the graded-lex monomial basis and its norm constants.
class BergmanSpace {
public:
    BergmanSpace(int n, int m);

    int n() const { return basis_.n(); }
    int m() const { return basis_.max_degree(); }
    std::size_t dim() const { return basis_.size(); }
    const BasisOrder& basis() const { return basis_; }

    /// ||z^alpha||^2 for the i-th basis multi-index.
    double norm_sq(std::size_t i) const { return norm_sq_[i]; }
    /// c_alpha = (m! / (alpha! (m-|alpha|)!))^{1/2}, so c_alpha z^alpha has unit norm.
    double normalizer(std::size_t i) const { return normalizer_[i]; }
    std::optional<std::size_t> index_of(const MultiIndex& alpha) const {
        return basis_.index_of(alpha);
    }

private:
    BasisOrder basis_;
    std::vector<double> norm_sq_;
    std::vector<double> normalizer_;
};

/// Reproducing kernel K(z, w) = (1 + z . conj(w))^m.
Complex kernel(const Eigen::VectorXcd& z, const Eigen::VectorXcd& w, int m);

/// <z^alpha, z^beta>_m = delta_{alpha,beta} alpha! (m-|alpha|)! / m!.
Complex inner_product_monomials(const MultiIndex& alpha, const MultiIndex& beta, int m);

/// Polynomial expressed in the orthonormal basis of its space.
struct SectionPoly {
    const BergmanSpace* space = nullptr;
    Eigen::VectorXcd coeffs;
};

Complex evaluate_section(const SectionPoly& s, const Eigen::VectorXcd& z);

/// z^alpha at the point z.
Complex monomial_value(const MultiIndex& alpha, const Eigen::VectorXcd& z);

} // namespace bergtoep
