#pragma once

#include <iosfwd>

#include <Eigen/Core>

#include "bergtoep/bergman.hpp"
#include "bergtoep/quadrature.hpp"
#include "bergtoep/symbols.hpp"

namespace bergtoep {

/// Dense operator matrix in the graded-lex orthonormal basis of its space.
struct OperatorMatrix {
    const BergmanSpace* space = nullptr;
    Eigen::MatrixXcd entries;
};

/// Eigenvalue of T_a on monomials with block degrees s:
///   gamma = 2^l (n+m)! / ((m-|s|)! prod_j (k_j-1+s_j)!)
///           * int a(r) (1+r^2)^{-(n+m+1)} prod_j r_j^{2 s_j + 2 k_j - 1} dr.
Complex gamma_quasi_radial(const QuasiRadialSymbol& a, const Partition& k, int m,
                           const std::vector<int>& s, const QuadratureSpec& spec = {},
                           IntegralPath path = IntegralPath::automatic);

/// Exact rational value of gamma for unit-coefficient closed-form symbols;
/// nullopt when no exact path exists.
std::optional<Rational> gamma_quasi_radial_exact(const QuasiRadialSymbol& a, const Partition& k,
                                                 int m, const std::vector<int>& s);

/// Coefficient of T_{a xi^p conj(xi)^q} z^alpha = gamma~ z^{alpha+p-q}:
///   gamma~ = 2^l (alpha+p)! (n+m)! /
///            ((alpha+p-q)! (m-|alpha+p-q|)! prod_j (k_j-1+|alpha_(j)+p_(j)|)!)
///          * int a(r) (1+r^2)^{-(n+m+1)}
///                prod_j r_j^{|alpha_(j)| + |alpha_(j)+p_(j)-q_(j)| + 2 k_j - 1} dr.
/// Throws when alpha+p-q leaves J_n(m); assembly maps those columns to zero.
Complex gamma_tilde(const QuasiRadialSymbol& a, const Partition& k, const MultiIndex& p,
                    const MultiIndex& q, int m, const MultiIndex& alpha,
                    const QuadratureSpec& spec = {}, IntegralPath path = IntegralPath::automatic);

OperatorMatrix assemble_quasi_radial(const QuasiRadialSymbol& a, const Partition& k,
                                     const BergmanSpace& space, const QuadratureSpec& spec = {},
                                     IntegralPath path = IntegralPath::automatic);

OperatorMatrix assemble_quasi_homogeneous(const QuasiHomogeneousSymbol& sym, const Partition& k,
                                          const BergmanSpace& space,
                                          const QuadratureSpec& spec = {},
                                          IntegralPath path = IntegralPath::automatic);

/// Dispatches on p = q = 0.
OperatorMatrix assemble(const QuasiHomogeneousSymbol& sym, const Partition& k,
                        const BergmanSpace& space, const QuadratureSpec& spec = {},
                        IntegralPath path = IntegralPath::automatic);

double spectral_norm(const Eigen::MatrixXcd& m);
double frobenius_norm(const Eigen::MatrixXcd& m);

/// ||AB - BA||_2 (largest singular value).
double commutator_norm(const OperatorMatrix& a, const OperatorMatrix& b);

/// Commutativity test of T_{a xi^p conj(xi)^q} and T_{b xi^u conj(xi)^v} for
/// block-balanced symbols: true iff every coordinate i satisfies one of
/// p_i=q_i=0, u_i=v_i=0, p_i=u_i=0, q_i=v_i=0.
bool predict_commutes(const QuasiHomogeneousSymbol& sym1, const QuasiHomogeneousSymbol& sym2,
                      const Partition& k);

/// Sparse triplet listing "row,col,re,im", row-major, header included.
void write_matrix_csv(const OperatorMatrix& m, std::ostream& out);
void write_matrix_json(const OperatorMatrix& m, std::ostream& out);

} // namespace bergtoep
