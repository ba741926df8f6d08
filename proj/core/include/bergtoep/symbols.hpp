#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "bergtoep/multiindex.hpp"

namespace bergtoep {

using PointXcd = Eigen::VectorXcd;

/// k-quasi-radial symbol a(r_1, ..., r_l).
///
/// The closed-form families compose to coeff * prod_j r_j^{2 c_j} * (1+r^2)^{-t};
/// a tabulated symbol wraps an arbitrary callable but must declare its growth
/// (|c|, t) so integration can check convergence and pick a mapping.
class QuasiRadialSymbol {
public:
    enum class Family { constant, radial_monomial, inverse_power, bounded_rational, tabulated };
    using Callable = std::function<Complex(const std::vector<double>&)>;

    static QuasiRadialSymbol constant(Complex value);
    static QuasiRadialSymbol radial_monomial(std::vector<int> c, Complex coeff = 1.0);
    static QuasiRadialSymbol inverse_power(int t, Complex coeff = 1.0);
    static QuasiRadialSymbol bounded_rational(std::vector<int> c, int t, Complex coeff = 1.0);
    static QuasiRadialSymbol tabulated(Callable fn, int growth_degree, int growth_decay);

    Family family() const { return family_; }
    bool closed_form() const { return family_ != Family::tabulated; }
    bool is_one() const;

    Complex coefficient() const { return coeff_; }
    /// Monomial exponents c_j (empty means all zero). Closed-form families only.
    const std::vector<int>& powers() const { return powers_; }
    int inverse_t() const { return t_; }

    /// |c| (declared bound for tabulated symbols).
    int growth_degree() const;
    /// t (declared bound for tabulated symbols).
    int growth_decay() const;

    Complex eval(const std::vector<double>& r) const;

private:
    QuasiRadialSymbol() = default;
    Family family_ = Family::constant;
    Complex coeff_{1.0, 0.0};
    std::vector<int> powers_;
    int t_ = 0;
    Callable fn_;
    int declared_growth_ = 0;
    int declared_decay_ = 0;
};

/// a(r) xi^p conj(xi)^q with p.q = 0.
class QuasiHomogeneousSymbol {
public:
    QuasiHomogeneousSymbol(QuasiRadialSymbol radial, MultiIndex p, MultiIndex q);
    /// Purely quasi-radial symbol (p = q = 0 of the given length).
    QuasiHomogeneousSymbol(QuasiRadialSymbol radial, int n);

    const QuasiRadialSymbol& radial() const { return radial_; }
    const MultiIndex& p() const { return p_; }
    const MultiIndex& q() const { return q_; }
    int dimension() const { return p_.size(); }
    bool is_quasi_radial() const { return p_.degree() == 0 && q_.degree() == 0; }

private:
    QuasiRadialSymbol radial_;
    MultiIndex p_, q_;
};

/// True iff sum_i p_i q_i = 0; throws on length mismatch.
bool validate_orthogonal(const MultiIndex& p, const MultiIndex& q);

/// The class R_k(h): p supported on the first h_j coordinates of each block,
/// q on the remaining ones, with |p_(j)| = |q_(j)|. Blocks with k_j = 1 carry
/// no h_j and force p_(j) = q_(j) = 0.
class SymbolClassRkh {
public:
    SymbolClassRkh(Partition k, std::vector<std::optional<int>> h);

    const Partition& partition() const { return k_; }
    const std::vector<std::optional<int>>& bounds() const { return h_; }

private:
    Partition k_;
    std::vector<std::optional<int>> h_;
};

bool in_class_Rkh(const QuasiHomogeneousSymbol& sym, const SymbolClassRkh& cls);

/// sym(z) = a(r_1,...,r_l) xi^p conj(xi)^q with r_j = |z_(j)|, xi_(j) = z_(j)/r_j.
/// Throws UndefinedCoordinatesError when a block touched by (p, q) vanishes.
Complex evaluate(const QuasiHomogeneousSymbol& sym, const PointXcd& z, const Partition& k);

/// Element of the n-torus; coordinates must be unit modulus within tol.
class TorusElement {
public:
    explicit TorusElement(std::vector<Complex> t, double tol = 1e-12);
    static TorusElement identity(int n);

    int size() const { return static_cast<int>(t_.size()); }
    const std::vector<Complex>& coords() const { return t_; }
    Complex operator[](int i) const { return t_[static_cast<std::size_t>(i)]; }

    PointXcd apply(const PointXcd& z) const;

private:
    std::vector<Complex> t_;
};

/// t in T_k iff within every block all coordinates agree (eq-style, within tol).
bool is_in_Tk(const TorusElement& t, const Partition& k, double tol = 1e-12);

/// max over samples of |sym(t.z) - sym(z)|.
double invariance_deviation(const QuasiHomogeneousSymbol& sym, const TorusElement& t,
                            const Partition& k, const std::vector<PointXcd>& samples);

/// Deterministic generating family of R_k(h) symbols (at least min_count,
/// possibly more); mixes elementary shift pairs with radial factors.
std::vector<QuasiHomogeneousSymbol> rkh_generator_family(const SymbolClassRkh& cls,
                                                         std::size_t min_count);

/// The invariance-proof witness: p = e_{(j0, r)}, q = e_{(j0, s)} with
/// r <= h_{j0} < s, as plain unit-coefficient xi^p conj(xi)^q.
QuasiHomogeneousSymbol rkh_witness_symbol(const SymbolClassRkh& cls, int j0, int r, int s);

} // namespace bergtoep
