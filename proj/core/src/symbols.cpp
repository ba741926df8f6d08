#include "bergtoep/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

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

} // namespace

QuasiRadialSymbol QuasiRadialSymbol::constant(Complex value) {
    QuasiRadialSymbol s;
    s.family_ = Family::constant;
    s.coeff_ = value;
    return s;
}

QuasiRadialSymbol QuasiRadialSymbol::radial_monomial(std::vector<int> c, Complex coeff) {
    for (int e : c)
        if (e < 0) throw ValidationError("radial_monomial: exponents must be nonnegative");
    QuasiRadialSymbol s;
    s.family_ = Family::radial_monomial;
    s.coeff_ = coeff;
    s.powers_ = std::move(c);
    return s;
}

QuasiRadialSymbol QuasiRadialSymbol::inverse_power(int t, Complex coeff) {
    if (t < 0) throw ValidationError("inverse_power: t must be nonnegative");
    QuasiRadialSymbol s;
    s.family_ = Family::inverse_power;
    s.coeff_ = coeff;
    s.t_ = t;
    return s;
}

QuasiRadialSymbol QuasiRadialSymbol::bounded_rational(std::vector<int> c, int t, Complex coeff) {
    for (int e : c)
        if (e < 0) throw ValidationError("bounded_rational: exponents must be nonnegative");
    if (t < 0) throw ValidationError("bounded_rational: t must be nonnegative");
    QuasiRadialSymbol s;
    s.family_ = Family::bounded_rational;
    s.coeff_ = coeff;
    s.powers_ = std::move(c);
    s.t_ = t;
    return s;
}

QuasiRadialSymbol QuasiRadialSymbol::tabulated(Callable fn, int growth_degree, int growth_decay) {
    if (!fn) throw ValidationError("tabulated: callable required");
    if (growth_degree < 0 || growth_decay < 0)
        throw ValidationError("tabulated: growth bounds must be nonnegative");
    QuasiRadialSymbol s;
    s.family_ = Family::tabulated;
    s.fn_ = std::move(fn);
    s.declared_growth_ = growth_degree;
    s.declared_decay_ = growth_decay;
    return s;
}

bool QuasiRadialSymbol::is_one() const {
    return closed_form() && coeff_ == Complex{1.0, 0.0} && t_ == 0 &&
           std::all_of(powers_.begin(), powers_.end(), [](int e) { return e == 0; });
}

int QuasiRadialSymbol::growth_degree() const {
    if (family_ == Family::tabulated) return declared_growth_;
    return std::accumulate(powers_.begin(), powers_.end(), 0);
}

int QuasiRadialSymbol::growth_decay() const {
    if (family_ == Family::tabulated) return declared_decay_;
    return t_;
}

Complex QuasiRadialSymbol::eval(const std::vector<double>& r) const {
    if (family_ == Family::tabulated) return fn_(r);
    if (!powers_.empty() && powers_.size() != r.size())
        throw DimensionError("quasi-radial symbol: radii count != exponent count");
    double r2 = 0.0;
    for (double rj : r) r2 += rj * rj;
    double mag = 1.0;
    for (std::size_t j = 0; j < powers_.size(); ++j)
        mag *= std::pow(r[j] * r[j], powers_[j]);
    if (t_ > 0) mag *= std::pow(1.0 + r2, -t_);
    return coeff_ * mag;
}

QuasiHomogeneousSymbol::QuasiHomogeneousSymbol(QuasiRadialSymbol radial, MultiIndex p,
                                               MultiIndex q)
    : radial_(std::move(radial)), p_(std::move(p)), q_(std::move(q)) {
    if (!validate_orthogonal(p_, q_))
        throw ValidationError("quasi-homogeneous symbol: p.q must vanish");
}

QuasiHomogeneousSymbol::QuasiHomogeneousSymbol(QuasiRadialSymbol radial, int n)
    : radial_(std::move(radial)), p_(MultiIndex::zero(n)), q_(MultiIndex::zero(n)) {}

bool validate_orthogonal(const MultiIndex& p, const MultiIndex& q) {
    if (p.size() != q.size())
        throw DimensionError("validate_orthogonal: length mismatch");
    long long dot = 0;
    for (int i = 0; i < p.size(); ++i) dot += static_cast<long long>(p[i]) * q[i];
    return dot == 0;
}

SymbolClassRkh::SymbolClassRkh(Partition k, std::vector<std::optional<int>> h)
    : k_(std::move(k)), h_(std::move(h)) {
    if (static_cast<int>(h_.size()) != k_.block_count())
        throw DimensionError("R_k(h): bound vector length != block count");
    for (int j = 0; j < k_.block_count(); ++j) {
        const auto& hj = h_[static_cast<std::size_t>(j)];
        if (k_.part(j) == 1) {
            if (hj.has_value())
                throw ValidationError("R_k(h): blocks with k_j = 1 carry no bound h_j");
        } else {
            if (!hj.has_value() || *hj < 1 || *hj > k_.part(j) - 1)
                throw ValidationError("R_k(h): bound must satisfy 1 <= h_j <= k_j - 1");
        }
    }
}

bool in_class_Rkh(const QuasiHomogeneousSymbol& sym, const SymbolClassRkh& cls) {
    const Partition& k = cls.partition();
    if (sym.dimension() != k.dimension())
        throw DimensionError("in_class_Rkh: symbol length != partition dimension");
    for (int j = 0; j < k.block_count(); ++j) {
        const int off = k.offset(j);
        const int kj = k.part(j);
        const auto& hj = cls.bounds()[static_cast<std::size_t>(j)];
        if (kj == 1) {
            if (sym.p()[off] != 0 || sym.q()[off] != 0) return false;
            continue;
        }
        int psum = 0, qsum = 0;
        for (int i = 0; i < kj; ++i) {
            const int pi = sym.p()[off + i];
            const int qi = sym.q()[off + i];
            if (i >= *hj && pi != 0) return false;  // p vanishes above h_j
            if (i < *hj && qi != 0) return false;   // q vanishes at or below h_j
            psum += pi;
            qsum += qi;
        }
        if (psum != qsum) return false;
    }
    return true;
}

Complex evaluate(const QuasiHomogeneousSymbol& sym, const PointXcd& z, const Partition& k) {
    if (sym.dimension() != k.dimension() || z.size() != k.dimension())
        throw DimensionError("evaluate: dimension mismatch");
    const int l = k.block_count();
    std::vector<double> radii(static_cast<std::size_t>(l), 0.0);
    for (int j = 0; j < l; ++j) {
        double acc = 0.0;
        for (int i = 0; i < k.part(j); ++i) acc += std::norm(z[k.offset(j) + i]);
        radii[static_cast<std::size_t>(j)] = std::sqrt(acc);
    }
    Complex angular{1.0, 0.0};
    for (int j = 0; j < l; ++j) {
        bool touched = false;
        for (int i = 0; i < k.part(j); ++i)
            if (sym.p()[k.offset(j) + i] != 0 || sym.q()[k.offset(j) + i] != 0) touched = true;
        if (!touched) continue;
        const double rj = radii[static_cast<std::size_t>(j)];
        if (rj == 0.0)
            throw UndefinedCoordinatesError("evaluate: xi undefined, block radius is zero");
        for (int i = 0; i < k.part(j); ++i) {
            const Complex xi = z[k.offset(j) + i] / rj;
            const int pi = sym.p()[k.offset(j) + i];
            const int qi = sym.q()[k.offset(j) + i];
            if (pi > 0) angular *= ipow(xi, pi);
            if (qi > 0) angular *= ipow(std::conj(xi), qi);
        }
    }
    return sym.radial().eval(radii) * angular;
}

TorusElement::TorusElement(std::vector<Complex> t, double tol) : t_(std::move(t)) {
    for (const Complex& ti : t_) {
        if (std::abs(std::abs(ti) - 1.0) > tol)
            throw ValidationError("torus element: coordinates must be unit modulus");
    }
}

TorusElement TorusElement::identity(int n) {
    return TorusElement(std::vector<Complex>(static_cast<std::size_t>(n), Complex{1.0, 0.0}));
}

PointXcd TorusElement::apply(const PointXcd& z) const {
    if (z.size() != size()) throw DimensionError("torus action: dimension mismatch");
    PointXcd out(z.size());
    for (int i = 0; i < z.size(); ++i) out[i] = t_[static_cast<std::size_t>(i)] * z[i];
    return out;
}

bool is_in_Tk(const TorusElement& t, const Partition& k, double tol) {
    if (t.size() != k.dimension())
        throw DimensionError("is_in_Tk: dimension mismatch");
    for (int j = 0; j < k.block_count(); ++j) {
        const Complex ref = t[k.offset(j)];
        for (int i = 1; i < k.part(j); ++i) {
            if (std::abs(t[k.offset(j) + i] - ref) > tol) return false;
        }
    }
    return true;
}

double invariance_deviation(const QuasiHomogeneousSymbol& sym, const TorusElement& t,
                            const Partition& k, const std::vector<PointXcd>& samples) {
    double worst = 0.0;
    for (const PointXcd& z : samples) {
        const Complex moved = evaluate(sym, t.apply(z), k);
        const Complex ref = evaluate(sym, z, k);
        worst = std::max(worst, std::abs(moved - ref));
    }
    return worst;
}

std::vector<QuasiHomogeneousSymbol> rkh_generator_family(const SymbolClassRkh& cls,
                                                         std::size_t min_count) {
    const Partition& k = cls.partition();
    const int n = k.dimension();
    const int l = k.block_count();

    // Elementary block shifts e_{(j,r)} -> e_{(j,s)} with r <= h_j < s, plus
    // degree-2 variants; combined with a small palette of radial factors.
    std::vector<std::pair<MultiIndex, MultiIndex>> shifts;
    shifts.emplace_back(MultiIndex::zero(n), MultiIndex::zero(n));
    for (int j = 0; j < l; ++j) {
        const auto& hj = cls.bounds()[static_cast<std::size_t>(j)];
        if (!hj.has_value()) continue;
        for (int r = 0; r < *hj; ++r) {
            for (int s = *hj; s < k.part(j); ++s) {
                std::vector<int> p(static_cast<std::size_t>(n), 0);
                std::vector<int> q(static_cast<std::size_t>(n), 0);
                p[static_cast<std::size_t>(k.offset(j) + r)] = 1;
                q[static_cast<std::size_t>(k.offset(j) + s)] = 1;
                shifts.emplace_back(MultiIndex(p), MultiIndex(q));
                std::vector<int> p2 = p, q2 = q;
                p2[static_cast<std::size_t>(k.offset(j) + r)] = 2;
                q2[static_cast<std::size_t>(k.offset(j) + s)] = 2;
                shifts.emplace_back(MultiIndex(p2), MultiIndex(q2));
            }
        }
    }
    // Two-block products of elementary shifts.
    if (l >= 2) {
        std::vector<std::pair<MultiIndex, MultiIndex>> combos;
        for (std::size_t a = 1; a < shifts.size(); ++a) {
            for (std::size_t b = a + 1; b < shifts.size(); ++b) {
                MultiIndex p = shifts[a].first + shifts[b].first;
                MultiIndex q = shifts[a].second + shifts[b].second;
                if (validate_orthogonal(p, q)) combos.emplace_back(std::move(p), std::move(q));
            }
        }
        shifts.insert(shifts.end(), combos.begin(), combos.end());
    }

    std::vector<QuasiRadialSymbol> radials;
    radials.push_back(QuasiRadialSymbol::constant(1.0));
    radials.push_back(QuasiRadialSymbol::inverse_power(1));
    {
        std::vector<int> c(static_cast<std::size_t>(l), 0);
        c[0] = 1;
        radials.push_back(QuasiRadialSymbol::bounded_rational(c, 1));
    }

    std::vector<QuasiHomogeneousSymbol> out;
    std::size_t ri = 0;
    for (const auto& [p, q] : shifts) {
        out.emplace_back(radials[ri % radials.size()], p, q);
        ++ri;
        if (out.size() >= min_count && out.size() >= shifts.size()) break;
    }
    // Pad with extra radial factors if the shift set alone is too small.
    ri = 0;
    while (out.size() < min_count) {
        out.emplace_back(radials[ri % radials.size()], shifts[ri % shifts.size()].first,
                         shifts[ri % shifts.size()].second);
        ++ri;
    }
    return out;
}

QuasiHomogeneousSymbol rkh_witness_symbol(const SymbolClassRkh& cls, int j0, int r, int s) {
    const Partition& k = cls.partition();
    const auto& hj = cls.bounds().at(static_cast<std::size_t>(j0));
    if (!hj.has_value())
        throw ValidationError("witness symbol: block has no bound h_j");
    if (r < 0 || r >= *hj || s < *hj || s >= k.part(j0))
        throw ValidationError("witness symbol: need r <= h_j < s inside the block");
    const int n = k.dimension();
    std::vector<int> p(static_cast<std::size_t>(n), 0);
    std::vector<int> q(static_cast<std::size_t>(n), 0);
    p[static_cast<std::size_t>(k.offset(j0) + r)] = 1;
    q[static_cast<std::size_t>(k.offset(j0) + s)] = 1;
    return QuasiHomogeneousSymbol(QuasiRadialSymbol::constant(1.0), MultiIndex(p), MultiIndex(q));
}

} // namespace bergtoep
