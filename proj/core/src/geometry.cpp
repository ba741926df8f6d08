#include "bergtoep/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "bergtoep/rng.hpp"

namespace bergtoep {

namespace {

Complex pairing(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    Complex acc{0.0, 0.0};
    for (Eigen::Index i = 0; i < a.size(); ++i) acc += a[i] * std::conj(b[i]);
    return acc;
}

/// Hermitian form behind the Kahler structure:
///   chart:  ((1+|z|^2) <v,w> - <v,z><z,w>) / (1+|z|^2)^2
///   ball:   ((1-|z|^2) <v,w> + <v,z><z,w>) / (1-|z|^2)^2
Complex hermitian_h(const ChartPoint& at, const Tangent& v, const Tangent& w) {
    if (v.size() != at.z.size() || w.size() != at.z.size())
        throw DimensionError("tangent vectors must match the point dimension");
    const double z2 = at.z.squaredNorm();
    const Complex vw = pairing(v, w);
    const Complex vz = pairing(v, at.z);
    const Complex zw = pairing(at.z, w);
    if (at.ambient == Ambient::projective_chart) {
        const double den = (1.0 + z2) * (1.0 + z2);
        return ((1.0 + z2) * vw - vz * zw) / den;
    }
    const double den = (1.0 - z2) * (1.0 - z2);
    return ((1.0 - z2) * vw + vz * zw) / den;
}

void check_block(int j, const Partition& k) {
    if (j < 0 || j >= k.block_count())
        throw ValidationError("block index out of range");
}

Eigen::VectorXcd apply_block_factor(const Eigen::VectorXcd& z, const Partition& k, int j,
                                    Complex factor) {
    Eigen::VectorXcd out = z;
    for (int i = 0; i < k.part(j); ++i) out[k.offset(j) + i] *= factor;
    return out;
}

void check_point(const ChartPoint& at, const Partition& k) {
    if (at.z.size() != k.dimension())
        throw DimensionError("point dimension != partition dimension");
}

} // namespace

ChartPoint::ChartPoint(Eigen::VectorXcd zz, Ambient amb) : z(std::move(zz)), ambient(amb) {
    if (ambient == Ambient::ball && z.norm() >= 1.0)
        throw ValidationError("ball point requires |z| < 1");
}

double kahler_form(const ChartPoint& at, const Tangent& v, const Tangent& w) {
    return -2.0 * hermitian_h(at, v, w).imag();
}

double metric_g(const ChartPoint& at, const Tangent& v, const Tangent& w) {
    // g(v, w) = omega(v, Jw) collapses to twice the real part of the form.
    return 2.0 * hermitian_h(at, v, w).real();
}

Tangent field_x(int j, const ChartPoint& at, const Partition& k) {
    check_point(at, k);
    check_block(j, k);
    Tangent out = Tangent::Zero(at.z.size());
    for (int i = 0; i < k.part(j); ++i)
        out[k.offset(j) + i] = Complex{0.0, 1.0} * at.z[k.offset(j) + i];
    return out;
}

Tangent field_jx(int j, const ChartPoint& at, const Partition& k) {
    check_point(at, k);
    check_block(j, k);
    Tangent out = Tangent::Zero(at.z.size());
    for (int i = 0; i < k.part(j); ++i) out[k.offset(j) + i] = at.z[k.offset(j) + i];
    return out;
}

Eigen::VectorXcd canonical_rep(const Eigen::VectorXcd& v) {
    const double norm = v.norm();
    if (!(norm > 0.0))
        throw UndefinedCoordinatesError("projective point: homogeneous vector vanishes");
    Eigen::VectorXcd u = v / norm;
    Eigen::Index pivot = -1;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (std::abs(u[i]) > 1e-9) {
            pivot = i;
            break;
        }
    }
    if (pivot < 0)
        throw UndefinedCoordinatesError("projective point: no significant coordinate");
    const Complex phase = std::conj(u[pivot]) / std::abs(u[pivot]);
    return u * phase;
}

ProjTuple pi_k(const ChartPoint& at, const Partition& k) {
    check_point(at, k);
    ProjTuple out;
    out.blocks.reserve(static_cast<std::size_t>(k.block_count()));
    for (int j = 0; j < k.block_count(); ++j) {
        const Eigen::VectorXcd block = at.z.segment(k.offset(j), k.part(j));
        if (!(block.norm() > 0.0))
            throw UndefinedCoordinatesError("pi_k: indeterminate, block vanishes");
        out.blocks.push_back(canonical_rep(block));
    }
    return out;
}

double proj_distance(const ProjTuple& a, const ProjTuple& b) {
    if (a.blocks.size() != b.blocks.size())
        throw DimensionError("proj_distance: tuple size mismatch");
    double worst = 0.0;
    for (std::size_t j = 0; j < a.blocks.size(); ++j) {
        if (a.blocks[j].size() != b.blocks[j].size())
            throw DimensionError("proj_distance: block size mismatch");
        worst = std::max(worst, (a.blocks[j] - b.blocks[j]).norm());
    }
    return worst;
}

double lagrangian_deviation(const ChartPoint& at, const Partition& k) {
    check_point(at, k);
    double worst = 0.0;
    for (int i = 0; i < k.block_count(); ++i) {
        const Tangent xi = field_x(i, at, k);
        for (int j = i; j < k.block_count(); ++j) {
            const Tangent xj = field_x(j, at, k);
            worst = std::max(worst, std::abs(kahler_form(at, xi, xj)));
        }
    }
    return worst;
}

double frame_orthogonality(const ChartPoint& at, const Partition& k) {
    check_point(at, k);
    double worst = 0.0;
    for (int i = 0; i < k.block_count(); ++i) {
        const Tangent jxi = field_jx(i, at, k);
        for (int j = 0; j < k.block_count(); ++j) {
            const Tangent xj = field_x(j, at, k);
            worst = std::max(worst, std::abs(metric_g(at, jxi, xj)));
        }
    }
    return worst;
}

namespace {

void check_eps(double eps) {
    if (!(eps >= 1e-6 && eps <= 1e-2))
        throw ValidationError("bracket_fd: eps must lie in [1e-6, 1e-2]");
}

double flow_commutator(const Eigen::VectorXcd& z, const Partition& k, int i, int j,
                       Complex fi, Complex fj, double eps) {
    const Eigen::VectorXcd ab = apply_block_factor(apply_block_factor(z, k, j, fj), k, i, fi);
    const Eigen::VectorXcd ba = apply_block_factor(apply_block_factor(z, k, i, fi), k, j, fj);
    return (ab - ba).norm() / (eps * eps);
}

} // namespace

double bracket_fd(int i, int j, const ChartPoint& at, const Partition& k, double eps) {
    check_point(at, k);
    check_block(i, k);
    check_block(j, k);
    check_eps(eps);
    const Complex torus = std::polar(1.0, eps);
    const Complex radial{1.0 + eps, 0.0};
    const double psi = flow_commutator(at.z, k, i, j, torus, torus, eps);
    const double beta = flow_commutator(at.z, k, i, j, radial, radial, eps);
    return std::max(psi, beta);
}

double bracket_fd_mixed(int i, int j, const ChartPoint& at, const Partition& k, double eps) {
    check_point(at, k);
    check_block(i, k);
    check_block(j, k);
    check_eps(eps);
    const Complex torus = std::polar(1.0, eps);
    const Complex radial{1.0 + eps, 0.0};
    return flow_commutator(at.z, k, i, j, torus, radial, eps);
}

GroupElement GroupElement::torus(std::vector<Complex> coords, double tol) {
    for (const Complex& c : coords)
        if (std::abs(std::abs(c) - 1.0) > tol)
            throw ValidationError("torus element: coordinates must be unit modulus");
    return GroupElement(Kind::torus, std::move(coords));
}

GroupElement GroupElement::ak(const Partition& k, const std::vector<Complex>& block_scalars) {
    if (static_cast<int>(block_scalars.size()) != k.block_count())
        throw DimensionError("A_k element: one scalar per block required");
    std::vector<Complex> data(static_cast<std::size_t>(k.dimension()));
    for (int j = 0; j < k.block_count(); ++j) {
        const Complex aj = block_scalars[static_cast<std::size_t>(j)];
        if (aj == Complex{0.0, 0.0})
            throw ValidationError("A_k element: block scalars must be nonzero");
        for (int i = 0; i < k.part(j); ++i) data[static_cast<std::size_t>(k.offset(j) + i)] = aj;
    }
    return GroupElement(Kind::ak, std::move(data));
}

GroupElement GroupElement::bk(const Partition& k, std::vector<Complex> coords, double tol) {
    if (static_cast<int>(coords.size()) != k.dimension())
        throw DimensionError("B_k element: coordinate count != n");
    for (int j = 0; j < k.block_count(); ++j) {
        Complex prod{1.0, 0.0};
        for (int i = 0; i < k.part(j); ++i) {
            const Complex c = coords[static_cast<std::size_t>(k.offset(j) + i)];
            if (c == Complex{0.0, 0.0})
                throw ValidationError("B_k element: coordinates must be nonzero");
            prod *= c;
        }
        if (std::abs(prod - Complex{1.0, 0.0}) > tol)
            throw ValidationError("B_k element: block product must equal 1");
    }
    return GroupElement(Kind::bk, std::move(coords));
}

GroupElement GroupElement::identity(int n, Kind kind) {
    return GroupElement(kind, std::vector<Complex>(static_cast<std::size_t>(n), Complex{1.0, 0.0}));
}

Eigen::VectorXcd GroupElement::apply(const Eigen::VectorXcd& z) const {
    if (z.size() != size()) throw DimensionError("group action: dimension mismatch");
    Eigen::VectorXcd out(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i)
        out[i] = data_[static_cast<std::size_t>(i)] * z[i];
    return out;
}

ProjTuple GroupElement::apply(const ProjTuple& p, const Partition& k) const {
    if (size() != k.dimension())
        throw DimensionError("group action on tuple: dimension mismatch");
    ProjTuple out;
    out.blocks.reserve(p.blocks.size());
    for (int j = 0; j < k.block_count(); ++j) {
        Eigen::VectorXcd block = p.blocks[static_cast<std::size_t>(j)];
        for (int i = 0; i < k.part(j); ++i)
            block[i] *= data_[static_cast<std::size_t>(k.offset(j) + i)];
        out.blocks.push_back(canonical_rep(block));
    }
    return out;
}

double bk_equivariance(const GroupElement& b, const ChartPoint& at, const Partition& k) {
    check_point(at, k);
    const ProjTuple moved = pi_k(ChartPoint{b.apply(at.z), Ambient::projective_chart}, k);
    const ProjTuple acted = b.apply(pi_k(at, k), k);
    return proj_distance(moved, acted);
}

std::pair<GroupElement, GroupElement> ak_decompose(const std::vector<Complex>& c,
                                                   const Partition& k) {
    if (static_cast<int>(c.size()) != k.dimension())
        throw DimensionError("ak_decompose: coordinate count != n");
    std::vector<Complex> scalars;
    std::vector<Complex> b(c.size());
    scalars.reserve(static_cast<std::size_t>(k.block_count()));
    for (int j = 0; j < k.block_count(); ++j) {
        Complex prod{1.0, 0.0};
        for (int i = 0; i < k.part(j); ++i) {
            const Complex ci = c[static_cast<std::size_t>(k.offset(j) + i)];
            if (ci == Complex{0.0, 0.0})
                throw ValidationError("ak_decompose: entries must be nonzero");
            prod *= ci;
        }
        const Complex aj = std::pow(prod, 1.0 / static_cast<double>(k.part(j)));
        scalars.push_back(aj);
        for (int i = 0; i < k.part(j); ++i)
            b[static_cast<std::size_t>(k.offset(j) + i)] =
                c[static_cast<std::size_t>(k.offset(j) + i)] / aj;
    }
    return {GroupElement::ak(k, scalars), GroupElement::bk(k, std::move(b))};
}

double isometry_deviation(const GroupElement& t, const ChartPoint& at, const Tangent& v,
                          const Tangent& w) {
    if (t.kind() != GroupElement::Kind::torus)
        throw ValidationError("isometry_deviation: torus element required");
    const ChartPoint moved{t.apply(at.z), at.ambient};
    const double before = metric_g(at, v, w);
    const double after = metric_g(moved, t.apply(v), t.apply(w));
    return std::abs(after - before);
}

double fiber_tangency_deviation(const ChartPoint& at, const Partition& k, double eps) {
    check_point(at, k);
    check_eps(eps);
    const ProjTuple base = pi_k(at, k);
    double worst = 0.0;
    for (int j = 0; j < k.block_count(); ++j) {
        const Eigen::VectorXcd zt = apply_block_factor(at.z, k, j, std::polar(1.0, eps));
        const Eigen::VectorXcd zr = apply_block_factor(at.z, k, j, Complex{1.0 + eps, 0.0});
        const ProjTuple pt = pi_k(ChartPoint{zt, Ambient::projective_chart}, k);
        const ProjTuple pr = pi_k(ChartPoint{zr, Ambient::projective_chart}, k);
        worst = std::max(worst, proj_distance(pt, base) / eps);
        worst = std::max(worst, proj_distance(pr, base) / eps);
    }
    return worst;
}

std::vector<ChartPoint> sample_points_vk(const Partition& k, Ambient ambient, int count,
                                         std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x9e0));
    std::vector<ChartPoint> out;
    out.reserve(static_cast<std::size_t>(count));
    const int n = k.dimension();
    for (int c = 0; c < count; ++c) {
        Eigen::VectorXcd z(n);
        for (int j = 0; j < k.block_count(); ++j) {
            double bn = 0.0;
            do {
                bn = 0.0;
                for (int i = 0; i < k.part(j); ++i) {
                    z[k.offset(j) + i] = rng.gaussian();
                    bn += std::norm(z[k.offset(j) + i]);
                }
            } while (std::sqrt(bn) < 0.3);
        }
        const double target = ambient == Ambient::ball ? rng.uniform(0.2, 0.8)
                                                       : rng.uniform(0.5, 2.0);
        z *= target / z.norm();
        out.emplace_back(std::move(z), ambient);
    }
    return out;
}

GroupElement random_torus_element(int n, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x9e1));
    std::vector<Complex> t(static_cast<std::size_t>(n));
    for (auto& ti : t) ti = rng.phase();
    return GroupElement::torus(std::move(t));
}

GroupElement random_tk_element(const Partition& k, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x9e2));
    std::vector<Complex> t(static_cast<std::size_t>(k.dimension()));
    for (int j = 0; j < k.block_count(); ++j) {
        const Complex s = rng.phase();
        for (int i = 0; i < k.part(j); ++i) t[static_cast<std::size_t>(k.offset(j) + i)] = s;
    }
    return GroupElement::torus(std::move(t));
}

GroupElement random_ak_element(const Partition& k, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x9e3));
    std::vector<Complex> scalars(static_cast<std::size_t>(k.block_count()));
    for (auto& s : scalars) s = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.2));
    return GroupElement::ak(k, scalars);
}

GroupElement random_bk_element(const Partition& k, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x9e4));
    std::vector<Complex> b(static_cast<std::size_t>(k.dimension()));
    for (int j = 0; j < k.block_count(); ++j) {
        Complex prod{1.0, 0.0};
        for (int i = 0; i + 1 < k.part(j); ++i) {
            const Complex c = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 6.2));
            b[static_cast<std::size_t>(k.offset(j) + i)] = c;
            prod *= c;
        }
        b[static_cast<std::size_t>(k.offset(j) + k.part(j) - 1)] = Complex{1.0, 0.0} / prod;
    }
    return GroupElement::bk(k, std::move(b));
}

} // namespace bergtoep
