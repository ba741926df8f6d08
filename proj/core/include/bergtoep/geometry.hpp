#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bergtoep/multiindex.hpp"

namespace bergtoep {

enum class Ambient { projective_chart, ball };

/// Point of either C^n (chart of P^n(C)) or the unit ball B^n.
struct ChartPoint {
    Eigen::VectorXcd z;
    Ambient ambient = Ambient::projective_chart;

    ChartPoint() = default;
    ChartPoint(Eigen::VectorXcd zz, Ambient amb);
};

using Tangent = Eigen::VectorXcd;

/// Kahler form of the ambient at the point, evaluated on real tangent
/// vectors written in complex coordinates. omega(v, v) = 0 exactly.
double kahler_form(const ChartPoint& at, const Tangent& v, const Tangent& w);

/// Riemannian metric g(v, w) = omega(v, Jw) with J = multiplication by i.
double metric_g(const ChartPoint& at, const Tangent& v, const Tangent& w);

/// Torus-orbit field (X_j)_z = (i delta_{j1} z_(1), ..., i delta_{jl} z_(l)).
Tangent field_x(int j, const ChartPoint& at, const Partition& k);
/// Velocity of the radial flow beta_j, equal to X_j with the i removed.
Tangent field_jx(int j, const ChartPoint& at, const Partition& k);

/// Tuple of projective points, one per block, held in the canonical
/// representative: unit norm with the first significant coordinate
/// real-positive, so two tuples are equal iff their blocks match entrywise.
struct ProjTuple {
    std::vector<Eigen::VectorXcd> blocks;
};

/// pi_k(z) = ([z_(1)], ..., [z_(l)]). Throws UndefinedCoordinatesError off V_k.
ProjTuple pi_k(const ChartPoint& at, const Partition& k);

/// Canonical representative of a nonzero homogeneous coordinate vector.
Eigen::VectorXcd canonical_rep(const Eigen::VectorXcd& v);

/// max over blocks of the entrywise distance of canonical representatives.
double proj_distance(const ProjTuple& a, const ProjTuple& b);

/// max_{i <= j} |omega(X_i, X_j)|; the torus orbits are Lagrangian, so 0.
double lagrangian_deviation(const ChartPoint& at, const Partition& k);

/// max_{i, j} |g(JX_i, X_j)|; orthogonality of the frame pair.
double frame_orthogonality(const ChartPoint& at, const Partition& k);

/// Finite-difference Lie bracket through the flows: compares the two
/// compositions of psi_i, psi_j (torus) and of beta_i, beta_j (radial) at
/// parameter eps and returns max ||difference|| / eps^2.
double bracket_fd(int i, int j, const ChartPoint& at, const Partition& k, double eps);
/// Same with the mixed pair psi_i versus beta_j.
double bracket_fd_mixed(int i, int j, const ChartPoint& at, const Partition& k, double eps);

/// Torus element, A_k element (block-constant nonzero scalars) or B_k element
/// (blockwise product 1) acting diagonally on coordinates.
class GroupElement {
public:
    enum class Kind { torus, ak, bk };

    static GroupElement torus(std::vector<Complex> coords, double tol = 1e-12);
    /// A_k element from one scalar per block.
    static GroupElement ak(const Partition& k, const std::vector<Complex>& block_scalars);
    static GroupElement bk(const Partition& k, std::vector<Complex> coords, double tol = 1e-12);
    static GroupElement identity(int n, Kind kind);

    Kind kind() const { return kind_; }
    const std::vector<Complex>& coords() const { return data_; }
    int size() const { return static_cast<int>(data_.size()); }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& z) const;
    ProjTuple apply(const ProjTuple& p, const Partition& k) const;

private:
    GroupElement(Kind kind, std::vector<Complex> data) : kind_(kind), data_(std::move(data)) {}
    Kind kind_;
    std::vector<Complex> data_;
};

/// Projective distance between pi_k(b.z) and b.pi_k(z); zero by equivariance.
double bk_equivariance(const GroupElement& b, const ChartPoint& at, const Partition& k);

/// Factor c = a b with a in A_k (principal k_j-th root of the block product)
/// and b in B_k.
std::pair<GroupElement, GroupElement> ak_decompose(const std::vector<Complex>& c,
                                                   const Partition& k);

/// |g_{t.z}(t.v, t.w) - g_z(v, w)| for the linear torus action.
double isometry_deviation(const GroupElement& t, const ChartPoint& at, const Tangent& v,
                          const Tangent& w);

/// max over the flows psi_j, beta_j of ||pi_k(flow(eps) z) - pi_k(z)|| / eps;
/// both flows run inside the fibers, so the derivative vanishes.
double fiber_tangency_deviation(const ChartPoint& at, const Partition& k, double eps);

/// Deterministic sample of V_k (intersected with the ball for that ambient);
/// block norms are kept away from zero.
std::vector<ChartPoint> sample_points_vk(const Partition& k, Ambient ambient, int count,
                                         std::uint64_t seed);

/// Deterministic random group elements.
GroupElement random_torus_element(int n, std::uint64_t seed);
GroupElement random_tk_element(const Partition& k, std::uint64_t seed);
GroupElement random_ak_element(const Partition& k, std::uint64_t seed);
GroupElement random_bk_element(const Partition& k, std::uint64_t seed);

} // namespace bergtoep
