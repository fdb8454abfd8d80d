#pragma once

#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "nlr/lie.hpp"
#include "nlr/series.hpp"

namespace nlr {

/// Element of SO(1,m) in the (m+1)-dimensional defining representation.
struct GroupElement {
    Eigen::MatrixXd matrix;

    int m() const { return static_cast<int>(matrix.rows()) - 1; }

    /// Validates g^T eta g = eta, det g = +1 and g00 >= 1. The metric tolerance is scaled by
    /// max(1, max|g_ij|^2) since boosted entries grow like cosh of the rapidity.
    static GroupElement checked(Eigen::MatrixXd g, double tol = 1e-10);
};

/// max |g^T eta g - eta|
double metric_defect(const Eigen::MatrixXd& g);

GroupElement operator*(const GroupElement& a, const GroupElement& b);

/// exp of xi in the defining representation.
GroupElement group_exp(const So1m& so, const AlgebraElement& xi);

/// exp(boost^k F_k) exp(theta^a I_a)
GroupElement group_from_coords(const So1m& so, const Eigen::VectorXd& boost, const Eigen::VectorXd& rotation);

/// exp(sigma^k F_k) in closed form: a pure boost of rapidity 2|sigma| along sigma.
Eigen::MatrixXd boost_matrix(const Eigen::VectorXd& sigma);

/// diag(1, rho)
Eigen::MatrixXd embed_rotation(const Eigen::MatrixXd& rho);

/// h-coordinates of a skew-symmetric m x m matrix in the basis I_ik -> E_ki - E_ik.
Eigen::VectorXd so_m_coordinates(const So1m& so, const Eigen::MatrixXd& skew);

/// Representation of h on V = R^d, one generator per h-basis element.
class HRepresentation {
public:
    /// Throws DomainError unless commutators of the generators reproduce c_hh within tol.
    HRepresentation(const ReductiveAlgebra& alg, std::vector<Eigen::MatrixXd> generators, double tol = 1e-10);

    int d() const { return static_cast<int>(generators_.front().rows()); }
    const std::vector<Eigen::MatrixXd>& generators() const { return generators_; }

    Eigen::MatrixXd represent(const Eigen::VectorXd& h_coords) const;
    Eigen::MatrixXd exp(const Eigen::VectorXd& h_coords) const;

    static HRepresentation from_json(const ReductiveAlgebra& alg, const nlohmann::json& j);
    nlohmann::json to_json() const;

private:
    std::vector<Eigen::MatrixXd> generators_;
};

/// Vector representation of SO(m): I_ik -> E_ki - E_ik, d = m.
HRepresentation vector_hrep(const So1m& so);

/// Spinor representation I_ik -> (1/4)[G_k, G_i] from matrix_rep, restricted to an
/// irreducible real block: d = 2^ceil(m/2) for m = 2, 3, 4 (the even-parity block, halved
/// again by the pseudoscalar when m = 4). Larger m keep the even-parity block, d = 2^(m-1).
HRepresentation spinor_hrep(const So1m& so);

/// g = exp(F') embed(rho)
struct FactoredPair {
    Eigen::VectorXd f_prime;
    Eigen::MatrixXd rho;
};

/// Unique boost-rotation split of a proper orthochronous g.
/// Throws NotOrthochronousError when g00 < 1 - 1e-10.
FactoredPair factor_boost_rotation(const GroupElement& g);

/// A point of the fibre: Goldstone coordinates with the matter value over them.
struct MatterPoint {
    CosetPoint sigma;
    Eigen::VectorXd v;
};

struct MatterTangent {
    Eigen::VectorXd d_sigma;
    Eigen::VectorXd dv;
};

/// (sigma, v) -> (sigma', rho v): factor g exp(sigma.F) = exp(sigma'.F) rho and lift rho
/// into V through the principal logarithm. Throws BranchError when rho has angle pi.
MatterPoint induced_action(const So1m& so, const GroupElement& g, const MatterPoint& x, const HRepresentation& hrep);

/// Series form of the infinitesimal action: d_sigma = F' and dv = hrep(I') v.
MatterTangent infinitesimal_action(const So1m& so, const AlgebraElement& xi, const MatterPoint& x,
                                   const HRepresentation& hrep, int order = kDefaultSeriesOrder,
                                   SeriesReading reading = SeriesReading::factorization);

/// d/dt at t = 0 of induced_action(exp(t xi)), by a five-point central difference.
MatterTangent oracle_infinitesimal_action(const So1m& so, const AlgebraElement& xi, const MatterPoint& x,
                                          const HRepresentation& hrep, double step = 1e-3);

/// (F', I') read off the factorization of exp(t xi) exp(F) by the same five-point stencil.
InfinitesimalAction oracle_realize(const So1m& so, const AlgebraElement& xi, const CosetPoint& p,
                                   double step = 1e-3);

/// Flow of the series vector field for time t, classical RK4 with the given step count.
MatterPoint integrate_flow(const So1m& so, const AlgebraElement& xi, const MatterPoint& x,
                           const HRepresentation& hrep, double t, int steps, int order = kDefaultSeriesOrder,
                           SeriesReading reading = SeriesReading::factorization);

/// Matter field paired with its Higgs field on a 1-D periodic lattice.
struct CompositeSection {
    int m = 0;
    int d = 0;
    std::vector<MatterPoint> nodes;
};

/// One Euler step of the vertical gauge transformation generated by xi_field (one element per node).
CompositeSection gauge_transform_section(const So1m& so, const CompositeSection& s,
                                         const std::vector<AlgebraElement>& xi_field, double eps,
                                         const HRepresentation& hrep, int order = kDefaultSeriesOrder);

struct SplitSection {
    std::vector<CosetPoint> higgs;
    std::vector<Eigen::VectorXd> matter;
};

SplitSection split_section(const CompositeSection& s);
CompositeSection recombine_section(const SplitSection& parts);

nlohmann::json section_to_json(const CompositeSection& s);
CompositeSection section_from_json(const nlohmann::json& j);
/// Gauge parameter file: {"m", "d", "nodes": [{"xi": [h coords..., f coords...]}]}.
std::vector<AlgebraElement> gauge_field_from_json(const ReductiveAlgebra& alg, const nlohmann::json& j);
nlohmann::json gauge_field_to_json(int m, int d, const std::vector<AlgebraElement>& xi_field);

} // namespace nlr
