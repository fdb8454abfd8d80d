#include "nlr/induced.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "nlr/clifford.hpp"
#include "nlr/errors.hpp"
#include "nlr/linalg.hpp"

namespace nlr {

namespace {

constexpr double kSmall = 1e-6;

double sinhc(double s)
{
    if (std::abs(s) < kSmall)
        return 1.0 + s * s / 6.0 + s * s * s * s / 120.0;
    return std::sinh(s) / s;
}

// asinh(x)/x
double asinhc(double x)
{
    if (std::abs(x) < kSmall)
        return 1.0 - x * x / 6.0 + 3.0 * x * x * x * x / 40.0;
    return std::asinh(x) / x;
}

void require_m(const So1m& so, int m, const char* what)
{
    if (m != so.m)
        throw DimensionError(std::string(what) + " has m = " + std::to_string(m) + ", algebra has m = " +
                             std::to_string(so.m));
}

void require_point(const So1m& so, const MatterPoint& x, const HRepresentation& hrep)
{
    require_m(so, static_cast<int>(x.sigma.sigma.size()), "coset point");
    if (x.v.size() != hrep.d())
        throw DimensionError("matter vector has " + std::to_string(x.v.size()) + " components, representation d = " +
                             std::to_string(hrep.d()));
}

Eigen::MatrixXd json_matrix(const nlohmann::json& j)
{
    const auto rows = j.size();
    if (!j.is_array() || rows == 0)
        throw UsageError("matrix must be a non-empty array of rows");
    const auto cols = j.front().size();
    Eigen::MatrixXd out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (j[r].size() != cols)
            throw UsageError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            out(r, c) = j[r][c].get<double>();
    }
    return out;
}

nlohmann::json matrix_json(const Eigen::MatrixXd& a)
{
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            row.push_back(a(r, c));
        rows.push_back(row);
    }
    return rows;
}

Eigen::VectorXd json_vector(const nlohmann::json& j, const char* what)
{
    if (!j.is_array())
        throw UsageError(std::string(what) + " must be an array");
    Eigen::VectorXd v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    return v;
}

std::vector<double> vector_json(const Eigen::VectorXd& v)
{
    return {v.data(), v.data() + v.size()};
}

} // namespace

double metric_defect(const Eigen::MatrixXd& g)
{
    const Eigen::MatrixXd eta = minkowski_metric(static_cast<int>(g.rows()));
    return max_abs_diff(g.transpose() * eta * g, eta);
}

GroupElement GroupElement::checked(Eigen::MatrixXd g, double tol)
{
    if (g.rows() != g.cols() || g.rows() < 3)
        throw DimensionError("group element must be a square matrix of size m+1 >= 3");
    const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    if (metric_defect(g) > tol * scale * scale)
        throw DomainError("matrix does not preserve the Minkowski metric");
    if (g.determinant() < 0.0)
        throw DomainError("matrix has determinant -1");
    if (g(0, 0) < 1.0 - tol)
        throw NotOrthochronousError("matrix reverses time orientation (g00 < 1)");
    return GroupElement{std::move(g)};
}

GroupElement operator*(const GroupElement& a, const GroupElement& b)
{
    if (a.matrix.rows() != b.matrix.rows())
        throw DimensionError("multiplying group elements of different m");
    return GroupElement{a.matrix * b.matrix};
}

GroupElement group_exp(const So1m& so, const AlgebraElement& xi)
{
    so.algebra.require_conforms(xi);
    return GroupElement{expm(represent(xi, defining_rep_so1m(so.m)))};
}

GroupElement group_from_coords(const So1m& so, const Eigen::VectorXd& boost, const Eigen::VectorXd& rotation)
{
    require_m(so, static_cast<int>(boost.size()), "boost");
    if (rotation.size() != so.algebra.dim_h())
        throw DimensionError("rotation needs " + std::to_string(so.algebra.dim_h()) + " angles, got " +
                             std::to_string(rotation.size()));
    AlgebraElement rot = so.algebra.zero();
    rot.h = rotation;
    return GroupElement{boost_matrix(boost) * group_exp(so, rot).matrix};
}

Eigen::MatrixXd boost_matrix(const Eigen::VectorXd& sigma)
{
    const Eigen::Index m = sigma.size();
    const double s = sigma.norm();
    Eigen::MatrixXd b = Eigen::MatrixXd::Identity(m + 1, m + 1);
    b(0, 0) = std::cosh(2.0 * s);
    // sinh(2s) n = 2 sinhc(2s) sigma;  (cosh(2s) - 1) n n^T = 2 sinhc(s)^2 sigma sigma^T
    const Eigen::VectorXd col = 2.0 * sinhc(2.0 * s) * sigma;
    b.block(1, 0, m, 1) = col;
    b.block(0, 1, 1, m) = col.transpose();
    const double sc = sinhc(s);
    b.block(1, 1, m, m) += 2.0 * sc * sc * sigma * sigma.transpose();
    return b;
}

Eigen::MatrixXd embed_rotation(const Eigen::MatrixXd& rho)
{
    const Eigen::Index m = rho.rows();
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(m + 1, m + 1);
    g.block(1, 1, m, m) = rho;
    return g;
}

Eigen::VectorXd so_m_coordinates(const So1m& so, const Eigen::MatrixXd& skew)
{
    require_m(so, static_cast<int>(skew.rows()), "rotation generator");
    Eigen::VectorXd theta(so.algebra.dim_h());
    for (int a = 0; a < so.algebra.dim_h(); ++a) {
        const auto [i, k] = so.h_pairs[a];
        theta[a] = skew(k, i);
    }
    return theta;
}

HRepresentation::HRepresentation(const ReductiveAlgebra& alg, std::vector<Eigen::MatrixXd> generators, double tol)
    : generators_(std::move(generators))
{
    const int nh = alg.dim_h();
    if (static_cast<int>(generators_.size()) != nh)
        throw DimensionError("h-representation needs " + std::to_string(nh) + " generators, got " +
                             std::to_string(generators_.size()));
    const Eigen::Index d = generators_.front().rows();
    for (const auto& x : generators_)
        if (x.rows() != d || x.cols() != d)
            throw DimensionError("h-representation generators must all be d x d");
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b) {
            Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(d, d);
            for (int c = 0; c < nh; ++c)
                expected += alg.c_hh(a, b, c) * generators_[c];
            const Eigen::MatrixXd got = generators_[a] * generators_[b] - generators_[b] * generators_[a];
            if (max_abs_diff(got, expected) > tol)
                throw DomainError("generators do not represent h: commutator mismatch for basis pair (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
        }
}

Eigen::MatrixXd HRepresentation::represent(const Eigen::VectorXd& h_coords) const
{
    if (h_coords.size() != static_cast<Eigen::Index>(generators_.size()))
        throw DimensionError("h-coordinates do not match the representation");
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(d(), d());
    for (Eigen::Index a = 0; a < h_coords.size(); ++a)
        r += h_coords[a] * generators_[static_cast<std::size_t>(a)];
    return r;
}

Eigen::MatrixXd HRepresentation::exp(const Eigen::VectorXd& h_coords) const
{
    return expm(represent(h_coords));
}

HRepresentation HRepresentation::from_json(const ReductiveAlgebra& alg, const nlohmann::json& j)
{
    try {
        std::vector<Eigen::MatrixXd> gens;
        for (const auto& g : j.at("rep_gen"))
            gens.push_back(json_matrix(g));
        if (gens.empty())
            throw UsageError("rep_gen is empty");
        if (j.contains("d") && j["d"].get<int>() != gens.front().rows())
            throw UsageError("declared d does not match rep_gen matrices");
        return HRepresentation(alg, std::move(gens));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed representation JSON: ") + e.what());
    }
}

nlohmann::json HRepresentation::to_json() const
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : generators_)
        gens.push_back(matrix_json(g));
    return {{"d", d()}, {"rep_gen", gens}};
}

HRepresentation vector_hrep(const So1m& so)
{
    std::vector<Eigen::MatrixXd> gens;
    for (const auto& [i, k] : so.h_pairs) {
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(so.m, so.m);
        x(k, i) = 1.0;
        x(i, k) = -1.0;
        gens.push_back(std::move(x));
    }
    return HRepresentation(so.algebra, std::move(gens));
}

HRepresentation spinor_hrep(const So1m& so)
{
    const CliffordSpace space(so.m);
    const auto gammas = matrix_rep(space);
    const Eigen::Index full = Eigen::Index{1} << so.m;

    // Bivectors commute with the parity operator; keep its +1 eigenspace.
    const Eigen::MatrixXd parity = parity_operator(space);
    std::vector<Eigen::Index> even;
    for (Eigen::Index i = 0; i < full; ++i)
        if (parity(i, i) > 0.0)
            even.push_back(i);
    Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(full, static_cast<Eigen::Index>(even.size()));
    for (std::size_t c = 0; c < even.size(); ++c)
        basis(even[c], static_cast<Eigen::Index>(c)) = 1.0;

    if (so.m % 4 == 0) {
        // The pseudoscalar is even, central in the even subalgebra and squares to +1.
        Multivector omega = Multivector::scalar(space, 1.0);
        for (int k = 1; k <= so.m; ++k)
            omega = omega * Multivector::generator(space, k);
        const Eigen::MatrixXd w = basis.transpose() * represent(omega, gammas) * basis;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(0.5 * (w + w.transpose()));
        std::vector<Eigen::Index> plus;
        for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
            if (eig.eigenvalues()[i] > 0.0)
                plus.push_back(i);
        Eigen::MatrixXd v(w.rows(), static_cast<Eigen::Index>(plus.size()));
        for (std::size_t c = 0; c < plus.size(); ++c)
            v.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(plus[c]);
        basis = basis * v;
    }

    std::vector<Eigen::MatrixXd> gens;
    for (const auto& h : so.h_embedding)
        gens.push_back(basis.transpose() * represent(h, gammas) * basis);
    return HRepresentation(so.algebra, std::move(gens));
}

FactoredPair factor_boost_rotation(const GroupElement& g)
{
    const int m = g.m();
    const Eigen::VectorXd u = g.matrix.col(0);
    const double u0 = u[0];
    if (u0 < 1.0 - 1e-10)
        throw NotOrthochronousError("g e_0 has time component " + std::to_string(u0) + " < 1");
    const Eigen::VectorXd us = u.tail(m);

    // Rapidity eta = asinh|us| = 2|sigma'|.
    const Eigen::VectorXd sigma = 0.5 * asinhc(us.norm()) * us;

    // B^{-1} for B = [[u0, us^T], [us, 1 + us us^T / (1 + u0)]].
    Eigen::MatrixXd b_inv = Eigen::MatrixXd::Identity(m + 1, m + 1);
    b_inv(0, 0) = u0;
    b_inv.block(1, 0, m, 1) = -us;
    b_inv.block(0, 1, 1, m) = -us.transpose();
    b_inv.block(1, 1, m, m) += us * us.transpose() / (1.0 + u0);

    const Eigen::MatrixXd r = b_inv * g.matrix;
    return {sigma, r.block(1, 1, m, m)};
}

MatterPoint induced_action(const So1m& so, const GroupElement& g, const MatterPoint& x, const HRepresentation& hrep)
{
    require_m(so, g.m(), "group element");
    require_point(so, x, hrep);
    const GroupElement moved{g.matrix * boost_matrix(x.sigma.sigma)};
    const FactoredPair fp = factor_boost_rotation(moved);
    const Eigen::VectorXd theta = so_m_coordinates(so, log_rotation(fp.rho));
    return {CosetPoint{fp.f_prime}, hrep.exp(theta) * x.v};
}

MatterTangent infinitesimal_action(const So1m& so, const AlgebraElement& xi, const MatterPoint& x,
                                   const HRepresentation& hrep, int order, SeriesReading reading)
{
    require_point(so, x, hrep);
    const InfinitesimalAction act = realize(so.algebra, xi, x.sigma, order, reading);
    return {act.dF, hrep.represent(act.dI) * x.v};
}

namespace {

template <typename F>
Eigen::VectorXd five_point(F&& f, double h)
{
    const Eigen::VectorXd a = f(-2.0 * h);
    const Eigen::VectorXd b = f(-h);
    const Eigen::VectorXd c = f(h);
    const Eigen::VectorXd d = f(2.0 * h);
    return (a - 8.0 * b + 8.0 * c - d) / (12.0 * h);
}

} // namespace

MatterTangent oracle_infinitesimal_action(const So1m& so, const AlgebraElement& xi, const MatterPoint& x,
                                          const HRepresentation& hrep, double step)
{
    require_point(so, x, hrep);
    const std::vector<Eigen::MatrixXd> rep = defining_rep_so1m(so.m);
    const Eigen::MatrixXd gen = represent(xi, rep);
    const Eigen::Index m = so.m;
    auto flat = [&](double t) {
        const MatterPoint y = induced_action(so, GroupElement{expm(t * gen)}, x, hrep);
        Eigen::VectorXd out(m + y.v.size());
        out << y.sigma.sigma, y.v;
        return out;
    };
    const Eigen::VectorXd d = five_point(flat, step);
    return {d.head(m), d.tail(d.size() - m)};
}

InfinitesimalAction oracle_realize(const So1m& so, const AlgebraElement& xi, const CosetPoint& p, double step)
{
    require_m(so, static_cast<int>(p.sigma.size()), "coset point");
    const Eigen::MatrixXd gen = represent(xi, defining_rep_so1m(so.m));
    const Eigen::MatrixXd base = boost_matrix(p.sigma);
    const Eigen::Index m = so.m;
    const Eigen::Index nh = so.algebra.dim_h();
    auto flat = [&](double t) {
        const FactoredPair fp = factor_boost_rotation(GroupElement{expm(t * gen) * base});
        Eigen::VectorXd out(m + nh);
        out << fp.f_prime, so_m_coordinates(so, log_rotation(fp.rho));
        return out;
    };
    const Eigen::VectorXd d = five_point(flat, step);
    return {d.head(m), d.tail(nh)};
}

MatterPoint integrate_flow(const So1m& so, const AlgebraElement& xi, const MatterPoint& x,
                           const HRepresentation& hrep, double t, int steps, int order, SeriesReading reading)
{
    if (steps < 1)
        throw DomainError("integrate_flow needs at least one step");
    require_point(so, x, hrep);
    const double h = t / steps;
    auto field = [&](const MatterPoint& p) { return infinitesimal_action(so, xi, p, hrep, order, reading); };
    auto shifted = [](const MatterPoint& p, const MatterTangent& k, double a) {
        return MatterPoint{CosetPoint{p.sigma.sigma + a * k.d_sigma}, p.v + a * k.dv};
    };
    MatterPoint y = x;
    for (int i = 0; i < steps; ++i) {
        const MatterTangent k1 = field(y);
        const MatterTangent k2 = field(shifted(y, k1, 0.5 * h));
        const MatterTangent k3 = field(shifted(y, k2, 0.5 * h));
        const MatterTangent k4 = field(shifted(y, k3, h));
        y.sigma.sigma += h / 6.0 * (k1.d_sigma + 2.0 * k2.d_sigma + 2.0 * k3.d_sigma + k4.d_sigma);
        y.v += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    }
    return y;
}

CompositeSection gauge_transform_section(const So1m& so, const CompositeSection& s,
                                         const std::vector<AlgebraElement>& xi_field, double eps,
                                         const HRepresentation& hrep, int order)
{
    require_m(so, s.m, "section");
    if (s.d != hrep.d())
        throw DimensionError("section has d = " + std::to_string(s.d) + ", representation d = " +
                             std::to_string(hrep.d()));
    if (xi_field.size() != s.nodes.size())
        throw DimensionError("gauge parameter has " + std::to_string(xi_field.size()) + " nodes, section " +
                             std::to_string(s.nodes.size()));
    CompositeSection out{s.m, s.d, {}};
    out.nodes.reserve(s.nodes.size());
    for (std::size_t i = 0; i < s.nodes.size(); ++i) {
        const MatterPoint& x = s.nodes[i];
        const MatterTangent t = infinitesimal_action(so, xi_field[i], x, hrep, order);
        out.nodes.push_back({CosetPoint{x.sigma.sigma + eps * t.d_sigma}, x.v + eps * t.dv});
    }
    return out;
}

SplitSection split_section(const CompositeSection& s)
{
    SplitSection parts;
    parts.higgs.reserve(s.nodes.size());
    parts.matter.reserve(s.nodes.size());
    for (const auto& x : s.nodes) {
        parts.higgs.push_back(x.sigma);
        parts.matter.push_back(x.v);
    }
    return parts;
}

CompositeSection recombine_section(const SplitSection& parts)
{
    if (parts.higgs.size() != parts.matter.size())
        throw DimensionError("Higgs and matter fields live on grids of different size");
    if (parts.higgs.empty())
        throw DomainError("cannot recombine an empty section");
    CompositeSection s{static_cast<int>(parts.higgs.front().sigma.size()),
                       static_cast<int>(parts.matter.front().size()), {}};
    for (std::size_t i = 0; i < parts.higgs.size(); ++i) {
        if (parts.higgs[i].sigma.size() != s.m || parts.matter[i].size() != s.d)
            throw DimensionError("nodes of a section must share m and d");
        s.nodes.push_back({parts.higgs[i], parts.matter[i]});
    }
    return s;
}

nlohmann::json section_to_json(const CompositeSection& s)
{
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& x : s.nodes)
        nodes.push_back({{"sigma", vector_json(x.sigma.sigma)}, {"v", vector_json(x.v)}});
    return {{"m", s.m}, {"d", s.d}, {"nodes", nodes}};
}

CompositeSection section_from_json(const nlohmann::json& j)
{
    try {
        CompositeSection s{j.at("m").get<int>(), j.at("d").get<int>(), {}};
        for (const auto& node : j.at("nodes")) {
            MatterPoint x{CosetPoint{json_vector(node.at("sigma"), "sigma")}, json_vector(node.at("v"), "v")};
            if (x.sigma.sigma.size() != s.m || x.v.size() != s.d)
                throw UsageError("section node does not match declared m and d");
            s.nodes.push_back(std::move(x));
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed section JSON: ") + e.what());
    }
}

std::vector<AlgebraElement> gauge_field_from_json(const ReductiveAlgebra& alg, const nlohmann::json& j)
{
    try {
        std::vector<AlgebraElement> xs;
        for (const auto& node : j.at("nodes")) {
            const Eigen::VectorXd c = json_vector(node.at("xi"), "xi");
            if (c.size() != alg.dim())
                throw UsageError("xi must have dim_h + dim_f = " + std::to_string(alg.dim()) + " entries");
            xs.push_back(AlgebraElement::from_flat(c, alg.dim_h(), alg.dim_f()));
        }
        return xs;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed gauge parameter JSON: ") + e.what());
    }
}

nlohmann::json gauge_field_to_json(int m, int d, const std::vector<AlgebraElement>& xi_field)
{
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& xi : xi_field)
        nodes.push_back({{"xi", vector_json(xi.flat())}});
    return {{"m", m}, {"d", d}, {"nodes", nodes}};
}

} // namespace nlr
