#include "nlr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nlr/clifford.hpp"
#include "nlr/coeffs.hpp"
#include "nlr/errors.hpp"
#include "nlr/linalg.hpp"

namespace nlr {

bool Report::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.informational || c.pass; });
}

nlohmann::json Report::to_json() const
{
    nlohmann::json results = nlohmann::json::array();
    for (const auto& c : checks)
        results.push_back({{"name", c.name},
                           {"pass", c.pass},
                           {"measured", c.measured},
                           {"threshold", c.threshold},
                           {"informational", c.informational},
                           {"detail", c.detail}});
    return {{"suite", suite}, {"all_pass", all_pass()}, {"results", results}, {"tables", tables}};
}

std::string Report::to_csv() const
{
    std::ostringstream out;
    out.precision(6);
    out << std::scientific;
    out << "name,pass,measured,threshold,informational\n";
    for (const auto& c : checks)
        out << c.name << ',' << (c.pass ? "pass" : "FAIL") << ',' << c.measured << ',' << c.threshold << ','
            << (c.informational ? "yes" : "no") << '\n';
    return out.str();
}

double Sampler::uniform(double lo, double hi)
{
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int Sampler::integer(int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
}

Eigen::VectorXd Sampler::vector(Eigen::Index n, double lo, double hi)
{
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v[i] = uniform(lo, hi);
    return v;
}

Eigen::VectorXd Sampler::ball(Eigen::Index n, double max_norm)
{
    Eigen::VectorXd v;
    do {
        v = vector(n, -1.0, 1.0);
    } while (v.norm() < 1e-3);
    return uniform(0.0, max_norm) * v.normalized();
}

GroupElement random_group_element(const So1m& so, Sampler& rng, double max_boost, double max_angle)
{
    const Eigen::VectorXd boost = rng.ball(so.m, max_boost);
    const Eigen::VectorXd rot = rng.ball(so.algebra.dim_h(), max_angle);
    return group_from_coords(so, boost, rot);
}

double loglog_slope(std::span<const double> radii, std::span<const double> errors)
{
    const std::size_t n = radii.size();
    if (n < 2 || errors.size() != n)
        throw DomainError("slope fit needs at least two matching samples");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(radii[i]);
        my += std::log(errors[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(radii[i]) - mx;
        sxy += dx * (std::log(errors[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

ConvergenceResult series_convergence(const So1m& so, int order, SeriesReading reading, std::span<const double> radii,
                                     const Eigen::VectorXd& direction)
{
    ConvergenceResult res;
    res.radii.assign(radii.begin(), radii.end());
    const Eigen::VectorXd dir = direction.normalized();
    for (double r : radii) {
        const CosetPoint p{r * dir};
        double err = 0.0;
        for (int a = 0; a < so.m; ++a) {
            const AlgebraElement actor = so.algebra.f_basis(a);
            const InfinitesimalAction series = realize(so.algebra, actor, p, order, reading);
            const InfinitesimalAction oracle = oracle_realize(so, actor, p);
            err = std::max({err, (series.dF - oracle.dF).cwiseAbs().maxCoeff(),
                            (series.dI - oracle.dI).cwiseAbs().maxCoeff()});
        }
        res.errors.push_back(err);
    }
    res.slope = loglog_slope(res.radii, res.errors);
    return res;
}

std::vector<ClosedFormRow> closed_form_report(const So1m& so, const std::vector<CosetPoint>& points, int order)
{
    std::vector<ClosedFormRow> rows;
    for (const auto& p : points) {
        const ClosedFormField closed = so1m_closed_form_field(so, p);
        ClosedFormRow row{p.sigma};
        for (int a = 0; a < so.m; ++a) {
            const AlgebraElement actor = so.algebra.f_basis(a);
            const InfinitesimalAction oracle = oracle_realize(so, actor, p);
            const InfinitesimalAction series = realize(so.algebra, actor, p, order);
            row.u_vs_oracle = std::max(row.u_vs_oracle, (closed.u.col(a) - oracle.dF).cwiseAbs().maxCoeff());
            row.i_prime_vs_oracle =
                closed.i_prime_finite
                    ? std::max(row.i_prime_vs_oracle, (closed.i_prime.col(a) - oracle.dI).cwiseAbs().maxCoeff())
                    : std::numeric_limits<double>::infinity();
            row.u_series_vs_oracle = std::max(row.u_series_vs_oracle, (series.dF - oracle.dF).cwiseAbs().maxCoeff());
            row.i_prime_series_vs_oracle =
                std::max(row.i_prime_series_vs_oracle, (series.dI - oracle.dI).cwiseAbs().maxCoeff());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

void check(Report& r, std::string name, double measured, double threshold, std::string detail = {})
{
    r.checks.push_back({std::move(name), measured <= threshold, measured, threshold, false, std::move(detail)});
}

void check_at_least(Report& r, std::string name, double measured, double threshold, std::string detail = {})
{
    r.checks.push_back({std::move(name), measured >= threshold, measured, threshold, false, std::move(detail)});
}

void inform(Report& r, std::string name, double measured, std::string detail = {})
{
    r.checks.push_back({std::move(name), true, measured, 0.0, true, std::move(detail)});
}

Multivector random_multivector(const CliffordSpace& space, Sampler& rng, bool integer)
{
    Multivector a(space);
    for (BladeMask mask = 0; mask < space.blade_count(); ++mask)
        a[mask] = integer ? rng.integer(-5, 5) : rng.uniform(-1.0, 1.0);
    return a;
}

void suite_clifford(Report& r, Sampler& rng)
{
    double relations = 0.0, assoc = 0.0, hom_int = 0.0, hom_real = 0.0, exp_err = 0.0, hyper = 0.0;
    for (int m = 1; m <= 5; ++m) {
        const CliffordSpace space(m);
        for (int i = 1; i <= m; ++i)
            for (int k = 1; k <= m; ++k) {
                const Multivector gi = Multivector::generator(space, i);
                const Multivector gk = Multivector::generator(space, k);
                const Multivector s = gi * gk + gk * gi - Multivector::scalar(space, i == k ? 2.0 : 0.0);
                relations = std::max(relations, s.max_abs());
            }
        const auto gammas = matrix_rep(space);
        for (int t = 0; t < 40; ++t) {
            const Multivector a = random_multivector(space, rng, true);
            const Multivector b = random_multivector(space, rng, true);
            const Multivector c = random_multivector(space, rng, true);
            assoc = std::max(assoc, ((a * b) * c - a * (b * c)).max_abs());
            hom_int = std::max(hom_int, max_abs_diff(represent(a * b, gammas),
                                                     represent(a, gammas) * represent(b, gammas)));
        }
        for (int t = 0; t < 200; ++t) {
            const Multivector a = random_multivector(space, rng, false);
            const Multivector b = random_multivector(space, rng, false);
            hom_real = std::max(hom_real, max_abs_diff(represent(a * b, gammas),
                                                       represent(a, gammas) * represent(b, gammas)));
        }
        for (int t = 0; t < 20; ++t) {
            const Eigen::VectorXd sigma = rng.ball(m, 2.0);
            const Multivector e = exp_f_closed(space, sigma);
            Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(gammas.front().rows(), gammas.front().cols());
            for (int k = 0; k < m; ++k)
                gen += sigma[k] * gammas[k];
            exp_err = std::max(exp_err, max_abs_diff(represent(e, gammas), expm(gen)));
            hyper = std::max(hyper, std::abs(e.scalar_part() * e.scalar_part() - e.vector_part().squaredNorm() - 1.0));
        }
    }
    check(r, "clifford.generator_relations", relations, 0.0, "m = 1..5, exact");
    check(r, "clifford.associativity", assoc, 0.0, "integer coefficients, exact");
    check(r, "clifford.rep_homomorphism_integer", hom_int, 0.0, "integer coefficients, exact");
    check(r, "clifford.rep_homomorphism_real", hom_real, 1e-12, "1000 random pairs, m = 1..5");
    check(r, "clifford.exp_closed_vs_expm", exp_err, 1e-12, "|sigma| <= 2");
    check(r, "clifford.exp_hyperbolic_identity", hyper, 1e-12);
}

void suite_algebra(Report& r, Sampler& rng, double tol)
{
    double anti = 0.0, jac = 0.0, routes = 0.0, metric = 0.0, closure = 0.0, proj = 0.0, ff_in_h = 0.0;
    for (int m = 2; m <= 4; ++m) {
        const So1m so = so1m_algebra(m);
        anti = std::max(anti, so.algebra.antisymmetry_defect());
        jac = std::max(jac, so.algebra.jacobi_defect());
        const auto mats = defining_rep_so1m(m);
        const std::vector<Eigen::MatrixXd> hm(mats.begin(), mats.begin() + so.algebra.dim_h());
        const std::vector<Eigen::MatrixXd> fm(mats.begin() + so.algebra.dim_h(), mats.end());
        double defect = 0.0;
        const ReductiveAlgebra from_matrices = algebra_from_matrices(hm, fm, &defect);
        closure = std::max(closure, defect);
        routes = std::max(routes, max_constant_diff(so.algebra, from_matrices));
        const Eigen::MatrixXd eta = minkowski_metric(m + 1);
        for (const auto& x : mats)
            metric = std::max(metric, (x.transpose() * eta + eta * x).cwiseAbs().maxCoeff());
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                ff_in_h = std::max(ff_in_h, bracket(so.algebra.f_basis(a), so.algebra.f_basis(b), so.algebra)
                                                .f.cwiseAbs()
                                                .maxCoeff());
        for (int t = 0; t < 20; ++t) {
            const AlgebraElement x =
                AlgebraElement::from_flat(rng.vector(so.algebra.dim(), -1, 1), so.algebra.dim_h(), m);
            proj = std::max({proj, (project_h(x) + project_f(x) - x).max_abs(),
                             (project_h(project_h(x)) - project_h(x)).max_abs(), project_f(project_h(x)).max_abs()});
        }
    }
    check(r, "algebra.antisymmetry", anti, 0.0, "so(1,m), m = 2..4");
    check(r, "algebra.jacobi", jac, 1e-12);
    check(r, "algebra.ff_bracket_in_h", ff_in_h, 0.0);
    check(r, "algebra.clifford_vs_defining_rep", routes, 1e-12);
    check(r, "algebra.defining_rep_closure", closure, 1e-12);
    check(r, "algebra.defining_rep_preserves_metric", metric, 0.0);
    check(r, "algebra.projections", proj, 0.0);
    (void)tol;
}

void suite_coeffs(Report& r)
{
    constexpr int n_max = 20;
    const CoeffTable table = l_coeffs(n_max);
    const auto residuals = recursion_residuals(table);
    const auto nonzero = std::count_if(residuals.begin(), residuals.end(), [](const Rational& q) { return q != 0; });
    check(r, "coeffs.recursion_residual_nonzero_count", static_cast<double>(nonzero), 0.0, "n <= 20, exact");

    const auto bern = bernoulli_plus(n_max);
    int mismatches = 0;
    boost::multiprecision::cpp_int fact = 1;
    for (int n = 1; n <= n_max; ++n) {
        fact *= n;
        if (table.l(n) * Rational(fact) != bern[n])
            ++mismatches;
    }
    check(r, "coeffs.bernoulli_cross_check_mismatches", mismatches, 0.0, "l_n n! == B_n (B_1 = +1/2)");

    const bool leading = table.l(1) == Rational(1, 2) && table.l(2) == Rational(1, 12) && table.l(3) == 0 &&
                         table.l(4) == Rational(-1, 720);
    check(r, "coeffs.leading_values", leading ? 0.0 : 1.0, 0.0, "1/2, 1/12, 0, -1/720");
}

void suite_series(Report& r, Sampler& rng, double tol)
{
    const So1m so = so1m_algebra(3);
    const std::vector<double> radii{0.4, 0.2, 0.1, 0.05};
    const Eigen::VectorXd dir = rng.vector(3, -1.0, 1.0).normalized();

    nlohmann::json slopes = nlohmann::json::array();
    for (int order : {3, 5, 7}) {
        const auto fact = series_convergence(so, order, SeriesReading::factorization, radii, dir);
        check_at_least(r, "series.convergence_slope_K" + std::to_string(order), fact.slope, order + 0.5,
                       "factorization reading vs oracle");
        const auto literal = series_convergence(so, order, SeriesReading::literal, radii, dir);
        inform(r, "series.literal_reading_slope_K" + std::to_string(order), literal.slope,
               "literal reading of the series vs oracle");
        slopes.push_back({{"order", order},
                          {"radii", fact.radii},
                          {"factorization_errors", fact.errors},
                          {"factorization_slope", fact.slope},
                          {"literal_errors", literal.errors},
                          {"literal_slope", literal.slope}});
    }
    r.tables["convergence"] = slopes;

    double linear = 0.0, h_identity = 0.0, collinear = 0.0;
    for (int t = 0; t < 50; ++t) {
        const CosetPoint p{rng.ball(3, 1.0)};
        const AlgebraElement base = coset_element(so.algebra, p);
        for (int a = 0; a < so.algebra.dim_h(); ++a) {
            const AlgebraElement actor = so.algebra.h_basis(a);
            const InfinitesimalAction act = h_action_series(so.algebra, actor, base, 9);
            const auto [i, k] = so.h_pairs[a];
            Eigen::VectorXd expected = Eigen::VectorXd::Zero(3);
            expected[k] += p.sigma[i];
            expected[i] -= p.sigma[k];
            linear = std::max(linear, (act.dF - expected).cwiseAbs().maxCoeff());
            h_identity = std::max(h_identity, (act.dI - actor.h).cwiseAbs().maxCoeff());
        }
        AlgebraElement parallel = so.algebra.zero();
        parallel.f = p.sigma.normalized();
        const InfinitesimalAction col = f_action_series(so.algebra, parallel, base, kDefaultSeriesOrder);
        collinear = std::max({collinear, (col.dF - parallel.f).cwiseAbs().maxCoeff(), col.dI.cwiseAbs().maxCoeff()});
    }
    check(r, "series.stabilizer_linear_field_K9", linear, 1e-10, "|sigma| <= 1");
    check(r, "series.h_action_dI_identity", h_identity, 0.0, "bit-identical");
    check(r, "series.collinear_nilpotence", collinear, 1e-15);

    // [X_xi, X_eta] = -X_[xi,eta] for the fundamental fields of a left action.
    double hom = 0.0;
    const double h = 1e-4;
    for (int t = 0; t < 10; ++t) {
        const CosetPoint p{rng.ball(3, 0.3)};
        const AlgebraElement xi = AlgebraElement::from_flat(rng.vector(6, -1, 1), 3, 3);
        const AlgebraElement eta = AlgebraElement::from_flat(rng.vector(6, -1, 1), 3, 3);
        auto field = [&](const AlgebraElement& x, const Eigen::VectorXd& s) {
            return realize(so.algebra, x, CosetPoint{s}, 15).dF;
        };
        auto directional = [&](const AlgebraElement& x, const Eigen::VectorXd& dir_vec) {
            return ((field(x, p.sigma + h * dir_vec) - field(x, p.sigma - h * dir_vec)) / (2.0 * h)).eval();
        };
        const Eigen::VectorXd x_xi = field(xi, p.sigma);
        const Eigen::VectorXd x_eta = field(eta, p.sigma);
        const Eigen::VectorXd lie = directional(eta, x_xi) - directional(xi, x_eta);
        const Eigen::VectorXd realized = field(bracket(xi, eta, so.algebra), p.sigma);
        hom = std::max(hom, (lie + realized).cwiseAbs().maxCoeff());
    }
    check(r, "series.realization_homomorphism", hom, std::max(tol, 1e-5), "K = 15, |sigma| <= 0.3");

    std::vector<CosetPoint> points{CosetPoint{Eigen::Vector3d(0.3, 0.0, 0.0)}};
    for (int t = 0; t < 4; ++t)
        points.push_back(CosetPoint{rng.ball(3, 1.0)});
    const auto rows = closed_form_report(so, points);
    nlohmann::json table = nlohmann::json::array();
    double worst_u = 0.0, worst_i = 0.0;
    for (const auto& row : rows) {
        table.push_back({{"sigma", std::vector<double>(row.sigma.data(), row.sigma.data() + row.sigma.size())},
                         {"u_closed_form_vs_oracle", row.u_vs_oracle},
                         {"i_prime_closed_form_vs_oracle", row.i_prime_vs_oracle},
                         {"u_series_vs_oracle", row.u_series_vs_oracle},
                         {"i_prime_series_vs_oracle", row.i_prime_series_vs_oracle}});
        worst_u = std::max(worst_u, row.u_vs_oracle);
        worst_i = std::max(worst_i, row.i_prime_vs_oracle);
    }
    r.tables["closed_form_discrepancy"] = table;
    inform(r, "series.closed_form_u_deviation", worst_u, "SO(1,m) closed form vs oracle, 5 points");
    inform(r, "series.closed_form_i_prime_deviation", worst_i, "SO(1,m) closed form vs oracle, 5 points");

    // Rapidity additivity along one axis.
    const CosetPoint axis{Eigen::Vector3d(0.3, 0.0, 0.0)};
    const ClosedFormField pf = so1m_closed_form_field(so, axis);
    const InfinitesimalAction along = oracle_realize(so, so.algebra.f_basis(0), axis);
    check(r, "series.rapidity_additivity_oracle", std::abs(along.dF[0] - 1.0), 1e-9);
    inform(r, "series.rapidity_additivity_closed_form", std::abs(pf.u(0, 0) - 1.0),
           "closed form u^1_1 - 1 at sigma = (0.3, 0, 0)");
}

void suite_induced(Report& r, Sampler& rng, double tol)
{
    const So1m so = so1m_algebra(3);

    double recon = 0.0, ortho = 0.0, det = 0.0, metric = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const GroupElement g = random_group_element(so, rng, 0.5, 3.0) * random_group_element(so, rng, 0.5, 3.0);
        const FactoredPair fp = factor_boost_rotation(g);
        recon = std::max(recon, max_abs_diff(boost_matrix(fp.f_prime) * embed_rotation(fp.rho), g.matrix));
        ortho = std::max(ortho, max_abs_diff(fp.rho.transpose() * fp.rho, Eigen::Matrix3d::Identity()));
        det = std::max(det, std::abs(fp.rho.determinant() - 1.0));
        metric = std::max(metric, metric_defect(g.matrix));
    }
    check(r, "induced.factorization_reconstruction", recon, 1e-10, "1000 random g, m = 3");
    check(r, "induced.rho_orthogonal", ortho, 1e-10);
    check(r, "induced.rho_unit_determinant", det, 1e-10);
    check(r, "induced.metric_preserved", metric, 1e-10);

    for (const auto& [label, hrep] : {std::pair{"vector", vector_hrep(so)}, std::pair{"spinor", spinor_hrep(so)}}) {
        double comp = 0.0, ident = 0.0, fd = 0.0;
        for (int t = 0; t < 100; ++t) {
            const GroupElement g1 = random_group_element(so, rng, 0.5, 0.5);
            const GroupElement g2 = random_group_element(so, rng, 0.5, 0.5);
            const MatterPoint x{CosetPoint{rng.ball(3, 1.0)}, rng.vector(hrep.d(), -1.0, 1.0)};
            const MatterPoint two_step = induced_action(so, g2, induced_action(so, g1, x, hrep), hrep);
            const MatterPoint one_step = induced_action(so, g2 * g1, x, hrep);
            comp = std::max({comp, (two_step.sigma.sigma - one_step.sigma.sigma).cwiseAbs().maxCoeff(),
                             (two_step.v - one_step.v).cwiseAbs().maxCoeff()});
            const MatterPoint same = induced_action(so, GroupElement{Eigen::Matrix4d::Identity()}, x, hrep);
            ident = std::max({ident, (same.sigma.sigma - x.sigma.sigma).cwiseAbs().maxCoeff(),
                              (same.v - x.v).cwiseAbs().maxCoeff()});
        }
        for (int t = 0; t < 20; ++t) {
            const MatterPoint x{CosetPoint{rng.ball(3, 0.5)}, rng.vector(hrep.d(), -1.0, 1.0)};
            const AlgebraElement xi = AlgebraElement::from_flat(rng.vector(6, -1, 1), 3, 3);
            const MatterTangent series = infinitesimal_action(so, xi, x, hrep, 21);
            const MatterTangent oracle = oracle_infinitesimal_action(so, xi, x, hrep);
            const double err = std::max((series.d_sigma - oracle.d_sigma).cwiseAbs().maxCoeff(),
                                        (series.dv - oracle.dv).cwiseAbs().maxCoeff());
            fd = std::max(fd, err / (1.0 + x.sigma.sigma.norm()));
        }
        const std::string prefix = std::string("induced.") + label;
        check(r, prefix + ".composition_law", comp, tol, "100 random (g1, g2, sigma, v), |sigma| <= 1");
        check(r, prefix + ".identity_acts_trivially", ident, 1e-12);
        check(r, prefix + ".infinitesimal_vs_finite", fd, 1e-4, "scaled by 1 + |sigma|");
    }
}

void suite_gauge(Report& r, Sampler& rng, double tol)
{
    const So1m so = so1m_algebra(3);
    const HRepresentation hrep = vector_hrep(so);
    constexpr int n_nodes = 16;

    CompositeSection s{3, hrep.d(), {}};
    std::vector<AlgebraElement> zero_field, field;
    for (int i = 0; i < n_nodes; ++i) {
        s.nodes.push_back({CosetPoint{rng.ball(3, 0.5)}, rng.vector(3, -1.0, 1.0)});
        zero_field.push_back(so.algebra.zero());
        field.push_back(AlgebraElement::from_flat(rng.vector(6, -0.5, 0.5), 3, 3));
    }

    const CompositeSection unchanged = gauge_transform_section(so, s, zero_field, 0.1, hrep);
    double zero_diff = 0.0;
    for (int i = 0; i < n_nodes; ++i)
        zero_diff = std::max({zero_diff, (unchanged.nodes[i].sigma.sigma - s.nodes[i].sigma.sigma).cwiseAbs().maxCoeff(),
                              (unchanged.nodes[i].v - s.nodes[i].v).cwiseAbs().maxCoeff()});
    check(r, "gauge.zero_parameter_is_identity", zero_diff, 0.0);

    std::vector<int> perm(n_nodes);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    std::rotate(perm.begin(), perm.begin() + 5, perm.end());
    CompositeSection permuted{s.m, s.d, {}};
    std::vector<AlgebraElement> permuted_field;
    for (int i : perm) {
        permuted.nodes.push_back(s.nodes[i]);
        permuted_field.push_back(field[i]);
    }
    const CompositeSection a = gauge_transform_section(so, s, field, 0.05, hrep);
    const CompositeSection b = gauge_transform_section(so, permuted, permuted_field, 0.05, hrep);
    double locality = 0.0;
    for (int j = 0; j < n_nodes; ++j)
        locality = std::max({locality, (b.nodes[j].sigma.sigma - a.nodes[perm[j]].sigma.sigma).cwiseAbs().maxCoeff(),
                             (b.nodes[j].v - a.nodes[perm[j]].v).cwiseAbs().maxCoeff()});
    check(r, "gauge.locality_under_permutation", locality, 0.0);

    const CompositeSection round = recombine_section(split_section(s));
    double split_diff = 0.0;
    for (int i = 0; i < n_nodes; ++i)
        split_diff = std::max({split_diff, (round.nodes[i].sigma.sigma - s.nodes[i].sigma.sigma).cwiseAbs().maxCoeff(),
                               (round.nodes[i].v - s.nodes[i].v).cwiseAbs().maxCoeff()});
    check(r, "gauge.split_recombine_identity", split_diff, 0.0);

    // Euler flow with constant xi against the finite action of exp(t xi).
    const double t_final = 0.5;
    const AlgebraElement xi = AlgebraElement::from_flat(rng.vector(6, -1.0, 1.0), 3, 3);
    const std::vector<AlgebraElement> constant(n_nodes, xi);
    const GroupElement g = group_exp(so, t_final * xi);
    std::vector<double> errors;
    for (int steps : {8, 16, 32, 64}) {
        CompositeSection cur = s;
        for (int k = 0; k < steps; ++k)
            cur = gauge_transform_section(so, cur, constant, t_final / steps, hrep, 25);
        double err = 0.0;
        for (int i = 0; i < n_nodes; ++i) {
            const MatterPoint exact = induced_action(so, g, s.nodes[i], hrep);
            err = std::max({err, (cur.nodes[i].sigma.sigma - exact.sigma.sigma).cwiseAbs().maxCoeff(),
                            (cur.nodes[i].v - exact.v).cwiseAbs().maxCoeff()});
        }
        errors.push_back(err);
    }
    double worst_ratio_gap = 0.0;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i)
        worst_ratio_gap = std::max(worst_ratio_gap, std::abs(errors[i] / errors[i + 1] - 2.0));
    check(r, "gauge.euler_first_order_convergence", worst_ratio_gap, 0.3, "|err(N)/err(2N) - 2|, N = 8..64");
    r.tables["euler_errors"] = errors;
    (void)tol;
}

} // namespace

Report run_suite(const std::string& suite, double tol, std::uint64_t seed)
{
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UsageError("unknown suite '" + suite + "'");
    if (!(tol > 0.0))
        throw UsageError("tol must be positive");
    Report r{suite, {}, nlohmann::json::object()};
    Sampler rng(seed);
    const bool all = suite == "all";
    if (all || suite == "clifford")
        suite_clifford(r, rng);
    if (all || suite == "algebra")
        suite_algebra(r, rng, tol);
    if (all || suite == "coeffs")
        suite_coeffs(r);
    if (all || suite == "series")
        suite_series(r, rng, tol);
    if (all || suite == "induced")
        suite_induced(r, rng, tol);
    if (all || suite == "gauge")
        suite_gauge(r, rng, tol);
    return r;
}

} // namespace nlr
