#include "nlr/series.hpp"

#include <cmath>
#include <string>

#include "nlr/coeffs.hpp"
#include "nlr/errors.hpp"

namespace nlr {

namespace {

constexpr double kSmallSigma = 1e-6;

void require_order(int order)
{
    if (order < 1 || order > kMaxSeriesOrder)
        throw DomainError("series order must lie in 1.." + std::to_string(kMaxSeriesOrder) + ", got " +
                          std::to_string(order));
}

void require_in_f(const AlgebraElement& x, const char* what)
{
    if (!x.in_f())
        throw DomainError(std::string(what) + " must lie in f (nonzero h part)");
}

// x -> [..[x,F],..,F] with n brackets, returned for n = 0..order.
std::vector<AlgebraElement> right_nested(const ReductiveAlgebra& alg, const AlgebraElement& x,
                                         const AlgebraElement& base, int order)
{
    std::vector<AlgebraElement> out;
    out.reserve(order + 1);
    out.push_back(x);
    for (int n = 1; n <= order; ++n)
        out.push_back(bracket(out.back(), base, alg));
    return out;
}

// ad_F^n x = [F,[F,..,x]]
AlgebraElement ad_power(const ReductiveAlgebra& alg, const AlgebraElement& base, AlgebraElement x, int n)
{
    for (int i = 0; i < n; ++i)
        x = bracket(base, x, alg);
    return x;
}

InfinitesimalAction literal_f_action(const ReductiveAlgebra& alg, const AlgebraElement& actor,
                                     const AlgebraElement& base, int order)
{
    const auto nested = right_nested(alg, actor, base, order);

    AlgebraElement i_prime = alg.zero();
    for (int n = 1; n <= order; n += 2)
        i_prime += l_value(n) * nested[n];

    AlgebraElement f_prime = actor;
    for (int n = 2; n <= order; n += 2)
        f_prime += l_value(n) * nested[n];

    AlgebraElement term = bracket(base, i_prime, alg);
    for (int n = 1; n <= order; ++n) {
        f_prime -= l_value(n) * term;
        term = bracket(term, i_prime, alg);
    }
    return {f_prime.f, i_prime.h};
}

InfinitesimalAction factorization_f_action(const ReductiveAlgebra& alg, const AlgebraElement& actor,
                                           const AlgebraElement& base, int order)
{
    const auto nested = right_nested(alg, actor, base, order);

    // Homogeneous pieces by degree in sigma.
    std::vector<AlgebraElement> d_i(order + 1, alg.zero());
    AlgebraElement f_prime = actor;
    AlgebraElement i_prime = alg.zero();
    for (int n = 1; n <= order; ++n) {
        AlgebraElement piece = l_value(n) * nested[n];
        if (n % 2 == 1) {
            for (int e = 2; e < n; e += 2)
                piece -= l_value(e) * ad_power(alg, base, d_i[n - e], e);
            d_i[n] = piece;
            i_prime += piece;
        } else {
            for (int o = 1; o < n; o += 2)
                piece -= l_value(o) * ad_power(alg, base, d_i[n - o], o);
            f_prime += piece;
        }
    }
    return {f_prime.f, i_prime.h};
}

} // namespace

AlgebraElement coset_element(const ReductiveAlgebra& alg, const CosetPoint& p)
{
    if (p.sigma.size() != alg.dim_f())
        throw DimensionError("coset point has " + std::to_string(p.sigma.size()) + " coordinates, dim f = " +
                             std::to_string(alg.dim_f()));
    AlgebraElement x = alg.zero();
    x.f = p.sigma;
    return x;
}

InfinitesimalAction f_action_series(const ReductiveAlgebra& alg, const AlgebraElement& actor,
                                    const AlgebraElement& base, int order, SeriesReading reading)
{
    alg.require_conforms(actor);
    alg.require_conforms(base);
    require_in_f(actor, "actor");
    require_in_f(base, "base point");
    require_order(order);
    return reading == SeriesReading::literal ? literal_f_action(alg, actor, base, order)
                                             : factorization_f_action(alg, actor, base, order);
}

AlgebraElement i_prime_series(const ReductiveAlgebra& alg, const AlgebraElement& actor, const AlgebraElement& base,
                              int order, SeriesReading reading)
{
    const auto act = f_action_series(alg, actor, base, order, reading);
    return {act.dI, Eigen::VectorXd::Zero(alg.dim_f())};
}

AlgebraElement f_prime_series(const ReductiveAlgebra& alg, const AlgebraElement& actor, const AlgebraElement& base,
                              int order, SeriesReading reading)
{
    const auto act = f_action_series(alg, actor, base, order, reading);
    return {Eigen::VectorXd::Zero(alg.dim_h()), act.dF};
}

InfinitesimalAction h_action_series(const ReductiveAlgebra& alg, const AlgebraElement& actor,
                                    const AlgebraElement& base, int order)
{
    alg.require_conforms(actor);
    alg.require_conforms(base);
    if (!actor.in_h())
        throw DomainError("actor must lie in h (nonzero f part)");
    require_in_f(base, "base point");
    require_order(order);

    const auto nested = right_nested(alg, actor, base, order);
    AlgebraElement f_prime = alg.zero();
    for (int n = 1; n <= order; n += 2)
        f_prime += 2.0 * l_value(n) * nested[n];
    return {f_prime.f, actor.h};
}

InfinitesimalAction realize(const ReductiveAlgebra& alg, const AlgebraElement& xi, const CosetPoint& p, int order,
                            SeriesReading reading)
{
    alg.require_conforms(xi);
    const AlgebraElement base = coset_element(alg, p);
    const auto from_f = f_action_series(alg, project_f(xi), base, order, reading);
    const auto from_h = h_action_series(alg, project_h(xi), base, order);
    return {from_f.dF + from_h.dF, from_f.dI + from_h.dI};
}

ClosedFormField so1m_closed_form_field(const So1m& so, const CosetPoint& p)
{
    const int m = so.m;
    if (p.sigma.size() != m)
        throw DimensionError("coset point has " + std::to_string(p.sigma.size()) + " coordinates, m = " +
                             std::to_string(m));
    const Eigen::VectorXd& sig = p.sigma;
    const double s = sig.norm();
    const int nh = so.algebra.dim_h();

    ClosedFormField out{Eigen::MatrixXd::Zero(m, m), Eigen::MatrixXd::Zero(nh, m), Eigen::MatrixXd::Zero(m, nh), true};

    // 2 sigma cosh(2 sigma) / sinh(2 sigma) = x coth x at x = 2 sigma
    double diag_coeff;
    if (s < kSmallSigma) {
        const double x2 = 4.0 * s * s;
        diag_coeff = 1.0 + x2 / 3.0 - x2 * x2 / 45.0;
    } else {
        diag_coeff = 2.0 * s * std::cosh(2.0 * s) / std::sinh(2.0 * s);
    }
    // 1 - 2 sigma cosh(2 sigma) / sinh(sigma); tends to -1 but multiplies a direction-dependent projector.
    const double sinhc = s < kSmallSigma ? 1.0 + s * s / 6.0 + s * s * s * s / 120.0 : std::sinh(s) / s;
    const double radial_coeff = 1.0 - 2.0 * std::cosh(2.0 * s) / sinhc;

    for (int a = 0; a < m; ++a) {
        for (int k = 0; k < m; ++k) {
            double v = (k == a) ? diag_coeff : 0.0;
            if (s > 0.0)
                v += sig[k] * sig[a] / (s * s) * radial_coeff;
            out.u(k, a) = v;
        }
    }

    if (s > 0.0) {
        const double i_coeff = 2.0 / (s * std::tanh(s));
        for (int a = 0; a < m; ++a)
            for (int k = 0; k < m; ++k) {
                if (k == a)
                    continue;
                // I_ka = -I_ak
                const double c = i_coeff * sig[k];
                if (k < a)
                    out.i_prime(so.h_index(k, a), a) += c;
                else
                    out.i_prime(so.h_index(a, k), a) -= c;
            }
    } else {
        out.i_prime_finite = false;
    }

    for (int idx = 0; idx < nh; ++idx) {
        const auto [i, k] = so.h_pairs[idx];
        out.rotation_fields(k, idx) += sig[i];
        out.rotation_fields(i, idx) -= sig[k];
    }
    return out;
}

} // namespace nlr
