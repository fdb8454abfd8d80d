#pragma once

// Test-only reference computations. None of these call into the library code paths they check.

#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>
#include <boost/multiprecision/cpp_int.hpp>

namespace nlr::oracle {

using Rational = boost::multiprecision::cpp_rational;

/// Akiyama-Tanigawa algorithm; yields B_1 = +1/2 directly.
inline std::vector<Rational> bernoulli_akiyama_tanigawa(int n_max)
{
    std::vector<Rational> out;
    std::vector<Rational> a(static_cast<std::size_t>(n_max) + 1);
    for (int m = 0; m <= n_max; ++m) {
        a[m] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j)
            a[j - 1] = j * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    return out;
}

/// Eigen's Pade-based matrix exponential.
inline Eigen::MatrixXd expm(const Eigen::MatrixXd& a)
{
    return a.exp();
}

/// (m+1)x(m+1) boost generator E_0k + E_k0 (unit rapidity normalization), k 0-based.
inline Eigen::MatrixXd unit_boost_generator(int m, int k)
{
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m + 1, m + 1);
    x(0, k + 1) = 1.0;
    x(k + 1, 0) = 1.0;
    return x;
}

/// Corrected closed form of the F_a field on SO(1,m)/SO(m) (derived from the factorization law):
/// d sigma = 2s coth(2s) e_a + sigma_hat_a sigma_hat (1 - 2s coth(2s)).
inline Eigen::VectorXd boost_field(const Eigen::VectorXd& sigma, int a)
{
    const double s = sigma.norm();
    const double x = 2.0 * s;
    const double xcothx = x / std::tanh(x);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(sigma.size());
    out[a] = xcothx;
    out += sigma * sigma[a] / (s * s) * (1.0 - xcothx);
    return out;
}


/// gamma_k = sigma_z^(k-1) (x) sigma_x (x) 1 ... built with Kronecker products, 2^m dims.
inline std::vector<Eigen::MatrixXd> gammas(int m)
{
    Eigen::Matrix2d x, z, one;
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    one.setIdentity();
    std::vector<Eigen::MatrixXd> out;
    for (int k = 0; k < m; ++k) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Identity(1, 1);
        for (int j = 0; j < m; ++j) {
            const Eigen::Matrix2d& f = j < k ? z : (j == k ? x : one);
            Eigen::MatrixXd next = Eigen::kroneckerProduct(g, f).eval();
            g = next;
        }
        out.push_back(g);
    }
    return out;
}

/// Matrix of the blade with the given bitmask: ordered product of its gammas.
inline Eigen::MatrixXd blade_matrix(const std::vector<Eigen::MatrixXd>& g, unsigned mask)
{
    const auto n = g.front().rows();
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(n, n);
    for (std::size_t k = 0; k < g.size(); ++k)
        if (mask & (1u << k)) out = (out * g[k]).eval();
    return out;
}

/// (i, k), i < k, lexicographic.
inline std::vector<std::pair<int, int>> rotation_pairs(int m)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k) out.emplace_back(i, k);
    return out;
}

/// Defining representation of so(1,m) in flat order (rotations first, then boosts):
/// I_ik -> E_ki - E_ik on the spatial block, F_k -> 2 (E_0k + E_k0).
inline std::vector<Eigen::MatrixXd> defining_basis(int m)
{
    std::vector<Eigen::MatrixXd> out;
    for (auto [i, k] : rotation_pairs(m)) {
        Eigen::MatrixXd r = Eigen::MatrixXd::Zero(m + 1, m + 1);
        r(k + 1, i + 1) = 1.0;
        r(i + 1, k + 1) = -1.0;
        out.push_back(r);
    }
    for (int k = 0; k < m; ++k) out.push_back(2.0 * unit_boost_generator(m, k));
    return out;
}

inline Eigen::MatrixXd combine(const std::vector<Eigen::MatrixXd>& basis, const Eigen::VectorXd& coords)
{
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(basis.front().rows(), basis.front().cols());
    for (Eigen::Index i = 0; i < coords.size(); ++i) out += coords[i] * basis[i];
    return out;
}

inline Eigen::MatrixXd boost(const Eigen::VectorXd& sigma)
{
    const int m = static_cast<int>(sigma.size());
    Eigen::VectorXd flat = Eigen::VectorXd::Zero(m * (m - 1) / 2 + m);
    flat.tail(m) = sigma;
    return expm(combine(defining_basis(m), flat));
}

struct Split {
    Eigen::VectorXd sigma;
    Eigen::MatrixXd rho;
};

/// g = boost(sigma') diag(1, rho), from the first column of g.
inline Split split(const Eigen::MatrixXd& g)
{
    const Eigen::Index m = g.rows() - 1;
    const Eigen::VectorXd us = g.col(0).tail(m);
    const double n = us.norm();
    Split out;
    out.sigma = n == 0.0 ? Eigen::VectorXd::Zero(m) : Eigen::VectorXd(0.5 * std::asinh(n) / n * us);
    const Eigen::MatrixXd rest = boost(out.sigma).inverse() * g;
    out.rho = rest.bottomRightCorner(m, m);
    return out;
}

/// d/dt|0 of the split of exp(t X) exp(sigma.F): returns (d sigma', h-coords of d rho).
inline std::pair<Eigen::VectorXd, Eigen::VectorXd> realize(const Eigen::MatrixXd& x, const Eigen::VectorXd& sigma,
                                                           double h = 1e-3)
{
    const int m = static_cast<int>(sigma.size());
    const Eigen::MatrixXd base = boost(sigma);
    auto at = [&](double t) { return split(expm(t * x) * base); };
    const Split p2 = at(2 * h), p1 = at(h), m1 = at(-h), m2 = at(-2 * h);
    const Eigen::VectorXd ds = (-p2.sigma + 8 * p1.sigma - 8 * m1.sigma + m2.sigma) / (12 * h);
    const Eigen::MatrixXd dr = (-p2.rho + 8 * p1.rho - 8 * m1.rho + m2.rho) / (12 * h);
    const auto pairs = rotation_pairs(m);
    Eigen::VectorXd di(static_cast<Eigen::Index>(pairs.size()));
    for (std::size_t a = 0; a < pairs.size(); ++a) di[a] = dr(pairs[a].second, pairs[a].first);
    return {ds, di};
}

} // namespace nlr::oracle
