#include "nlr/clifford.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "nlr/errors.hpp"

namespace nlr {

namespace {

constexpr int kMaxGenerators = 16;
constexpr double kSmallSigma = 1e-6;

void require_same_space(const Multivector& a, const Multivector& b)
{
    if (!(a.space() == b.space()))
        throw DimensionError("Clifford operands over Cl(" + std::to_string(a.space().m) + ") and Cl(" +
                             std::to_string(b.space().m) + ")");
}

// sinh(s)/s with the removable singularity filled in.
double sinhc(double s)
{
    if (std::abs(s) < kSmallSigma) {
        const double s2 = s * s;
        return 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
    }
    return std::sinh(s) / s;
}

} // namespace

CliffordSpace::CliffordSpace(int generators) : m(generators)
{
    if (m < 1 || m > kMaxGenerators)
        throw DomainError("Clifford algebra needs 1 <= m <= " + std::to_string(kMaxGenerators) + ", got " +
                          std::to_string(m));
}

int reordering_sign(BladeMask a, BladeMask b)
{
    // Each factor of a must pass every lower-indexed factor of b.
    a >>= 1;
    int swaps = 0;
    while (a != 0) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

Multivector::Multivector(CliffordSpace space) : space_(space), coeffs_(space.blade_count(), 0.0) {}

Multivector Multivector::scalar(CliffordSpace space, double value)
{
    Multivector r(space);
    r.coeffs_[0] = value;
    return r;
}

Multivector Multivector::generator(CliffordSpace space, int i)
{
    if (i < 1 || i > space.m)
        throw DomainError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(space.m));
    return blade(space, BladeMask{1} << (i - 1));
}

Multivector Multivector::blade(CliffordSpace space, BladeMask mask, double coeff)
{
    if (mask >= space.blade_count())
        throw DomainError("blade mask outside Cl(" + std::to_string(space.m) + ")");
    Multivector r(space);
    r.coeffs_[mask] = coeff;
    return r;
}

Eigen::VectorXd Multivector::vector_part() const
{
    Eigen::VectorXd v(space_.m);
    for (int k = 0; k < space_.m; ++k)
        v[k] = coeffs_[BladeMask{1} << k];
    return v;
}

Multivector& Multivector::operator+=(const Multivector& other)
{
    require_same_space(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& other)
{
    require_same_space(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Multivector& Multivector::operator*=(double s)
{
    for (double& c : coeffs_)
        c *= s;
    return *this;
}

double Multivector::max_abs() const
{
    double r = 0.0;
    for (double c : coeffs_)
        r = std::max(r, std::abs(c));
    return r;
}

Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
Multivector operator*(double s, Multivector a) { return a *= s; }

Multivector blade_product(const Multivector& a, const Multivector& b)
{
    require_same_space(a, b);
    Multivector r(a.space());
    const auto n = static_cast<BladeMask>(a.space().blade_count());
    for (BladeMask i = 0; i < n; ++i) {
        const double ai = a[i];
        if (ai == 0.0)
            continue;
        for (BladeMask j = 0; j < n; ++j) {
            const double bj = b[j];
            if (bj == 0.0)
                continue;
            r[i ^ j] += reordering_sign(i, j) * ai * bj;
        }
    }
    return r;
}

Multivector commutator(const Multivector& a, const Multivector& b)
{
    return blade_product(a, b) - blade_product(b, a);
}

std::vector<Eigen::MatrixXd> matrix_rep(const CliffordSpace& space)
{
    const Eigen::Index dim = Eigen::Index{1} << space.m;
    std::vector<Eigen::MatrixXd> gammas;
    gammas.reserve(space.m);
    for (int k = 0; k < space.m; ++k) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
        const BladeMask below = (BladeMask{1} << k) - 1;
        for (Eigen::Index col = 0; col < dim; ++col) {
            const auto state = static_cast<BladeMask>(col);
            const double sign = (std::popcount(state & below) & 1) ? -1.0 : 1.0;
            g(state ^ (BladeMask{1} << k), col) = sign;
        }
        gammas.push_back(std::move(g));
    }
    return gammas;
}

Eigen::MatrixXd represent(const Multivector& a, const std::vector<Eigen::MatrixXd>& gammas)
{
    if (static_cast<int>(gammas.size()) != a.space().m)
        throw DimensionError("representation has " + std::to_string(gammas.size()) + " generators, multivector " +
                             std::to_string(a.space().m));
    const Eigen::Index dim = gammas.front().rows();
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(dim, dim);
    const auto n = static_cast<BladeMask>(a.space().blade_count());
    for (BladeMask mask = 0; mask < n; ++mask) {
        if (a[mask] == 0.0)
            continue;
        Eigen::MatrixXd term = Eigen::MatrixXd::Identity(dim, dim);
        for (int k = 0; k < a.space().m; ++k)
            if (mask & (BladeMask{1} << k))
                term = term * gammas[k];
        r += a[mask] * term;
    }
    return r;
}

Eigen::MatrixXd parity_operator(const CliffordSpace& space)
{
    const Eigen::Index dim = Eigen::Index{1} << space.m;
    Eigen::VectorXd diag(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        diag[i] = (std::popcount(static_cast<BladeMask>(i)) & 1) ? -1.0 : 1.0;
    return diag.asDiagonal();
}

Multivector exp_f_closed(const CliffordSpace& space, const Eigen::VectorXd& sigma)
{
    if (sigma.size() != space.m)
        throw DimensionError("sigma has " + std::to_string(sigma.size()) + " components, expected " +
                             std::to_string(space.m));
    const double s = sigma.norm();
    Multivector r = Multivector::scalar(space, std::cosh(s));
    const double c = sinhc(s);
    for (int k = 0; k < space.m; ++k)
        r[BladeMask{1} << k] = c * sigma[k];
    return r;
}

nlohmann::json to_json(const Multivector& a)
{
    nlohmann::json blades = nlohmann::json::array();
    const auto n = static_cast<BladeMask>(a.space().blade_count());
    for (BladeMask mask = 0; mask < n; ++mask) {
        if (a[mask] == 0.0)
            continue;
        nlohmann::json indices = nlohmann::json::array();
        for (int k = 0; k < a.space().m; ++k)
            if (mask & (BladeMask{1} << k))
                indices.push_back(k + 1);
        blades.push_back({{"indices", indices}, {"coeff", a[mask]}});
    }
    return {{"blades", blades}};
}

Multivector multivector_from_json(const CliffordSpace& space, const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("blades") || !j["blades"].is_array())
        throw UsageError("multivector JSON needs a \"blades\" array");
    Multivector r(space);
    for (const auto& b : j["blades"]) {
        // Indices may come unsorted; reorder and contract through the product.
        Multivector term = Multivector::scalar(space, b.at("coeff").get<double>());
        for (const auto& idx : b.at("indices"))
            term = blade_product(term, Multivector::generator(space, idx.get<int>()));
        r += term;
    }
    return r;
}

} // namespace nlr
