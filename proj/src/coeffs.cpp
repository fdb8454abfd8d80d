#include "nlr/coeffs.hpp"

#include <string>

#include "nlr/errors.hpp"

namespace nlr {

namespace {

std::vector<Rational> inverse_factorials(int n_max)
{
    std::vector<Rational> inv(static_cast<std::size_t>(n_max) + 1);
    boost::multiprecision::cpp_int f = 1;
    inv[0] = 1;
    for (int k = 1; k <= n_max; ++k) {
        f *= k;
        inv[k] = Rational(1, f);
    }
    return inv;
}

} // namespace

CoeffTable l_coeffs(int n_max)
{
    if (n_max < 1)
        throw DomainError("l_coeffs needs N >= 1, got " + std::to_string(n_max));
    const auto inv_fact = inverse_factorials(n_max + 1);
    std::vector<Rational> l;
    l.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        // l_n / 1! is the last term of the sum.
        Rational rhs = Rational(n) * inv_fact[n + 1];
        for (int i = 1; i < n; ++i)
            rhs -= l[i - 1] * inv_fact[n + 1 - i];
        l.push_back(rhs);
    }
    return CoeffTable(std::move(l));
}

std::vector<Rational> recursion_residuals(const CoeffTable& table)
{
    const int n_max = static_cast<int>(table.size());
    const auto inv_fact = inverse_factorials(n_max + 1);
    std::vector<Rational> res;
    res.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        Rational r = Rational(n) * inv_fact[n + 1];
        for (int i = 1; i <= n; ++i)
            r -= table.l(i) * inv_fact[n + 1 - i];
        res.push_back(r);
    }
    return res;
}

std::vector<Rational> bernoulli_plus(int n_max)
{
    if (n_max < 0)
        throw DomainError("bernoulli_plus needs N >= 0");
    std::vector<Rational> b(static_cast<std::size_t>(n_max) + 1);
    b[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        // (n+1) B_n = - sum_{k<n} C(n+1,k) B_k
        boost::multiprecision::cpp_int binom = 1; // C(n+1, 0)
        Rational acc = 0;
        for (int k = 0; k < n; ++k) {
            acc += Rational(binom) * b[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b[n] = -acc / (n + 1);
    }
    if (n_max >= 1)
        b[1] = -b[1];
    return b;
}

double l_value(int n)
{
    static const std::vector<double> table = [] {
        const CoeffTable t = l_coeffs(kMaxSeriesOrder);
        std::vector<double> v;
        v.reserve(t.size());
        for (const auto& q : t.values())
            v.push_back(q.convert_to<double>());
        return v;
    }();
    if (n < 1 || n > kMaxSeriesOrder)
        throw DomainError("series coefficient l_" + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxSeriesOrder));
    return table[n - 1];
}

std::string to_string(const Rational& q)
{
    const auto num = boost::multiprecision::numerator(q);
    const auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace nlr
