#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nlr {

using Rational = boost::multiprecision::cpp_rational;

/// Exact coefficients l_1..l_N of the non-linear realization series, defined by
///   n/(n+1)! = sum_{i=1}^{n} l_i / (n+1-i)!,   n = 1..N.
class CoeffTable {
public:
    CoeffTable() = default;
    explicit CoeffTable(std::vector<Rational> values) : values_(std::move(values)) {}

    std::size_t size() const { return values_.size(); }
    /// 1-based, l(1) == 1/2.
    const Rational& l(std::size_t n) const { return values_.at(n - 1); }
    const std::vector<Rational>& values() const { return values_; }

private:
    std::vector<Rational> values_;
};

/// Forward substitution through the triangular recursion. Throws DomainError for N < 1.
CoeffTable l_coeffs(int n_max);

/// Residual n/(n+1)! - sum_i l_i/(n+1-i)! for each n <= table size; all zero for a correct table.
std::vector<Rational> recursion_residuals(const CoeffTable& table);

/// Bernoulli numbers B_0..B_N with the B_1 = +1/2 convention, from
/// sum_{k=0}^{n} C(n+1,k) B_k = 0 (followed by the sign flip of B_1).
std::vector<Rational> bernoulli_plus(int n_max);

/// l_n as double, served from a table computed once (n <= kMaxSeriesOrder).
inline constexpr int kMaxSeriesOrder = 64;
double l_value(int n);

std::string to_string(const Rational& q);

} // namespace nlr
