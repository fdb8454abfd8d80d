#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace nlr {

/// Real Clifford algebra Cl(m) with generators squaring to +1:
/// gamma_i gamma_k + gamma_k gamma_i = 2 delta_ik.
///
/// Blades are addressed by bitmask: bit (i-1) set means gamma_i is a factor.
/// Factors inside a blade are always in ascending order.
struct CliffordSpace {
    int m = 1;

    explicit CliffordSpace(int generators);

    std::size_t blade_count() const { return std::size_t{1} << m; }
    bool operator==(const CliffordSpace&) const = default;
};

using BladeMask = std::uint32_t;

/// Sign picked up when the concatenated factor lists of blades a and b are sorted
/// and repeated factors contracted (each contraction contributes +1).
int reordering_sign(BladeMask a, BladeMask b);

class Multivector {
public:
    explicit Multivector(CliffordSpace space);

    static Multivector scalar(CliffordSpace space, double value);
    /// gamma_i, 1-based like the usual notation.
    static Multivector generator(CliffordSpace space, int i);
    static Multivector blade(CliffordSpace space, BladeMask mask, double coeff = 1.0);

    const CliffordSpace& space() const { return space_; }
    double operator[](BladeMask mask) const { return coeffs_[mask]; }
    double& operator[](BladeMask mask) { return coeffs_[mask]; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    double scalar_part() const { return coeffs_[0]; }
    /// Grade-1 coefficients, index k-1 holding the gamma_k coefficient.
    Eigen::VectorXd vector_part() const;

    Multivector& operator+=(const Multivector& other);
    Multivector& operator-=(const Multivector& other);
    Multivector& operator*=(double s);

    double max_abs() const;
    bool operator==(const Multivector&) const = default;

private:
    CliffordSpace space_;
    std::vector<double> coeffs_;
};

Multivector operator+(Multivector a, const Multivector& b);
Multivector operator-(Multivector a, const Multivector& b);
Multivector operator*(double s, Multivector a);

/// Geometric product. Throws DimensionError when the spaces differ.
Multivector blade_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) { return blade_product(a, b); }

/// a*b - b*a
Multivector commutator(const Multivector& a, const Multivector& b);

/// Faithful real representation: one matrix per generator, entries in {0, +1, -1}.
///
/// Built as gamma_k = Z x ... x Z x X x 1 x ... x 1 (k-1 Z factors) on 2^m dimensions,
/// which keeps every blade image a distinct signed Pauli string.
std::vector<Eigen::MatrixXd> matrix_rep(const CliffordSpace& space);

/// Image of an arbitrary multivector under matrix_rep.
Eigen::MatrixXd represent(const Multivector& a, const std::vector<Eigen::MatrixXd>& gammas);

/// Operator anticommuting with every generator in matrix_rep (diagonal, +-1).
Eigen::MatrixXd parity_operator(const CliffordSpace& space);

/// exp(sigma^k gamma_k) = cosh|sigma| + (sinh|sigma| / |sigma|) sigma^i gamma_i.
Multivector exp_f_closed(const CliffordSpace& space, const Eigen::VectorXd& sigma);

nlohmann::json to_json(const Multivector& a);
Multivector multivector_from_json(const CliffordSpace& space, const nlohmann::json& j);

} // namespace nlr
