#pragma once

#include <Eigen/Dense>

#include "nlr/lie.hpp"

namespace nlr {

/// Goldstone coordinates: F = sigma^al F_al.
struct CosetPoint {
    Eigen::VectorXd sigma;
};

/// Coefficients of F' in {F_be} and of I' in {I_a}.
struct InfinitesimalAction {
    Eigen::VectorXd dF;
    Eigen::VectorXd dI;
};

/// How the iterated-bracket series for the action of an f generator is read.
///
/// `literal`: I' = sum_k l_{2k-1} [..[F_al,F],..,F] and
///   F' = F_al + sum_k l_{2k} [..[F_al,F],..,F] - sum_n l_n [..[F,I'],I'],..,I'], taken literally.
/// `factorization`: same coefficients, but I' is solved order by order from
///   g exp(F) = exp(F') exp(I'), i.e. odd(Z) = I' + sum_{n even} l_n ad_F^n I' and
///   F' = even(Z) - sum_{n odd} l_n ad_F^n I', with Z = F_al + sum_n l_n [..[F_al,F],..,F].
/// Both agree through second degree in sigma; only the second matches the group law beyond it.
enum class SeriesReading { factorization, literal };

inline constexpr int kDefaultSeriesOrder = 11;

AlgebraElement coset_element(const ReductiveAlgebra& alg, const CosetPoint& p);

/// I' for the action of an f-element `actor` at base point F, truncated at K brackets.
AlgebraElement i_prime_series(const ReductiveAlgebra& alg, const AlgebraElement& actor, const AlgebraElement& base,
                              int order, SeriesReading reading = SeriesReading::factorization);

/// F' for the action of an f-element, truncated at K brackets.
AlgebraElement f_prime_series(const ReductiveAlgebra& alg, const AlgebraElement& actor, const AlgebraElement& base,
                              int order, SeriesReading reading = SeriesReading::factorization);

/// Both F' and I' of an f-element in one pass.
InfinitesimalAction f_action_series(const ReductiveAlgebra& alg, const AlgebraElement& actor,
                                    const AlgebraElement& base, int order,
                                    SeriesReading reading = SeriesReading::factorization);

/// Action of an h-element: F' = 2 sum_k l_{2k-1} [..[I_a,F],..,F], I' = I_a.
InfinitesimalAction h_action_series(const ReductiveAlgebra& alg, const AlgebraElement& actor,
                                    const AlgebraElement& base, int order);

/// Action of a general xi = xi_h + xi_f (sum of the two series).
InfinitesimalAction realize(const ReductiveAlgebra& alg, const AlgebraElement& xi, const CosetPoint& p,
                            int order = kDefaultSeriesOrder, SeriesReading reading = SeriesReading::factorization);

/// Standard closed-form vector fields for SO(1,m)/SO(m), evaluated as written.
struct ClosedFormField {
    /// u(k, a): coefficient of d/dsigma^k in the field of F_a.
    Eigen::MatrixXd u;
    /// Column a: h-coordinates of I' = (2 sigma^k / (sigma tanh sigma)) I_ka for F_a.
    Eigen::MatrixXd i_prime;
    /// Column per h-basis element I_ik: sigma^i d_k - sigma^k d_i.
    Eigen::MatrixXd rotation_fields;
    /// False at sigma = 0, where the closed-form I' has no limit (columns are then zero).
    bool i_prime_finite = true;
};

ClosedFormField so1m_closed_form_field(const So1m& so, const CosetPoint& p);

} // namespace nlr
