#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "nlr/clifford.hpp"

namespace nlr {

/// Element of g = h + f, stored as its two coordinate blocks.
struct AlgebraElement {
    Eigen::VectorXd h;
    Eigen::VectorXd f;

    static AlgebraElement zero(int dim_h, int dim_f);
    /// Split a flat coordinate vector, h coordinates first.
    static AlgebraElement from_flat(const Eigen::VectorXd& coords, int dim_h, int dim_f);
    Eigen::VectorXd flat() const;

    bool in_h() const { return f.isZero(0.0); }
    bool in_f() const { return h.isZero(0.0); }
    double max_abs() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(double s);
};

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
AlgebraElement operator*(double s, AlgebraElement a);

/// Reductive Lie algebra g = h + f given by structure constants
///   [I_a, I_b] = c^d_ab I_d,  [F_al, F_be] = c^d_albe I_d,  [F_al, I_b] = c^be_alb F_be.
/// Closure [f,f] in h and [f,h] in f holds by construction of the tables; antisymmetry and
/// the Jacobi identity are checked when the algebra is built.
class ReductiveAlgebra {
public:
    /// Tables are flattened row-major: c_hh[(a*dim_h + b)*dim_h + d],
    /// c_ff[(al*dim_f + be)*dim_h + d], c_fh[(al*dim_h + b)*dim_f + be].
    ReductiveAlgebra(int dim_h, int dim_f, std::vector<double> c_hh, std::vector<double> c_ff,
                     std::vector<double> c_fh, double tol = 1e-12);

    int dim_h() const { return dim_h_; }
    int dim_f() const { return dim_f_; }
    int dim() const { return dim_h_ + dim_f_; }

    double c_hh(int a, int b, int d) const { return c_hh_[(a * dim_h_ + b) * dim_h_ + d]; }
    double c_ff(int al, int be, int d) const { return c_ff_[(al * dim_f_ + be) * dim_h_ + d]; }
    double c_fh(int al, int b, int be) const { return c_fh_[(al * dim_h_ + b) * dim_f_ + be]; }

    AlgebraElement zero() const { return AlgebraElement::zero(dim_h_, dim_f_); }
    AlgebraElement h_basis(int a) const;
    AlgebraElement f_basis(int al) const;
    /// Basis element number i in the flat ordering (h first).
    AlgebraElement basis(int i) const;

    /// Largest |c(x,y) + c(y,x)| over both antisymmetric tables.
    double antisymmetry_defect() const;
    /// Largest Jacobi sum component over all basis triples.
    double jacobi_defect() const;

    nlohmann::json to_json() const;
    static ReductiveAlgebra from_json(const nlohmann::json& j);

    void require_conforms(const AlgebraElement& x) const;

private:
    int dim_h_;
    int dim_f_;
    std::vector<double> c_hh_;
    std::vector<double> c_ff_;
    std::vector<double> c_fh_;
};

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const ReductiveAlgebra& alg);

AlgebraElement project_h(const AlgebraElement& x);
AlgebraElement project_f(const AlgebraElement& x);

/// Per-node h-block of a g-valued array (e.g. connection coefficients on a grid).
std::vector<AlgebraElement> project_h(const std::vector<AlgebraElement>& xs);

/// so(1,m) = so(m) + f realized inside Cl(m):
///   F_k = I_0k = gamma_k,   I_ik = (1/4)[gamma_k, gamma_i],  i < k.
struct So1m {
    int m;
    ReductiveAlgebra algebra;
    /// (i, k) with i < k, 0-based, in lexicographic order; position = h-basis index.
    std::vector<std::pair<int, int>> h_pairs;
    std::vector<Multivector> h_embedding;
    std::vector<Multivector> f_embedding;

    int h_index(int i, int k) const;
    /// Image of an element in Cl(m).
    Multivector embed(const AlgebraElement& x) const;
};

/// Builds so(1,m) by evaluating Clifford commutators of the embedded generators and
/// expanding the results back in the embedded basis. Throws DomainError for m < 2.
So1m so1m_algebra(int m);

/// (m+1)x(m+1) matrices (h basis first, then f) compatible with the Clifford structure
/// constants: I_ik -> E_ki - E_ik (spatial block), F_k -> 2 (E_0k + E_k0).
std::vector<Eigen::MatrixXd> defining_rep_so1m(int m);

/// Sum of x-coordinates times basis matrices (flat order, h first).
Eigen::MatrixXd represent(const AlgebraElement& x, const std::vector<Eigen::MatrixXd>& basis_mats);

/// Structure constants of the Lie algebra spanned by the given matrices, obtained by
/// expanding each commutator in the basis (least squares). The split into h and f is
/// taken from the two lists; components outside the declared block are dropped and
/// reported through closure_defect.
ReductiveAlgebra algebra_from_matrices(const std::vector<Eigen::MatrixXd>& h_mats,
                                       const std::vector<Eigen::MatrixXd>& f_mats, double* closure_defect = nullptr);

/// Largest absolute difference between the structure-constant tables of two algebras.
double max_constant_diff(const ReductiveAlgebra& a, const ReductiveAlgebra& b);

} // namespace nlr
