#include <gtest/gtest.h>

#include "nlr/errors.hpp"
#include "nlr/lie.hpp"
#include "nlr/linalg.hpp"
#include "nlr/verify.hpp"
#include "oracles.hpp"

using namespace nlr;

namespace {

AlgebraElement random_element(const ReductiveAlgebra& alg, Sampler& rng)
{
    return AlgebraElement::from_flat(rng.vector(alg.dim(), -1, 1), alg.dim_h(), alg.dim_f());
}

} // namespace

TEST(Lie, Dimensions)
{
    for (int m = 2; m <= 5; ++m) {
        const So1m so = so1m_algebra(m);
        EXPECT_EQ(so.algebra.dim_h(), m * (m - 1) / 2);
        EXPECT_EQ(so.algebra.dim_f(), m);
        EXPECT_EQ(so.h_pairs, oracle::rotation_pairs(m));
    }
}

TEST(Lie, RejectsTooFewGenerators)
{
    EXPECT_THROW(so1m_algebra(1), DomainError);
    EXPECT_THROW(so1m_algebra(0), DomainError);
}

TEST(Lie, BoostsCloseOnRotations)
{
    // [F_i, F_k] = -4 I_ik for i < k
    const So1m so = so1m_algebra(3);
    for (auto [i, k] : so.h_pairs) {
        const AlgebraElement c = bracket(so.algebra.f_basis(i), so.algebra.f_basis(k), so.algebra);
        EXPECT_TRUE(c.in_h());
        Eigen::VectorXd expect = Eigen::VectorXd::Zero(so.algebra.dim_h());
        expect[so.h_index(i, k)] = -4.0;
        EXPECT_LT((c.h - expect).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(Lie, RotationsActOnBoostsAsVectors)
{
    // [I_ik, F_l] = delta_il F_k - delta_kl F_i
    const So1m so = so1m_algebra(4);
    for (auto [i, k] : so.h_pairs)
        for (int l = 0; l < 4; ++l) {
            const AlgebraElement c =
                bracket(so.algebra.h_basis(so.h_index(i, k)), so.algebra.f_basis(l), so.algebra);
            EXPECT_TRUE(c.in_f());
            Eigen::VectorXd expect = Eigen::VectorXd::Zero(4);
            if (l == i) expect[k] += 1.0;
            if (l == k) expect[i] -= 1.0;
            EXPECT_LT((c.f - expect).cwiseAbs().maxCoeff(), 1e-15);
        }
}

TEST(Lie, StructureConstantsMatchDefiningRepresentation)
{
    for (int m = 2; m <= 4; ++m) {
        const So1m so = so1m_algebra(m);
        const auto mats = oracle::defining_basis(m);
        const auto lib = defining_rep_so1m(m);
        ASSERT_EQ(lib.size(), mats.size());
        for (std::size_t i = 0; i < mats.size(); ++i) EXPECT_EQ(lib[i], mats[i]);

        double closure = 1.0;
        const ReductiveAlgebra from_mats = algebra_from_matrices(
            {mats.begin(), mats.begin() + so.algebra.dim_h()}, {mats.begin() + so.algebra.dim_h(), mats.end()},
            &closure);
        EXPECT_LT(closure, 1e-12);
        EXPECT_LT(max_constant_diff(so.algebra, from_mats), 1e-12);
    }
}

TEST(Lie, DefiningRepPreservesMetric)
{
    const int m = 3;
    const Eigen::MatrixXd eta = minkowski_metric(m + 1);
    for (const auto& x : defining_rep_so1m(m)) EXPECT_EQ(x.transpose() * eta + eta * x, Eigen::MatrixXd::Zero(4, 4));
}

TEST(Lie, BoostGeneratorNormalization)
{
    // exp(s rep F_1) has cosh(2s) and sinh(2s) entries
    const So1m so = so1m_algebra(3);
    const double s = 0.37;
    const Eigen::MatrixXd g = oracle::expm(s * represent(so.algebra.f_basis(0), defining_rep_so1m(3)));
    EXPECT_NEAR(g(0, 0), std::cosh(2 * s), 1e-14);
    EXPECT_NEAR(g(0, 1), std::sinh(2 * s), 1e-14);
    EXPECT_NEAR(g(2, 2), 1.0, 1e-14);
}

TEST(Lie, AntisymmetryAndJacobi)
{
    Sampler rng(9);
    for (int m = 2; m <= 4; ++m) {
        const So1m so = so1m_algebra(m);
        const auto& alg = so.algebra;
        EXPECT_LT(alg.antisymmetry_defect(), 1e-15);
        EXPECT_LT(alg.jacobi_defect(), 1e-14);
        for (int t = 0; t < 20; ++t) {
            const auto x = random_element(alg, rng), y = random_element(alg, rng), z = random_element(alg, rng);
            EXPECT_LT(bracket(x, x, alg).max_abs(), 1e-15);
            EXPECT_LT((bracket(x, y, alg) + bracket(y, x, alg)).max_abs(), 1e-15);
            const AlgebraElement j = bracket(x, bracket(y, z, alg), alg) + bracket(y, bracket(z, x, alg), alg) +
                                     bracket(z, bracket(x, y, alg), alg);
            EXPECT_LT(j.max_abs(), 1e-13);
        }
    }
}

TEST(Lie, BracketMatchesMatrixCommutator)
{
    Sampler rng(10);
    const So1m so = so1m_algebra(4);
    const auto mats = oracle::defining_basis(4);
    for (int t = 0; t < 20; ++t) {
        const auto x = random_element(so.algebra, rng), y = random_element(so.algebra, rng);
        const Eigen::MatrixXd a = oracle::combine(mats, x.flat()), b = oracle::combine(mats, y.flat());
        EXPECT_LT(max_abs_diff(oracle::combine(mats, bracket(x, y, so.algebra).flat()), a * b - b * a), 1e-13);
    }
}

TEST(Lie, EmbeddingIsCliffordCommutator)
{
    const So1m so = so1m_algebra(3);
    for (int i = 0; i < so.algebra.dim(); ++i)
        for (int j = 0; j < so.algebra.dim(); ++j) {
            const auto x = so.algebra.basis(i), y = so.algebra.basis(j);
            const Multivector lhs = so.embed(bracket(x, y, so.algebra));
            EXPECT_LT((lhs - commutator(so.embed(x), so.embed(y))).max_abs(), 1e-15);
        }
}

TEST(Lie, Projections)
{
    const So1m so = so1m_algebra(3);
    Sampler rng(4);
    const auto x = random_element(so.algebra, rng);
    EXPECT_TRUE(project_h(x).in_h());
    EXPECT_TRUE(project_f(x).in_f());
    EXPECT_EQ((project_h(x) + project_f(x) - x).max_abs(), 0.0);
    const auto ys = project_h(std::vector<AlgebraElement>{x, x});
    ASSERT_EQ(ys.size(), 2u);
    EXPECT_EQ(ys[1].h, x.h);
}

TEST(Lie, JsonRoundTrip)
{
    const So1m so = so1m_algebra(3);
    const ReductiveAlgebra back = ReductiveAlgebra::from_json(so.algebra.to_json());
    EXPECT_EQ(back.dim_h(), 3);
    EXPECT_EQ(back.dim_f(), 3);
    EXPECT_EQ(max_constant_diff(so.algebra, back), 0.0);
}

TEST(Lie, RejectsInconsistentConstants)
{
    // one-dimensional h, one-dimensional f, [F,F] = I is not antisymmetric
    EXPECT_THROW(ReductiveAlgebra(1, 1, {0.0}, {1.0}, {0.0}), DomainError);
    EXPECT_THROW(ReductiveAlgebra(1, 1, {0.0}, {0.0, 0.0}, {0.0}), DimensionError);

    auto j = so1m_algebra(3).algebra.to_json();
    j["c_fh"][0][0] = 5.0;
    EXPECT_THROW(ReductiveAlgebra::from_json(j), Error);
}

TEST(Lie, ConformanceIsChecked)
{
    const So1m so = so1m_algebra(3);
    EXPECT_THROW(so.algebra.require_conforms(AlgebraElement::zero(2, 3)), DimensionError);
    EXPECT_NO_THROW(so.algebra.require_conforms(so.algebra.zero()));
}
