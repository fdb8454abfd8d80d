#include <gtest/gtest.h>

#include "nlr/coeffs.hpp"
#include "nlr/errors.hpp"
#include "nlr/series.hpp"
#include "nlr/verify.hpp"
#include "oracles.hpp"

using namespace nlr;

namespace {

AlgebraElement boost_elem(const So1m& so, const Eigen::VectorXd& sigma)
{
    return coset_element(so.algebra, CosetPoint{sigma});
}

// h-coordinates of (2 tanh s / s) sigma^k I_ka, with I_ka = -I_ak.
Eigen::VectorXd closed_i_prime(const So1m& so, const Eigen::VectorXd& sigma, int a)
{
    const double s = sigma.norm();
    const double c = 2.0 * std::tanh(s) / s;
    Eigen::VectorXd out = Eigen::VectorXd::Zero(so.algebra.dim_h());
    for (std::size_t p = 0; p < so.h_pairs.size(); ++p) {
        const auto [i, k] = so.h_pairs[p];
        if (k == a) out[static_cast<Eigen::Index>(p)] += c * sigma[i];
        if (i == a) out[static_cast<Eigen::Index>(p)] -= c * sigma[k];
    }
    return out;
}

} // namespace

TEST(Series, OriginGivesGeneratorItself)
{
    const So1m so = so1m_algebra(3);
    for (int a = 0; a < 3; ++a) {
        const InfinitesimalAction r = realize(so.algebra, so.algebra.f_basis(a), CosetPoint{Eigen::VectorXd::Zero(3)});
        EXPECT_EQ(r.dF, so.algebra.f_basis(a).f);
        EXPECT_EQ(r.dI, Eigen::VectorXd::Zero(3));
    }
}

TEST(Series, FirstOrderIsHalfCommutator)
{
    // K = 1, F = s F_1, actor F_2: I' = (s/2)[F_2, F_1] = 2s I_12
    const So1m so = so1m_algebra(3);
    const double s = 0.3;
    Eigen::VectorXd sigma = Eigen::VectorXd::Zero(3);
    sigma[0] = s;
    for (auto reading : {SeriesReading::factorization, SeriesReading::literal}) {
        const AlgebraElement ip = i_prime_series(so.algebra, so.algebra.f_basis(1), boost_elem(so, sigma), 1, reading);
        EXPECT_TRUE(ip.in_h());
        EXPECT_NEAR(ip.h[so.h_index(0, 1)], 2 * s, 1e-15);
        EXPECT_NEAR(ip.h[so.h_index(0, 2)], 0.0, 1e-15);
        EXPECT_NEAR(ip.h[so.h_index(1, 2)], 0.0, 1e-15);
    }
}

TEST(Series, CollinearActionIsTranslation)
{
    const So1m so = so1m_algebra(3);
    Eigen::VectorXd sigma = Eigen::VectorXd::Zero(3);
    sigma[1] = 0.8;
    for (int order : {1, 5, 30}) {
        const InfinitesimalAction r = realize(so.algebra, so.algebra.f_basis(1), CosetPoint{sigma}, order);
        EXPECT_EQ(r.dF, so.algebra.f_basis(1).f);
        EXPECT_EQ(r.dI, Eigen::VectorXd::Zero(3));
    }
}

TEST(Series, ReadingsAgreeThroughSecondDegree)
{
    // Same I' at K = 1; at K = 2 they differ only by terms of degree >= 3 in sigma.
    const So1m so = so1m_algebra(3);
    Eigen::VectorXd dir(3);
    dir << 0.2, -0.1, 0.3;
    const AlgebraElement actor = so.algebra.f_basis(2) + 0.5 * so.algebra.f_basis(0);
    auto gap = [&](double r, int k) {
        const AlgebraElement base = coset_element(so.algebra, CosetPoint{r * dir});
        const auto a = f_action_series(so.algebra, actor, base, k, SeriesReading::factorization);
        const auto b = f_action_series(so.algebra, actor, base, k, SeriesReading::literal);
        return std::max((a.dF - b.dF).cwiseAbs().maxCoeff(), (a.dI - b.dI).cwiseAbs().maxCoeff());
    };
    const AlgebraElement unit = coset_element(so.algebra, CosetPoint{dir});
    EXPECT_EQ(i_prime_series(so.algebra, actor, unit, 1, SeriesReading::factorization).h,
              i_prime_series(so.algebra, actor, unit, 1, SeriesReading::literal).h);
    EXPECT_GT(gap(0.1, 2) / gap(0.05, 2), 7.5);
    EXPECT_GT(gap(1.0, 3), 1e-3);
}

TEST(Series, SplitFunctionsMatchCombined)
{
    const So1m so = so1m_algebra(4);
    Sampler rng(6);
    const AlgebraElement base = boost_elem(so, rng.ball(4, 0.7));
    const AlgebraElement actor = AlgebraElement{Eigen::VectorXd::Zero(6), rng.vector(4, -1, 1)};
    const auto both = f_action_series(so.algebra, actor, base, 13);
    EXPECT_EQ(f_prime_series(so.algebra, actor, base, 13).f, both.dF);
    EXPECT_EQ(i_prime_series(so.algebra, actor, base, 13).h, both.dI);
}

TEST(Series, MatchesFactorizationOracle)
{
    // On the sphere |sigma| = 0.5: I' within 1e-8 at K = 15, F' within 1e-6 at K = 13.
    Sampler rng(12);
    for (int m = 2; m <= 4; ++m) {
        const So1m so = so1m_algebra(m);
        const auto mats = oracle::defining_basis(m);
        for (int t = 0; t < 10; ++t) {
            const Eigen::VectorXd sigma = 0.5 * rng.ball(m, 1.0).normalized();
            for (int a = 0; a < m; ++a) {
                const AlgebraElement actor = so.algebra.f_basis(a);
                const auto [ds, di] = oracle::realize(mats[so.algebra.dim_h() + a], sigma);
                EXPECT_LT((realize(so.algebra, actor, CosetPoint{sigma}, 15).dI - di).cwiseAbs().maxCoeff(), 1e-8);
                EXPECT_LT((realize(so.algebra, actor, CosetPoint{sigma}, 13).dF - ds).cwiseAbs().maxCoeff(), 1e-6);
            }
        }
    }
}

TEST(Series, GeneralElementsConvergeInsideHalfBall)
{
    Sampler rng(13);
    const So1m so = so1m_algebra(3);
    const auto mats = oracle::defining_basis(3);
    for (int t = 0; t < 10; ++t) {
        const Eigen::VectorXd sigma = rng.ball(3, 0.5);
        const AlgebraElement xi = AlgebraElement::from_flat(rng.vector(6, -1, 1), 3, 3);
        const auto [ds, di] = oracle::realize(oracle::combine(mats, xi.flat()), sigma);
        const InfinitesimalAction r = realize(so.algebra, xi, CosetPoint{sigma}, 21);
        EXPECT_LT((r.dF - ds).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LT((r.dI - di).cwiseAbs().maxCoeff(), 1e-9);
    }
}

TEST(Series, ErrorShrinksWithOrder)
{
    const So1m so = so1m_algebra(3);
    Eigen::VectorXd sigma(3);
    sigma << 0.3, 0.2, -0.1;
    const auto [ds, di] = oracle::realize(oracle::defining_basis(3)[4], sigma);
    double prev = 1e9;
    for (int k : {1, 3, 5, 7, 9}) {
        const InfinitesimalAction r = realize(so.algebra, so.algebra.f_basis(1), CosetPoint{sigma}, k);
        const double e = std::max((r.dF - ds).cwiseAbs().maxCoeff(), (r.dI - di).cwiseAbs().maxCoeff());
        EXPECT_LT(e, prev) << k;
        prev = e;
    }
}

TEST(Series, HActionIsLinearAndExact)
{
    const So1m so = so1m_algebra(3);
    Eigen::VectorXd sigma(3);
    sigma << 0.9, -0.3, 0.2;
    const AlgebraElement xi = 0.7 * so.algebra.h_basis(0) - 1.2 * so.algebra.h_basis(2);
    const InfinitesimalAction a = h_action_series(so.algebra, xi, boost_elem(so, sigma), 1);
    const InfinitesimalAction b = h_action_series(so.algebra, xi, boost_elem(so, sigma), 40);
    EXPECT_LT((a.dF - b.dF).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(a.dI, xi.h);
    const auto [ds, di] = oracle::realize(oracle::combine(oracle::defining_basis(3), xi.flat()), sigma);
    EXPECT_LT((a.dF - ds).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((a.dI - di).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Series, RejectsBadArguments)
{
    const So1m so = so1m_algebra(3);
    const AlgebraElement base = so.algebra.f_basis(0);
    EXPECT_THROW(i_prime_series(so.algebra, so.algebra.h_basis(0), base, 3), DomainError);
    EXPECT_THROW(f_prime_series(so.algebra, so.algebra.f_basis(1), so.algebra.h_basis(1), 3), DomainError);
    EXPECT_THROW(f_action_series(so.algebra, so.algebra.f_basis(1), base, 0), DomainError);
    EXPECT_THROW(f_action_series(so.algebra, so.algebra.f_basis(1), base, kMaxSeriesOrder + 1), DomainError);
    EXPECT_THROW(realize(so.algebra, so.algebra.f_basis(1), CosetPoint{Eigen::VectorXd::Zero(2)}), DimensionError);
}

TEST(ClosedForm, CorrectedFieldMatchesOracleAndSeries)
{
    Sampler rng(21);
    const So1m so = so1m_algebra(3);
    const auto mats = oracle::defining_basis(3);
    for (int t = 0; t < 10; ++t) {
        const Eigen::VectorXd sigma = rng.ball(3, 0.6) + 0.05 * Eigen::VectorXd::Ones(3);
        for (int a = 0; a < 3; ++a) {
            const auto [ds, di] = oracle::realize(mats[3 + a], sigma);
            EXPECT_LT((oracle::boost_field(sigma, a) - ds).cwiseAbs().maxCoeff(), 1e-9);
            EXPECT_LT((closed_i_prime(so, sigma, a) - di).cwiseAbs().maxCoeff(), 1e-9);
            const InfinitesimalAction r = realize(so.algebra, so.algebra.f_basis(a), CosetPoint{sigma}, 25);
            EXPECT_LT((oracle::boost_field(sigma, a) - r.dF).cwiseAbs().maxCoeff(), 1e-9);
        }
    }
}

TEST(ClosedForm, ClosedFormRotationFieldsAreExact)
{
    const So1m so = so1m_algebra(3);
    Eigen::VectorXd sigma(3);
    sigma << 0.4, -0.2, 0.7;
    const ClosedFormField pf = so1m_closed_form_field(so, CosetPoint{sigma});
    for (std::size_t p = 0; p < so.h_pairs.size(); ++p) {
        const auto [i, k] = so.h_pairs[p];
        const InfinitesimalAction r = realize(so.algebra, so.algebra.h_basis(static_cast<int>(p)), CosetPoint{sigma});
        EXPECT_LT((pf.rotation_fields.col(static_cast<Eigen::Index>(p)) - r.dF).cwiseAbs().maxCoeff(), 1e-15);
        EXPECT_EQ(r.dF[k], sigma[i]);
        EXPECT_EQ(r.dF[i], -sigma[k]);
    }
    EXPECT_TRUE(pf.i_prime_finite);
}

TEST(ClosedForm, FieldAtOriginDropsSingularTerm)
{
    const So1m so = so1m_algebra(3);
    const ClosedFormField pf = so1m_closed_form_field(so, CosetPoint{Eigen::VectorXd::Zero(3)});
    EXPECT_FALSE(pf.i_prime_finite);
    EXPECT_EQ(pf.i_prime, Eigen::MatrixXd::Zero(3, 3));
    EXPECT_TRUE(pf.u.allFinite());
}

TEST(ClosedForm, ReportHasOneRowPerPoint)
{
    const So1m so = so1m_algebra(3);
    std::vector<CosetPoint> pts;
    for (double r : {0.1, 0.3, 0.5}) pts.push_back(CosetPoint{Eigen::Vector3d(r, -r / 2, r / 3)});
    const auto rows = closed_form_report(so, pts);
    ASSERT_EQ(rows.size(), 3u);
    for (const auto& row : rows) {
        EXPECT_TRUE(std::isfinite(row.u_vs_oracle));
        EXPECT_LT(row.u_series_vs_oracle, 1e-8);
        EXPECT_LT(row.i_prime_series_vs_oracle, 1e-8);
    }
}
