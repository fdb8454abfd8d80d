#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlr/induced.hpp"

namespace nlr {

struct CheckResult {
    std::string name;
    bool pass = true;
    double measured = 0.0;
    double threshold = 0.0;
    /// Informational checks are reported but never fail a suite.
    bool informational = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    /// Structured extras (slope tables, discrepancy tables).
    nlohmann::json tables = nlohmann::json::object();

    bool all_pass() const;
    nlohmann::json to_json() const;
    std::string to_csv() const;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"clifford", "algebra", "coeffs", "series", "induced", "gauge", "all"};
    return names;
}

/// Runs one suite (or "all"). `tol` bounds the randomized group-law and consistency checks;
/// exactness checks use their own fixed thresholds. Throws UsageError for unknown suites.
Report run_suite(const std::string& suite, double tol, std::uint64_t seed);

/// Deterministic uniform draws (independent of the standard library's distribution code).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi);
    int integer(int lo, int hi);
    Eigen::VectorXd vector(Eigen::Index n, double lo, double hi);
    /// Uniform direction scaled to a radius drawn uniformly in [0, max_norm].
    Eigen::VectorXd ball(Eigen::Index n, double max_norm);

private:
    std::mt19937_64 engine_;
};

/// exp(b.F) exp(theta.I) with |b| <= max_boost and |theta| <= max_angle.
GroupElement random_group_element(const So1m& so, Sampler& rng, double max_boost, double max_angle);

double loglog_slope(std::span<const double> radii, std::span<const double> errors);

struct ConvergenceResult {
    std::vector<double> radii;
    std::vector<double> errors;
    double slope = 0.0;
};

/// Error of the order-K series against the factorization oracle, maximized over the f basis
/// actors, at sigma = r * direction for each radius.
ConvergenceResult series_convergence(const So1m& so, int order, SeriesReading reading, std::span<const double> radii,
                                     const Eigen::VectorXd& direction);

struct ClosedFormRow {
    Eigen::VectorXd sigma;
    double u_vs_oracle = 0.0;
    double i_prime_vs_oracle = 0.0;
    double u_series_vs_oracle = 0.0;
    double i_prime_series_vs_oracle = 0.0;
};

/// Closed form against the factorization oracle and the order-K series.
std::vector<ClosedFormRow> closed_form_report(const So1m& so, const std::vector<CosetPoint>& points, int order = 21);

} // namespace nlr
