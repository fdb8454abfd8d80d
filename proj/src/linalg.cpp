#include "nlr/linalg.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "nlr/errors.hpp"

namespace nlr {

Eigen::MatrixXd expm(const Eigen::MatrixXd& a)
{
    if (a.rows() != a.cols())
        throw DimensionError("expm needs a square matrix");
    const Eigen::Index n = a.rows();
    if (n == 0)
        return a;

    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5)
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const Eigen::MatrixXd scaled = a / std::ldexp(1.0, squarings);

    // ||scaled|| <= 1/2, so 20 terms leave a remainder far below double epsilon.
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= 20; ++k) {
        term = term * scaled / static_cast<double>(k);
        result += term;
    }
    for (int i = 0; i < squarings; ++i)
        result = result * result;
    return result;
}

Eigen::MatrixXd log_rotation(const Eigen::MatrixXd& rho, double branch_tol)
{
    if (rho.rows() != rho.cols())
        throw DimensionError("log_rotation needs a square matrix");
    const Eigen::Index n = rho.rows();
    if (n <= 1)
        return Eigen::MatrixXd::Zero(n, n);

    Eigen::RealSchur<Eigen::MatrixXd> schur(rho);
    const Eigen::MatrixXd& t = schur.matrixT();
    const Eigen::MatrixXd& u = schur.matrixU();

    // A normal matrix has a block-diagonal Schur form; off-block entries are roundoff.
    Eigen::MatrixXd log_t = Eigen::MatrixXd::Zero(n, n);
    Eigen::Index i = 0;
    while (i < n) {
        const bool block = i + 1 < n && std::abs(t(i + 1, i)) > 0.0;
        if (block) {
            const double c = 0.5 * (t(i, i) + t(i + 1, i + 1));
            const double s = 0.5 * (t(i + 1, i) - t(i, i + 1));
            const double angle = std::atan2(s, c);
            if (std::numbers::pi - std::abs(angle) < branch_tol)
                throw BranchError("rotation angle pi: principal logarithm is ambiguous");
            log_t(i + 1, i) = angle;
            log_t(i, i + 1) = -angle;
            i += 2;
        } else {
            if (t(i, i) < 0.0)
                throw BranchError("rotation angle pi: principal logarithm is ambiguous");
            i += 1;
        }
    }
    const Eigen::MatrixXd l = u * log_t * u.transpose();
    return 0.5 * (l - l.transpose());
}

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("max_abs_diff on differently shaped matrices");
    if (a.size() == 0)
        return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd minkowski_metric(int n)
{
    Eigen::MatrixXd eta = -Eigen::MatrixXd::Identity(n, n);
    eta(0, 0) = 1.0;
    return eta;
}

} // namespace nlr
