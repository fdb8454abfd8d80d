#include "nlr/lie.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nlr/errors.hpp"

namespace nlr {

AlgebraElement AlgebraElement::zero(int dim_h, int dim_f)
{
    return {Eigen::VectorXd::Zero(dim_h), Eigen::VectorXd::Zero(dim_f)};
}

AlgebraElement AlgebraElement::from_flat(const Eigen::VectorXd& coords, int dim_h, int dim_f)
{
    if (coords.size() != dim_h + dim_f)
        throw DimensionError("algebra element has " + std::to_string(coords.size()) + " coordinates, expected " +
                             std::to_string(dim_h + dim_f));
    return {coords.head(dim_h), coords.tail(dim_f)};
}

Eigen::VectorXd AlgebraElement::flat() const
{
    Eigen::VectorXd r(h.size() + f.size());
    r << h, f;
    return r;
}

double AlgebraElement::max_abs() const
{
    double r = 0.0;
    if (h.size() > 0)
        r = h.cwiseAbs().maxCoeff();
    if (f.size() > 0)
        r = std::max(r, f.cwiseAbs().maxCoeff());
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o)
{
    if (h.size() != o.h.size() || f.size() != o.f.size())
        throw DimensionError("adding algebra elements of different shape");
    h += o.h;
    f += o.f;
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o)
{
    if (h.size() != o.h.size() || f.size() != o.f.size())
        throw DimensionError("subtracting algebra elements of different shape");
    h -= o.h;
    f -= o.f;
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s)
{
    h *= s;
    f *= s;
    return *this;
}

AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }

ReductiveAlgebra::ReductiveAlgebra(int dim_h, int dim_f, std::vector<double> c_hh, std::vector<double> c_ff,
                                   std::vector<double> c_fh, double tol)
    : dim_h_(dim_h), dim_f_(dim_f), c_hh_(std::move(c_hh)), c_ff_(std::move(c_ff)), c_fh_(std::move(c_fh))
{
    if (dim_h_ < 1 || dim_f_ < 1)
        throw DomainError("reductive algebra needs dim_h >= 1 and dim_f >= 1");
    const auto nh = static_cast<std::size_t>(dim_h_);
    const auto nf = static_cast<std::size_t>(dim_f_);
    if (c_hh_.size() != nh * nh * nh || c_ff_.size() != nf * nf * nh || c_fh_.size() != nf * nh * nf)
        throw DimensionError("structure constant tables do not match dim_h=" + std::to_string(dim_h_) +
                             ", dim_f=" + std::to_string(dim_f_));

    double scale = 1.0;
    for (const auto* table : {&c_hh_, &c_ff_, &c_fh_})
        for (double c : *table)
            scale = std::max(scale, std::abs(c));

    const double anti = antisymmetry_defect();
    if (anti > tol * scale)
        throw DomainError("structure constants are not antisymmetric (defect " + std::to_string(anti) + ")");
    const double jac = jacobi_defect();
    if (jac > tol * scale * scale)
        throw DomainError("structure constants violate the Jacobi identity (defect " + std::to_string(jac) + ")");
}

AlgebraElement ReductiveAlgebra::h_basis(int a) const
{
    AlgebraElement e = zero();
    e.h[a] = 1.0;
    return e;
}

AlgebraElement ReductiveAlgebra::f_basis(int al) const
{
    AlgebraElement e = zero();
    e.f[al] = 1.0;
    return e;
}

AlgebraElement ReductiveAlgebra::basis(int i) const
{
    return i < dim_h_ ? h_basis(i) : f_basis(i - dim_h_);
}

double ReductiveAlgebra::antisymmetry_defect() const
{
    double r = 0.0;
    for (int a = 0; a < dim_h_; ++a)
        for (int b = 0; b < dim_h_; ++b)
            for (int d = 0; d < dim_h_; ++d)
                r = std::max(r, std::abs(c_hh(a, b, d) + c_hh(b, a, d)));
    for (int al = 0; al < dim_f_; ++al)
        for (int be = 0; be < dim_f_; ++be)
            for (int d = 0; d < dim_h_; ++d)
                r = std::max(r, std::abs(c_ff(al, be, d) + c_ff(be, al, d)));
    return r;
}

double ReductiveAlgebra::jacobi_defect() const
{
    double r = 0.0;
    const int n = dim();
    for (int i = 0; i < n; ++i) {
        const AlgebraElement x = basis(i);
        for (int j = 0; j < n; ++j) {
            const AlgebraElement y = basis(j);
            const AlgebraElement xy = bracket(x, y, *this);
            for (int k = 0; k < n; ++k) {
                const AlgebraElement z = basis(k);
                const AlgebraElement sum = bracket(xy, z, *this) + bracket(bracket(y, z, *this), x, *this) +
                                           bracket(bracket(z, x, *this), y, *this);
                r = std::max(r, sum.max_abs());
            }
        }
    }
    return r;
}

void ReductiveAlgebra::require_conforms(const AlgebraElement& x) const
{
    if (x.h.size() != dim_h_ || x.f.size() != dim_f_)
        throw DimensionError("algebra element of shape (" + std::to_string(x.h.size()) + "," +
                             std::to_string(x.f.size()) + ") used with algebra (" + std::to_string(dim_h_) + "," +
                             std::to_string(dim_f_) + ")");
}

nlohmann::json ReductiveAlgebra::to_json() const
{
    auto rows = [](const std::vector<double>& table, int n_rows, int row_len) {
        nlohmann::json out = nlohmann::json::array();
        for (int r = 0; r < n_rows; ++r)
            out.push_back(std::vector<double>(table.begin() + r * row_len, table.begin() + (r + 1) * row_len));
        return out;
    };
    return {{"dim_h", dim_h_},
            {"dim_f", dim_f_},
            {"c_hh", rows(c_hh_, dim_h_ * dim_h_, dim_h_)},
            {"c_ff", rows(c_ff_, dim_f_ * dim_f_, dim_h_)},
            {"c_fh", rows(c_fh_, dim_f_ * dim_h_, dim_f_)}};
}

ReductiveAlgebra ReductiveAlgebra::from_json(const nlohmann::json& j)
{
    try {
        const int dh = j.at("dim_h").get<int>();
        const int df = j.at("dim_f").get<int>();
        auto flatten = [](const nlohmann::json& rows, int n_rows, int row_len, const char* name) {
            if (!rows.is_array() || static_cast<int>(rows.size()) != n_rows)
                throw UsageError(std::string(name) + " must have " + std::to_string(n_rows) + " rows");
            std::vector<double> out;
            out.reserve(static_cast<std::size_t>(n_rows) * row_len);
            for (const auto& row : rows) {
                if (!row.is_array() || static_cast<int>(row.size()) != row_len)
                    throw UsageError(std::string(name) + " rows must have length " + std::to_string(row_len));
                for (const auto& v : row)
                    out.push_back(v.get<double>());
            }
            return out;
        };
        if (dh < 1 || df < 1)
            throw UsageError("dim_h and dim_f must be positive");
        return ReductiveAlgebra(dh, df, flatten(j.at("c_hh"), dh * dh, dh, "c_hh"),
                                flatten(j.at("c_ff"), df * df, dh, "c_ff"), flatten(j.at("c_fh"), df * dh, df, "c_fh"));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed algebra JSON: ") + e.what());
    }
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y, const ReductiveAlgebra& alg)
{
    alg.require_conforms(x);
    alg.require_conforms(y);
    const int nh = alg.dim_h();
    const int nf = alg.dim_f();
    AlgebraElement r = alg.zero();
    for (int a = 0; a < nh; ++a) {
        if (x.h[a] == 0.0)
            continue;
        for (int b = 0; b < nh; ++b) {
            const double w = x.h[a] * y.h[b];
            if (w == 0.0)
                continue;
            for (int d = 0; d < nh; ++d)
                r.h[d] += w * alg.c_hh(a, b, d);
        }
    }
    for (int al = 0; al < nf; ++al) {
        if (x.f[al] == 0.0)
            continue;
        for (int be = 0; be < nf; ++be) {
            const double w = x.f[al] * y.f[be];
            if (w == 0.0)
                continue;
            for (int d = 0; d < nh; ++d)
                r.h[d] += w * alg.c_ff(al, be, d);
        }
    }
    // [F_al, I_b] = c^be_alb F_be and [I_b, F_al] = -c^be_alb F_be
    for (int al = 0; al < nf; ++al) {
        for (int b = 0; b < nh; ++b) {
            const double w = x.f[al] * y.h[b] - y.f[al] * x.h[b];
            if (w == 0.0)
                continue;
            for (int be = 0; be < nf; ++be)
                r.f[be] += w * alg.c_fh(al, b, be);
        }
    }
    return r;
}

AlgebraElement project_h(const AlgebraElement& x)
{
    return {x.h, Eigen::VectorXd::Zero(x.f.size())};
}

AlgebraElement project_f(const AlgebraElement& x)
{
    return {Eigen::VectorXd::Zero(x.h.size()), x.f};
}

std::vector<AlgebraElement> project_h(const std::vector<AlgebraElement>& xs)
{
    std::vector<AlgebraElement> out;
    out.reserve(xs.size());
    for (const auto& x : xs)
        out.push_back(project_h(x));
    return out;
}

int So1m::h_index(int i, int k) const
{
    const auto it = std::find(h_pairs.begin(), h_pairs.end(), std::pair{i, k});
    if (it == h_pairs.end())
        throw DomainError("no so(m) basis element I_" + std::to_string(i + 1) + std::to_string(k + 1));
    return static_cast<int>(it - h_pairs.begin());
}

Multivector So1m::embed(const AlgebraElement& x) const
{
    algebra.require_conforms(x);
    Multivector r{CliffordSpace(m)};
    for (int a = 0; a < algebra.dim_h(); ++a)
        r += x.h[a] * h_embedding[a];
    for (int al = 0; al < algebra.dim_f(); ++al)
        r += x.f[al] * f_embedding[al];
    return r;
}

namespace {

struct Expansion {
    Eigen::VectorXd h;
    Eigen::VectorXd f;
    double residual = 0.0;
};

// Every embedded basis element is a multiple of one blade, so expansion is a lookup.
Expansion expand_in_embedding(const Multivector& x, const std::vector<Multivector>& hs,
                              const std::vector<Multivector>& fs)
{
    Expansion e{Eigen::VectorXd::Zero(static_cast<Eigen::Index>(hs.size())),
                Eigen::VectorXd::Zero(static_cast<Eigen::Index>(fs.size()))};
    const auto n = static_cast<BladeMask>(x.space().blade_count());
    for (BladeMask mask = 0; mask < n; ++mask) {
        const double c = x[mask];
        if (c == 0.0)
            continue;
        bool found = false;
        for (std::size_t a = 0; a < hs.size() && !found; ++a)
            if (hs[a][mask] != 0.0) {
                e.h[static_cast<Eigen::Index>(a)] = c / hs[a][mask];
                found = true;
            }
        for (std::size_t al = 0; al < fs.size() && !found; ++al)
            if (fs[al][mask] != 0.0) {
                e.f[static_cast<Eigen::Index>(al)] = c / fs[al][mask];
                found = true;
            }
        if (!found)
            e.residual = std::max(e.residual, std::abs(c));
    }
    return e;
}

} // namespace

So1m so1m_algebra(int m)
{
    if (m < 2)
        throw DomainError("so(1,m) needs m >= 2, got " + std::to_string(m));
    const CliffordSpace space(m);

    std::vector<std::pair<int, int>> pairs;
    std::vector<Multivector> hs;
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k) {
            pairs.emplace_back(i, k);
            const Multivector gi = Multivector::generator(space, i + 1);
            const Multivector gk = Multivector::generator(space, k + 1);
            hs.push_back(0.25 * commutator(gk, gi));
        }
    std::vector<Multivector> fs;
    for (int k = 0; k < m; ++k)
        fs.push_back(Multivector::generator(space, k + 1));

    const int nh = static_cast<int>(hs.size());
    const int nf = m;
    std::vector<double> c_hh(static_cast<std::size_t>(nh * nh * nh));
    std::vector<double> c_ff(static_cast<std::size_t>(nf * nf * nh));
    std::vector<double> c_fh(static_cast<std::size_t>(nf * nh * nf));

    auto expand = [&](const Multivector& x, bool want_h) {
        const Expansion e = expand_in_embedding(x, hs, fs);
        const double wrong = want_h ? (e.f.size() ? e.f.cwiseAbs().maxCoeff() : 0.0)
                                    : (e.h.size() ? e.h.cwiseAbs().maxCoeff() : 0.0);
        if (e.residual > 0.0 || wrong > 0.0)
            throw DomainError("Clifford commutators leave the embedded so(1,m)");
        return want_h ? e.h : e.f;
    };

    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b) {
            const Eigen::VectorXd c = expand(commutator(hs[a], hs[b]), true);
            for (int d = 0; d < nh; ++d)
                c_hh[(a * nh + b) * nh + d] = c[d];
        }
    for (int al = 0; al < nf; ++al)
        for (int be = 0; be < nf; ++be) {
            const Eigen::VectorXd c = expand(commutator(fs[al], fs[be]), true);
            for (int d = 0; d < nh; ++d)
                c_ff[(al * nf + be) * nh + d] = c[d];
        }
    for (int al = 0; al < nf; ++al)
        for (int b = 0; b < nh; ++b) {
            const Eigen::VectorXd c = expand(commutator(fs[al], hs[b]), false);
            for (int be = 0; be < nf; ++be)
                c_fh[(al * nh + b) * nf + be] = c[be];
        }

    return So1m{m, ReductiveAlgebra(nh, nf, std::move(c_hh), std::move(c_ff), std::move(c_fh)), std::move(pairs),
                std::move(hs), std::move(fs)};
}

std::vector<Eigen::MatrixXd> defining_rep_so1m(int m)
{
    if (m < 2)
        throw DomainError("so(1,m) needs m >= 2, got " + std::to_string(m));
    const int n = m + 1;
    std::vector<Eigen::MatrixXd> mats;
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k) {
            Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
            x(k + 1, i + 1) = 1.0;
            x(i + 1, k + 1) = -1.0;
            mats.push_back(std::move(x));
        }
    for (int k = 0; k < m; ++k) {
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
        x(0, k + 1) = 2.0;
        x(k + 1, 0) = 2.0;
        mats.push_back(std::move(x));
    }
    return mats;
}

Eigen::MatrixXd represent(const AlgebraElement& x, const std::vector<Eigen::MatrixXd>& basis_mats)
{
    const Eigen::VectorXd c = x.flat();
    if (c.size() != static_cast<Eigen::Index>(basis_mats.size()))
        throw DimensionError("element has " + std::to_string(c.size()) + " coordinates, representation " +
                             std::to_string(basis_mats.size()) + " matrices");
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(basis_mats.front().rows(), basis_mats.front().cols());
    for (Eigen::Index i = 0; i < c.size(); ++i)
        if (c[i] != 0.0)
            r += c[i] * basis_mats[static_cast<std::size_t>(i)];
    return r;
}

ReductiveAlgebra algebra_from_matrices(const std::vector<Eigen::MatrixXd>& h_mats,
                                       const std::vector<Eigen::MatrixXd>& f_mats, double* closure_defect)
{
    const int nh = static_cast<int>(h_mats.size());
    const int nf = static_cast<int>(f_mats.size());
    if (nh < 1 || nf < 1)
        throw DomainError("need at least one matrix in each block");
    const Eigen::Index entries = h_mats.front().size();

    Eigen::MatrixXd basis(entries, nh + nf);
    for (int i = 0; i < nh; ++i)
        basis.col(i) = h_mats[i].reshaped();
    for (int i = 0; i < nf; ++i)
        basis.col(nh + i) = f_mats[i].reshaped();
    const auto solver = basis.colPivHouseholderQr();

    double defect = 0.0;
    auto coords = [&](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
        const Eigen::MatrixXd c = x * y - y * x;
        const Eigen::VectorXd v = c.reshaped();
        const Eigen::VectorXd sol = solver.solve(v);
        defect = std::max(defect, (basis * sol - v).cwiseAbs().maxCoeff());
        return sol;
    };

    std::vector<double> c_hh(static_cast<std::size_t>(nh * nh * nh));
    std::vector<double> c_ff(static_cast<std::size_t>(nf * nf * nh));
    std::vector<double> c_fh(static_cast<std::size_t>(nf * nh * nf));
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b) {
            const Eigen::VectorXd s = coords(h_mats[a], h_mats[b]);
            defect = std::max(defect, s.tail(nf).cwiseAbs().maxCoeff());
            for (int d = 0; d < nh; ++d)
                c_hh[(a * nh + b) * nh + d] = s[d];
        }
    for (int al = 0; al < nf; ++al)
        for (int be = 0; be < nf; ++be) {
            const Eigen::VectorXd s = coords(f_mats[al], f_mats[be]);
            defect = std::max(defect, s.tail(nf).cwiseAbs().maxCoeff());
            for (int d = 0; d < nh; ++d)
                c_ff[(al * nf + be) * nh + d] = s[d];
        }
    for (int al = 0; al < nf; ++al)
        for (int b = 0; b < nh; ++b) {
            const Eigen::VectorXd s = coords(f_mats[al], h_mats[b]);
            defect = std::max(defect, s.head(nh).cwiseAbs().maxCoeff());
            for (int be = 0; be < nf; ++be)
                c_fh[(al * nh + b) * nf + be] = s[nh + be];
        }
    if (closure_defect)
        *closure_defect = defect;
    return ReductiveAlgebra(nh, nf, std::move(c_hh), std::move(c_ff), std::move(c_fh), 1e-10);
}

double max_constant_diff(const ReductiveAlgebra& a, const ReductiveAlgebra& b)
{
    if (a.dim_h() != b.dim_h() || a.dim_f() != b.dim_f())
        throw DimensionError("comparing algebras of different dimensions");
    const int nh = a.dim_h();
    const int nf = a.dim_f();
    double r = 0.0;
    for (int x = 0; x < nh; ++x)
        for (int y = 0; y < nh; ++y)
            for (int d = 0; d < nh; ++d)
                r = std::max(r, std::abs(a.c_hh(x, y, d) - b.c_hh(x, y, d)));
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nf; ++y)
            for (int d = 0; d < nh; ++d)
                r = std::max(r, std::abs(a.c_ff(x, y, d) - b.c_ff(x, y, d)));
    for (int x = 0; x < nf; ++x)
        for (int y = 0; y < nh; ++y)
            for (int d = 0; d < nf; ++d)
                r = std::max(r, std::abs(a.c_fh(x, y, d) - b.c_fh(x, y, d)));
    return r;
}

} // namespace nlr
