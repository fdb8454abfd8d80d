#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlr/coeffs.hpp"
#include "nlr/errors.hpp"
#include "nlr/induced.hpp"
#include "nlr/linalg.hpp"
#include "nlr/verify.hpp"

namespace nlr::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    int m = 3;
    int order = kDefaultSeriesOrder;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string in_path;
    std::string out_path;
};

std::string fmt_double(double x)
{
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

Eigen::VectorXd to_vector(const std::vector<double>& xs)
{
    return Eigen::Map<const Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

std::vector<double> from_vector(const Eigen::VectorXd& v)
{
    return {v.data(), v.data() + v.size()};
}

json matrix_to_json(const Eigen::MatrixXd& a)
{
    json rows = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        rows.push_back(from_vector(a.row(r).transpose()));
    return rows;
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("invalid JSON in " + path + ": " + e.what());
    }
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path);
    if (!file)
        throw UsageError("cannot write " + cfg.out_path);
    file << text;
}

std::string csv_row(const std::string& label, const Eigen::VectorXd& a, const Eigen::VectorXd& b)
{
    std::string row = label;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        row += "," + fmt_double(a[i]);
    for (Eigen::Index i = 0; i < b.size(); ++i)
        row += "," + fmt_double(b[i]);
    return row + "\n";
}

HRepresentation pick_hrep(const So1m& so, const std::string& rep, const std::string& hrep_path)
{
    if (!hrep_path.empty())
        return HRepresentation::from_json(so.algebra, read_json(hrep_path));
    if (rep == "vector")
        return vector_hrep(so);
    if (rep == "spinor")
        return spinor_hrep(so);
    throw UsageError("--rep must be vector or spinor");
}

Eigen::VectorXd sized(const std::vector<double>& xs, Eigen::Index n, const char* what)
{
    if (xs.empty())
        return Eigen::VectorXd::Zero(n);
    if (static_cast<Eigen::Index>(xs.size()) != n)
        throw UsageError(std::string(what) + " needs " + std::to_string(n) + " values, got " +
                         std::to_string(xs.size()));
    return to_vector(xs);
}

int cmd_coeffs(const RunConfig& cfg, int n, std::ostream& out)
{
    if (n < 1)
        throw UsageError("--n must be >= 1");
    const CoeffTable table = l_coeffs(n);
    if (cfg.format == "csv") {
        std::string text = "n,l_n,decimal\n";
        for (int i = 1; i <= n; ++i)
            text += std::to_string(i) + "," + to_string(table.l(i)) + "," +
                    fmt_double(table.l(i).convert_to<double>()) + "\n";
        emit(cfg, text, out);
    } else {
        json rows = json::array();
        for (int i = 1; i <= n; ++i)
            rows.push_back({{"n", i}, {"l_n", to_string(table.l(i))}, {"decimal", table.l(i).convert_to<double>()}});
        emit(cfg, json{{"coeffs", rows}}.dump(2) + "\n", out);
    }
    return 0;
}

struct RealizeArgs {
    std::vector<double> boost, rotation, sigma, v, xi;
    std::string rep = "vector";
    std::string hrep_path;
    std::string algebra_path;
    int steps = 200;
};

// Series action of xi on a user-supplied reductive algebra (no oracle exists for a general G/H).
int realize_user_algebra(const RunConfig& cfg, const RealizeArgs& a, std::ostream& out)
{
    const ReductiveAlgebra alg = ReductiveAlgebra::from_json(read_json(a.algebra_path));
    const Eigen::VectorXd xi = sized(a.xi, alg.dim(), "--xi");
    const CosetPoint p{sized(a.sigma, alg.dim_f(), "--sigma")};
    const InfinitesimalAction act =
        realize(alg, AlgebraElement::from_flat(xi, alg.dim_h(), alg.dim_f()), p, cfg.order);
    if (cfg.format == "csv")
        emit(cfg, "route,dF...,dI...\n" + csv_row("series", act.dF, act.dI), out);
    else
        emit(cfg, json{{"series", {{"dF", from_vector(act.dF)}, {"dI", from_vector(act.dI)}}}}.dump(2) + "\n", out);
    return 0;
}

int cmd_realize(const RunConfig& cfg, RealizeArgs a, std::ostream& out)
{
    if (!cfg.in_path.empty()) {
        const json j = read_json(cfg.in_path);
        auto grab = [&](const char* key, std::vector<double>& dst) {
            if (j.contains(key))
                dst = j[key].get<std::vector<double>>();
        };
        grab("boost", a.boost);
        grab("rotation", a.rotation);
        grab("sigma", a.sigma);
        grab("v", a.v);
        grab("xi", a.xi);
        if (j.contains("rep"))
            a.rep = j["rep"].get<std::string>();
    }
    if (!a.algebra_path.empty())
        return realize_user_algebra(cfg, a, out);
    if (a.steps < 1)
        throw UsageError("--steps must be >= 1");

    const So1m so = so1m_algebra(cfg.m);
    const HRepresentation hrep = pick_hrep(so, a.rep, a.hrep_path);
    const Eigen::VectorXd boost = sized(a.boost, so.m, "--boost");
    const Eigen::VectorXd rotation = sized(a.rotation, so.algebra.dim_h(), "--rotation");
    Eigen::VectorXd v = sized(a.v, hrep.d(), "--v");
    if (a.v.empty())
        v[0] = 1.0;
    const MatterPoint x{CosetPoint{sized(a.sigma, so.m, "--sigma")}, v};

    const GroupElement g = group_from_coords(so, boost, rotation);
    const MatterPoint oracle = induced_action(so, g, x, hrep);

    // g = exp(boost) exp(rotation): flow along the rotation first, then along the boost.
    AlgebraElement rot = so.algebra.zero();
    rot.h = rotation;
    AlgebraElement bst = so.algebra.zero();
    bst.f = boost;
    const MatterPoint mid = integrate_flow(so, rot, x, hrep, 1.0, a.steps, cfg.order);
    const MatterPoint series = integrate_flow(so, bst, mid, hrep, 1.0, a.steps, cfg.order);

    const double diff = std::max((oracle.sigma.sigma - series.sigma.sigma).cwiseAbs().maxCoeff(),
                                 (oracle.v - series.v).cwiseAbs().maxCoeff());
    const FactoredPair fp = factor_boost_rotation(GroupElement{g.matrix * boost_matrix(x.sigma.sigma)});

    if (cfg.format == "csv") {
        std::string text = "route,sigma...,v...\n";
        text += csv_row("oracle", oracle.sigma.sigma, oracle.v);
        text += csv_row("series", series.sigma.sigma, series.v);
        text += "max_abs_diff," + fmt_double(diff) + "\n";
        emit(cfg, text, out);
    } else {
        const json report{
            {"oracle", {{"sigma", from_vector(oracle.sigma.sigma)}, {"v", from_vector(oracle.v)}}},
            {"series", {{"sigma", from_vector(series.sigma.sigma)}, {"v", from_vector(series.v)}}},
            {"rho", matrix_to_json(fp.rho)},
            {"order", cfg.order},
            {"max_abs_diff", diff}};
        emit(cfg, report.dump(2) + "\n", out);
    }
    return 0;
}

int cmd_factor(const RunConfig& cfg, std::vector<double> boost, std::vector<double> rotation, std::ostream& out)
{
    Eigen::MatrixXd g;
    int m = cfg.m;
    if (!cfg.in_path.empty()) {
        const json j = read_json(cfg.in_path);
        if (j.contains("matrix")) {
            const auto rows = j["matrix"].get<std::vector<std::vector<double>>>();
            g.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != rows.size())
                    throw UsageError("matrix must be square");
                for (std::size_t c = 0; c < rows.size(); ++c)
                    g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
            }
            m = static_cast<int>(rows.size()) - 1;
        } else {
            if (j.contains("boost"))
                boost = j["boost"].get<std::vector<double>>();
            if (j.contains("rotation"))
                rotation = j["rotation"].get<std::vector<double>>();
        }
    }
    if (g.size() == 0) {
        const So1m so = so1m_algebra(m);
        g = group_from_coords(so, sized(boost, m, "--boost"), sized(rotation, so.algebra.dim_h(), "--rotation")).matrix;
    }
    const GroupElement checked = GroupElement::checked(g);
    const FactoredPair fp = factor_boost_rotation(checked);
    const double residual = max_abs_diff(boost_matrix(fp.f_prime) * embed_rotation(fp.rho), checked.matrix);
    const double ortho =
        max_abs_diff(fp.rho.transpose() * fp.rho, Eigen::MatrixXd::Identity(fp.rho.rows(), fp.rho.cols()));
    if (cfg.format == "csv") {
        std::string text = "key,values...\nf_prime";
        for (double x : from_vector(fp.f_prime))
            text += "," + fmt_double(x);
        text += "\nreconstruction_residual," + fmt_double(residual) + "\nrho_orthogonality," + fmt_double(ortho) + "\n";
        emit(cfg, text, out);
    } else {
        const json report{{"f_prime", from_vector(fp.f_prime)},
                          {"rho", matrix_to_json(fp.rho)},
                          {"reconstruction_residual", residual},
                          {"rho_orthogonality", ortho}};
        emit(cfg, report.dump(2) + "\n", out);
    }
    return 0;
}

int cmd_gauge(const RunConfig& cfg, const std::string& xi_path, double eps, int steps, const std::string& rep,
              const std::string& hrep_path, std::ostream& out)
{
    if (cfg.in_path.empty() || xi_path.empty())
        throw UsageError("gauge needs --in SECTION.json and --xi GAUGE.json");
    if (steps < 1)
        throw UsageError("--steps must be >= 1");
    CompositeSection s = section_from_json(read_json(cfg.in_path));
    const So1m so = so1m_algebra(s.m);
    const HRepresentation hrep = pick_hrep(so, rep, hrep_path);
    const auto xi = gauge_field_from_json(so.algebra, read_json(xi_path));
    for (int i = 0; i < steps; ++i)
        s = gauge_transform_section(so, s, xi, eps, hrep, cfg.order);
    if (cfg.format == "csv") {
        std::string text = "node,sigma...,v...\n";
        for (std::size_t i = 0; i < s.nodes.size(); ++i)
            text += csv_row(std::to_string(i), s.nodes[i].sigma.sigma, s.nodes[i].v);
        emit(cfg, text, out);
    } else {
        emit(cfg, section_to_json(s).dump(2) + "\n", out);
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out)
{
    const Report report = run_suite(suite, cfg.tol, cfg.seed);
    emit(cfg, cfg.format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n", out);
    return report.all_pass() ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Non-linear realizations of SO(1,m) on SO(1,m)/SO(m) with matter fields"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "dimension m of SO(1,m)")->check(CLI::Range(2, 8));
        sub->add_option("--order", cfg.order, "series truncation order K")->check(CLI::Range(1, kMaxSeriesOrder));
        sub->add_option("--tol", cfg.tol, "tolerance for randomized checks")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "seed for randomized suites");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--in", cfg.in_path, "input JSON file");
        sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    };

    int n_coeffs = 0;
    auto* coeffs = app.add_subcommand("coeffs", "exact series coefficients l_1..l_N");
    add_common(coeffs);
    coeffs->add_option("--n,-N", n_coeffs, "number of coefficients")->required();

    RealizeArgs realize_args;
    auto* realize_cmd = app.add_subcommand("realize", "act with g on (sigma, v) via the oracle and via the series");
    add_common(realize_cmd);
    realize_cmd->add_option("--boost", realize_args.boost, "boost coordinates b^k of exp(b^k F_k)")->delimiter(',');
    realize_cmd->add_option("--rotation", realize_args.rotation, "so(m) coordinates (I_ik, i<k)")->delimiter(',');
    realize_cmd->add_option("--sigma", realize_args.sigma, "Goldstone coordinates")->delimiter(',');
    realize_cmd->add_option("--v", realize_args.v, "matter vector")->delimiter(',');
    realize_cmd->add_option("--xi", realize_args.xi, "algebra element (h first), with --algebra")->delimiter(',');
    realize_cmd->add_option("--rep", realize_args.rep, "vector or spinor");
    realize_cmd->add_option("--hrep", realize_args.hrep_path, "JSON h-representation {d, rep_gen}");
    realize_cmd->add_option("--algebra", realize_args.algebra_path, "JSON reductive algebra (series only)");
    realize_cmd->add_option("--steps", realize_args.steps, "RK4 steps per flow segment");

    std::vector<double> f_boost, f_rotation;
    auto* factor = app.add_subcommand("factor", "split g = exp(F') rho");
    add_common(factor);
    factor->add_option("--boost", f_boost, "boost coordinates")->delimiter(',');
    factor->add_option("--rotation", f_rotation, "so(m) coordinates")->delimiter(',');

    std::string xi_path, g_rep = "vector", g_hrep;
    double eps = 0.01;
    int g_steps = 1;
    auto* gauge = app.add_subcommand("gauge", "Euler steps of a vertical gauge transformation of a section");
    add_common(gauge);
    gauge->add_option("--xi", xi_path, "gauge parameter JSON");
    gauge->add_option("--eps", eps, "step size");
    gauge->add_option("--steps", g_steps, "number of Euler steps");
    gauge->add_option("--rep", g_rep, "vector or spinor");
    gauge->add_option("--hrep", g_hrep, "JSON h-representation");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the property suites");
    add_common(verify);
    verify->add_option("--suite", suite, "clifford|algebra|coeffs|series|induced|gauge|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*coeffs)
            return cmd_coeffs(cfg, n_coeffs, out);
        if (*realize_cmd)
            return cmd_realize(cfg, realize_args, out);
        if (*factor)
            return cmd_factor(cfg, f_boost, f_rotation, out);
        if (*gauge)
            return cmd_gauge(cfg, xi_path, eps, g_steps, g_rep, g_hrep, out);
        if (*verify)
            return cmd_verify(cfg, suite, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace nlr::cli
