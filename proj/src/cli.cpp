#include "fractoep/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>

#include "fractoep/csv.hpp"
#include "fractoep/errors.hpp"
#include "fractoep/fracderiv.hpp"
#include "fractoep/fracint.hpp"
#include "fractoep/interval.hpp"
#include "fractoep/specialfn.hpp"
#include "fractoep/symbol.hpp"
#include "fractoep/toeplitz.hpp"
#include "fractoep/wienerhopf.hpp"

namespace fractoep::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct RunConfig {
    double alpha = 0.5;
    double R = 1.0;
    std::vector<double> R_list{1.0};
    std::vector<int> N_list{256, 1024, 4096};
    std::vector<double> x_list{0.5};
    std::vector<double> A_list;
    int n_max = 64;
    int grid = kDefaultGrid;
    int N = 512;
    std::string fn = "t";
    std::string variant = "lower";
    std::string method = "grid";
    std::string what = "deriv";
    std::string mode = "fast";
    std::string backend = "dense";
    double tol = 1e-10;
    std::string out_path;
    std::string gnuplot_path;
    bool uncalibrated = false;
    bool extrapolate = false;
};

double rel_error(double value, double oracle) {
    const double d = std::abs(value - oracle);
    return oracle != 0.0 ? d / std::abs(oracle) : d;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

void check_alpha_fraction(double a) { require(a > 0.0 && a < 1.0, "--alpha must lie in (0, 1)"); }

void check_N(const std::vector<int>& Ns, int lo) {
    require(!Ns.empty(), "--N needs at least one value");
    for (int N : Ns) require(N >= lo, "--N values must be >= " + std::to_string(lo));
}

void check_unit_points(const std::vector<double>& xs) {
    require(!xs.empty(), "--x needs at least one value");
    for (double x : xs) require(x > 0.0 && x < 1.0, "--x values must lie in (0, 1)");
}

// Lower fractional derivative oracle: power rule where available, quadrature otherwise.
double derivative_oracle(const FunctionSpec& f, double alpha, double x, double tol) {
    if (alpha < 1.0) {
        if (auto v = f.dalpha_exact(alpha, x)) return *v;
        return marchaud_lower(f, alpha, x, tol);
    }
    return dalpha_composite(f, alpha, x, 16, tol).value;
}

double integral_oracle(const FunctionSpec& f, double alpha, double x, double tol) {
    if (auto v = f.jalpha_exact(alpha, x)) return *v;
    return rl_integral(f, alpha, x, tol);
}

CsvTable run_coeffs(const RunConfig& c) {
    SymbolSpec spec{c.alpha, c.R, parse_variant(c.variant)};
    spec.validate();
    require(c.n_max >= 0, "--n-max must be >= 0");
    require(c.grid >= 4 * std::max(c.n_max, 1), "--grid must be at least 4 * n-max");
    const auto series = fourier_coeffs_series(spec, c.n_max, c.tol);
    const auto fft = c.extrapolate ? fourier_coeff_fft_extrapolated(spec, c.grid) : fourier_coeff_fft(spec, c.grid);
    const bool has_law = spec.variant == Variant::lower && c.R == 1.0 && c.alpha > -0.5 &&
                         !(c.alpha >= 0.0 && c.alpha == std::floor(c.alpha));
    CsvTable t({"n", "re_series", "im_series", "re_fft", "im_fft", "asymptotic", "ratio"});
    for (int n = -c.n_max; n <= c.n_max; ++n) {
        const cplx s = series[n + c.n_max];
        const cplx f = coeff_at(fft, n);
        const double law = (has_law && n != 0) ? asymptotic_coeff(c.alpha, n) : kNaN;
        t.add_row({static_cast<double>(n), s.real(), s.imag(), f.real(), f.imag(), law, s.real() / law});
    }
    return t;
}

CsvTable run_deriv(const RunConfig& c) {
    require(c.alpha > 0.0, "--alpha must be positive");
    const bool fractional = c.alpha < 1.0;
    require(fractional || (c.alpha != std::floor(c.alpha)), "--alpha must be non-integer");
    require(c.method == "grid" || c.method == "gl", "--method must be grid or gl");
    require(c.method == "grid" || fractional, "--method gl needs alpha in (0, 1)");
    check_N(c.N_list, 16);
    check_unit_points(c.x_list);
    const auto f = FunctionSpec::parse(c.fn);
    CsvTable t({"N", "x", "re_value", "im_value", "oracle", "rel_error"});
    for (int N : c.N_list) {
        std::unique_ptr<ToeplitzOperator> op;
        GridFunction samples;
        if (c.method == "grid") {
            op = std::make_unique<ToeplitzOperator>(build(SymbolSpec{c.alpha, c.R, Variant::lower}, N, c.tol));
            samples = sample(f, N);
        }
        for (double x : c.x_list) {
            const int k = static_cast<int>(std::floor(N * x));
            require(k >= 1 && k <= N - 1, "floor(N x) must be an interior index");
            cplx v;
            double oracle = derivative_oracle(f, c.alpha, x, c.tol);
            if (c.method == "gl") {
                v = gl_derivative(f, c.alpha, x, N);
                oracle /= std::pow(2.0, c.alpha);
            } else {
                v = dalpha_grid(*op, samples, k);
            }
            t.add_row({static_cast<double>(N), x, v.real(), v.imag(), oracle, rel_error(v.real(), oracle)});
        }
    }
    return t;
}

CsvTable run_integ(const RunConfig& c) {
    check_alpha_fraction(c.alpha);
    check_N(c.N_list, 16);
    check_unit_points(c.x_list);
    require(c.backend == "dense" || c.backend == "hankel", "--backend must be dense or hankel");
    for (double R : c.R_list) require(R > 0.0 && R <= 1.0, "--R values must lie in (0, 1]");
    const auto f = FunctionSpec::parse(c.fn);
    const auto backend = c.backend == "hankel" ? InverseBackend::hankel : InverseBackend::dense;
    std::vector<std::string> header{"N", "R", "x", "re_value", "im_value", "oracle", "rel_error"};
    if (c.extrapolate) header.insert(header.end(), {"extrapolated", "extrapolated_rel_error"});
    CsvTable t(header);
    for (int N : c.N_list) {
        for (double R : c.R_list) {
            std::vector<cplx> row;
            std::vector<cplx> coarse;
            if (backend == InverseBackend::dense) {
                row = jalpha_grid_all(f, c.alpha, N, R);
                if (c.extrapolate) coarse = jalpha_grid_all(f, c.alpha, N / 2, R);
            }
            for (double x : c.x_list) {
                const int k = static_cast<int>(std::floor(N * x));
                require(k >= 1 && k <= N - 1, "floor(N x) must be an interior index");
                const double oracle = integral_oracle(f, c.alpha, x, c.tol);
                const cplx v = backend == InverseBackend::dense ? row[k] : jalpha_grid(f, c.alpha, x, N, R, backend);
                std::vector<double> r{static_cast<double>(N), R, x, v.real(), v.imag(), oracle,
                                      rel_error(v.real(), oracle)};
                if (c.extrapolate) {
                    require(N % 2 == 0, "--extrapolate needs even N");
                    cplx cv = backend == InverseBackend::dense
                                  ? coarse[static_cast<int>(std::floor(N / 2 * x))]
                                  : jalpha_grid(f, c.alpha, x, N / 2, R, backend);
                    const double w = std::pow(2.0, c.alpha);
                    const double e = ((w * v - cv) / (w - 1.0)).real();
                    r.push_back(e);
                    r.push_back(rel_error(e, oracle));
                }
                t.add_row(r);
            }
        }
    }
    return t;
}

CsvTable run_invert_check(const RunConfig& c) {
    check_alpha_fraction(c.alpha);
    check_N(c.N_list, 1);
    require(c.mode == "direct" || c.mode == "fast", "--mode must be direct or fast");
    for (double R : c.R_list) require(R > 0.0 && R < 1.0, "--R values must lie in (0, 1) for the Hankel route");
    const auto variant = parse_variant(c.variant);
    require(variant != Variant::gl, "--variant must be lower or upper");
    const auto mode = c.mode == "direct" ? MatvecMode::direct : MatvecMode::fast;
    CsvTable t({"alpha", "R", "N", "M", "hankel_norm", "max_abs_diff", "max_neumann_terms", "max_residual"});
    for (double R : c.R_list) {
        for (int N : c.N_list) {
            const auto fac = factor(c.alpha, R, N, 0, variant);
            const double norm = fac.hankel_norm;
            if (!(norm < 1.0)) throw ConvergenceError("invert-check: ||H~ H|| is not below 1");
            const auto op = build(SymbolSpec{c.alpha, R, variant}, N, 1e-15);
            std::vector<CVec> basis;
            for (int j = 0; j <= N; ++j) {
                CVec e(N + 1, 0.0);
                e[j] = 1.0;
                basis.push_back(std::move(e));
            }
            const auto cols = solve_many(op, basis);
            double diff = 0.0, resid = 0.0;
            int terms = 0;
            for (int j = 0; j <= N; ++j) {
                const auto parts = invert_apply_parts(fac, FourierPoly::monomial(j));
                const auto x = parts.result();
                terms = std::max(terms, parts.neumann_terms);
                CVec xv(N + 1);
                for (int i = 0; i <= N; ++i) {
                    xv[i] = x[i];
                    diff = std::max(diff, std::abs(x[i] - cols[j][i]));
                }
                const auto Tx = matvec(op, xv, mode);
                for (int i = 0; i <= N; ++i) resid = std::max(resid, std::abs(Tx[i] - basis[j][i]));
            }
            t.add_row({c.alpha, R, static_cast<double>(N), static_cast<double>(fac.M), norm, diff,
                       static_cast<double>(terms), resid});
        }
    }
    return t;
}

CsvTable run_solve(const RunConfig& c, std::ostream& err) {
    require(c.N >= 16, "--N must be >= 16");
    split_order(c.alpha);
    const auto psi = FunctionSpec::parse(c.fn);
    const auto sol = solve_dirichlet(psi, c.alpha, c.N, c.tol);
    std::vector<std::string> header{"x", "y", "residual"};
    if (c.uncalibrated) header.push_back("uncalibrated");
    CsvTable t(header);
    for (int j = 0; j <= c.N; ++j) {
        const double x = static_cast<double>(j) / c.N;
        std::vector<double> r{x, sol.y.samples[j].real(), sol.residual[j].real()};
        if (c.uncalibrated) r.push_back(j_tilde_uncalibrated(psi, c.alpha, x, c.tol));
        t.add_row(r);
    }
    err << "interior_residual=" << format_number(sol.interior_residual)
        << " y_first=" << format_number(sol.first_node) << " y_last=" << format_number(sol.last_node) << '\n';
    return t;
}

CsvTable run_line(const RunConfig& c) {
    check_alpha_fraction(c.alpha);
    require(!c.x_list.empty(), "--x needs at least one value");
    for (double A : c.A_list) require(A > 0.0, "--A values must be positive");
    const auto psi = FunctionSpec::parse(c.fn);
    require(psi.support_lo().has_value(), "--fn must have a bounded lower support");
    const auto J = j_alpha_inf_function(psi, c.alpha, std::min(c.tol, 1e-12));
    std::vector<std::string> header{"x", "psi", "j_inf", "d_inf_of_j", "roundtrip_error", "d_inf"};
    for (double A : c.A_list) {
        std::ostringstream name;
        name << "d_ab_scaled_A" << A;
        header.push_back(name.str());
    }
    CsvTable t(header);
    for (double x : c.x_list) {
        const double jv = j_alpha_inf(psi, c.alpha, x, c.tol);
        const double dj = d_alpha_inf(J, c.alpha, x, std::max(c.tol, 1e-9));
        const double dv = d_alpha_inf(psi, c.alpha, x, c.tol);
        std::vector<double> r{x, psi(x), jv, dj, std::abs(dj - psi(x)), dv};
        for (double A : c.A_list) {
            require(x > -A && x < A, "--x values must lie inside every [-A, A]");
            const IntervalMap iv(-A, A);
            r.push_back(d_alpha_ab(psi, c.alpha, x, iv, QuadratureBackend{c.tol}) / std::pow(2.0 * A, c.alpha));
        }
        t.add_row(r);
    }
    return t;
}

CsvTable run_converge(const RunConfig& c) {
    check_alpha_fraction(c.alpha);
    check_N(c.N_list, 16);
    require(c.x_list.size() == 1, "--x takes a single value for converge");
    check_unit_points(c.x_list);
    require(c.what == "deriv" || c.what == "integ" || c.what == "gl", "--what must be deriv, integ or gl");
    const auto f = FunctionSpec::parse(c.fn);
    const double x = c.x_list.front();
    double oracle = 0.0;
    if (c.what == "integ")
        oracle = integral_oracle(f, c.alpha, x, c.tol);
    else
        oracle = derivative_oracle(f, c.alpha, x, c.tol) / (c.what == "gl" ? std::pow(2.0, c.alpha) : 1.0);
    CsvTable t({"N", "value", "oracle", "abs_error", "rel_error", "observed_order"});
    double prev_err = kNaN;
    int prev_N = 0;
    for (int N : c.N_list) {
        double v = 0.0;
        if (c.what == "deriv") v = dalpha_grid(f, c.alpha, x, N, c.R).real();
        if (c.what == "gl") v = gl_derivative(f, c.alpha, x, N);
        if (c.what == "integ") v = jalpha_grid(f, c.alpha, x, N, c.R).real();
        const double e = std::abs(v - oracle);
        const double order = prev_N > 0 ? std::log(prev_err / e) / std::log(static_cast<double>(N) / prev_N) : kNaN;
        t.add_row({static_cast<double>(N), v, oracle, e, rel_error(v, oracle), order});
        prev_err = e;
        prev_N = N;
    }
    return t;
}

void write_gnuplot(const RunConfig& c, const CsvTable& t) {
    std::ofstream os(c.gnuplot_path, std::ios::binary);
    if (!os) throw DomainError("cannot open " + c.gnuplot_path + " for writing");
    os << "set datafile separator ','\n";
    os << "set key autotitle columnhead\n";
    os << "set xlabel '" << t.header().front() << "'\n";
    os << "plot ";
    for (std::size_t i = 1; i < t.header().size(); ++i)
        os << (i > 1 ? ", \\\n     " : "") << "'" << c.out_path << "' using 1:" << (i + 1) << " with linespoints";
    os << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractional derivatives and integrals as limits of Toeplitz matrix actions", "fractoep"};
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&c](CLI::App* s) {
        s->add_option("--out", c.out_path, "CSV output path (default: stdout)");
        s->add_option("--gnuplot", c.gnuplot_path, "Write a gnuplot script for the CSV (needs --out)");
        s->add_option("--tol", c.tol, "Series/quadrature tolerance")->capture_default_str();
    };

    auto* coeffs = app.add_subcommand("coeffs", "Fourier coefficients: series, FFT oracle, asymptotic law");
    coeffs->add_option("--alpha", c.alpha)->required();
    coeffs->add_option("--R", c.R)->capture_default_str();
    coeffs->add_option("--n-max", c.n_max)->capture_default_str();
    coeffs->add_option("--variant", c.variant)->capture_default_str();
    coeffs->add_option("--grid", c.grid, "FFT grid size (power of two)")->capture_default_str();
    coeffs->add_flag("--extrapolate", c.extrapolate, "Richardson-extrapolate the FFT over 3 grids");
    common(coeffs);

    auto* deriv = app.add_subcommand("deriv", "Grid fractional derivative against its oracle");
    deriv->add_option("--alpha", c.alpha)->required();
    deriv->add_option("--fn", c.fn)->capture_default_str();
    deriv->add_option("--x", c.x_list)->delimiter(',');
    deriv->add_option("--N", c.N_list)->delimiter(',');
    deriv->add_option("--R", c.R)->capture_default_str();
    deriv->add_option("--method", c.method, "grid | gl")->capture_default_str();
    common(deriv);

    auto* integ = app.add_subcommand("integ", "Grid fractional integral (inverse rows) against its oracle");
    integ->add_option("--alpha", c.alpha)->required();
    integ->add_option("--fn", c.fn)->capture_default_str();
    integ->add_option("--x", c.x_list)->delimiter(',');
    integ->add_option("--N", c.N_list)->delimiter(',');
    integ->add_option("--R", c.R_list)->delimiter(',');
    integ->add_option("--backend", c.backend, "dense | hankel")->capture_default_str();
    integ->add_flag("--extrapolate", c.extrapolate, "Richardson step in N (uses N/2)");
    common(integ);

    auto* inv = app.add_subcommand("invert-check", "Hankel-route inverse against dense solves");
    inv->add_option("--alpha", c.alpha)->required();
    inv->add_option("--R", c.R_list)->delimiter(',');
    inv->add_option("--N", c.N_list)->delimiter(',');
    inv->add_option("--variant", c.variant)->capture_default_str();
    inv->add_option("--mode", c.mode, "direct | fast matvec for the residual")->capture_default_str();
    common(inv);

    auto* solve_cmd = app.add_subcommand("solve", "Dirichlet fractional boundary-value problem");
    solve_cmd->add_option("--alpha", c.alpha)->required();
    solve_cmd->add_option("--fn", c.fn)->capture_default_str();
    solve_cmd->add_option("--N", c.N)->capture_default_str();
    solve_cmd->add_flag("--paper-literal", c.uncalibrated, "Add the uncalibrated integral form as a column");
    common(solve_cmd);

    auto* line = app.add_subcommand("line", "Whole-line operators and their finite-interval approximations");
    line->add_option("--alpha", c.alpha)->required();
    line->add_option("--fn", c.fn)->capture_default_str();
    line->add_option("--x", c.x_list)->delimiter(',');
    line->add_option("--A", c.A_list, "Half-widths of [-A, A] for the finite-interval columns")->delimiter(',');
    common(line);

    auto* conv = app.add_subcommand("converge", "Error table over an N sweep");
    conv->add_option("--alpha", c.alpha)->required();
    conv->add_option("--fn", c.fn)->capture_default_str();
    conv->add_option("--x", c.x_list)->delimiter(',');
    conv->add_option("--N", c.N_list)->delimiter(',');
    conv->add_option("--R", c.R)->capture_default_str();
    conv->add_option("--what", c.what, "deriv | integ | gl")->capture_default_str();
    common(conv);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? kOk : kValidation;
    }

    try {
        if (!c.gnuplot_path.empty() && c.out_path.empty()) throw DomainError("--gnuplot needs --out");
        // Sweep defaults differ per subcommand when the user gave none.
        if (line->parsed() && line->count("--fn") == 0) c.fn = "bump:0,1";
        if (line->parsed() && line->count("--x") == 0) c.x_list = {-0.5, 0.0, 0.5};
        if ((integ->parsed() || inv->parsed()) && integ->count("--N") == 0 && inv->count("--N") == 0)
            c.N_list = integ->parsed() ? std::vector<int>{1024} : std::vector<int>{8, 32, 64};
        if (inv->parsed() && inv->count("--R") == 0) c.R_list = {0.5, 0.9, 0.95};
        if (inv->parsed() && inv->count("--variant") == 0) c.variant = "upper";
        if (solve_cmd->parsed() && solve_cmd->count("--fn") == 0) c.fn = "const:1";

        std::unique_ptr<CsvTable> table;
        if (coeffs->parsed()) table = std::make_unique<CsvTable>(run_coeffs(c));
        if (deriv->parsed()) table = std::make_unique<CsvTable>(run_deriv(c));
        if (integ->parsed()) table = std::make_unique<CsvTable>(run_integ(c));
        if (inv->parsed()) table = std::make_unique<CsvTable>(run_invert_check(c));
        if (solve_cmd->parsed()) table = std::make_unique<CsvTable>(run_solve(c, err));
        if (line->parsed()) table = std::make_unique<CsvTable>(run_line(c));
        if (conv->parsed()) table = std::make_unique<CsvTable>(run_converge(c));

        if (c.out_path.empty()) {
            table->write(out);
        } else {
            std::ofstream os(c.out_path, std::ios::binary);
            if (!os) throw DomainError("cannot open " + c.out_path + " for writing");
            table->write(os);
        }
        if (!c.gnuplot_path.empty()) write_gnuplot(c, *table);
        return kOk;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumerical;
    }
}

}  // namespace fractoep::cli
