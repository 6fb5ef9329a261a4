// Command-line front end for the wavelike ship-wave Green's function term:
// point evaluation, grid sweeps to CSV, benchmark-table reproduction, engine
// comparison, directional derivatives and quadrature-weight inspection.
//
// Exit codes: 0 success, 2 domain error, 3 non-convergence, 4 I/O error,
// 5 benchmark miss.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "shipwave/derivatives.hpp"
#include "shipwave/wavelike.hpp"

namespace {

using namespace shipwave;

constexpr int kExitDomain = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitIo = 4;
constexpr int kExitBenchmarkMiss = 5;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);  // 12 significant digits
    return buf;
}

struct CommonFlags {
    std::string method = "auto";
    double eps = 1e-10;
    int order = 100;
    bool infty = false;
    double y0 = 0.0;
    std::string out_path;
    int jobs = 1;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--method", f.method, "Engine: auto|levin|levin-plain|cc")
        ->check(CLI::IsMember({"auto", "levin", "levin-plain", "cc"}));
    cmd->add_option("--eps", f.eps, "Tolerance for the quadrature / doubling loop");
    cmd->add_option("-M,--order", f.order, "Collocation order (disables doubling)");
    cmd->add_flag("--infty", f.infty, "Evaluate the assembled wavelike term");
    cmd->add_option("--y0", f.y0, "Source depth added to y");
    cmd->add_option("-o,--output", f.out_path, "Output file (default stdout)");
    cmd->add_option("--jobs", f.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-timing", f.no_timing, "Report 0 in timing columns");
}

EvalConfig make_config(const CommonFlags& f, bool order_given) {
    EvalConfig cfg;
    if (f.method == "levin") cfg.method = Method::levin;
    else if (f.method == "levin-plain") cfg.method = Method::levin_plain;
    else if (f.method == "cc") cfg.method = Method::cc;
    else cfg.method = Method::automatic;
    cfg.eps = f.eps;
    cfg.levin_order = f.order;
    cfg.levin_doubling = !order_given;
    return cfg;
}

long long elapsed_us(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

EvalReport evaluate(double x, double y, double z, const CommonFlags& f,
                    const EvalConfig& cfg) {
    if (f.infty) return eval_I_infinity(x, y + f.y0, z, cfg);
    return eval_I(FieldPoint{x, y + f.y0, z}, cfg);
}

// ---------------------------------------------------------------- eval ----

int run_eval(double x, double y, double z, const CommonFlags& f, bool order_given) {
    const EvalConfig cfg = make_config(f, order_given);
    const auto t0 = std::chrono::steady_clock::now();
    const EvalReport r = evaluate(x, y, z, f, cfg);
    const long long us = f.no_timing ? 0 : elapsed_us(t0);
    std::cout << "x,y,z,re,im,err_est,method,n_evals,D,theta,time_us\n"
              << num(x) << ',' << num(y) << ',' << num(z) << ',' << num(r.value.real())
              << ',' << num(r.value.imag()) << ',' << num(r.error_estimate) << ','
              << method_name(r.method_used) << ',' << r.eval_count << ','
              << num(r.d_param) << ',' << num(r.theta) << ',' << us << "\n";
    return r.converged ? 0 : kExitNoConvergence;
}

// ---------------------------------------------------------------- grid ----

struct GridSpec {
    double x_min = 0, x_max = 0;
    int x_count = 0;
    double z_min = 0, z_max = 0;
    int z_count = 0;
    std::vector<double> y_values;
};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

struct Row {
    double x, y, z;
    EvalReport rep;
    long long us;
};

// Evaluates all grid points (deterministic order kept by index), then streams
// rows x-major per fixed y.
std::vector<Row> sweep(const GridSpec& spec, const CommonFlags& f, const EvalConfig& cfg) {
    std::vector<Row> rows;
    for (double y : spec.y_values)
        for (double x : linspace(spec.x_min, spec.x_max, spec.x_count))
            for (double z : linspace(spec.z_min, spec.z_max, spec.z_count))
                rows.push_back({x, y, z, {}, 0});
    const int jobs = std::max(1, f.jobs);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int tid) {
        try {
            for (std::size_t i = tid; i < rows.size(); i += jobs) {
                const auto t0 = std::chrono::steady_clock::now();
                rows[i].rep = evaluate(rows[i].x, rows[i].y, rows[i].z, f, cfg);
                rows[i].us = f.no_timing ? 0 : elapsed_us(t0);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

int run_grid(const GridSpec& spec, const CommonFlags& f, bool order_given) {
    if (spec.x_count < 2 || spec.z_count < 2)
        throw std::domain_error("grid: axis counts must be >= 2");
    if (spec.y_values.empty()) throw std::domain_error("grid: need at least one y value");
    if (!std::isfinite(spec.x_min) || !std::isfinite(spec.x_max) ||
        !std::isfinite(spec.z_min) || !std::isfinite(spec.z_max))
        throw std::domain_error("grid: ranges must be finite");
    const EvalConfig cfg = make_config(f, order_given);
    const auto rows = sweep(spec, f, cfg);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!f.out_path.empty()) {
        file.open(f.out_path);
        if (!file) throw std::ios_base::failure("grid: cannot open " + f.out_path);
        os = &file;
    }
    *os << "x,y,z,re,im,err_est,method,n_evals,converged,time_us\n";
    bool all_converged = true;
    for (const Row& r : rows) {
        all_converged = all_converged && r.rep.converged;
        *os << num(r.x) << ',' << num(r.y) << ',' << num(r.z) << ','
            << num(r.rep.value.real()) << ',' << num(r.rep.value.imag()) << ','
            << num(r.rep.error_estimate) << ',' << method_name(r.rep.method_used) << ','
            << r.rep.eval_count << ',' << (r.rep.converged ? 1 : 0) << ',' << r.us << "\n";
    }
    os->flush();
    if (!*os) throw std::ios_base::failure("grid: write failed");
    return all_converged ? 0 : kExitNoConvergence;
}

// -------------------------------------------------------------- table1 ----

struct BenchmarkEntry {
    double y, z, value;
};

// Published benchmark values of the wavelike term at x = -1.
constexpr BenchmarkEntry kBenchmark[] = {
    {-0.5, 0.5, -0.3132089735},  {-0.1, 0.5, -0.4347821474},
    {-0.01, 0.5, -0.4093149760}, {0.0, 0.5, -0.4039184710},
    {-0.5, 0.1, -0.4288349681},  {-0.1, 0.1, -1.0716691716},
    {-0.01, 0.1, -2.1157417380}, {0.0, 0.1, -2.5160949098},
    {-0.5, 0.01, -0.4349760923}, {-0.1, 0.01, -0.9188289512},
    {-0.01, 0.01, -0.7896492217},{0.0, 0.01, 3.6856412628},
};

int run_table1(const CommonFlags& f, bool order_given) {
    CommonFlags flags = f;
    flags.infty = true;
    EvalConfig cfg = make_config(flags, order_given);
    if (cfg.method == Method::automatic) cfg.method = Method::cc;
    std::printf("%8s %8s %16s %16s %10s\n", "y", "z", "computed", "reference", "|delta|");
    double worst = 0.0;
    for (const BenchmarkEntry& e : kBenchmark) {
        const EvalReport r = eval_I_infinity(-1.0, e.y + flags.y0, e.z, cfg);
        const double delta = std::fabs(r.value.real() - e.value);
        worst = std::max(worst, delta);
        std::printf("%8.2f %8.2f %16.10f %16.10f %10.2e\n", e.y, e.z, r.value.real(),
                    e.value, delta);
    }
    std::printf("worst |delta| = %.2e (gate 1e-8)\n", worst);
    return worst <= 1e-8 ? 0 : kExitBenchmarkMiss;
}

// ------------------------------------------------------------- compare ----

int run_compare(const GridSpec& spec, const CommonFlags& f) {
    if (spec.x_count < 2 || spec.z_count < 2)
        throw std::domain_error("compare: axis counts must be >= 2");
    if (spec.y_values.empty()) throw std::domain_error("compare: need at least one y value");

    struct CmpRow {
        double x, y, z;
        Complex lv, cv;
        double lerr, diff;
        bool pass;
    };
    std::vector<CmpRow> rows;
    for (double y : spec.y_values)
        for (double x : linspace(spec.x_min, spec.x_max, spec.x_count))
            for (double z : linspace(spec.z_min, spec.z_max, spec.z_count))
                rows.push_back({x, y, z, {}, {}, 0, 0, false});
    const int jobs = std::max(1, f.jobs);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int tid) {
        try {
            for (std::size_t i = tid; i < rows.size(); i += jobs) {
                CmpRow& r = rows[i];
                const FieldPoint p{r.x, r.y + f.y0, r.z};
                const auto lev = levin::solve_corrected(p, f.order);
                const auto ccr = cc::integrate(p, f.eps);
                r.lv = lev.value;
                r.cv = ccr.value;
                r.lerr = lev.error_estimate;
                r.diff = std::abs(lev.value - ccr.value);
                r.pass = r.diff <= std::max(lev.error_estimate, f.eps);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!f.out_path.empty()) {
        file.open(f.out_path);
        if (!file) throw std::ios_base::failure("compare: cannot open " + f.out_path);
        os = &file;
    }
    *os << "x,y,z,levin_re,levin_im,levin_err,cc_re,cc_im,abs_diff,pass\n";
    for (const CmpRow& r : rows)
        *os << num(r.x) << ',' << num(r.y) << ',' << num(r.z) << ',' << num(r.lv.real())
            << ',' << num(r.lv.imag()) << ',' << num(r.lerr) << ',' << num(r.cv.real())
            << ',' << num(r.cv.imag()) << ',' << num(r.diff) << ',' << (r.pass ? 1 : 0)
            << "\n";
    os->flush();
    if (!*os) throw std::ios_base::failure("compare: write failed");
    return 0;
}

// --------------------------------------------------------------- deriv ----

int run_deriv(double x, double y, double z, const Direction& dir, const CommonFlags& f) {
    const FieldPoint p{x, y + f.y0, z};
    const auto t0 = std::chrono::steady_clock::now();
    Complex value;
    double err = 0.0;
    long long evals = 0;
    std::string method = f.method;
    bool converged = true;
    if (f.method == "cc" || (f.method == "auto" && p.y >= 0.0)) {
        const auto r = deriv_cc(p, dir, f.eps);
        value = r.value;
        err = f.eps;
        evals = r.eval_count;
        converged = r.converged;
        method = "cc";
    } else if (f.method == "levin" || f.method == "levin-plain" || f.method == "auto") {
        const auto r = deriv_levin(p, dir, f.order, f.method == "levin");
        value = r.value;
        err = r.error_estimate;
        evals = r.order + 1;
        method = f.method == "levin" ? "levin" : "levin_plain";
    }
    const long long us = f.no_timing ? 0 : elapsed_us(t0);
    std::cout << "x,y,z,l1,l2,l3,re,im,err_est,method,n_evals,time_us\n"
              << num(x) << ',' << num(y) << ',' << num(z) << ',' << num(dir.l1) << ','
              << num(dir.l2) << ',' << num(dir.l3) << ',' << num(value.real()) << ','
              << num(value.imag()) << ',' << num(err) << ',' << method << ',' << evals
              << ',' << us << "\n";
    return converged ? 0 : kExitNoConvergence;
}

// ------------------------------------------------------------- weights ----

int run_weights(int n, const CommonFlags& f) {
    const auto w = cc::weights(n);
    const auto t = cc::nodes(n);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!f.out_path.empty()) {
        file.open(f.out_path);
        if (!file) throw std::ios_base::failure("weights: cannot open " + f.out_path);
        os = &file;
    }
    *os << "k,node,weight\n";
    for (int k = 0; k <= n; ++k)
        *os << k << ',' << num(t[k]) << ',' << num(w.w[k]) << "\n";
    os->flush();
    if (!*os) throw std::ios_base::failure("weights: write failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wavelike term of the Kelvin wave-source Green's function"};
    app.require_subcommand(1);

    CommonFlags flags;
    double x = 0, y = 0, z = 0;
    Direction dir{1.0, 0.0, 0.0};
    GridSpec spec;
    int weights_n = 2;

    auto* c_eval = app.add_subcommand("eval", "Evaluate the wave integral at one point");
    c_eval->add_option("-x", x, "Streamwise coordinate (<= 0)")->required();
    c_eval->add_option("-y", y, "Vertical coordinate (<= 0)")->required();
    c_eval->add_option("-z", z, "Transverse coordinate")->required();
    add_common(c_eval, flags);

    auto* c_grid = app.add_subcommand("grid", "Sweep a grid and write CSV");
    c_grid->add_option("--xmin", spec.x_min)->required();
    c_grid->add_option("--xmax", spec.x_max)->required();
    c_grid->add_option("--nx", spec.x_count)->required();
    c_grid->add_option("--zmin", spec.z_min)->required();
    c_grid->add_option("--zmax", spec.z_max)->required();
    c_grid->add_option("--nz", spec.z_count)->required();
    c_grid->add_option("-y,--y", spec.y_values, "Fixed y values (repeatable)")->required();
    add_common(c_grid, flags);

    auto* c_table = app.add_subcommand("table1", "Reproduce the benchmark table at x = -1");
    add_common(c_table, flags);

    auto* c_cmp = app.add_subcommand("compare", "Collocation vs quadrature on a grid");
    c_cmp->add_option("--xmin", spec.x_min)->required();
    c_cmp->add_option("--xmax", spec.x_max)->required();
    c_cmp->add_option("--nx", spec.x_count)->required();
    c_cmp->add_option("--zmin", spec.z_min)->required();
    c_cmp->add_option("--zmax", spec.z_max)->required();
    c_cmp->add_option("--nz", spec.z_count)->required();
    c_cmp->add_option("-y,--y", spec.y_values, "Fixed y values (repeatable)")->required();
    add_common(c_cmp, flags);

    auto* c_deriv = app.add_subcommand("deriv", "Directional derivative at one point");
    c_deriv->add_option("-x", x)->required();
    c_deriv->add_option("-y", y)->required();
    c_deriv->add_option("-z", z)->required();
    c_deriv->add_option("--lx", dir.l1, "Direction component along x");
    c_deriv->add_option("--ly", dir.l2, "Direction component along y");
    c_deriv->add_option("--lz", dir.l3, "Direction component along z");
    add_common(c_deriv, flags);

    auto* c_w = app.add_subcommand("weights", "Print quadrature weights for n intervals");
    c_w->add_option("-n", weights_n, "Even interval count")->required();
    add_common(c_w, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitDomain;
    }

    try {
        if (c_eval->parsed())
            return run_eval(x, y, z, flags, c_eval->count("-M") > 0);
        if (c_grid->parsed())
            return run_grid(spec, flags, c_grid->count("-M") > 0);
        if (c_table->parsed())
            return run_table1(flags, c_table->count("-M") > 0);
        if (c_cmp->parsed())
            return run_compare(spec, flags);
        if (c_deriv->parsed())
            return run_deriv(x, y, z, dir, flags);
        if (c_w->parsed())
            return run_weights(weights_n, flags);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}
