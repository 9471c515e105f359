// morsewig: stationary Wigner matrix elements for exponential potentials.
//
// Subcommands:
//   spectrum             list bound levels and the scattering-energy formula
//   eval                 evaluate a matrix-element field to CSV/JSON files
//   verify               run the difference / star / oracle check suites
//   specfun eval         print one special-function value to 17 digits
//   factor eval|verify   evaluate a factor or its difference-equation residual
//   oracle wigner|wavefn brute-force wavefunction-path outputs, same schema
//
// Exit codes: 0 success, 1 verification/evaluation failure, 2 usage error.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "morsewig/errors.hpp"
#include "morsewig/factors.hpp"
#include "morsewig/io.hpp"
#include "morsewig/mellin.hpp"
#include "morsewig/model.hpp"
#include "morsewig/schrodinger.hpp"
#include "morsewig/specfun.hpp"
#include "morsewig/starverify.hpp"

using namespace morsewig;
using nlohmann::ordered_json;

static const char* kVersion = "morsewig 1.0.0";

// ---------------------------------------------------------------------------
// shared option bundles

struct SystemOpts {
    std::string config_path;
    double b = std::numeric_limits<double>::quiet_NaN();

    MorseSystem build() const {
        MorseSystem sys;  // built-in defaults: hbar = m = alpha = kappa = 1
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw DomainError("cannot open config file " + config_path);
            nlohmann::json j = nlohmann::json::parse(in);
            from_json(j, sys);
        }
        if (!std::isnan(b)) {
            sys.beta = b * sys.alpha / sys.kappa;  // flag overrides config
            sys.validate();
        }
        return sys;
    }
};

static void add_system_opts(CLI::App* cmd, SystemOpts& o) {
    cmd->add_option("--config", o.config_path, "JSON file with system parameters");
    cmd->add_option("--b", o.b, "shape parameter b = beta kappa / alpha");
}

struct LabelOpts {
    double kL = std::numeric_limits<double>::quiet_NaN();
    double kR = std::numeric_limits<double>::quiet_NaN();
    int nu = -1;

    std::pair<SpectralLabel, SpectralLabel> build(const MorseSystem& sys) const {
        if (nu >= 0) {
            if (nu >= bound_count(sys))
                throw DomainError("level nu is beyond the bound spectrum");
            return {SpectralLabel::bound(nu), SpectralLabel::bound(nu)};
        }
        double kl = std::isnan(kL) ? 1.0 : kL;
        double kr = std::isnan(kR) ? kl : kR;
        return {SpectralLabel::scattering(kl), SpectralLabel::scattering(kr)};
    }
};

static void add_label_opts(CLI::App* cmd, LabelOpts& o) {
    cmd->add_option("--kL", o.kL, "left scattering momentum (default 1)");
    cmd->add_option("--kR", o.kR, "right scattering momentum (default: kL)");
    cmd->add_option("--nu", o.nu, "bound level index (diagonal bound element)");
}

struct GridOpts {
    double xmin = -1.0, xmax = 3.0, pmin = -3.0, pmax = 3.0;
    int nx = 21, np = 21;

    std::vector<double> xs() const { return linspace(xmin, xmax, nx); }
    std::vector<double> ps() const { return linspace(pmin, pmax, np); }

    static std::vector<double> linspace(double a, double b, int n) {
        if (n < 1) throw DomainError("grid needs at least one point");
        std::vector<double> v;
        for (int i = 0; i < n; ++i)
            v.push_back(n == 1 ? a : a + (b - a) * i / double(n - 1));
        return v;
    }
};

static void add_grid_opts(CLI::App* cmd, GridOpts& o) {
    cmd->add_option("--xmin", o.xmin, "grid lower x");
    cmd->add_option("--xmax", o.xmax, "grid upper x");
    cmd->add_option("--nx", o.nx, "number of x points");
    cmd->add_option("--pmin", o.pmin, "grid lower p");
    cmd->add_option("--pmax", o.pmax, "grid upper p");
    cmd->add_option("--np", o.np, "number of p points");
}

static std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

static std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

static ordered_json system_json(const MorseSystem& sys) {
    nlohmann::json j;
    to_json(j, sys);
    ordered_json o;
    o["hbar"] = j["hbar"];
    o["mass"] = j["mass"];
    o["alpha"] = j["alpha"];
    o["kappa"] = j["kappa"];
    o["beta"] = j["beta"];
    o["b"] = sys.b();
    return o;
}

// ---------------------------------------------------------------------------
// spectrum

static int cmd_spectrum(const SystemOpts& so) {
    MorseSystem sys = so.build();
    ordered_json out;
    out["system"] = system_json(sys);
    out["scattering_energy"] = "E(k) = hbar^2 k^2 / (2 m)";
    ordered_json rows = ordered_json::array();
    for (int nu = 0; nu < bound_count(sys); ++nu) {
        rows.push_back({{"nu", nu},
                        {"energy", energy_of(sys, SpectralLabel::bound(nu))}});
    }
    out["bound"] = rows;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// field evaluation (closed / oracle / series) and PPM rendering

static WignerField eval_oracle(const MorseSystem& sys, const SpectralLabel& L,
                               const SpectralLabel& R,
                               const std::vector<double>& xs,
                               const std::vector<double>& ps, double tol) {
    auto mk = [&](const SpectralLabel& l) {
        return std::function<cplx(double)>([&sys, l](double x) {
            if (l.is_bound()) return cplx(psi_bound(sys, l.nu, x));
            return psi_scattering(sys, l.k, x);
        });
    };
    auto psiL = mk(L), psiR = mk(R);
    WignerField f;
    f.x = xs;
    f.p = ps;
    f.values.assign(xs.size() * ps.size(), cplx(0.0));
    f.err.assign(f.values.size(), tol);
    f.ok.assign(f.values.size(), 0);
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = 0; j < ps.size(); ++j) {
            size_t idx = i * ps.size() + j;
            try {
                f.values[idx] = wigner_transform_numeric(sys, psiL, psiR, xs[i],
                                                         ps[j], tol);
                f.ok[idx] = 1;
            } catch (const Error&) {
            }
        }
    }
    return f;
}

static WignerField eval_series(const MorseSystem& sys, const SpectralLabel& L,
                               const SpectralLabel& R,
                               const std::vector<double>& xs,
                               const std::vector<double>& ps, double tol) {
    if (L.is_bound() || R.is_bound())
        throw DomainError("--source series supports scattering labels only");
    WignerField f;
    f.x = xs;
    f.p = ps;
    f.values.assign(xs.size() * ps.size(), cplx(0.0));
    f.err.assign(f.values.size(), 0.0);
    f.ok.assign(f.values.size(), 0);
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = 0; j < ps.size(); ++j) {
            size_t idx = i * ps.size() + j;
            try {
                SeriesResult r = wigner_series(sys, xs[i], ps[j], L.k, R.k, tol);
                f.values[idx] = r.value;
                f.err[idx] = r.last_shell;
                f.ok[idx] = 1;
            } catch (const Error&) {
            }
        }
    }
    return f;
}

static void write_ppm(const std::string& path, const WignerField& f) {
    // diverging map on Re(rho): blue (negative) - white (zero) - red (positive)
    double amax = 1e-300;
    for (const cplx& v : f.values) amax = std::max(amax, std::abs(v.real()));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_ppm: cannot open " + path);
    size_t w = f.p.size(), h = f.x.size();
    out << "P6\n" << w << " " << h << "\n255\n";
    for (size_t i = 0; i < h; ++i) {
        for (size_t j = 0; j < w; ++j) {
            double t = f.values[i * w + j].real() / amax;  // in [-1, 1]
            double r = t >= 0 ? 1.0 : 1.0 + t;
            double g = 1.0 - std::abs(t);
            double b = t <= 0 ? 1.0 : 1.0 - t;
            char px[3] = {char(int(255.0 * r + 0.5)), char(int(255.0 * g + 0.5)),
                          char(int(255.0 * b + 0.5))};
            out.write(px, 3);
        }
    }
}

struct EvalOpts {
    SystemOpts sys;
    LabelOpts label;
    GridOpts grid;
    std::string source = "closed";
    std::string out_dir = ".";
    double contour_c = std::numeric_limits<double>::quiet_NaN();
    double tol = std::numeric_limits<double>::quiet_NaN();
    bool ppm = false;
};

static int run_eval(const EvalOpts& eo, const std::string& cmdline,
                    const std::string& forced_source = "") {
    std::string source = forced_source.empty() ? eo.source : forced_source;
    MorseSystem sys = eo.sys.build();
    auto [L, R] = eo.label.build(sys);
    std::vector<double> xs = eo.grid.xs(), ps = eo.grid.ps();

    ContourSpec spec;
    std::optional<ContourSpec> user;
    if (!std::isnan(eo.contour_c) || !std::isnan(eo.tol)) {
        if (!std::isnan(eo.contour_c)) spec.c = eo.contour_c;
        if (!std::isnan(eo.tol)) spec.rel_tol = eo.tol;
        user = spec;
    }

    WignerField f;
    if (source == "closed") {
        f = wigner_field(sys, L, R, xs, ps, user);
    } else if (source == "oracle") {
        f = eval_oracle(sys, L, R, xs, ps, std::isnan(eo.tol) ? 1e-8 : eo.tol);
    } else if (source == "series") {
        f = eval_series(sys, L, R, xs, ps, std::isnan(eo.tol) ? 1e-7 : eo.tol);
    } else {
        throw DomainError("unknown --source: " + source);
    }

    std::filesystem::create_directories(eo.out_dir);
    std::string csv = eo.out_dir + "/field.csv";
    std::string jsn = eo.out_dir + "/field.json";
    write_field_csv(csv, f);
    ordered_json j = field_to_json(f, sys, L, R, user.value_or(ContourSpec{}));
    j["source"] = source;
    {
        std::ofstream out(jsn);
        out << j.dump(2) << "\n";
    }
    RunManifest m;
    m.command_line = cmdline;
    m.version = kVersion;
    m.timestamp = now_iso8601();
    m.config = system_json(sys);
    m.outputs = {csv, jsn};
    if (eo.ppm) {
        std::string ppm = eo.out_dir + "/field.ppm";
        write_ppm(ppm, f);
        m.outputs.push_back(ppm);
    }
    write_manifest(eo.out_dir + "/manifest.json", m);

    size_t bad = 0;
    for (uint8_t o : f.ok)
        if (!o) ++bad;
    if (bad) {
        std::cerr << bad << " of " << f.ok.size()
                  << " points failed; see the ok mask in " << jsn << "\n";
        return 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify suites

static std::vector<cplx> contour_samples(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> un(-2.5, 2.5);
    std::vector<cplx> pts;
    for (int i = 0; i < n; ++i) pts.push_back(cplx(-0.25, un(rng)));
    return pts;
}

static ordered_json difference_suite(const MorseSystem& sys, double k,
                                     double tol, bool& failed) {
    ordered_json out;
    out["tolerance"] = tol;
    ordered_json checks = ordered_json::array();
    auto pts = contour_samples(20, 20240817);
    double b = sys.b();

    auto run_family = [&](const char* name, const FactorSolution& w) {
        DifferenceReport rep = difference_report(w, pts);
        checks.push_back({{"family", name},
                          {"b", w.b},
                          {"max_residual", rep.max_residual},
                          {"pass", rep.max_residual < tol}});
        if (!(rep.max_residual < tol)) failed = true;
    };
    run_family("general-b", FactorSolution::real_b(b, k, sys.alpha));
    long bi = std::lround(b);
    if (std::abs(b - bi) < 1e-9 && bi >= 0)
        run_family("gamma-sum", FactorSolution::integer_b(int(bi), k, sys.alpha));
    for (int nu = 0; nu < bound_count(sys); ++nu)
        run_family("bound", FactorSolution::bound(b, nu, sys.alpha));
    out["checks"] = checks;
    return out;
}

static ordered_json star_suite(const MorseSystem& sys, const SpectralLabel& L,
                               const SpectralLabel& R, double tol, bool perturb,
                               bool& failed) {
    std::vector<double> xs = GridOpts::linspace(-1.0 / sys.alpha, 3.0 / sys.alpha, 5);
    std::vector<double> ps = GridOpts::linspace(-3.0 * sys.hbar * sys.alpha,
                                                3.0 * sys.hbar * sys.alpha, 5);
    double dE = 0.0;
    if (perturb) {
        double E = std::max(std::abs(energy_of(sys, L)), std::abs(energy_of(sys, R)));
        dE = 0.01 * std::max(E, 1.0);
    }
    StarReport rep = star_report(sys, L, R, xs, ps, dE);
    ordered_json out;
    out["tolerance"] = tol;
    out["perturbation"] = dE;
    out["max_left"] = rep.max_left;
    out["max_right"] = rep.max_right;
    out["max_residual"] = rep.max_residual;
    bool pass = rep.max_residual < tol;
    out["pass"] = pass;
    if (!pass) failed = true;
    return out;
}

static ordered_json oracle_suite(const MorseSystem& sys, const SpectralLabel& L,
                                 const SpectralLabel& R, double tol, bool& failed) {
    auto mk = [&](const SpectralLabel& l) {
        return std::function<cplx(double)>([&sys, l](double x) {
            if (l.is_bound()) return cplx(psi_bound(sys, l.nu, x));
            return psi_scattering(sys, l.k, x);
        });
    };
    auto psiL = mk(L), psiR = mk(R);
    std::vector<std::pair<double, double>> pts = {
        {0.0, 0.5}, {0.4, 0.5}, {0.0, 1.1}, {0.4, -0.8}};
    cplx ratio;
    double worst = 0.0;
    for (size_t i = 0; i < pts.size(); ++i) {
        auto [x, p] = pts[i];
        cplx oracle = wigner_transform_numeric(sys, psiL, psiR, x, p);
        cplx closed = wigner_point(sys, L, R, x, p).value;
        if (i == 0) {
            ratio = closed / oracle;
            continue;
        }
        worst = std::max(worst, std::abs(closed / (ratio * oracle) - 1.0));
    }
    ordered_json out;
    out["tolerance"] = tol;
    out["calibration"] = {ratio.real(), ratio.imag()};
    out["max_relative_error"] = worst;
    bool pass = worst < tol;
    out["pass"] = pass;
    if (!pass) failed = true;
    return out;
}

struct VerifyOpts {
    SystemOpts sys;
    LabelOpts label;
    std::string suite = "all";
    std::string out_dir;
    double tol = std::numeric_limits<double>::quiet_NaN();
    bool perturb = false;
};

static int run_verify(const VerifyOpts& vo, const std::string& cmdline) {
    MorseSystem sys = vo.sys.build();
    auto [L, R] = vo.label.build(sys);
    bool failed = false;
    ordered_json rep;
    rep["schema"] = "moyal-morse/verify/1";
    rep["command_line"] = cmdline;
    rep["system"] = system_json(sys);
    if (vo.suite == "difference" || vo.suite == "all") {
        double k = L.is_bound() ? 1.0 : L.k;
        rep["difference"] = difference_suite(
            sys, k, std::isnan(vo.tol) ? 1e-7 : vo.tol, failed);
    }
    if (vo.suite == "star" || vo.suite == "all") {
        rep["star"] = star_suite(sys, L, R, std::isnan(vo.tol) ? 1e-6 : vo.tol,
                                 vo.perturb, failed);
    }
    if (vo.suite == "oracle" || vo.suite == "all") {
        rep["oracle"] =
            oracle_suite(sys, L, R, std::isnan(vo.tol) ? 1e-4 : vo.tol, failed);
    }
    if (!rep.contains("difference") && !rep.contains("star") &&
        !rep.contains("oracle"))
        throw DomainError("unknown --suite: " + vo.suite);
    rep["pass"] = !failed;
    std::cout << rep.dump(2) << "\n";
    if (!vo.out_dir.empty()) {
        std::filesystem::create_directories(vo.out_dir);
        std::ofstream out(vo.out_dir + "/report.json");
        out << rep.dump(2) << "\n";
    }
    return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// specfun eval

static int run_specfun(const std::string& name, const std::vector<double>& a) {
    auto need = [&](size_t n) {
        if (a.size() != n)
            throw DomainError("specfun eval " + name + " expects " +
                              std::to_string(n) + " numeric arguments");
    };
    cplx v;
    if (name == "gamma") {
        need(2);
        v = gamma_c(cplx(a[0], a[1]));
    } else if (name == "kummer_m") {
        need(6);
        v = kummer_m(cplx(a[0], a[1]), cplx(a[2], a[3]), cplx(a[4], a[5]));
    } else if (name == "tricomi_u") {
        need(6);
        v = tricomi_u(cplx(a[0], a[1]), cplx(a[2], a[3]), cplx(a[4], a[5]));
    } else if (name == "gauss_2f1") {
        need(8);
        v = gauss_2f1(cplx(a[0], a[1]), cplx(a[2], a[3]), cplx(a[4], a[5]),
                      cplx(a[6], a[7]));
    } else if (name == "bessel_k") {
        need(4);
        v = bessel_k(cplx(a[0], a[1]), cplx(a[2], a[3]));
    } else if (name == "laguerre") {
        need(3);
        v = laguerre_assoc(int(std::lround(a[0])), a[1], a[2]);
    } else if (name == "whittaker_m") {
        need(6);
        v = whittaker_m(cplx(a[0], a[1]), cplx(a[2], a[3]), cplx(a[4], a[5]));
    } else if (name == "whittaker_w") {
        need(6);
        v = whittaker_w(cplx(a[0], a[1]), cplx(a[2], a[3]), cplx(a[4], a[5]));
    } else {
        throw DomainError("unknown function: " + name);
    }
    std::printf("%.17g %.17g\n", v.real(), v.imag());
    return 0;
}

// ---------------------------------------------------------------------------
// factor eval / verify

struct FactorOpts {
    SystemOpts sys;
    double k = 1.0, kim = 0.0;
    int nu = -1;
    double tre = -0.25, tim = 0.4;
    double tol = 1e-7;
    int npts = 20;
};

static FactorSolution factor_from_opts(const FactorOpts& fo, const MorseSystem& sys) {
    if (fo.nu >= 0) return FactorSolution::bound(sys.b(), fo.nu, sys.alpha);
    return FactorSolution::real_b(sys.b(), cplx(fo.k, fo.kim), sys.alpha);
}

static int run_factor_eval(const FactorOpts& fo) {
    MorseSystem sys = fo.sys.build();
    FactorSolution w = factor_from_opts(fo, sys);
    cplx v = w(cplx(fo.tre, fo.tim));
    ordered_json out;
    out["b"] = w.b;
    out["t"] = {fo.tre, fo.tim};
    out["value"] = {v.real(), v.imag()};
    std::cout << out.dump(2) << "\n";
    return 0;
}

static int run_factor_verify(const FactorOpts& fo) {
    MorseSystem sys = fo.sys.build();
    FactorSolution w = factor_from_opts(fo, sys);
    DifferenceReport rep = difference_report(w, contour_samples(fo.npts, 4242));
    ordered_json out;
    out["schema"] = "moyal-morse/difference-report/1";
    out["b"] = w.b;
    out["tolerance"] = fo.tol;
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < rep.points.size(); ++i)
        rows.push_back({{"t", {rep.points[i].real(), rep.points[i].imag()}},
                        {"residual", rep.residuals[i]}});
    out["samples"] = rows;
    out["max_residual"] = rep.max_residual;
    bool pass = rep.max_residual < fo.tol;
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// oracle wavefn

static int run_oracle_wavefn(const SystemOpts& so, const LabelOpts& lo,
                             const GridOpts& go, const std::string& out_dir,
                             const std::string& cmdline) {
    MorseSystem sys = so.build();
    auto [L, R] = lo.build(sys);
    (void)R;
    WignerField f;  // wavefunction samples carried in the shared field schema
    f.x = go.xs();
    f.p = {0.0};
    for (double x : f.x) {
        cplx v = L.is_bound() ? cplx(psi_bound(sys, L.nu, x))
                              : psi_scattering(sys, L.k, x);
        f.values.push_back(v);
        f.err.push_back(0.0);
        f.ok.push_back(1);
    }
    std::filesystem::create_directories(out_dir);
    std::string csv = out_dir + "/wavefn.csv";
    std::string jsn = out_dir + "/wavefn.json";
    write_field_csv(csv, f);
    ordered_json j = field_to_json(f, sys, L, L, ContourSpec{});
    j["source"] = "oracle";
    {
        std::ofstream out(jsn);
        out << j.dump(2) << "\n";
    }
    RunManifest m;
    m.command_line = cmdline;
    m.version = kVersion;
    m.timestamp = now_iso8601();
    m.config = system_json(sys);
    m.outputs = {csv, jsn};
    write_manifest(out_dir + "/manifest.json", m);
    return 0;
}

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"stationary Wigner functions for exponential potentials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    std::string cmdline = join_args(argc, argv);

    SystemOpts spec_sys;
    CLI::App* spectrum = app.add_subcommand("spectrum", "list bound energies");
    add_system_opts(spectrum, spec_sys);

    EvalOpts eo;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a Wigner field");
    add_system_opts(eval, eo.sys);
    add_label_opts(eval, eo.label);
    add_grid_opts(eval, eo.grid);
    eval->add_option("--contour-c", eo.contour_c, "contour abscissa override");
    eval->add_option("--tol", eo.tol, "evaluation tolerance");
    eval->add_option("--source", eo.source, "closed | oracle | series")
        ->check(CLI::IsMember({"closed", "oracle", "series"}));
    eval->add_option("--out", eo.out_dir, "output directory");
    eval->add_flag("--ppm", eo.ppm, "also render a PPM heatmap");

    VerifyOpts vo;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_system_opts(verify, vo.sys);
    add_label_opts(verify, vo.label);
    verify->add_option("--suite", vo.suite, "difference | star | oracle | all")
        ->check(CLI::IsMember({"difference", "star", "oracle", "all"}));
    verify->add_option("--tol", vo.tol, "override the suite tolerance");
    verify->add_option("--out", vo.out_dir, "directory for report.json");
    verify->add_flag("--perturb", vo.perturb,
                     "negative control: perturb the eigenvalues by 1%");

    CLI::App* specfun = app.add_subcommand("specfun", "special-function tools");
    specfun->require_subcommand(1);
    CLI::App* sf_eval = specfun->add_subcommand("eval", "print one value");
    std::string sf_name;
    std::vector<double> sf_args;
    sf_eval->add_option("name", sf_name, "function name")->required();
    sf_eval->add_option("args", sf_args, "numeric arguments (re im pairs)");

    CLI::App* factor = app.add_subcommand("factor", "Mellin-factor tools");
    factor->require_subcommand(1);
    FactorOpts fo;
    CLI::App* f_eval = factor->add_subcommand("eval", "evaluate one factor");
    CLI::App* f_verify =
        factor->add_subcommand("verify", "difference-equation residuals");
    for (CLI::App* c : {f_eval, f_verify}) {
        add_system_opts(c, fo.sys);
        c->add_option("--k", fo.k, "Re k");
        c->add_option("--kim", fo.kim, "Im k");
        c->add_option("--nu", fo.nu, "bound level (selects the bound family)");
    }
    f_eval->add_option("--tre", fo.tre, "Re t");
    f_eval->add_option("--tim", fo.tim, "Im t");
    f_verify->add_option("--tol", fo.tol, "residual tolerance");
    f_verify->add_option("--points", fo.npts, "number of sample points");

    CLI::App* oracle = app.add_subcommand("oracle", "wavefunction-path outputs");
    oracle->require_subcommand(1);
    EvalOpts ow;
    CLI::App* o_wigner =
        oracle->add_subcommand("wigner", "brute-force Wigner transform field");
    add_system_opts(o_wigner, ow.sys);
    add_label_opts(o_wigner, ow.label);
    add_grid_opts(o_wigner, ow.grid);
    o_wigner->add_option("--tol", ow.tol, "transform tolerance");
    o_wigner->add_option("--out", ow.out_dir, "output directory");
    o_wigner->add_flag("--ppm", ow.ppm, "also render a PPM heatmap");

    SystemOpts ws;
    LabelOpts wl;
    GridOpts wg;
    std::string w_out = ".";
    CLI::App* o_wavefn = oracle->add_subcommand("wavefn", "wavefunction samples");
    add_system_opts(o_wavefn, ws);
    add_label_opts(o_wavefn, wl);
    o_wavefn->add_option("--xmin", wg.xmin, "grid lower x");
    o_wavefn->add_option("--xmax", wg.xmax, "grid upper x");
    o_wavefn->add_option("--nx", wg.nx, "number of x points");
    o_wavefn->add_option("--out", w_out, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2; --help/--version 0
    }

    try {
        if (*spectrum) return cmd_spectrum(spec_sys);
        if (*eval) return run_eval(eo, cmdline);
        if (*verify) return run_verify(vo, cmdline);
        if (*specfun) return run_specfun(sf_name, sf_args);
        if (*factor) return *f_eval ? run_factor_eval(fo) : run_factor_verify(fo);
        if (*oracle) {
            if (*o_wigner) return run_eval(ow, cmdline, "oracle");
            return run_oracle_wavefn(ws, wl, wg, w_out, cmdline);
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
