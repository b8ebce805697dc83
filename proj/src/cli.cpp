#include "pdmosc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "pdmosc/coherent.hpp"
#include "pdmosc/csv.hpp"
#include "pdmosc/errors.hpp"
#include "pdmosc/massmap.hpp"
#include "pdmosc/verify.hpp"
#include "pdmosc/xspace.hpp"
#include "pdmosc/yspace.hpp"

namespace pdmosc::cli {

namespace {

using massmap::MassProfile;

struct GridSpec {
    double min = 0.0;
    double max = 4.0;
    std::size_t points = 401;
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    if (std::sscanf(s.c_str(), "%lf,%lf,%zu", &g.min, &g.max, &g.points) != 3 ||
        g.points < 2 || !(g.max > g.min))
        throw CLI::ValidationError("--grid expects min,max,points");
    return g;
}

std::complex<double> parse_z(const std::string& s) {
    double re = 0.0, im = 0.0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) != 2)
        throw CLI::ValidationError("--z expects re,im");
    return {re, im};
}

// "0..5" or "3"
std::pair<int, int> parse_n_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(s);
        return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

void emit(const std::string& out_path, const csv::Table& t) {
    if (out_path.empty())
        std::cout << csv::to_string(t);
    else
        csv::write_file(out_path, t);
}

int cmd_catalog(const std::string& filter) {
    struct Row {
        const char* name;
        const char* family;
        const char* mass;
        const char* bijection;
        const char* domain;
    };
    static const Row rows[] = {
        {"V1", "MDNT a=-1/4", "m/m0=(x0+lx)^-2", "s=ln(x0+lx)/l",
         "[(1-x0)/l,inf)"},
        {"V2", "MDNT a=(1-n)/(4n)", "m/m0=(x0+lx)^(-4n/(2n+1))",
         "s=(2n+1)(x0+lx)^(1/(2n+1))/l", "[-x0/l,inf)"},
        {"V3", "MINT a=-1/4", "m/m0=1/(1+(lx)^2)", "s=arcsinh(lx)/l",
         "[0,inf)"},
        {"V4", "MINT a=-1/4", "m/m0=e^(2lx)", "s=(e^(lx)-x0)/l",
         "[ln(x0)/l,inf)"},
        {"V5", "MINT a=-1/4 (x0=1)", "m/m0=e^(2lx)", "s=(e^(lx)-1)/l",
         "[0,inf)"},
        {"V6", "MINT a=-1/4 (x0=0)", "m/m0=e^(2lx)", "s=e^(lx)/l",
         "(-inf,inf)"},
        {"V7", "MINT a=-1/4 (x0=0,g0=2,l=1)", "m/m0=e^(2x)", "s=e^x",
         "(-inf,inf)"},
        {"LinearPdm", "any catalog mass", "V=s(x)^2", "-", "profile domain"},
    };
    std::string needle = filter;
    std::transform(needle.begin(), needle.end(), needle.begin(), ::toupper);
    for (const auto& r : rows) {
        std::string hay = std::string(r.name) + " " + r.family;
        std::transform(hay.begin(), hay.end(), hay.begin(), ::toupper);
        if (!needle.empty() && hay.find(needle) == std::string::npos) continue;
        std::printf("%-10s %-28s %-28s %-30s %s\n", r.name, r.family, r.mass,
                    r.bijection, r.domain);
    }
    return 0;
}

xspace::PdmSystem singular_from(const std::string& profile_rec, double g0) {
    return xspace::make_singular(massmap::parse_profile(profile_rec), g0);
}

int cmd_spectrum(double g0, const std::string& n_range,
                 const std::string& out) {
    const auto [n_lo, n_hi] = parse_n_range(n_range);
    if (n_lo < 0 || n_hi < n_lo)
        throw std::invalid_argument("spectrum: bad n range");
    const auto prm = yspace::params_from_g0(g0);
    csv::Table t;
    t.header = {"n", "energy"};
    t.columns.resize(2);
    for (int n = n_lo; n <= n_hi; ++n) {
        t.columns[0].push_back(n);
        t.columns[1].push_back(yspace::energy(prm, n));
    }
    emit(out, t);
    return 0;
}

int cmd_wavefunction(const std::string& profile_rec, double g0, int n,
                     const GridSpec& grid, const std::string& out) {
    const auto sys = singular_from(profile_rec, g0);
    csv::Table t;
    t.header = {"x", "value"};
    t.columns.resize(2);
    const double dx = (grid.max - grid.min) / static_cast<double>(grid.points - 1);
    for (std::size_t i = 0; i < grid.points; ++i) {
        const double x = grid.min + dx * static_cast<double>(i);
        t.columns[0].push_back(x);
        t.columns[1].push_back(xspace::psi_n(sys, n, x));
    }
    emit(out, t);
    return 0;
}

int cmd_potential(const std::string& profile_rec, double g0,
                  const GridSpec& grid, const std::string& out) {
    const auto sys = singular_from(profile_rec, g0);
    csv::Table t;
    t.header = {"x", "value"};
    t.columns.resize(2);
    const double dx = (grid.max - grid.min) / static_cast<double>(grid.points - 1);
    for (std::size_t i = 0; i < grid.points; ++i) {
        const double x = grid.min + dx * static_cast<double>(i);
        t.columns[0].push_back(x);
        t.columns[1].push_back(xspace::potential(sys, x));
    }
    emit(out, t);
    return 0;
}

int cmd_coherent(const std::string& kind_name, const std::string& mode,
                 const std::string& profile_rec, double g0,
                 std::complex<double> z, double tolerance,
                 const GridSpec& grid, const std::string& out) {
    coherent::Kind kind;
    std::string k = kind_name;
    std::transform(k.begin(), k.end(), k.begin(), ::tolower);
    if (k == "glauber")
        kind = coherent::Kind::Glauber;
    else if (k == "bg" || k == "barut-girardello")
        kind = coherent::Kind::BarutGirardello;
    else if (k == "perelomov")
        kind = coherent::Kind::Perelomov;
    else
        throw std::invalid_argument("coherent: unknown kind: " + kind_name);

    const auto profile = massmap::parse_profile(profile_rec);
    const auto sys = kind == coherent::Kind::Glauber
                         ? xspace::make_linear(profile)
                         : xspace::make_singular(profile, g0);
    const auto cs = coherent::build(kind, sys, z, tolerance);

    csv::Table t;
    if (mode == "coeffs") {
        t.header = {"n", "re", "im"};
        t.columns.resize(3);
        for (std::size_t l = 0; l < cs.coeffs.size(); ++l) {
            t.columns[0].push_back(static_cast<double>(l));
            t.columns[1].push_back(cs.coeffs[l].real());
            t.columns[2].push_back(cs.coeffs[l].imag());
        }
    } else if (mode == "table") {
        t.header = {"x", "re", "im", "abs2"};
        t.columns.resize(4);
        const double dx =
            (grid.max - grid.min) / static_cast<double>(grid.points - 1);
        for (std::size_t i = 0; i < grid.points; ++i) {
            const double x = grid.min + dx * static_cast<double>(i);
            const auto v = coherent::evaluate(cs, x);
            t.columns[0].push_back(x);
            t.columns[1].push_back(v.real());
            t.columns[2].push_back(v.imag());
            t.columns[3].push_back(std::norm(v));
        }
    } else {
        throw std::invalid_argument("coherent: mode must be table or coeffs");
    }
    emit(out, t);
    return 0;
}

int cmd_figure(int which, double g0, const std::string& out_dir) {
    const std::string dir = out_dir.empty() ? "." : out_dir;
    const auto prm = yspace::params_from_g0(g0);
    const auto v1 = xspace::make_singular(MassProfile::mdnt0(1.0, 1.0), g0);
    const auto v2 = xspace::make_singular(MassProfile::mdnt(1, 0.0, 1.0), g0);
    const auto v3 = xspace::make_singular(MassProfile::regular(1.0), g0);
    const auto v5 =
        xspace::make_singular(MassProfile::exponential(1.0, 1.0), g0);
    const auto vs = xspace::make_singular(MassProfile::constant_mass(), g0);

    if (which == 1) {
        csv::Table t;
        t.header = {"x", "V1", "V2", "V3", "V5", "Vsing"};
        t.columns.resize(6);
        // dx = 1/16 keeps the grid binary-exact (x = 1 is hit exactly).
        const double dx = 0.0625;
        for (int i = 1; i <= 64; ++i) {
            const double x = dx * i;
            t.columns[0].push_back(x);
            t.columns[1].push_back(xspace::potential(v1, x));
            t.columns[2].push_back(xspace::potential(v2, x));
            t.columns[3].push_back(xspace::potential(v3, x));
            t.columns[4].push_back(xspace::potential(v5, x));
            t.columns[5].push_back(xspace::potential(vs, x));
        }
        csv::write_file(dir + "/figure1.csv", t);
        csv::Table lv;
        lv.header = {"n", "energy"};
        lv.columns.resize(2);
        for (int n = 0; n <= 3; ++n) {
            lv.columns[0].push_back(n);
            lv.columns[1].push_back(yspace::energy(prm, n));
        }
        csv::write_file(dir + "/figure1_levels.csv", lv);
        return 0;
    }
    if (which == 2) {
        for (const auto* pr : {&v5, &v1}) {
            csv::Table t;
            t.header = {"x", "psi0", "psi1", "psi2"};
            t.columns.resize(4);
            const std::size_t npts = 801;
            const double dx = 4.0 / static_cast<double>(npts - 1);
            for (std::size_t i = 0; i < npts; ++i) {
                const double x = dx * static_cast<double>(i);
                t.columns[0].push_back(x);
                for (int n = 0; n < 3; ++n)
                    t.columns[n + 1].push_back(xspace::psi_n(*pr, n, x));
            }
            csv::write_file(dir + (pr == &v5 ? "/figure2_v5.csv"
                                             : "/figure2_v1.csv"),
                            t);
        }
        return 0;
    }
    if (which == 3) {
        csv::Table t;
        t.header = {"x", "v5_abs2", "sing_abs2"};
        t.columns.resize(3);
        const std::size_t npts = 24001;
        const double dx = 6.0 / static_cast<double>(npts - 1);
        for (std::size_t i = 0; i < npts; ++i) {
            const double x = dx * static_cast<double>(i);
            const double a = xspace::psi_n(v5, 2, x);
            const double b = xspace::psi_n(vs, 2, x);
            t.columns[0].push_back(x);
            t.columns[1].push_back(a * a);
            t.columns[2].push_back(b * b);
        }
        csv::write_file(dir + "/figure3.csv", t);
        return 0;
    }
    throw std::invalid_argument("figure: which must be 1, 2 or 3");
}

int cmd_verify(std::vector<std::string> ids, double g0, bool g0_set,
               double tolerance, bool tol_set, const std::string& out) {
    if (ids.empty()) ids = verify::all_check_ids();
    verify::SuiteConfig cfg;
    if (g0_set) cfg.g0_values = {g0};
    if (tol_set)
        for (const auto& id : ids) cfg.tolerance_overrides[id] = tolerance;
    const auto reports = verify::run_suite(ids, cfg);
    std::string body;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        body += verify::format_report_line(r);
        body += '\n';
        if (!r.passed) ++failed;
    }
    std::cout << body;
    std::printf("# %zu checks, %zu failed\n", reports.size(), failed);
    if (!out.empty()) {
        std::ofstream os(out, std::ios::binary);
        os << body;
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{
        "Position-dependent-mass singular oscillators and their su(1,1) "
        "coherent states"};
    app.require_subcommand(1);

    std::string profile = "kind=exponential,x0=1,lambda=1";
    double g0 = 2.0;
    bool g0_set = false;
    double x0 = std::nan("");
    double lambda = std::nan("");
    std::string n_spec = "0..3";
    std::string z_spec = "2,0";
    std::string grid_spec;
    std::string out_path;
    double tolerance = 1e-12;
    bool tol_set = false;

    auto add_common = [&](CLI::App* sub, const GridSpec& grid_default) {
        sub->add_option("--profile", profile,
                        "profile record kind=...,n=...,x0=...,lambda=...");
        sub->add_option("--g0", g0, "singular coupling g0 > -1/2")
            ->each([&](const std::string&) { g0_set = true; });
        sub->add_option("--x0", x0, "profile x0 override");
        sub->add_option("--lambda", lambda, "profile lambda override");
        sub->add_option("--grid", grid_spec,
                        "sample grid min,max,points (default " +
                            std::to_string(grid_default.min) + "," +
                            std::to_string(grid_default.max) + "," +
                            std::to_string(grid_default.points) + ")");
        sub->add_option("--out", out_path, "output path (stdout if omitted)");
        sub->add_option("--tolerance", tolerance, "numerical tolerance")
            ->each([&](const std::string&) { tol_set = true; });
    };

    auto effective_profile = [&]() {
        std::string rec = profile;
        if (!std::isnan(x0)) rec += ",x0=" + std::to_string(x0);
        if (!std::isnan(lambda)) rec += ",lambda=" + std::to_string(lambda);
        return rec;
    };

    // catalog
    std::string filter;
    auto* catalog = app.add_subcommand("catalog", "list the potential catalog");
    catalog->add_option("filter", filter, "substring filter (e.g. MDNT)");

    // spectrum
    auto* spectrum =
        app.add_subcommand("spectrum", "energies E_n = 4n + 2 + sqrt(1+2 g0)");
    spectrum->add_option("--n", n_spec, "quantum number or range a..b");
    add_common(spectrum, {});

    // wavefunction
    auto* wavefunction =
        app.add_subcommand("wavefunction", "psi_n table for a profile");
    wavefunction->add_option("--n", n_spec, "quantum number");
    add_common(wavefunction, {0.0, 4.0, 801});

    // potential
    auto* potential =
        app.add_subcommand("potential", "V(x) table for a profile");
    add_common(potential, {0.05, 4.0, 80});

    // coherent
    std::string cs_kind;
    std::string cs_mode = "table";
    auto* coherent_cmd = app.add_subcommand(
        "coherent", "coherent-state evaluation table or coefficient dump");
    coherent_cmd->add_option("kind", cs_kind, "glauber | bg | perelomov")
        ->required();
    coherent_cmd->add_option("mode", cs_mode, "table (default) or coeffs");
    coherent_cmd->add_option("--z", z_spec, "complex label re,im");
    add_common(coherent_cmd, {0.01, 4.0, 400});

    // figure
    int which = 1;
    auto* figure =
        app.add_subcommand("figure", "emit the data behind figures 1-3");
    figure->add_option("which", which, "1, 2 or 3")->required();
    add_common(figure, {});

    // verify
    std::vector<std::string> check_ids;
    auto* verify_cmd =
        app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("checks", check_ids, "check ids (default: all)");
    add_common(verify_cmd, {});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(catalog)) return cmd_catalog(filter);
        if (app.got_subcommand(spectrum))
            return cmd_spectrum(g0, n_spec, out_path);
        if (app.got_subcommand(wavefunction)) {
            const auto [nl, nh] = parse_n_range(n_spec);
            (void)nh;
            const GridSpec grid = grid_spec.empty() ? GridSpec{0.0, 4.0, 801}
                                                    : parse_grid(grid_spec);
            return cmd_wavefunction(effective_profile(), g0, nl, grid,
                                    out_path);
        }
        if (app.got_subcommand(potential)) {
            const GridSpec grid = grid_spec.empty() ? GridSpec{0.05, 4.0, 80}
                                                    : parse_grid(grid_spec);
            return cmd_potential(effective_profile(), g0, grid, out_path);
        }
        if (app.got_subcommand(coherent_cmd)) {
            const GridSpec grid = grid_spec.empty() ? GridSpec{0.01, 4.0, 400}
                                                    : parse_grid(grid_spec);
            return cmd_coherent(cs_kind, cs_mode, effective_profile(), g0,
                                parse_z(z_spec), tol_set ? tolerance : 1e-12,
                                grid, out_path);
        }
        if (app.got_subcommand(figure)) return cmd_figure(which, g0, out_path);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(check_ids, g0, g0_set, tolerance, tol_set,
                              out_path);
        return 2;
    } catch (const accuracy_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

}  // namespace pdmosc::cli
