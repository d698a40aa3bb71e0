// Command-line front end for the Whitham modulational-stability library.
// Talks to the core exclusively through the C API in whitham/whitham.h.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "whitham/whitham.h"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(wmi_status status) {
    const int code = (status == WMI_ERR_RESONANCE || status == WMI_ERR_CONVERGENCE ||
                      status == WMI_ERR_NUMERICAL)
                         ? kExitNumerical
                         : kExitUsage;
    throw CliError{code, wmi_last_error()};
}

void check(wmi_status status) {
    if (status != WMI_OK) die(status);
}

using ModelPtr = std::unique_ptr<wmi_model, decltype(&wmi_model_free)>;
using WavePtr = std::unique_ptr<wmi_wave, decltype(&wmi_wave_free)>;

// Shared model flags: either nondimensional (--family/--tau/--varpi/--branch)
// or dimensional (--g/--d/--T/--gamma), never both.
struct ModelFlags {
    std::string family = "gravity";
    double tau = 0.0;
    double varpi = 0.0;
    std::string branch = "plus";
    double g = 9.81, d = 1.0, T = 0.0, gamma = 0.0;
    CLI::Option* opt_g = nullptr;
    CLI::Option* opt_d = nullptr;
    CLI::Option* opt_T = nullptr;
    CLI::Option* opt_gamma = nullptr;
    CLI::Option* opt_tau = nullptr;
    CLI::Option* opt_varpi = nullptr;
    double speed_scale = 1.0;
    double length_scale = 1.0;
    bool dimensional = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--family", family, "gravity | capillary | vorticity")
            ->check(CLI::IsMember({"gravity", "capillary", "vorticity"}));
        opt_tau = cmd->add_option("--tau", tau, "surface tension T/(g d^2)");
        opt_varpi = cmd->add_option("--varpi", varpi, "vorticity gamma sqrt(d/g)");
        cmd->add_option("--branch", branch, "plus | minus (vorticity symbol)")
            ->check(CLI::IsMember({"plus", "minus"}));
        opt_g = cmd->add_option("--g", g, "gravitational acceleration (dimensional)");
        opt_d = cmd->add_option("--d", d, "fluid depth (dimensional)");
        opt_T = cmd->add_option("--T", T, "surface tension (dimensional)");
        opt_gamma = cmd->add_option("--gamma", gamma, "constant vorticity (dimensional)");
    }

    ModelPtr build() {
        const bool has_dim = opt_g->count() || opt_d->count() || opt_T->count() ||
                             opt_gamma->count();
        const bool has_nondim = opt_tau->count() || opt_varpi->count();
        if (has_dim && has_nondim)
            throw CliError{kExitUsage,
                           "conflicting flags: give either dimensional (--g/--d/--T/--gamma) "
                           "or nondimensional (--tau/--varpi) parameters, not both"};
        dimensional = has_dim;

        wmi_family fam = WMI_FAMILY_GRAVITY;
        if (family == "capillary") fam = WMI_FAMILY_CAPILLARY_GRAVITY;
        if (family == "vorticity") fam = WMI_FAMILY_CONSTANT_VORTICITY;
        const wmi_branch br = branch == "minus" ? WMI_BRANCH_MINUS : WMI_BRANCH_PLUS;

        wmi_model* raw = nullptr;
        if (has_dim) {
            check(wmi_model_create_dimensional(g, d, T, gamma, fam, br, &raw, &speed_scale,
                                               &length_scale));
        } else {
            switch (fam) {
            case WMI_FAMILY_GRAVITY: check(wmi_model_create_gravity(&raw)); break;
            case WMI_FAMILY_CAPILLARY_GRAVITY:
                check(wmi_model_create_capillary(tau, &raw));
                break;
            default: check(wmi_model_create_vorticity(varpi, br, &raw)); break;
            }
        }
        return ModelPtr(raw, &wmi_model_free);
    }
};

json model_metadata(const wmi_model* model, const ModelFlags& flags) {
    wmi_family fam;
    wmi_branch br;
    double tau, varpi;
    int degenerate;
    check(wmi_model_family(model, &fam));
    check(wmi_model_branch(model, &br));
    check(wmi_model_tau(model, &tau));
    check(wmi_model_varpi(model, &varpi));
    check(wmi_model_degenerate(model, &degenerate));
    json j{{"family", fam == WMI_FAMILY_GRAVITY
                          ? "gravity"
                          : (fam == WMI_FAMILY_CAPILLARY_GRAVITY ? "capillary" : "vorticity")},
           {"tau", tau},
           {"varpi", varpi},
           {"branch", br == WMI_BRANCH_MINUS ? "minus" : "plus"},
           {"degenerate", degenerate != 0}};
    if (flags.dimensional) {
        j["dimensional"] = {{"g", flags.g},
                            {"d", flags.d},
                            {"T", flags.T},
                            {"gamma", flags.gamma},
                            {"speed_scale", flags.speed_scale},
                            {"length_scale", flags.length_scale}};
    }
    return j;
}

const char* verdict_name(wmi_verdict v) {
    switch (v) {
    case WMI_VERDICT_STABLE: return "S";
    case WMI_VERDICT_UNSTABLE: return "U";
    case WMI_VERDICT_BOUNDARY: return "B";
    default: return "D";
    }
}

const char* mechanism_name(wmi_mechanism m) {
    switch (m) {
    case WMI_MECH_GROUP_VEL_EXTREMUM: return "group_vel_extremum";
    case WMI_MECH_LONG_SHORT: return "long_short_resonance";
    case WMI_MECH_SECOND_HARMONIC: return "second_harmonic";
    case WMI_MECH_BF_PLUS: return "bf_plus";
    default: return "bf_minus";
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct OutputOptions {
    std::string path;     // empty: stdout
    std::string format = "csv";
    void add_to(CLI::App* cmd) {
        cmd->add_option("-o,--out", path, "output file (default: stdout)");
        cmd->add_option("--format", format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
    }
};

// Row-oriented table writer: CSV body or JSON rows-plus-metadata.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json metadata;

    void write(const OutputOptions& out) const {
        std::ostringstream body;
        if (out.format == "csv") {
            for (size_t i = 0; i < columns.size(); ++i)
                body << (i ? "," : "") << columns[i];
            body << "\n";
            for (const auto& row : rows) {
                for (size_t i = 0; i < row.size(); ++i) body << (i ? "," : "") << row[i];
                body << "\n";
            }
        } else {
            json j;
            j["metadata"] = metadata;
            j["metadata"]["version"] = kVersion;
            j["columns"] = columns;
            json jrows = json::array();
            for (const auto& row : rows) {
                json jrow = json::array();
                for (const auto& cell : row) {
                    // Numeric cells round-trip as numbers.
                    try {
                        size_t pos = 0;
                        const double v = std::stod(cell, &pos);
                        if (pos == cell.size()) {
                            jrow.push_back(v);
                            continue;
                        }
                    } catch (...) {
                    }
                    jrow.push_back(cell);
                }
                jrows.push_back(std::move(jrow));
            }
            j["rows"] = std::move(jrows);
            body << j.dump(2) << "\n";
        }
        if (out.path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream f(out.path);
            if (!f) throw CliError{kExitUsage, "cannot open output file: " + out.path};
            f << body.str();
        }
    }
};

// ---- subcommand payloads ---------------------------------------------------

int run_symbol(const ModelFlags& flags_in, double zmin, double zmax, int n, bool zmin_set,
               const OutputOptions& out) {
    ModelFlags flags = flags_in;
    ModelPtr model = flags.build();
    if (n < 1 || zmax <= 0.0) throw CliError{kExitUsage, "need --n >= 1 and --zmax > 0"};

    int degenerate;
    check(wmi_model_degenerate(model.get(), &degenerate));

    Table t;
    t.columns = {"z", "m", "m1", "m2", "zm1", "zm2", "degenerate"};
    for (int i = 0; i < n; ++i) {
        const double z = zmin_set ? zmin + (zmax - zmin) * i / std::max(1, n - 1)
                                  : (i + 1) * zmax / n;
        double m, m1, m2, zm1, zm2;
        check(wmi_symbol(model.get(), z, &m));
        check(wmi_symbol_deriv(model.get(), z, 1, &m1));
        check(wmi_symbol_deriv(model.get(), z, 2, &m2));
        check(wmi_group_velocity(model.get(), z, &zm1));
        check(wmi_group_velocity_deriv(model.get(), z, &zm2));
        t.rows.push_back({fmt(z), fmt(m), fmt(m1), fmt(m2), fmt(zm1), fmt(zm2),
                          degenerate ? "true" : "false"});
    }
    t.metadata = {{"command", "symbol"},
                  {"model", model_metadata(model.get(), flags)},
                  {"grid", {{"zmin", zmin_set ? zmin : zmax / n}, {"zmax", zmax}, {"n", n}}}};
    t.write(out);
    return 0;
}

int run_index(const ModelFlags& flags_in, std::vector<double> zs, double zmin, double zmax,
              int n, bool grid, const OutputOptions& out) {
    ModelFlags flags = flags_in;
    ModelPtr model = flags.build();
    if (grid) {
        if (n < 2 || !(0.0 < zmin && zmin < zmax))
            throw CliError{kExitUsage, "need 0 < --zmin < --zmax and --n >= 2"};
        zs.clear();
        for (int i = 0; i < n; ++i) zs.push_back(zmin + (zmax - zmin) * i / (n - 1));
    }
    if (zs.empty()) throw CliError{kExitUsage, "give --z or a grid (--zmin/--zmax/--n)"};

    Table t;
    t.columns = {"z",           "delta_bf",        "delta_mi", "group_curvature",
                 "longshort",   "second_harmonic", "verdict"};
    for (double z : zs) {
        wmi_index_report r;
        check(wmi_index(model.get(), z, &r));
        t.rows.push_back({fmt(r.z), fmt(r.delta_bf), fmt(r.delta_mi),
                          fmt(r.factor_group_curvature), fmt(r.factor_longshort),
                          fmt(r.factor_second_harmonic), verdict_name(r.verdict)});
    }
    t.metadata = {{"command", "index"}, {"model", model_metadata(model.get(), flags)}};
    t.write(out);
    return 0;
}

int run_critical(const ModelFlags& flags_in, double zlo, double zhi, int n,
                 const OutputOptions& out) {
    ModelFlags flags = flags_in;
    ModelPtr model = flags.build();

    size_t count = 0;
    check(wmi_critical_wavenumbers(model.get(), zlo, zhi, n, nullptr, nullptr, &count));
    std::vector<double> roots(count);
    std::vector<wmi_mechanism> mechs(count);
    check(wmi_critical_wavenumbers(model.get(), zlo, zhi, n, roots.data(), mechs.data(),
                                   &count));

    Table t;
    t.columns = {"z", "mechanism"};
    for (size_t i = 0; i < count; ++i)
        t.rows.push_back({fmt(roots[i]), mechanism_name(mechs[i])});
    t.metadata = {{"command", "critical"},
                  {"model", model_metadata(model.get(), flags)},
                  {"grid", {{"zlo", zlo}, {"zhi", zhi}, {"n", n}}}};
    t.write(out);
    return 0;
}

int run_spectrum(const ModelFlags& flags_in, double k, double a, double xi, int N_F,
                 double r_origin, bool no_refine, const OutputOptions& out) {
    ModelFlags flags = flags_in;
    ModelPtr model = flags.build();

    wmi_wave* seed = nullptr;
    check(wmi_wave_expansion(model.get(), k, a, 0.0, &seed));
    WavePtr wave(seed, &wmi_wave_free);
    if (!no_refine && a != 0.0) {
        wmi_wave* refined = nullptr;
        check(wmi_wave_refine(model.get(), wave.get(), 32, 1e-12, &refined));
        wave.reset(refined);
    }

    wmi_spectrum* raw = nullptr;
    check(wmi_bloch_spectrum(model.get(), wave.get(), xi, N_F, r_origin, &raw));
    std::unique_ptr<wmi_spectrum, decltype(&wmi_spectrum_free)> spec(raw, &wmi_spectrum_free);

    size_t count;
    check(wmi_spectrum_size(spec.get(), &count));
    double max_real, c;
    check(wmi_spectrum_max_real_near_origin(spec.get(), &max_real));
    check(wmi_wave_params(wave.get(), nullptr, nullptr, nullptr, &c));

    Table t;
    t.columns = {"re", "im"};
    for (size_t i = 0; i < count; ++i) {
        double re, im;
        check(wmi_spectrum_eigenvalue(spec.get(), i, &re, &im));
        t.rows.push_back({fmt(re), fmt(im)});
    }
    t.metadata = {{"command", "spectrum"},
                  {"model", model_metadata(model.get(), flags)},
                  {"k", k},
                  {"a", a},
                  {"xi", xi},
                  {"N_F", N_F},
                  {"wave_speed", c},
                  {"refined", !no_refine && a != 0.0},
                  {"max_real_near_origin", max_real}};
    t.write(out);
    return 0;
}

int run_check(const ModelFlags& flags_in, double k, double a, std::vector<double> xis,
              int N_F, const OutputOptions& out) {
    ModelFlags flags = flags_in;
    ModelPtr model = flags.build();
    if (xis.empty()) xis = {0.025, 0.05, 0.1};

    wmi_growth_check gc;
    check(wmi_mi_growth_check(model.get(), k, a, xis.data(), xis.size(), N_F, &gc));

    Table t;
    t.columns = {"predicted", "observed", "agree", "max_growth", "delta_mi"};
    t.rows.push_back({verdict_name(gc.predicted), verdict_name(gc.observed),
                      gc.agree ? "true" : "false", fmt(gc.max_growth), fmt(gc.delta_mi)});
    t.metadata = {{"command", "check"},
                  {"model", model_metadata(model.get(), flags)},
                  {"k", k},
                  {"a", a},
                  {"xi", xis},
                  {"N_F", N_F},
                  {"indeterminate", gc.indeterminate != 0}};
    t.write(out);
    return 0;
}

void write_svg(const std::string& path, const wmi_curves* curves) {
    size_t count;
    check(wmi_curves_count(curves, &count));
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    std::vector<std::vector<double>> all;
    for (size_t i = 0; i < count; ++i) {
        size_t n;
        check(wmi_curve_info(curves, i, nullptr, nullptr, &n));
        std::vector<double> xy(2 * n);
        check(wmi_curve_points(curves, i, xy.data()));
        for (size_t j = 0; j < n; ++j) {
            xmin = std::min(xmin, xy[2 * j]);
            xmax = std::max(xmax, xy[2 * j]);
            ymin = std::min(ymin, xy[2 * j + 1]);
            ymax = std::max(ymax, xy[2 * j + 1]);
        }
        all.push_back(std::move(xy));
    }
    if (all.empty() || xmax <= xmin || ymax <= ymin) {
        xmin = ymin = 0;
        xmax = ymax = 1;
    }
    const double W = 800, H = 600, pad = 40;
    auto sx = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (W - 2 * pad); };
    auto sy = [&](double y) { return H - pad - (y - ymin) / (ymax - ymin) * (H - 2 * pad); };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};

    std::ofstream f(path);
    if (!f) throw CliError{kExitUsage, "cannot open SVG output file: " + path};
    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\">\n";
    for (size_t i = 0; i < all.size(); ++i) {
        wmi_mechanism mech;
        wmi_curve_kind kind;
        check(wmi_curve_info(curves, i, &mech, &kind, nullptr));
        const char* color = palette[static_cast<int>(mech) % 5];
        const char* dash = kind == WMI_CURVE_MECHANISM ? "" : " stroke-dasharray=\"6,4\"";
        f << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << dash
          << " points=\"";
        for (size_t j = 0; j + 1 < all[i].size(); j += 2)
            f << sx(all[i][j]) << "," << sy(all[i][j + 1]) << " ";
        f << "\"/>\n";
    }
    f << "</svg>\n";
}

int run_diagram(const std::string& plane, double xlo, double xhi, double ylo, double yhi,
                int res, const std::string& svg_path, const OutputOptions& out) {
    wmi_curves* raw = nullptr;
    if (plane == "capillary")
        check(wmi_capillary_diagram(xlo, xhi, ylo, yhi, res, &raw));
    else
        check(wmi_vorticity_diagram(xlo, xhi, ylo, yhi, res, &raw));
    std::unique_ptr<wmi_curves, decltype(&wmi_curves_free)> curves(raw, &wmi_curves_free);

    size_t count;
    check(wmi_curves_count(curves.get(), &count));

    Table t;
    t.columns = {"curve", "mechanism", "kind", "x", "y"};
    for (size_t i = 0; i < count; ++i) {
        wmi_mechanism mech;
        wmi_curve_kind kind;
        size_t n;
        check(wmi_curve_info(curves.get(), i, &mech, &kind, &n));
        std::vector<double> xy(2 * n);
        check(wmi_curve_points(curves.get(), i, xy.data()));
        const char* kind_name = kind == WMI_CURVE_MECHANISM
                                    ? "level_set"
                                    : (kind == WMI_CURVE_TAU_CRITICAL_LINE ? "tau_critical"
                                                                           : "gravity_critical");
        for (size_t j = 0; j < n; ++j)
            t.rows.push_back({std::to_string(i),
                              kind == WMI_CURVE_MECHANISM ? mechanism_name(mech) : "annotation",
                              kind_name, fmt(xy[2 * j]), fmt(xy[2 * j + 1])});
    }
    t.metadata = {{"command", "diagram"},
                  {"plane", plane},
                  {"x_range", {xlo, xhi}},
                  {"y_range", {ylo, yhi}},
                  {"resolution", res},
                  {"axes", plane == "capillary"
                               ? "x = kd, y = k sqrt(T/g)"
                               : "x = varpi = gamma sqrt(d/g), y = kd"}};
    t.write(out);
    if (!svg_path.empty()) write_svg(svg_path, curves.get());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modulational stability of periodic traveling waves of the Whitham "
                 "equation with surface tension and constant vorticity"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // symbol
    auto* sym = app.add_subcommand("symbol", "tabulate m, m', m'', (zm)', (zm)''");
    ModelFlags sym_flags;
    sym_flags.add_to(sym);
    double sym_zmin = 0.0, sym_zmax = 5.0;
    int sym_n = 100;
    auto* sym_zmin_opt = sym->add_option("--zmin", sym_zmin, "grid start (default zmax/n)");
    sym->add_option("--zmax", sym_zmax, "grid end");
    sym->add_option("--n", sym_n, "grid size");
    OutputOptions sym_out;
    sym_out.add_to(sym);

    // index
    auto* idx = app.add_subcommand("index", "modulational instability index at z or a grid");
    ModelFlags idx_flags;
    idx_flags.add_to(idx);
    std::vector<double> idx_z;
    double idx_zmin = 0.1, idx_zmax = 5.0;
    int idx_n = 100;
    idx->add_option("--z", idx_z, "evaluation point(s) kd");
    auto* idx_grid = idx->add_flag("--grid", "use --zmin/--zmax/--n instead of --z");
    idx->add_option("--zmin", idx_zmin, "grid start");
    idx->add_option("--zmax", idx_zmax, "grid end");
    idx->add_option("--n", idx_n, "grid size");
    OutputOptions idx_out;
    idx_out.add_to(idx);

    // critical
    auto* crit = app.add_subcommand("critical", "mechanism roots on (zlo, zhi)");
    ModelFlags crit_flags;
    crit_flags.add_to(crit);
    double crit_zlo = 0.1, crit_zhi = 10.0;
    int crit_n = 2000;
    crit->add_option("--zlo", crit_zlo, "scan start");
    crit->add_option("--zhi", crit_zhi, "scan end");
    crit->add_option("--n", crit_n, "scan grid size");
    OutputOptions crit_out;
    crit_out.add_to(crit);

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "Bloch spectrum of the linearized operator");
    ModelFlags spec_flags;
    spec_flags.add_to(spec);
    double spec_k = 1.0, spec_a = 0.01, spec_xi = 0.05, spec_rorigin = 0.0;
    int spec_NF = 32;
    bool spec_norefine = false;
    spec->add_option("--k", spec_k, "carrier wave number")->required();
    spec->add_option("--a", spec_a, "amplitude parameter");
    spec->add_option("--xi", spec_xi, "Bloch parameter in [-1/2, 1/2)");
    spec->add_option("--NF", spec_NF, "Fourier truncation (modes -NF..NF)");
    spec->add_option("--r-origin", spec_rorigin, "origin disc radius (default 10|a|)");
    spec->add_flag("--expansion-only", spec_norefine, "skip Newton refinement of the wave");
    OutputOptions spec_out;
    spec_out.add_to(spec);

    // check
    auto* chk = app.add_subcommand("check", "index prediction vs spectral growth");
    ModelFlags chk_flags;
    chk_flags.add_to(chk);
    double chk_k = 1.0, chk_a = 0.01;
    int chk_NF = 32;
    std::vector<double> chk_xi;
    chk->add_option("--k", chk_k, "carrier wave number")->required();
    chk->add_option("--a", chk_a, "amplitude parameter");
    chk->add_option("--xi", chk_xi, "Bloch parameters (default 0.025 0.05 0.1)");
    chk->add_option("--NF", chk_NF, "Fourier truncation");
    OutputOptions chk_out;
    chk_out.add_to(chk);

    // diagram
    auto* dia = app.add_subcommand("diagram", "stability diagram curve sets");
    std::string dia_plane = "capillary";
    double dia_xlo = 0.0, dia_xhi = 0.0, dia_ylo = 0.0, dia_yhi = 0.0;
    int dia_res = 300;
    std::string dia_svg;
    dia->add_option("--plane", dia_plane, "capillary | vorticity")
        ->check(CLI::IsMember({"capillary", "vorticity"}));
    auto* dia_xlo_opt = dia->add_option("--xlo", dia_xlo, "x range start");
    auto* dia_xhi_opt = dia->add_option("--xhi", dia_xhi, "x range end");
    auto* dia_ylo_opt = dia->add_option("--ylo", dia_ylo, "y range start");
    auto* dia_yhi_opt = dia->add_option("--yhi", dia_yhi, "y range end");
    dia->add_option("--res", dia_res, "grid resolution per axis");
    dia->add_option("--svg", dia_svg, "also write an SVG rendering to this path");
    OutputOptions dia_out;
    dia_out.add_to(dia);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (sym->parsed())
            return run_symbol(sym_flags, sym_zmin, sym_zmax, sym_n, sym_zmin_opt->count() > 0,
                              sym_out);
        if (idx->parsed())
            return run_index(idx_flags, idx_z, idx_zmin, idx_zmax, idx_n,
                             idx_grid->count() > 0, idx_out);
        if (crit->parsed()) return run_critical(crit_flags, crit_zlo, crit_zhi, crit_n, crit_out);
        if (spec->parsed())
            return run_spectrum(spec_flags, spec_k, spec_a, spec_xi, spec_NF, spec_rorigin,
                                spec_norefine, spec_out);
        if (chk->parsed()) return run_check(chk_flags, chk_k, chk_a, chk_xi, chk_NF, chk_out);
        if (dia->parsed()) {
            // Plane-specific default windows.
            if (!dia_xlo_opt->count()) dia_xlo = dia_plane == "capillary" ? 0.05 : -10.0;
            if (!dia_xhi_opt->count()) dia_xhi = dia_plane == "capillary" ? 10.0 : 10.0;
            if (!dia_ylo_opt->count()) dia_ylo = dia_plane == "capillary" ? 0.0 : 0.5;
            if (!dia_yhi_opt->count()) dia_yhi = dia_plane == "capillary" ? 2.0 : 5.0;
            return run_diagram(dia_plane, dia_xlo, dia_xhi, dia_ylo, dia_yhi, dia_res, dia_svg,
                               dia_out);
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return 0;
}
