// Command-line front end; talks to the estimator through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "tqre.h"

namespace {

struct ConfigHandle {
    tqre_config* ptr = nullptr;
    ~ConfigHandle() { tqre_config_free(ptr); }
};

struct ReportHandle {
    tqre_report* ptr = nullptr;
    ~ReportHandle() { tqre_report_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { tqre_string_free(ptr); }
};

int exit_code_for(tqre_status status) {
    switch (status) {
        case TQRE_OK: return 0;
        case TQRE_ERR_PARSE: return 2;
        default: return 1;
    }
}

int report_failure(const char* what, tqre_status status) {
    std::cerr << what << ": " << tqre_last_error() << "\n";
    return exit_code_for(status);
}

bool write_file(const std::string& path, const char* text) {
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write '" << path << "'\n";
        return false;
    }
    out << text;
    return true;
}

int load(const std::string& path, ConfigHandle& cfg) {
    const tqre_status status = tqre_config_load(path.c_str(), &cfg.ptr);
    if (status != TQRE_OK) {
        return report_failure("config error", status);
    }
    return 0;
}

int run_estimate(const std::string& config_path, const std::string& report_path,
                 const std::string& csv_path, const std::string& layouts_dir) {
    ConfigHandle cfg;
    if (int rc = load(config_path, cfg)) {
        return rc;
    }
    ReportHandle report;
    const tqre_status status = tqre_estimate(cfg.ptr, &report.ptr);
    if (status != TQRE_OK) {
        return report_failure("estimate failed", status);
    }
    StringHandle markdown;
    tqre_report_render_markdown(report.ptr, &markdown.ptr);
    std::cout << markdown.ptr;
    if (!report_path.empty() && !write_file(report_path, markdown.ptr)) {
        return 1;
    }
    if (!csv_path.empty()) {
        StringHandle csv;
        tqre_report_phase_csv(report.ptr, &csv.ptr);
        if (!write_file(csv_path, csv.ptr)) {
            return 1;
        }
    }
    if (!layouts_dir.empty()) {
        const tqre_status ls = tqre_emit_layouts(cfg.ptr, layouts_dir.c_str());
        if (ls != TQRE_OK) {
            return report_failure("layout export failed", ls);
        }
    }
    const int violations = tqre_report_constraint_violations(report.ptr);
    if (violations > 0) {
        std::cerr << "constraint violations: " << violations << "\n";
        for (int i = 0; i < violations; ++i) {
            StringHandle v;
            if (tqre_report_constraint_at(report.ptr, i, &v.ptr) == TQRE_OK) {
                std::cerr << "  - " << v.ptr << "\n";
            }
        }
        return 1;
    }
    return 0;
}

int run_sweep(const std::string& config_path, const std::string& spec_path,
              bool grid_refine, const std::string& trace_path) {
    ConfigHandle cfg;
    if (int rc = load(config_path, cfg)) {
        return rc;
    }
    if (!spec_path.empty()) {
        const tqre_status status = tqre_config_apply_sweep_file(cfg.ptr, spec_path.c_str());
        if (status != TQRE_OK) {
            return report_failure("sweep spec error", status);
        }
    }
    if (grid_refine) {
        tqre_config_set_grid_refine(cfg.ptr, 1);
    }
    StringHandle trace;
    ReportHandle best;
    const tqre_status status = tqre_sweep(cfg.ptr, &trace.ptr, &best.ptr);
    if (status != TQRE_OK) {
        return report_failure("sweep failed", status);
    }
    if (!trace_path.empty()) {
        if (!write_file(trace_path, trace.ptr)) {
            return 1;
        }
    } else {
        std::cout << trace.ptr;
    }
    StringHandle markdown;
    tqre_report_render_markdown(best.ptr, &markdown.ptr);
    std::cerr << markdown.ptr;
    return 0;
}

int run_sensitivity(const std::string& config_path, const std::string& axis,
                    const std::string& grid, const std::string& out_path) {
    ConfigHandle cfg;
    if (int rc = load(config_path, cfg)) {
        return rc;
    }
    StringHandle curve;
    const tqre_status status =
        tqre_sensitivity(cfg.ptr, axis.c_str(), grid.empty() ? nullptr : grid.c_str(), &curve.ptr);
    if (status != TQRE_OK) {
        return report_failure("sensitivity run failed", status);
    }
    if (!out_path.empty()) {
        if (!write_file(out_path, curve.ptr)) {
            return 1;
        }
    } else {
        std::cout << curve.ptr;
    }
    return 0;
}

int run_fit(const std::string& data_path, double fixed_c, double fixed_lambda,
            double fixed_alpha) {
    std::ifstream in(data_path);
    if (!in) {
        std::cerr << "cannot open '" << data_path << "'\n";
        return 2;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    double c = 0.0, lambda = 0.0, alpha = 0.0;
    const tqre_status status =
        tqre_fit(text.c_str(), fixed_c, fixed_lambda, fixed_alpha, &c, &lambda, &alpha);
    if (status != TQRE_OK) {
        return report_failure("fit failed", status);
    }
    std::printf("C = %.10g\nLambda = %.10g\nalpha = %.10g\n", c, lambda, alpha);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resource estimator for transversal surface-code atom-array architectures"};
    app.require_subcommand(1);

    std::string config_path;
    std::string report_path;
    std::string csv_path;
    std::string layouts_dir;
    auto* cmd_estimate = app.add_subcommand("estimate", "run one resource estimate");
    cmd_estimate->add_option("config", config_path, "config file")->required();
    cmd_estimate->add_option("-o,--output", report_path, "write the markdown report here");
    cmd_estimate->add_option("--csv", csv_path, "write the phase-breakdown CSV here");
    cmd_estimate->add_option("--emit-layouts", layouts_dir, "dump gadget layout CSVs to this directory");

    std::string sweep_config;
    std::string sweep_spec_path;
    std::string trace_path;
    bool grid_refine = false;
    auto* cmd_sweep = app.add_subcommand("sweep", "pairwise parameter sweep");
    cmd_sweep->add_option("config", sweep_config, "config file")->required();
    cmd_sweep->add_option("spec", sweep_spec_path,
                          "optional file with a [sweep] section overriding the config");
    cmd_sweep->add_flag("--grid-refine", grid_refine,
                        "re-descend on grids refined around the incumbent");
    cmd_sweep->add_option("-o,--output", trace_path, "write the sweep trace CSV here");

    std::string sens_config;
    std::string axis;
    std::string grid;
    std::string curve_path;
    auto* cmd_sens = app.add_subcommand("sensitivity", "re-optimize along one parameter axis");
    cmd_sens->add_option("config", sens_config, "config file")->required();
    cmd_sens->add_option("--axis", axis,
                         "alpha|coherence_time|acceleration_scale|reaction_time|qubit_cap")
        ->required();
    cmd_sens->add_option("--grid", grid, "comma-separated axis values (default per axis)");
    cmd_sens->add_option("-o,--output", curve_path, "write the curve CSV here");

    std::string fit_path;
    double fixed_c = -1.0, fixed_lambda = -1.0, fixed_alpha = -1.0;
    auto* cmd_fit = app.add_subcommand("fit", "fit the logical error model to decoder data");
    cmd_fit->add_option("data", fit_path, "CSV with rows d,x,p_l,sigma")->required();
    cmd_fit->add_option("--fix-c", fixed_c, "hold C fixed");
    cmd_fit->add_option("--fix-lambda", fixed_lambda, "hold Lambda fixed");
    cmd_fit->add_option("--fix-alpha", fixed_alpha, "hold alpha fixed");

    CLI11_PARSE(app, argc, argv);

    if (cmd_estimate->parsed()) {
        return run_estimate(config_path, report_path, csv_path, layouts_dir);
    }
    if (cmd_sweep->parsed()) {
        return run_sweep(sweep_config, sweep_spec_path, grid_refine, trace_path);
    }
    if (cmd_sens->parsed()) {
        return run_sensitivity(sens_config, axis, grid, curve_path);
    }
    if (cmd_fit->parsed()) {
        return run_fit(fit_path, fixed_c, fixed_lambda, fixed_alpha);
    }
    return 1;
}
