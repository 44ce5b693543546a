#include "tqre.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "tqre/config.hpp"
#include "tqre/errors.hpp"

struct tqre_config {
    tqre::RunConfig run;
};

struct tqre_report {
    tqre::EstimateReport report;
};

namespace {

thread_local std::string g_last_error;

tqre_status fail(tqre_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

tqre_status classify(const std::exception& e) {
    if (dynamic_cast<const tqre::ConfigError*>(&e)) {
        return fail(TQRE_ERR_PARSE, e.what());
    }
    if (dynamic_cast<const tqre::InfeasibleError*>(&e)) {
        return fail(TQRE_ERR_INFEASIBLE, e.what());
    }
    if (dynamic_cast<const tqre::UnderdeterminedError*>(&e)) {
        return fail(TQRE_ERR_INFEASIBLE, e.what());
    }
    if (dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::domain_error*>(&e)) {
        return fail(TQRE_ERR_INVALID, e.what());
    }
    return fail(TQRE_ERR_INTERNAL, e.what());
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* tqre_last_error(void) {
    return g_last_error.c_str();
}

void tqre_string_free(char* s) {
    delete[] s;
}

tqre_status tqre_config_load(const char* path, tqre_config** out) {
    if (!path || !out) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    try {
        *out = new tqre_config{tqre::load_config(path)};
        return TQRE_OK;
    } catch (const std::exception& e) {
        *out = nullptr;
        return classify(e);
    }
}

tqre_status tqre_config_parse(const char* text, tqre_config** out) {
    if (!text || !out) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    try {
        *out = new tqre_config{tqre::parse_config(text)};
        return TQRE_OK;
    } catch (const std::exception& e) {
        *out = nullptr;
        return classify(e);
    }
}

void tqre_config_free(tqre_config* cfg) {
    delete cfg;
}

tqre_status tqre_config_apply_sweep_file(tqre_config* cfg, const char* path) {
    if (!cfg || !path) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    try {
        std::ifstream in(path);
        if (!in) {
            return fail(TQRE_ERR_IO, std::string("cannot open sweep spec '") + path + "'");
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        tqre::apply_sweep_overlay(cfg->run, buffer.str());
        return TQRE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

tqre_status tqre_config_set_grid_refine(tqre_config* cfg, int enabled) {
    if (!cfg) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    cfg->run.sweep.grid_refine = enabled != 0;
    return TQRE_OK;
}

tqre_status tqre_estimate(const tqre_config* cfg, tqre_report** out) {
    if (!cfg || !out) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    try {
        *out = new tqre_report{
            tqre::estimate(cfg->run.algorithm, cfg->run.error_model, cfg->run.physical)};
        return TQRE_OK;
    } catch (const std::exception& e) {
        *out = nullptr;
        return classify(e);
    }
}

void tqre_report_free(tqre_report* report) {
    delete report;
}

double tqre_report_physical_qubits(const tqre_report* r) {
    return r ? static_cast<double>(r->report.total_physical_qubits) : 0.0;
}

double tqre_report_runtime_seconds(const tqre_report* r) {
    return r ? r->report.runtime_s : 0.0;
}

double tqre_report_spacetime_volume(const tqre_report* r) {
    return r ? r->report.spacetime_volume_qubit_s : 0.0;
}

double tqre_report_ccz_count(const tqre_report* r) {
    return r ? static_cast<double>(r->report.ccz_count) : 0.0;
}

double tqre_report_lookup_additions(const tqre_report* r) {
    return r ? static_cast<double>(r->report.lookup_addition_count) : 0.0;
}

double tqre_report_lookup_seconds(const tqre_report* r) {
    return r ? r->report.lookup_duration_s : 0.0;
}

double tqre_report_addition_seconds(const tqre_report* r) {
    return r ? r->report.addition_duration_s : 0.0;
}

double tqre_report_total_logical_error(const tqre_report* r) {
    return r ? r->report.total_logical_error : 0.0;
}

int tqre_report_constraint_violations(const tqre_report* r) {
    return r ? static_cast<int>(r->report.constraint_violations.size()) : 0;
}

tqre_status tqre_report_constraint_at(const tqre_report* r, int index, char** out) {
    if (!r || !out) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    if (index < 0 || index >= static_cast<int>(r->report.constraint_violations.size())) {
        return fail(TQRE_ERR_INVALID, "constraint index out of range");
    }
    *out = copy_string(r->report.constraint_violations[static_cast<size_t>(index)]);
    return TQRE_OK;
}

tqre_status tqre_report_render_markdown(const tqre_report* r, char** out) {
    if (!r || !out) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    *out = copy_string(tqre::render_report_markdown(r->report));
    return TQRE_OK;
}

tqre_status tqre_report_phase_csv(const tqre_report* r, char** out) {
    if (!r || !out) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    *out = copy_string(tqre::phase_breakdown_csv(r->report));
    return TQRE_OK;
}

tqre_status tqre_sweep(const tqre_config* cfg, char** trace_csv, tqre_report** best) {
    if (!cfg) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    try {
        tqre::OptimizeResult result = tqre::optimize(cfg->run.sweep, cfg->run.algorithm,
                                                     cfg->run.error_model, cfg->run.physical);
        if (trace_csv) {
            *trace_csv = copy_string(tqre::sweep_trace_csv(result.trace));
        }
        if (best) {
            *best = new tqre_report{result.best_report};
        }
        return TQRE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

tqre_status tqre_sensitivity(const tqre_config* cfg, const char* axis, const char* grid,
                             char** curve_csv) {
    if (!cfg || !axis || !curve_csv) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    try {
        const auto parsed = tqre::parse_sensitivity_axis(axis);
        if (!parsed) {
            return fail(TQRE_ERR_INVALID, std::string("unknown sensitivity axis '") + axis + "'");
        }
        std::vector<double> values;
        if (grid && *grid) {
            std::istringstream in(grid);
            std::string item;
            while (std::getline(in, item, ',')) {
                values.push_back(std::stod(item));
            }
        } else {
            values = tqre::default_sensitivity_grid(*parsed);
        }
        const auto curve = tqre::sensitivity_run(*parsed, values, cfg->run.sweep,
                                                 cfg->run.algorithm, cfg->run.error_model,
                                                 cfg->run.physical);
        *curve_csv = copy_string(tqre::sensitivity_csv(*parsed, curve));
        return TQRE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

tqre_status tqre_fit(const char* csv_text, double fixed_c, double fixed_lambda,
                     double fixed_alpha, double* out_c, double* out_lambda, double* out_alpha) {
    if (!csv_text || !out_c || !out_lambda || !out_alpha) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    try {
        std::vector<tqre::FitDataPoint> data;
        std::istringstream in(csv_text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') {
                continue;
            }
            std::string scratch = line;
            for (char& c : scratch) {
                if (c == ',') c = ' ';
            }
            std::istringstream row(scratch);
            tqre::FitDataPoint point;
            if (row >> point.d >> point.x >> point.p_l) {
                row >> point.sigma;
                data.push_back(point);
            }
        }
        if (data.empty()) {
            return fail(TQRE_ERR_PARSE, "fit: no data rows (expected d,x,p_l,sigma)");
        }
        tqre::FitOptions opts;
        if (fixed_c >= 0.0) opts.fixed_c = fixed_c;
        if (fixed_lambda >= 0.0) opts.fixed_lambda = fixed_lambda;
        if (fixed_alpha >= 0.0) opts.fixed_alpha = fixed_alpha;
        const tqre::ErrorModelParams fitted = tqre::fit_error_model(data, opts);
        *out_c = fitted.prefactor_c;
        *out_lambda = fitted.lambda;
        *out_alpha = fitted.alpha;
        return TQRE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

tqre_status tqre_emit_layouts(const tqre_config* cfg, const char* dir) {
    if (!cfg || !dir) {
        return fail(TQRE_ERR_INVALID, "null argument");
    }
    try {
        tqre::emit_layout_csvs(cfg->run, dir);
        return TQRE_OK;
    } catch (const std::exception& e) {
        return classify(e);
    }
}

} // extern "C"
