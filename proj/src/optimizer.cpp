#include "tqre/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tqre/errors.hpp"

namespace tqre {

const char* sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::WExp: return "w_exp";
        case SweepParam::WMul: return "w_mul";
        case SweepParam::RSep: return "r_sep";
        case SweepParam::MaxFactories: return "max_factories";
        case SweepParam::CodeDistance: return "code_distance";
        case SweepParam::GhzGridSpacing: return "ghz_grid_spacing";
        case SweepParam::PipelineCopies: return "pipeline_copies";
    }
    return "?";
}

namespace {

constexpr int kNumParams = 7;

double get_param(const AlgorithmConfig& cfg, SweepParam p) {
    switch (p) {
        case SweepParam::WExp: return cfg.w_exp;
        case SweepParam::WMul: return cfg.w_mul;
        case SweepParam::RSep: return static_cast<double>(cfg.r_sep);
        case SweepParam::MaxFactories: return cfg.max_factories;
        case SweepParam::CodeDistance: return cfg.d;
        case SweepParam::GhzGridSpacing: return cfg.ghz_grid_spacing;
        case SweepParam::PipelineCopies: return cfg.pipeline_copies;
    }
    return 0.0;
}

void set_param(AlgorithmConfig& cfg, SweepParam p, double v) {
    switch (p) {
        case SweepParam::WExp: cfg.w_exp = static_cast<int>(v); break;
        case SweepParam::WMul: cfg.w_mul = static_cast<int>(v); break;
        case SweepParam::RSep: cfg.r_sep = static_cast<long long>(v); break;
        case SweepParam::MaxFactories: cfg.max_factories = static_cast<int>(v); break;
        case SweepParam::CodeDistance: cfg.d = static_cast<int>(v); break;
        case SweepParam::GhzGridSpacing: cfg.ghz_grid_spacing = static_cast<int>(v); break;
        case SweepParam::PipelineCopies: cfg.pipeline_copies = static_cast<int>(v); break;
    }
}

std::array<double, kNumParams> param_tuple(const AlgorithmConfig& cfg) {
    std::array<double, kNumParams> t{};
    for (int i = 0; i < kNumParams; ++i) {
        t[static_cast<size_t>(i)] = get_param(cfg, static_cast<SweepParam>(i));
    }
    return t;
}

double objective_of(const EstimateReport& report, Objective objective) {
    switch (objective) {
        case Objective::SpacetimeVolume: return report.spacetime_volume_qubit_s;
        case Objective::Runtime: return report.runtime_s;
        case Objective::Qubits: return static_cast<double>(report.total_physical_qubits);
    }
    return 0.0;
}

double snap_to_param(SweepParam p, double v) {
    double snapped = std::round(v);
    if (p == SweepParam::CodeDistance) {
        // Keep distances odd.
        if (static_cast<long long>(snapped) % 2 == 0) {
            snapped += 1.0;
        }
    }
    return std::max(snapped, 1.0);
}

// Doubles the grid resolution around the incumbent value of every swept
// parameter: the incumbent, its grid neighbors and their midpoints.
std::vector<std::vector<double>> refined_grids(const SweepSpec& spec,
                                               const AlgorithmConfig& best) {
    std::vector<std::vector<double>> grids = spec.grids;
    for (const auto& pair : spec.pairs) {
        for (SweepParam p : pair) {
            auto grid = spec.grids[static_cast<size_t>(p)];
            std::sort(grid.begin(), grid.end());
            const double incumbent = get_param(best, p);
            size_t idx = 0;
            for (size_t i = 0; i < grid.size(); ++i) {
                if (std::abs(grid[i] - incumbent) < std::abs(grid[idx] - incumbent)) {
                    idx = i;
                }
            }
            std::vector<double> refined{incumbent};
            if (idx > 0) {
                refined.push_back(grid[idx - 1]);
                refined.push_back(snap_to_param(p, 0.5 * (grid[idx - 1] + incumbent)));
            }
            if (idx + 1 < grid.size()) {
                refined.push_back(grid[idx + 1]);
                refined.push_back(snap_to_param(p, 0.5 * (grid[idx + 1] + incumbent)));
            }
            std::sort(refined.begin(), refined.end());
            refined.erase(std::unique(refined.begin(), refined.end()), refined.end());
            grids[static_cast<size_t>(p)] = refined;
        }
    }
    return grids;
}

} // namespace

SweepSpec SweepSpec::defaults() {
    SweepSpec spec;
    spec.pairs = {
        {SweepParam::WExp, SweepParam::WMul},
        {SweepParam::RSep, SweepParam::MaxFactories},
        {SweepParam::CodeDistance},
        {SweepParam::GhzGridSpacing, SweepParam::PipelineCopies},
    };
    spec.grids.resize(kNumParams);
    spec.grids[static_cast<size_t>(SweepParam::WExp)] = {1, 2, 3, 4, 5, 6};
    spec.grids[static_cast<size_t>(SweepParam::WMul)] = {1, 2, 3, 4, 5, 6};
    spec.grids[static_cast<size_t>(SweepParam::RSep)] = {32, 48, 64, 96, 128, 192, 256, 384, 512, 768, 1024};
    spec.grids[static_cast<size_t>(SweepParam::MaxFactories)] = {16, 24, 32, 48, 64, 96, 128, 192, 256};
    spec.grids[static_cast<size_t>(SweepParam::CodeDistance)] = {15, 17, 19, 21, 23, 25, 27, 29, 31, 33, 35};
    spec.grids[static_cast<size_t>(SweepParam::GhzGridSpacing)] = {1, 2, 3, 4, 6, 8};
    spec.grids[static_cast<size_t>(SweepParam::PipelineCopies)] = {1, 2, 3};
    return spec;
}

void SweepSpec::validate() const {
    if (pairs.empty()) {
        throw std::invalid_argument("sweep: no parameter pairs");
    }
    if (grids.size() != kNumParams) {
        throw std::invalid_argument("sweep: grid table incomplete");
    }
    for (const auto& pair : pairs) {
        if (pair.empty() || pair.size() > 2) {
            throw std::invalid_argument("sweep: each entry must hold one or two parameters");
        }
        for (SweepParam p : pair) {
            if (grids[static_cast<size_t>(p)].empty()) {
                throw std::invalid_argument(std::string("sweep: empty grid for ") +
                                            sweep_param_name(p));
            }
        }
    }
}

OptimizeResult optimize(const SweepSpec& spec, const AlgorithmConfig& base,
                        const ErrorModelParams& em, const PhysicalParams& pp) {
    spec.validate();

    auto evaluate = [&](const AlgorithmConfig& cfg, bool& feasible,
                        std::string& flags) -> EstimateReport {
        EstimateReport report = estimate(cfg, em, pp);
        feasible = report.feasible();
        if (spec.qubit_cap &&
            static_cast<double>(report.total_physical_qubits) > *spec.qubit_cap) {
            feasible = false;
            report.constraint_violations.push_back(
                "qubit cap: " + std::to_string(report.total_physical_qubits) + " exceeds " +
                std::to_string(static_cast<long long>(*spec.qubit_cap)));
        }
        std::ostringstream f;
        for (size_t i = 0; i < report.constraint_violations.size(); ++i) {
            if (i) f << "; ";
            f << report.constraint_violations[i];
        }
        flags = f.str();
        return report;
    };

    OptimizeResult result;
    result.best_config = base;
    bool have_best = false;
    double best_obj = 0.0;
    auto best_tuple = param_tuple(base);
    std::ostringstream diagnostics;

    auto consider = [&](const AlgorithmConfig& cfg, int pass, const std::string& pair_name) {
        bool feasible = false;
        std::string flags;
        EstimateReport report;
        double obj = 0.0;
        try {
            report = evaluate(cfg, feasible, flags);
            obj = objective_of(report, spec.objective);
        } catch (const std::exception& e) {
            feasible = false;
            flags = e.what();
        }
        SweepTraceRow row;
        row.pass = pass;
        row.pair = pair_name;
        row.cfg = cfg;
        row.objective_value = obj;
        row.volume_qubit_s = report.spacetime_volume_qubit_s;
        row.runtime_s = report.runtime_s;
        row.physical_qubits = report.total_physical_qubits;
        row.feasible = feasible;
        row.flags = flags;
        result.trace.push_back(row);
        if (!feasible) {
            diagnostics << pair_name << " " << flags << "\n";
            return;
        }
        const auto tuple = param_tuple(cfg);
        const bool better =
            !have_best || obj < best_obj * (1.0 - 1e-12) ||
            (std::abs(obj - best_obj) <= 1e-12 * std::max(std::abs(obj), std::abs(best_obj)) &&
             tuple < best_tuple);
        if (better) {
            have_best = true;
            best_obj = obj;
            best_tuple = tuple;
            result.best_config = cfg;
            result.best_report = report;
        }
    };

    // Seed with the base point, then coordinate-descent over the pairs.
    consider(base, 0, "base");
    int pass = 0;
    auto descend = [&](const std::vector<std::vector<double>>& grids) {
        bool improved = true;
        while (improved && pass < 64) {
            ++pass;
            improved = false;
            for (const auto& pair : spec.pairs) {
                const double before = have_best ? best_obj : 0.0;
                const bool had_best = have_best;
                std::string pair_name = sweep_param_name(pair[0]);
                if (pair.size() == 2) {
                    pair_name += std::string(":") + sweep_param_name(pair[1]);
                }
                const AlgorithmConfig incumbent = result.best_config;
                const auto& grid_a = grids[static_cast<size_t>(pair[0])];
                if (pair.size() == 1) {
                    for (double a : grid_a) {
                        AlgorithmConfig cfg = incumbent;
                        set_param(cfg, pair[0], a);
                        consider(cfg, pass, pair_name);
                    }
                } else {
                    const auto& grid_b = grids[static_cast<size_t>(pair[1])];
                    for (double a : grid_a) {
                        for (double b : grid_b) {
                            AlgorithmConfig cfg = incumbent;
                            set_param(cfg, pair[0], a);
                            set_param(cfg, pair[1], b);
                            consider(cfg, pass, pair_name);
                        }
                    }
                }
                if (have_best && (!had_best || best_obj < before * (1.0 - 1e-12))) {
                    improved = true;
                }
            }
        }
    };
    descend(spec.grids);
    if (have_best && spec.grid_refine) {
        descend(refined_grids(spec, result.best_config));
    }
    if (!have_best) {
        throw InfeasibleError("optimize: every grid point violates a constraint\n" +
                              diagnostics.str());
    }
    result.best_objective = best_obj;
    return result;
}

const char* sensitivity_axis_name(SensitivityAxis axis) {
    switch (axis) {
        case SensitivityAxis::Alpha: return "alpha";
        case SensitivityAxis::CoherenceTime: return "coherence_time";
        case SensitivityAxis::AccelerationScale: return "acceleration_scale";
        case SensitivityAxis::ReactionTime: return "reaction_time";
        case SensitivityAxis::QubitCap: return "qubit_cap";
    }
    return "?";
}

std::optional<SensitivityAxis> parse_sensitivity_axis(const std::string& name) {
    for (SensitivityAxis axis :
         {SensitivityAxis::Alpha, SensitivityAxis::CoherenceTime,
          SensitivityAxis::AccelerationScale, SensitivityAxis::ReactionTime,
          SensitivityAxis::QubitCap}) {
        if (name == sensitivity_axis_name(axis)) {
            return axis;
        }
    }
    return std::nullopt;
}

std::vector<double> default_sensitivity_grid(SensitivityAxis axis) {
    switch (axis) {
        case SensitivityAxis::Alpha:
            return {1.0 / 6.0, 0.25, 0.4, 0.667};
        case SensitivityAxis::CoherenceTime:
            return {0.5, 1.0, 3.0, 10.0};
        case SensitivityAxis::AccelerationScale:
            return {0.25, 0.5, 1.0, 2.0, 4.0};
        case SensitivityAxis::ReactionTime:
            return {0.1e-3, 0.3e-3, 1e-3, 3e-3, 10e-3};
        case SensitivityAxis::QubitCap:
            return {15e6, 17e6, 20e6, 25e6, 30e6};
    }
    return {};
}

std::vector<SensitivityPoint> sensitivity_run(SensitivityAxis axis,
                                              const std::vector<double>& grid,
                                              const SweepSpec& spec,
                                              const AlgorithmConfig& base,
                                              const ErrorModelParams& em,
                                              const PhysicalParams& pp) {
    std::vector<SensitivityPoint> curve;
    for (double value : grid) {
        AlgorithmConfig cfg = base;
        ErrorModelParams em_pt = em;
        PhysicalParams pp_pt = pp;
        SweepSpec spec_pt = spec;
        switch (axis) {
            case SensitivityAxis::Alpha: em_pt.alpha = value; break;
            case SensitivityAxis::CoherenceTime: pp_pt.coherence_time_s = value; break;
            case SensitivityAxis::AccelerationScale:
                pp_pt.acceleration_m_s2 = pp.acceleration_m_s2 * value;
                break;
            case SensitivityAxis::ReactionTime:
                // The reaction time covers measurement plus the decode round
                // trip, so sweeping it below the default readout implies
                // correspondingly faster measurement.
                pp_pt.reaction_time_s = value;
                pp_pt.measure_time_s = std::min(pp.measure_time_s, value / 2.0);
                pp_pt.decode_time_s = std::min(pp.decode_time_s, value / 2.0);
                break;
            case SensitivityAxis::QubitCap: spec_pt.qubit_cap = value; break;
        }
        const OptimizeResult best = optimize(spec_pt, cfg, em_pt, pp_pt);
        SensitivityPoint point;
        point.axis_value = value;
        point.volume_qubit_s = best.best_report.spacetime_volume_qubit_s;
        point.runtime_s = best.best_report.runtime_s;
        point.physical_qubits = best.best_report.total_physical_qubits;
        curve.push_back(point);
    }
    return curve;
}

namespace {

void append_csv_field(std::ostringstream& out, const std::string& field) {
    if (field.find_first_of(",\"\n") != std::string::npos) {
        out << '"';
        for (char c : field) {
            if (c == '"') out << '"';
            out << c;
        }
        out << '"';
    } else {
        out << field;
    }
}

} // namespace

std::string sweep_trace_csv(const std::vector<SweepTraceRow>& trace) {
    std::ostringstream out;
    out.precision(17);
    out << "pass,pair,w_exp,w_mul,r_sep,max_factories,code_distance,ghz_grid_spacing,"
           "pipeline_copies,objective,volume_qubit_s,runtime_s,physical_qubits,feasible,flags\n";
    for (const SweepTraceRow& row : trace) {
        out << row.pass << ',' << row.pair << ',' << row.cfg.w_exp << ',' << row.cfg.w_mul << ','
            << row.cfg.r_sep << ',' << row.cfg.max_factories << ',' << row.cfg.d << ','
            << row.cfg.ghz_grid_spacing << ',' << row.cfg.pipeline_copies << ','
            << row.objective_value << ',' << row.volume_qubit_s << ',' << row.runtime_s << ','
            << row.physical_qubits << ',' << (row.feasible ? 1 : 0) << ',';
        append_csv_field(out, row.flags);
        out << '\n';
    }
    return out.str();
}

std::string sensitivity_csv(SensitivityAxis axis, const std::vector<SensitivityPoint>& curve) {
    std::ostringstream out;
    out.precision(17);
    out << sensitivity_axis_name(axis) << ",volume_qubit_s,runtime_s,physical_qubits\n";
    for (const SensitivityPoint& point : curve) {
        out << point.axis_value << ',' << point.volume_qubit_s << ',' << point.runtime_s << ','
            << point.physical_qubits << '\n';
    }
    return out.str();
}

} // namespace tqre
