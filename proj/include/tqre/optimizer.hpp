#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tqre/shor_algorithm.hpp"

namespace tqre {

enum class Objective {
    SpacetimeVolume,
    Runtime,
    Qubits,
};

enum class SweepParam {
    WExp,
    WMul,
    RSep,
    MaxFactories,
    CodeDistance,
    GhzGridSpacing,
    PipelineCopies,
};

const char* sweep_param_name(SweepParam p);

/// Pairwise sweep specification: parameter pairs (or singletons) are swept
/// exhaustively over their grids in coordinate-descent passes until no pair
/// improves the objective.
struct SweepSpec {
    Objective objective = Objective::SpacetimeVolume;
    std::vector<std::vector<SweepParam>> pairs;      // each entry: 1 or 2 params
    std::vector<std::vector<double>> grids;          // grid per SweepParam, indexed by enum
    std::optional<double> qubit_cap;
    // After convergence, rebuild each swept grid at double resolution around
    // the incumbent and descend again.
    bool grid_refine = false;

    static SweepSpec defaults();
    void validate() const;
};

struct SweepTraceRow {
    int pass = 0;
    std::string pair;
    AlgorithmConfig cfg;
    double objective_value = 0.0;
    double volume_qubit_s = 0.0;
    double runtime_s = 0.0;
    long long physical_qubits = 0;
    bool feasible = false;
    std::string flags;
};

struct OptimizeResult {
    AlgorithmConfig best_config;
    EstimateReport best_report;
    double best_objective = 0.0;
    std::vector<SweepTraceRow> trace;
};

/// Deterministic coordinate descent over the pairwise grids. Ties break toward
/// the lexicographically smallest parameter tuple. Throws InfeasibleError when
/// every grid point violates a constraint; the message carries per-point
/// diagnostics.
OptimizeResult optimize(const SweepSpec& spec, const AlgorithmConfig& base,
                        const ErrorModelParams& em, const PhysicalParams& pp);

enum class SensitivityAxis {
    Alpha,
    CoherenceTime,
    AccelerationScale,
    ReactionTime,
    QubitCap,
};

const char* sensitivity_axis_name(SensitivityAxis axis);
std::optional<SensitivityAxis> parse_sensitivity_axis(const std::string& name);
std::vector<double> default_sensitivity_grid(SensitivityAxis axis);

struct SensitivityPoint {
    double axis_value = 0.0;
    double volume_qubit_s = 0.0;
    double runtime_s = 0.0;
    long long physical_qubits = 0;
};

/// Re-optimizes at each grid point of the axis and returns the curve.
std::vector<SensitivityPoint> sensitivity_run(SensitivityAxis axis,
                                              const std::vector<double>& grid,
                                              const SweepSpec& spec,
                                              const AlgorithmConfig& base,
                                              const ErrorModelParams& em,
                                              const PhysicalParams& pp);

std::string sweep_trace_csv(const std::vector<SweepTraceRow>& trace);
std::string sensitivity_csv(SensitivityAxis axis, const std::vector<SensitivityPoint>& curve);

} // namespace tqre
