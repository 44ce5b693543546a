#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tqre/physical_model.hpp"

namespace tqre {

/// Parameters of the logical error rate model.
/// Per-round memory error: C / Lambda^((d+1)/2).
/// Per-CNOT error with x transversal CNOTs per SE round:
///   (2C/x) * ((alpha*x + 1)/Lambda)^((d+1)/2).
struct ErrorModelParams {
    double prefactor_c = 0.1;
    double lambda = 10.0;
    double p_phys = 1e-3;
    double p_thres = 1e-2;
    double alpha = 1.0 / 6.0;

    void validate() const;
};

/// Transversal-gate load on a patch between consecutive SE rounds.
struct GateLoad {
    double cnots_per_se_round = 0.0;  // may be fractional
    double idle_time_per_round_s = 0.0;
};

/// One decoder benchmark point: logical error per qubit per round measured at
/// code distance d with x transversal CNOTs per SE round.
struct FitDataPoint {
    int d = 3;
    double x = 1.0;
    double p_l = 0.0;
    double sigma = 0.0;
};

struct FitOptions {
    std::optional<double> fixed_c;
    std::optional<double> fixed_lambda;
    std::optional<double> fixed_alpha;
};

double memory_error_per_round(int d, const ErrorModelParams& em);

double cnot_logical_error(int d, double x, const ErrorModelParams& em);

double effective_threshold(double x, double alpha, double p_thres);

/// Smallest odd d >= 3 with cnot_logical_error(d, x) <= target_error.
/// Throws InfeasibleError when the load exceeds threshold (alpha*x+1 >= Lambda).
int required_distance(double target_error, double x, const ErrorModelParams& em);

/// Accumulated physical idle error over an interval: dt / T_coh.
double idle_error_per_interval(double dt_s, const PhysicalParams& pp);

/// Logical error per storage qubit per SE interval: memory term plus a
/// separately suppressed idle term, added at the logical level.
double storage_round_error(double interval_s, int d, const ErrorModelParams& em,
                           const PhysicalParams& pp);

/// Per-qubit-per-round logical error under a mixed gate/idle load.
double se_interval_error(int d, const GateLoad& load, const ErrorModelParams& em,
                         const PhysicalParams& pp);

/// SE interval minimizing storage error rate per unit time at fixed d
/// (equivalently, storage volume per unit error budget). Clamped to
/// [one SE round wall time, T_coh].
double optimal_storage_interval(int d, const ErrorModelParams& em, const PhysicalParams& pp);

/// Relative space-time volume per logical CNOT at x CNOTs per SE round,
/// natural-log convention; only ratios are meaningful.
double volume_per_cnot(double x, double target_error, const ErrorModelParams& em);

/// Least-squares fit of (C, Lambda, alpha) to measured logical error rates,
/// uniform weights in the log domain; deterministic (golden-section search on
/// alpha over a linear subproblem). Members pinned in `opts` are held fixed.
/// Requires at least three points spanning two distinct distances;
/// identifying alpha further requires two distinct x values. Throws
/// UnderdeterminedError otherwise.
ErrorModelParams fit_error_model(std::span<const FitDataPoint> data, const FitOptions& opts = {});

} // namespace tqre
