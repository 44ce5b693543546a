#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "tqre/layout_engine.hpp"
#include "tqre/logical_error_model.hpp"

namespace tqre {

/// Tabulated T-state cultivation cost: expected qubit-rounds per accepted
/// state as a function of the output error. Log-log linear interpolation,
/// end-segment slopes extrapolate.
class CultivationCurve {
public:
    /// Points are (t_error, qubit_rounds), sorted by error ascending with
    /// strictly decreasing volume. Throws std::invalid_argument otherwise.
    explicit CultivationCurve(std::vector<std::pair<double, double>> points);

    /// Single anchor at (7.7e-7, 1.5e4) with quadratic suppression (log-log
    /// slope -2) on both sides.
    static CultivationCurve default_curve();

    /// Reads rows "t_error,qubit_rounds".
    static CultivationCurve from_csv(std::istream& in);

    double volume_at(double t_error) const;

    const std::vector<std::pair<double, double>>& points() const { return points_; }

private:
    std::vector<std::pair<double, double>> points_;
};

/// Error of the CCZ state produced from 8 T states of error t_error:
/// 28*t^2 plus the factory's internal Clifford floor.
double ccz_error(double t_error, double clifford_floor = 0.0);

/// Inverse of ccz_error on the feasible domain. Throws InfeasibleError when
/// the target does not exceed the floor.
double required_t_error(double ccz_target, double clifford_floor = 0.0);

struct FactoryModel {
    int d = 27;
    double se_rounds_per_gate = 1.0;
    double t_input_error = 0.0;
    double clifford_floor = 0.0;
    double ccz_output_error = 0.0;
    double cycle_duration_s = 0.0;     // per CCZ state, pipeline occupancy 1
    double cultivation_volume = 0.0;   // qubit-rounds per accepted T state
    double cultivation_supply_per_s = 0.0;
    GadgetLayout footprint;
    long long physical_qubits = 0;
    double throughput_ccz_per_s = 0.0;
};

struct FactoryBuildOptions {
    std::vector<double> se_rounds_grid = {1.0 / 3.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0};
    std::optional<double> fixed_se_rounds;
    std::optional<int> fixed_d;
    double floor_fraction = 0.1;  // share of the CCZ target allowed to Cliffords
    int cultivation_copies = 8;
    std::optional<CultivationCurve> curve;
};

/// Internal Clifford logical error of one factory cycle at distance d with
/// `se_rounds_per_gate` SE rounds per transversal layer.
double factory_clifford_floor(int d, double se_rounds_per_gate, const ErrorModelParams& em);

/// Schedule wall time of one factory cycle (4 conversion CNOT layers,
/// teleported T layer, measurement and feed-forward).
double factory_cycle_time(int d, double se_rounds_per_gate, const PhysicalParams& pp);

/// Builds the two-stage factory for a CCZ error target: picks the inner code
/// distance against the Clifford floor budget, reads the cultivation volume
/// for the required T error, and sweeps SE rounds per gate keeping the
/// volume-per-CCZ-minimizing choice. Throughput accounts for the cultivation
/// supply rate of the bottom row. Throws InfeasibleError when no grid point is
/// feasible.
FactoryModel factory_build(double ccz_target, const ErrorModelParams& em,
                           const PhysicalParams& pp, const FactoryBuildOptions& opts = {});

} // namespace tqre
