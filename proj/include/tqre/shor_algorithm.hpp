#pragma once

#include <string>
#include <vector>

#include "tqre/lookup_unit.hpp"

namespace tqre {

/// Factoring instance and tunable implementation parameters.
struct AlgorithmConfig {
    long long n_bits = 2048;
    long long exponent_bits = 0;  // 0 -> ceil(1.5 * n_bits)
    int w_exp = 3;
    int w_mul = 4;
    long long r_sep = 96;
    long long r_pad = 43;
    int d = 27;
    int max_factories = 192;
    double ccz_budget_fraction = 0.05;
    double total_error_budget = 0.5;
    int ghz_grid_spacing = 2;
    int pipeline_copies = 1;
    double storage_density_factor = 1.0;
    double storage_se_interval_s = 0.0;  // 0 -> optimal_storage_interval
    UnlookupMode unlookup_mode = UnlookupMode::Measured;
    double factory_floor_fraction = 0.1;

    long long effective_exponent_bits() const;
    void validate() const;
};

struct PhaseComponent {
    std::string phase;      // "lookup" | "addition"
    std::string component;  // e.g. "cnot_fanout", "factories"
    long long patches = 0;
    long long physical_qubits = 0;
    double error_share = 0.0;  // fraction of total logical error
};

struct BudgetSplit {
    double per_ccz_target = 0.0;
    double ccz_budget = 0.0;      // absolute probability mass for CCZ states
    double clifford_budget = 0.0; // remainder for Clifford/idle/runway errors
};

struct EstimateReport {
    // Headline totals.
    long long total_physical_qubits = 0;
    double runtime_s = 0.0;
    double spacetime_volume_qubit_s = 0.0;
    long long ccz_count = 0;
    long long lookup_addition_count = 0;

    // Unit timings.
    double lookup_duration_s = 0.0;    // includes the unlookup of each window
    double addition_duration_s = 0.0;
    double storage_se_interval_s = 0.0;

    // Phase footprints (hardware is reused between phases; the total is the max).
    long long lookup_phase_qubits = 0;
    long long addition_phase_qubits = 0;

    // Error accounting.
    double total_logical_error = 0.0;
    double ccz_error_total = 0.0;
    double clifford_error_total = 0.0;
    double runway_error_total = 0.0;
    BudgetSplit budget;

    // Factory chain.
    FactoryModel factory;
    int factories_deployed = 0;

    std::vector<PhaseComponent> breakdown;
    std::vector<std::string> constraint_violations;
    std::vector<std::string> assumptions;

    bool feasible() const { return constraint_violations.empty(); }
};

/// Number of lookup-addition pairs in the windowed modular exponentiation,
/// produced by explicit enumeration of the schedule (exponent windows, two
/// multiplication passes per window, multiplicand windows per pass).
long long count_lookup_additions(const AlgorithmConfig& cfg);

/// Total CCZ states consumed: lookup-additions times the per-pair Toffoli
/// count from the unit models.
long long ccz_count(const AlgorithmConfig& cfg);

/// Splits the error budget: per-CCZ target is ccz_budget_fraction / ccz_count;
/// the rest of total_error_budget covers Clifford, idle and runway errors.
/// Throws InfeasibleError when the CCZ fraction exceeds the total budget.
BudgetSplit allocate_budget(const AlgorithmConfig& cfg);

/// End-to-end resource estimate. Constraint violations (factory throughput,
/// factory cap, error budget) are listed in the report, never silently fixed.
EstimateReport estimate(const AlgorithmConfig& cfg, const ErrorModelParams& em,
                        const PhysicalParams& pp);

} // namespace tqre
