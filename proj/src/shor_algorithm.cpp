#include "tqre/shor_algorithm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tqre/errors.hpp"

namespace tqre {

long long AlgorithmConfig::effective_exponent_bits() const {
    if (exponent_bits > 0) {
        return exponent_bits;
    }
    return (3 * n_bits + 1) / 2;  // ceil(1.5 n)
}

void AlgorithmConfig::validate() const {
    if (n_bits < 1) {
        throw std::invalid_argument("algorithm: n_bits must be >= 1");
    }
    if (w_exp < 1 || w_mul < 1) {
        throw std::invalid_argument("algorithm: window sizes must be >= 1");
    }
    if (w_exp + w_mul > 40) {
        throw std::invalid_argument("algorithm: combined window exceeds 40 bits");
    }
    if (r_sep < 1 || r_pad < 0) {
        throw std::invalid_argument("algorithm: invalid runway parameters");
    }
    if (max_factories < 1) {
        throw std::invalid_argument("algorithm: max_factories must be >= 1");
    }
    if (!(ccz_budget_fraction > 0.0) || ccz_budget_fraction >= 1.0) {
        throw std::invalid_argument("algorithm: ccz_budget_fraction must be in (0, 1)");
    }
    if (!(total_error_budget > 0.0) || total_error_budget > 1.0) {
        throw std::invalid_argument("algorithm: total_error_budget must be in (0, 1]");
    }
    if (storage_density_factor < 1.0) {
        throw std::invalid_argument("algorithm: storage_density_factor must be >= 1");
    }
    if (ghz_grid_spacing < 1 || pipeline_copies < 1) {
        throw std::invalid_argument("algorithm: invalid fan-out parameters");
    }
    patch_qubits(d);
}

long long count_lookup_additions(const AlgorithmConfig& cfg) {
    cfg.validate();
    const long long exp_bits = cfg.effective_exponent_bits();
    long long count = 0;
    // Windowed modular exponentiation: each exponent window drives one
    // controlled modular multiplication, performed as a compute pass into a
    // fresh register and an uncompute pass of the old one. Every multiplicand
    // window in a pass costs one table load plus one addition.
    for (long long e = 0; e < exp_bits; e += cfg.w_exp) {
        for (int pass = 0; pass < 2; ++pass) {
            for (long long m = 0; m < cfg.n_bits; m += cfg.w_mul) {
                ++count;
            }
        }
    }
    return count;
}

namespace {

long long addend_register_bits(const AlgorithmConfig& cfg) {
    return cfg.n_bits + cfg.w_mul;
}

AdderConfig make_adder_config(const AlgorithmConfig& cfg) {
    AdderConfig adder;
    adder.register_bits = cfg.n_bits;
    adder.r_sep = cfg.r_sep;
    adder.r_pad = cfg.r_pad;
    adder.d = cfg.d;
    return adder;
}

LookupConfig make_lookup_config(const AlgorithmConfig& cfg) {
    LookupConfig lookup;
    lookup.address_bits = cfg.w_exp + cfg.w_mul;
    lookup.target_bits = addend_register_bits(cfg);
    lookup.ghz_grid_spacing = cfg.ghz_grid_spacing;
    lookup.pipeline_copies = cfg.pipeline_copies;
    lookup.d = cfg.d;
    lookup.unlookup_mode = cfg.unlookup_mode;
    return lookup;
}

} // namespace

long long ccz_count(const AlgorithmConfig& cfg) {
    const AdderConfig adder = make_adder_config(cfg);
    const LookupConfig lookup = make_lookup_config(cfg);
    const long long per_pair = lookup_toffoli_count(lookup) + unlookup_toffoli_count(lookup) +
                               adder_toffoli_count(adder);
    return count_lookup_additions(cfg) * per_pair;
}

BudgetSplit allocate_budget(const AlgorithmConfig& cfg) {
    cfg.validate();
    if (cfg.ccz_budget_fraction > cfg.total_error_budget) {
        throw InfeasibleError("budget split: CCZ share exceeds the total error budget");
    }
    BudgetSplit split;
    split.ccz_budget = cfg.ccz_budget_fraction;
    split.clifford_budget = cfg.total_error_budget - cfg.ccz_budget_fraction;
    const long long count = ccz_count(cfg);
    split.per_ccz_target =
        count > 0 ? cfg.ccz_budget_fraction / static_cast<double>(count) : cfg.ccz_budget_fraction;
    return split;
}

EstimateReport estimate(const AlgorithmConfig& cfg, const ErrorModelParams& em,
                        const PhysicalParams& pp) {
    cfg.validate();
    em.validate();
    pp.validate();

    EstimateReport report;
    report.lookup_addition_count = count_lookup_additions(cfg);
    report.ccz_count = ccz_count(cfg);
    report.budget = allocate_budget(cfg);

    // Factory chain at the algorithm's code distance (transversal gates need
    // matching patch sizes machine-wide).
    FactoryBuildOptions fopts;
    fopts.fixed_d = cfg.d;
    fopts.floor_fraction = cfg.factory_floor_fraction;
    try {
        report.factory = factory_build(report.budget.per_ccz_target, em, pp, fopts);
    } catch (const InfeasibleError& e) {
        report.constraint_violations.push_back(std::string("factory: ") + e.what());
        // Keep the report informative: let the factory pick the distance it
        // would actually need, with the violation recorded above.
        FactoryBuildOptions relaxed = fopts;
        relaxed.fixed_d.reset();
        report.factory = factory_build(report.budget.per_ccz_target, em, pp, relaxed);
    }

    // Unit costs. The fleet is sized to the addition phase's average CCZ rate
    // (staggered segments flatten the demand).
    const AdderConfig adder_cfg = make_adder_config(cfg);
    const LookupConfig lookup_cfg = make_lookup_config(cfg);

    const double step = adder_step_time(adder_cfg, pp);
    const double add_duration = 2.0 * static_cast<double>(cfg.r_sep + cfg.r_pad) * step;
    const double add_ccz_rate = static_cast<double>(adder_toffoli_count(adder_cfg)) / add_duration;
    int fleet_size = static_cast<int>(
        std::ceil(add_ccz_rate / report.factory.throughput_ccz_per_s - 1e-9));
    fleet_size = std::max(fleet_size, 1);
    if (fleet_size > cfg.max_factories) {
        report.constraint_violations.push_back(
            "factories: " + std::to_string(fleet_size) + " needed to sustain the addition phase, cap is " +
            std::to_string(cfg.max_factories));
        fleet_size = cfg.max_factories;
    }
    report.factories_deployed = fleet_size;

    FactoryFleet fleet{report.factory, fleet_size};
    const AdderCost add = adder_cost(adder_cfg, em, pp, fleet);
    const LookupCost look = lookup_cost(lookup_cfg, em, pp, fleet);
    const LookupCost unlook = unlookup_cost(lookup_cfg, em, pp, fleet);
    if (!add.throughput_ok) {
        report.constraint_violations.push_back("adder: " + add.constraint_note);
    }
    if (!look.throughput_ok) {
        report.constraint_violations.push_back("lookup: " + look.constraint_note);
    }

    report.addition_duration_s = add.total.duration_s;
    report.lookup_duration_s = look.total.duration_s + unlook.total.duration_s;

    // Footprints. Registers: multiplicand, padded accumulator, addend target
    // and the iterative-QPE control pair.
    const long long pq = patch_qubits(cfg.d);
    const long long padded_accumulator = cfg.n_bits + add.segments * cfg.r_pad;
    const long long multiplicand = cfg.n_bits;
    const long long addend = addend_register_bits(cfg);
    const long long control = 2;
    const long long register_patches = multiplicand + padded_accumulator + addend + control;
    const long long factory_patches =
        static_cast<long long>(fleet_size) * report.factory.footprint.patches();
    const long long fanout_patches =
        (look.fanout_patches + look.ladder_patches) * cfg.pipeline_copies;
    const long long adder_working = add.working_patches;

    // The multiplicand register only feeds lookup addresses; it can sit in
    // dense storage in both phases. The density knob compresses it.
    const long long storable = multiplicand + control;
    const long long stored_patches_saved = static_cast<long long>(
        std::floor(static_cast<double>(storable) * (1.0 - 1.0 / cfg.storage_density_factor)));

    const long long lookup_patches_total =
        register_patches + factory_patches + fanout_patches - stored_patches_saved;
    const long long addition_patches_total =
        register_patches + factory_patches + adder_working - stored_patches_saved;

    report.lookup_phase_qubits = lookup_patches_total * pq;
    report.addition_phase_qubits = addition_patches_total * pq;
    report.total_physical_qubits =
        std::max(report.lookup_phase_qubits, report.addition_phase_qubits);

    // Runtime: pairs of (lookup + unlookup + addition), one rotation reaction
    // step per exponent bit, stagger fill and phase-transition slack.
    const double pair_time = report.lookup_duration_s + report.addition_duration_s;
    const double qpe_time =
        static_cast<double>(cfg.effective_exponent_bits()) * pp.reaction_time_s;
    const double fill_time = static_cast<double>(add.segments) * pp.reaction_time_s +
                             (static_cast<double>(look.fanout.schedule.size())) * look.stage_time_s;
    report.runtime_s =
        static_cast<double>(report.lookup_addition_count) * pair_time + qpe_time + fill_time;
    report.spacetime_volume_qubit_s =
        static_cast<double>(report.total_physical_qubits) * report.runtime_s;

    // Storage cadence for idle registers.
    report.storage_se_interval_s = cfg.storage_se_interval_s > 0.0
                                       ? cfg.storage_se_interval_s
                                       : optimal_storage_interval(cfg.d, em, pp);

    // Error accounting.
    const double n_pairs = static_cast<double>(report.lookup_addition_count);
    report.ccz_error_total =
        static_cast<double>(report.ccz_count) * report.factory.ccz_output_error;
    const double lookup_error = (look.total.logical_error + unlook.total.logical_error) * n_pairs;
    const double adder_working_error =
        (add.total.logical_error - static_cast<double>(add.segments) * runway_error(cfg.r_pad)) *
        n_pairs;
    report.runway_error_total =
        static_cast<double>(add.segments) * runway_error(cfg.r_pad) * n_pairs;
    const double storage_rounds = report.runtime_s / report.storage_se_interval_s;
    const double storage_error = static_cast<double>(register_patches) * storage_rounds *
                                 storage_round_error(report.storage_se_interval_s, cfg.d, em, pp);
    const double qpe_error = static_cast<double>(cfg.effective_exponent_bits()) *
                             memory_error_per_round(cfg.d, em) * 2.0;
    report.clifford_error_total = lookup_error + adder_working_error + storage_error + qpe_error;
    report.total_logical_error =
        report.ccz_error_total + report.clifford_error_total + report.runway_error_total;
    if (report.total_logical_error > cfg.total_error_budget) {
        report.constraint_violations.push_back(
            "error budget: total logical error " + std::to_string(report.total_logical_error) +
            " exceeds budget " + std::to_string(cfg.total_error_budget));
    }

    // Phase breakdown (space and error shares).
    const double total_err = std::max(report.total_logical_error, 1e-300);
    auto add_row = [&](const std::string& phase, const std::string& component, long long patches,
                       double error_share) {
        PhaseComponent row;
        row.phase = phase;
        row.component = component;
        row.patches = patches;
        row.physical_qubits = patches * pq;
        row.error_share = error_share;
        report.breakdown.push_back(row);
    };
    // CCZ-state errors surface where the states are consumed.
    const double per_pair_ccz = static_cast<double>(report.ccz_count) /
                                static_cast<double>(report.lookup_addition_count);
    const double lookup_ccz_share =
        (look.total.ccz_consumed + unlook.total.ccz_consumed) / per_pair_ccz;
    const double lookup_ccz_error = report.ccz_error_total * lookup_ccz_share;
    const double addition_ccz_error = report.ccz_error_total - lookup_ccz_error;

    add_row("lookup", "cnot_fanout", fanout_patches - look.ladder_patches * cfg.pipeline_copies,
            lookup_error / total_err);
    add_row("lookup", "unary_ladder", look.ladder_patches * cfg.pipeline_copies,
            lookup_ccz_error / total_err);
    add_row("lookup", "multiplicand_register", multiplicand - stored_patches_saved,
            storage_error * 0.5 / total_err);
    add_row("lookup", "accumulator_register", padded_accumulator, storage_error * 0.25 / total_err);
    add_row("lookup", "addend_register", addend, storage_error * 0.25 / total_err);
    add_row("lookup", "factories", factory_patches, 0.0);
    add_row("addition", "maj_uma_blocks", adder_working,
            (adder_working_error + report.runway_error_total) / total_err);
    add_row("addition", "multiplicand_register", multiplicand - stored_patches_saved, 0.0);
    add_row("addition", "accumulator_register", padded_accumulator, 0.0);
    add_row("addition", "addend_register", addend, 0.0);
    add_row("addition", "factories", factory_patches, addition_ccz_error / total_err);

    report.assumptions = {
        "SE-round shuttle modeled as four single-site measure-qubit moves per round",
        "measurement-based unlookup costed at 2^(m/2) serial fix-up steps",
        "storage SE interval " + std::to_string(report.storage_se_interval_s * 1e3) +
            " ms chosen by the idle/gate error balance",
    };
    return report;
}

} // namespace tqre
