#include "tqre/adder_unit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tqre {

GadgetCost GadgetCost::make(long long qubits, double duration, double error, double ccz) {
    GadgetCost cost;
    cost.physical_qubits = qubits;
    cost.duration_s = duration;
    cost.logical_error = error;
    cost.ccz_consumed = ccz;
    cost.volume_qubit_s = static_cast<double>(qubits) * duration;
    return cost;
}

void AdderConfig::validate() const {
    if (register_bits < 1) {
        throw std::invalid_argument("adder: register_bits must be >= 1");
    }
    if (r_sep < 1) {
        throw std::invalid_argument("adder: r_sep must be >= 1");
    }
    if (r_pad < 0) {
        throw std::invalid_argument("adder: r_pad must be nonnegative");
    }
    patch_qubits(d);
}

long long adder_segments(const AdderConfig& cfg) {
    return (cfg.register_bits + cfg.r_sep - 1) / cfg.r_sep;
}

long long adder_toffoli_count(const AdderConfig& cfg) {
    return cfg.register_bits + adder_segments(cfg) * cfg.r_pad;
}

double runway_error(long long r_pad) {
    if (r_pad < 0) {
        throw std::domain_error("runway_error: padding must be nonnegative");
    }
    return std::exp2(static_cast<double>(-r_pad));
}

double adder_step_time(const AdderConfig& cfg, const PhysicalParams& pp) {
    const GadgetLayout block = maj_block_layout(cfg.d);
    return std::max(pp.reaction_time_s, layout_bottleneck_cycle(block, cfg.d, pp));
}

AdderCost adder_cost(const AdderConfig& cfg, const ErrorModelParams& em,
                     const PhysicalParams& pp, const FactoryFleet& fleet) {
    cfg.validate();
    em.validate();
    pp.validate();
    if (!(fleet.throughput_ccz_per_s() > 0.0)) {
        throw std::invalid_argument("adder_cost: fleet throughput must be positive");
    }

    AdderCost out;
    out.segments = adder_segments(cfg);
    out.step_time_s = adder_step_time(cfg, pp);

    // Down-ripple (MAJ) then up-ripple (UMA) across the padded segment width;
    // segments run in parallel, staggered by the reaction time via bridges.
    const double padded_width = static_cast<double>(cfg.r_sep + cfg.r_pad);
    const double duration = 2.0 * padded_width * out.step_time_s;

    const long long toffolis = adder_toffoli_count(cfg);
    out.ccz_rate_per_s = static_cast<double>(toffolis) / duration;
    if (out.ccz_rate_per_s > fleet.throughput_ccz_per_s()) {
        out.throughput_ok = false;
        out.constraint_note = "factory fleet cannot sustain reaction-limited CCZ consumption (" +
                              std::to_string(out.ccz_rate_per_s) + "/s needed, " +
                              std::to_string(fleet.throughput_ccz_per_s()) + "/s available)";
    }

    // Per segment: the 3x2 working block, three conditional-CZ ancillas and
    // two bridge Bell-pair patches at the boundary.
    out.working_patches = out.segments * (6 + 3 + 2);
    const long long padded_register = cfg.register_bits + out.segments * cfg.r_pad;
    out.register_patches = padded_register + cfg.register_bits;  // accumulator + operand

    const long long pq = patch_qubits(cfg.d);
    const long long qubits = (out.working_patches + out.register_patches) * pq +
                             static_cast<long long>(fleet.count) * fleet.model.physical_qubits;

    // Error accounting: the working blocks carry a transversal-gate load every
    // reaction step for the whole addition; runway reconciliation adds the
    // approximation term per segment. CCZ state errors are budgeted separately.
    const double steps = 2.0 * padded_width;
    GateLoad load;
    load.cnots_per_se_round = 1.0;
    const double working_error = static_cast<double>(out.working_patches) * steps *
                                 se_interval_error(cfg.d, load, em, pp);
    const double runway_term = static_cast<double>(out.segments) * runway_error(cfg.r_pad);
    const double error = working_error + runway_term;

    out.total = GadgetCost::make(qubits, duration, error, static_cast<double>(toffolis));
    return out;
}

} // namespace tqre
