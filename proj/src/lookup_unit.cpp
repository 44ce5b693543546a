#include "tqre/lookup_unit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tqre {

void LookupConfig::validate() const {
    if (address_bits < 1 || address_bits > 40) {
        throw std::invalid_argument("lookup: address_bits must be in [1, 40]");
    }
    if (target_bits < 1) {
        throw std::invalid_argument("lookup: target_bits must be >= 1");
    }
    if (ghz_grid_spacing < 1) {
        throw std::invalid_argument("lookup: ghz_grid_spacing must be >= 1");
    }
    if (pipeline_copies < 1) {
        throw std::invalid_argument("lookup: pipeline_copies must be >= 1");
    }
    patch_qubits(d);
}

long long lookup_toffoli_count(const LookupConfig& cfg) {
    // One temporary AND per entry on average, uncompute included.
    return cfg.entries();
}

long long unlookup_toffoli_count(const LookupConfig& cfg) {
    if (cfg.unlookup_mode == UnlookupMode::Full) {
        return lookup_toffoli_count(cfg);
    }
    // Measurement-based unlookup: X-measure the targets, then a fix-up table
    // over about half the address bits.
    return static_cast<long long>(std::ceil(std::exp2(cfg.address_bits / 2.0)));
}

namespace {

LookupCost build_cost(const LookupConfig& cfg, long long serial_steps, long long toffolis,
                      bool include_pipeline_fill, const ErrorModelParams& em,
                      const PhysicalParams& pp, const FactoryFleet& fleet) {
    LookupCost out;
    out.fanout = ghz_fanout_layout(cfg.target_bits, cfg.ghz_grid_spacing, cfg.d);
    out.fanout_patches = out.fanout.total_patches();
    out.ladder_patches = 2LL * cfg.address_bits + 2;

    double stage = 0.0;
    for (const CycleBudget& budget : out.fanout.schedule) {
        stage = std::max(stage, qec_cycle_time(budget, cfg.d, pp));
    }
    out.stage_time_s = stage;
    // The control ladder is serially dependent at one reaction step per entry;
    // the GHZ pipeline must also keep up. Extra pipeline copies split the
    // stage initiation interval.
    out.entry_interval_s =
        std::max(pp.reaction_time_s, stage / static_cast<double>(cfg.pipeline_copies));

    const auto stages = static_cast<double>(out.fanout.schedule.size());
    const double fill = include_pipeline_fill ? (stages - 1.0) * out.stage_time_s : 0.0;
    const double duration = static_cast<double>(serial_steps) * out.entry_interval_s + fill;

    const double ccz_rate = static_cast<double>(toffolis) / duration;
    if (ccz_rate > fleet.throughput_ccz_per_s()) {
        out.throughput_ok = false;
        out.constraint_note = "factory fleet cannot sustain the lookup AND rate (" +
                              std::to_string(ccz_rate) + "/s needed, " +
                              std::to_string(fleet.throughput_ccz_per_s()) + "/s available)";
    }

    const long long fanout_total =
        (out.fanout_patches + out.ladder_patches) * static_cast<long long>(cfg.pipeline_copies);
    const long long qubits = fanout_total * patch_qubits(cfg.d);

    // Per serial step one entry is processed: the GHZ members live through
    // roughly three stages, helpers through two, and half the targets take the
    // fan-out CNOT.
    GateLoad load;
    load.cnots_per_se_round = 1.0;
    const double per_round = se_interval_error(cfg.d, load, em, pp);
    const double per_entry_patch_rounds =
        3.0 * static_cast<double>(out.fanout.ghz_members) +
        2.0 * static_cast<double>(out.fanout.helpers) +
        0.5 * static_cast<double>(cfg.target_bits) + static_cast<double>(out.ladder_patches);
    const double error = static_cast<double>(serial_steps) * per_entry_patch_rounds * per_round;

    out.total = GadgetCost::make(qubits, duration, error, static_cast<double>(toffolis));
    return out;
}

} // namespace

LookupCost lookup_cost(const LookupConfig& cfg, const ErrorModelParams& em,
                       const PhysicalParams& pp, const FactoryFleet& fleet) {
    cfg.validate();
    em.validate();
    pp.validate();
    if (!(fleet.throughput_ccz_per_s() > 0.0)) {
        throw std::invalid_argument("lookup_cost: fleet throughput must be positive");
    }
    return build_cost(cfg, cfg.entries(), lookup_toffoli_count(cfg), true, em, pp, fleet);
}

LookupCost unlookup_cost(const LookupConfig& cfg, const ErrorModelParams& em,
                         const PhysicalParams& pp, const FactoryFleet& fleet) {
    cfg.validate();
    em.validate();
    pp.validate();
    if (!(fleet.throughput_ccz_per_s() > 0.0)) {
        throw std::invalid_argument("unlookup_cost: fleet throughput must be positive");
    }
    if (cfg.unlookup_mode == UnlookupMode::Full) {
        return lookup_cost(cfg, em, pp, fleet);
    }
    const long long steps = unlookup_toffoli_count(cfg);
    return build_cost(cfg, steps, steps, false, em, pp, fleet);
}

} // namespace tqre
