#pragma once

#include <string>

#include "tqre/adder_unit.hpp"
#include "tqre/layout_engine.hpp"

namespace tqre {

enum class UnlookupMode {
    Measured,  // X-measure targets, sqrt-sized fix-up table
    Full,      // conservative: uncompute costs a full lookup
};

struct LookupConfig {
    int address_bits = 7;  // w_exp + w_mul
    long long target_bits = 2052;
    int ghz_grid_spacing = 2;
    int pipeline_copies = 1;
    int d = 27;
    UnlookupMode unlookup_mode = UnlookupMode::Measured;

    void validate() const;
    long long entries() const { return 1LL << address_bits; }
};

struct LookupCost {
    GadgetCost total;
    double entry_interval_s = 0.0;   // serial step per table entry
    double stage_time_s = 0.0;       // bottleneck GHZ pipeline stage
    long long fanout_patches = 0;    // GHZ members + helpers
    long long ladder_patches = 0;    // address register + temporary ANDs
    FanoutLayout fanout;
    bool throughput_ok = true;
    std::string constraint_note;
};

/// Cost of one table load. Unary-iteration ANDs are serially dependent, one
/// reaction step each; the GHZ fan-out pipeline must also keep up, so the
/// per-entry interval is max(t_r, bottleneck stage / pipeline_copies).
LookupCost lookup_cost(const LookupConfig& cfg, const ErrorModelParams& em,
                       const PhysicalParams& pp, const FactoryFleet& fleet);

/// Cost of clearing a loaded register. Measured mode scales the serial steps
/// and CCZ count down to ceil(2^(m/2)); Full mode equals lookup_cost.
LookupCost unlookup_cost(const LookupConfig& cfg, const ErrorModelParams& em,
                         const PhysicalParams& pp, const FactoryFleet& fleet);

long long lookup_toffoli_count(const LookupConfig& cfg);
long long unlookup_toffoli_count(const LookupConfig& cfg);

} // namespace tqre
