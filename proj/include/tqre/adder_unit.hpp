#pragma once

#include <string>
#include <vector>

#include "tqre/magic_state_factory.hpp"

namespace tqre {

/// Universal per-gadget cost record.
struct GadgetCost {
    long long physical_qubits = 0;
    double duration_s = 0.0;
    double logical_error = 0.0;
    double ccz_consumed = 0.0;
    double volume_qubit_s = 0.0;  // physical_qubits * duration_s

    static GadgetCost make(long long qubits, double duration, double error, double ccz);
};

/// Ripple-carry adder with oblivious carry runways.
struct AdderConfig {
    long long register_bits = 2048;
    long long r_sep = 96;   // real bits per runway segment
    long long r_pad = 43;   // runway padding bits per segment
    int d = 27;

    void validate() const;
};

struct FactoryFleet {
    FactoryModel model;
    int count = 0;

    double throughput_ccz_per_s() const { return model.throughput_ccz_per_s * count; }
};

long long adder_segments(const AdderConfig& cfg);

/// CCZ states consumed per addition: one temporary-AND per carry, i.e. one per
/// data bit including runway padding. The un-majority half uncomputes carries
/// by X-basis measurement and conditional CZ, consuming a reaction step but no
/// CCZ state.
long long adder_toffoli_count(const AdderConfig& cfg);

/// Per-segment runway approximation error, 2^-r_pad.
double runway_error(long long r_pad);

/// Wall time of one MAJ/UMA reaction step: the larger of the reaction time and
/// the physical MAJ cycle.
double adder_step_time(const AdderConfig& cfg, const PhysicalParams& pp);

struct AdderCost {
    GadgetCost total;
    long long segments = 0;
    long long working_patches = 0;    // MAJ/UMA blocks + CZ + bridge ancillas
    long long register_patches = 0;   // padded accumulator + addend operand
    double step_time_s = 0.0;
    double ccz_rate_per_s = 0.0;
    bool throughput_ok = true;
    std::string constraint_note;
};

/// Cost of one addition. Segments ripple in parallel (staggered by the
/// reaction time via bridge qubits); duration is 2*(r_sep+r_pad) reaction
/// steps. Fleet throughput below the consumption rate is reported as a
/// constraint violation, never as a silent slowdown.
AdderCost adder_cost(const AdderConfig& cfg, const ErrorModelParams& em,
                     const PhysicalParams& pp, const FactoryFleet& fleet);

} // namespace tqre
