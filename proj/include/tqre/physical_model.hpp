#pragma once

#include <cstdint>
#include <vector>

namespace tqre {

/// Hardware timescales and geometry. All durations in seconds, lengths in
/// meters, acceleration in m/s^2.
struct PhysicalParams {
    double site_spacing_m = 12e-6;
    double acceleration_m_s2 = 5500.0;
    double gate_time_s = 1e-6;
    double measure_time_s = 500e-6;
    double decode_time_s = 500e-6;
    double reaction_time_s = 1e-3;
    double coherence_time_s = 10.0;

    /// Throws std::invalid_argument if any field is non-positive or the
    /// reaction time is shorter than the measurement time.
    void validate() const;
};

/// One atom-block move. Distances are in units of d*l (patch widths) so that
/// schedules rescale with code distance. Steps sharing a parallel_group run
/// simultaneously; the group's duration is the max over its members.
struct MoveStep {
    double distance_dl = 0.0;
    int parallel_group = 0;
};

/// Work content of one logical cycle: transversal gate layers, block moves,
/// and syndrome-extraction rounds. se_rounds may be fractional (a rate).
struct CycleBudget {
    double gate_layers = 0.0;
    std::vector<MoveStep> moves;
    double se_rounds = 0.0;
    bool includes_measurement = false;
};

/// Move time for a block travelling `distance_m`: t = 2*sqrt(L/a).
/// Throws std::domain_error on negative distance.
double move_time(double distance_m, const PhysicalParams& pp);

/// Gate-and-shuttle part of one SE round: 4 entangling layers plus 4
/// single-site measure-qubit moves. Excludes the ancilla measurement.
double se_round_gate_time(const PhysicalParams& pp);

/// Wall-clock time of one SE round when the measurement cannot be hidden
/// behind concurrent transversal moves.
double se_round_wall_time(const PhysicalParams& pp);

/// Wall-clock duration of one cycle at code distance d. Ancilla measurement
/// overlaps the cycle's transversal gate/move phase; only the excess over
/// that phase is serialized. d must be odd and >= 3.
double qec_cycle_time(const CycleBudget& budget, int code_distance, const PhysicalParams& pp);

/// Number of circuit-block copies executable in parallel when each block
/// takes t_block and consecutive blocks are offset by the reaction time:
/// ceil(activity_fraction * t_block / t_r).
long long parallel_copies(double t_block_s, double t_r_s, double activity_fraction);

/// Convenience: a transversal-gate cycle with one move group of the given
/// distance, one gate layer, `se_rounds` SE rounds and a pipelined measurement.
CycleBudget make_transversal_cycle(double move_distance_dl, double se_rounds);

} // namespace tqre
