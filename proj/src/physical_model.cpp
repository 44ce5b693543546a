#include "tqre/physical_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace tqre {

void PhysicalParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw std::invalid_argument(std::string("physical parameter must be positive: ") + name);
        }
    };
    positive(site_spacing_m, "site_spacing");
    positive(acceleration_m_s2, "acceleration");
    positive(gate_time_s, "gate_time");
    positive(measure_time_s, "measure_time");
    positive(decode_time_s, "decode_time");
    positive(reaction_time_s, "reaction_time");
    positive(coherence_time_s, "coherence_time");
    if (reaction_time_s < measure_time_s) {
        throw std::invalid_argument(
            "reaction_time must cover at least the measurement time");
    }
}

double move_time(double distance_m, const PhysicalParams& pp) {
    if (distance_m < 0.0) {
        throw std::domain_error("move_time: negative distance");
    }
    if (distance_m == 0.0) {
        return 0.0;
    }
    return 2.0 * std::sqrt(distance_m / pp.acceleration_m_s2);
}

double se_round_gate_time(const PhysicalParams& pp) {
    // Four entangling layers; between layers the measure qubits shuttle by one
    // site spacing (four single-site moves per round).
    return 4.0 * pp.gate_time_s + 4.0 * move_time(pp.site_spacing_m, pp);
}

double se_round_wall_time(const PhysicalParams& pp) {
    return se_round_gate_time(pp) + pp.measure_time_s;
}

static void check_distance(int d) {
    if (d < 3 || d % 2 == 0) {
        throw std::domain_error("code distance must be odd and >= 3");
    }
}

double qec_cycle_time(const CycleBudget& budget, int code_distance, const PhysicalParams& pp) {
    check_distance(code_distance);
    if (budget.gate_layers < 0.0 || budget.se_rounds < 0.0) {
        throw std::domain_error("cycle budget counts must be nonnegative");
    }

    const double patch_side = static_cast<double>(code_distance) * pp.site_spacing_m;
    std::map<int, double> group_max;
    for (const MoveStep& step : budget.moves) {
        if (step.distance_dl < 0.0) {
            throw std::domain_error("move distance must be nonnegative");
        }
        double t = move_time(step.distance_dl * patch_side, pp);
        auto [it, inserted] = group_max.try_emplace(step.parallel_group, t);
        if (!inserted) {
            it->second = std::max(it->second, t);
        }
    }
    double move_phase = 0.0;
    for (const auto& [group, t] : group_max) {
        move_phase += t;
    }

    const double gate_phase = budget.gate_layers * pp.gate_time_s;
    const double se_unit = se_round_gate_time(pp);
    const double se_phase = budget.se_rounds * se_unit;

    double exposed_measure = 0.0;
    if (budget.includes_measurement) {
        // Rounds followed by another SE round hide their measurement behind
        // that round's gates; the final measurement hides behind the cycle's
        // transversal phase (steady-state pipelining with the next cycle).
        const double interior_rounds = std::max(0.0, budget.se_rounds - 1.0);
        exposed_measure += interior_rounds * std::max(0.0, pp.measure_time_s - se_unit);
        exposed_measure += std::max(0.0, pp.measure_time_s - (gate_phase + move_phase));
    }

    return gate_phase + move_phase + se_phase + exposed_measure;
}

long long parallel_copies(double t_block_s, double t_r_s, double activity_fraction) {
    if (!(t_block_s > 0.0) || !(t_r_s > 0.0)) {
        throw std::domain_error("parallel_copies: durations must be positive");
    }
    if (!(activity_fraction > 0.0) || activity_fraction > 1.0) {
        throw std::domain_error("parallel_copies: activity fraction must be in (0, 1]");
    }
    const double ratio = activity_fraction * t_block_s / t_r_s;
    const double nearest = std::round(ratio);
    // Exact integer ratios must not be bumped up by representation noise.
    if (std::abs(ratio - nearest) < 1e-9 * std::max(1.0, std::abs(ratio))) {
        return std::max(1LL, static_cast<long long>(nearest));
    }
    return std::max(1LL, static_cast<long long>(std::ceil(ratio)));
}

CycleBudget make_transversal_cycle(double move_distance_dl, double se_rounds) {
    CycleBudget budget;
    budget.gate_layers = 1.0;
    if (move_distance_dl > 0.0) {
        budget.moves.push_back({move_distance_dl, 0});
    }
    budget.se_rounds = se_rounds;
    budget.includes_measurement = true;
    return budget;
}

} // namespace tqre
