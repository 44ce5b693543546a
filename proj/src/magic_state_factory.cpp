#include "tqre/magic_state_factory.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "tqre/errors.hpp"

namespace tqre {

CultivationCurve::CultivationCurve(std::vector<std::pair<double, double>> points)
    : points_(std::move(points)) {
    if (points_.empty()) {
        throw std::invalid_argument("cultivation curve needs at least one point");
    }
    for (size_t i = 0; i < points_.size(); ++i) {
        if (!(points_[i].first > 0.0) || !(points_[i].second > 0.0)) {
            throw std::invalid_argument("cultivation curve entries must be positive");
        }
        if (i > 0) {
            if (points_[i].first <= points_[i - 1].first) {
                throw std::invalid_argument("cultivation curve must be sorted by error");
            }
            if (points_[i].second >= points_[i - 1].second) {
                throw std::invalid_argument(
                    "cultivation volume must decrease as the error target relaxes");
            }
        }
    }
}

CultivationCurve CultivationCurve::default_curve() {
    // Anchor with quadratic suppression around it.
    const double t0 = 7.7e-7;
    const double v0 = 1.5e4;
    auto vol = [&](double t) { return v0 * (t0 / t) * (t0 / t); };
    return CultivationCurve({{t0 / 10.0, vol(t0 / 10.0)}, {t0, v0}, {t0 * 10.0, vol(t0 * 10.0)}});
}

CultivationCurve CultivationCurve::from_csv(std::istream& in) {
    std::vector<std::pair<double, double>> points;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double t = 0.0, v = 0.0;
        if (row >> t >> v) {
            points.emplace_back(t, v);
        }
    }
    std::sort(points.begin(), points.end());
    return CultivationCurve(std::move(points));
}

double CultivationCurve::volume_at(double t_error) const {
    if (!(t_error > 0.0)) {
        throw std::domain_error("cultivation lookup needs a positive error");
    }
    for (const auto& [t, v] : points_) {
        if (t == t_error) {
            return v;
        }
    }
    const double lt = std::log(t_error);
    if (points_.size() == 1) {
        // Single anchor: quadratic suppression heuristic.
        const auto& [t0, v0] = points_.front();
        return v0 * std::exp(-2.0 * (lt - std::log(t0)));
    }
    size_t hi = 1;
    while (hi + 1 < points_.size() && t_error > points_[hi].first) {
        ++hi;
    }
    const auto& [ta, va] = points_[hi - 1];
    const auto& [tb, vb] = points_[hi];
    const double slope = (std::log(vb) - std::log(va)) / (std::log(tb) - std::log(ta));
    return std::exp(std::log(va) + slope * (lt - std::log(ta)));
}

double ccz_error(double t_error, double clifford_floor) {
    if (t_error < 0.0 || t_error >= 0.01) {
        throw std::domain_error("ccz_error: T error must be in [0, 0.01)");
    }
    return 28.0 * t_error * t_error + clifford_floor;
}

double required_t_error(double ccz_target, double clifford_floor) {
    if (!(ccz_target > clifford_floor)) {
        throw InfeasibleError("required_t_error: target does not exceed the Clifford floor");
    }
    return std::sqrt((ccz_target - clifford_floor) / 28.0);
}

double factory_clifford_floor(int d, double se_rounds_per_gate, const ErrorModelParams& em) {
    // Active second-stage patches: 8 grown T states, 3 outputs, 3 correction
    // ancillas. Logical rounds: one per SE round of the five transversal
    // layers plus measurement and feed-forward.
    const double active_patches = 14.0;
    const double rounds = 5.0 * se_rounds_per_gate + 2.0;
    const double x = 1.0 / se_rounds_per_gate;
    const double per_round =
        em.prefactor_c * std::pow((em.alpha * x + 1.0) / em.lambda, (d + 1) / 2.0);
    return active_patches * rounds * per_round;
}

double factory_cycle_time(int d, double se_rounds_per_gate, const PhysicalParams& pp) {
    const double r = se_rounds_per_gate;
    double cycle = 0.0;
    for (int i = 0; i < 4; ++i) {
        cycle += qec_cycle_time(make_transversal_cycle(2.0, r), d, pp);
    }
    cycle += qec_cycle_time(make_transversal_cycle(1.0, r), d, pp);  // teleported T layer
    cycle += pp.reaction_time_s;  // conditional Clifford after the T measurements
    CycleBudget final_measure;
    final_measure.includes_measurement = true;
    cycle += qec_cycle_time(final_measure, d, pp);  // block measurement + feed-forward
    return cycle;
}

FactoryModel factory_build(double ccz_target, const ErrorModelParams& em,
                           const PhysicalParams& pp, const FactoryBuildOptions& opts) {
    if (!(ccz_target > 0.0)) {
        throw std::domain_error("factory_build: CCZ target must be positive");
    }
    em.validate();
    pp.validate();
    const CultivationCurve curve = opts.curve ? *opts.curve : CultivationCurve::default_curve();

    std::vector<double> grid =
        opts.fixed_se_rounds ? std::vector<double>{*opts.fixed_se_rounds} : opts.se_rounds_grid;

    bool found = false;
    FactoryModel best;
    double best_volume = 0.0;
    std::string diagnostics;

    for (double r : grid) {
        if (!(r > 0.0)) {
            continue;
        }
        int d = 0;
        if (opts.fixed_d) {
            d = *opts.fixed_d;
            if (factory_clifford_floor(d, r, em) > opts.floor_fraction * ccz_target) {
                diagnostics += "se_rounds=" + std::to_string(r) +
                               ": Clifford floor exceeds its budget share at fixed d\n";
                continue;
            }
        } else {
            for (int cand = 3; cand <= 199; cand += 2) {
                if (factory_clifford_floor(cand, r, em) <= opts.floor_fraction * ccz_target) {
                    d = cand;
                    break;
                }
            }
            if (d == 0) {
                diagnostics += "se_rounds=" + std::to_string(r) + ": no distance meets the floor\n";
                continue;
            }
        }
        const double floor = factory_clifford_floor(d, r, em);
        if (floor >= ccz_target) {
            continue;
        }
        const double t_in = required_t_error(ccz_target, floor);
        const double cult_vol = curve.volume_at(t_in);
        const GadgetLayout footprint = factory_layout(d, opts.cultivation_copies);
        const long long row_qubits = 12LL * patch_qubits(d);
        const double supply =
            static_cast<double>(row_qubits) / (cult_vol * se_round_wall_time(pp));
        const double schedule_cycle = factory_cycle_time(d, r, pp);
        const double cycle = std::max({schedule_cycle, 8.0 / supply, pp.reaction_time_s});
        const long long qubits = physical_qubits(footprint.grid, d);
        const double volume = static_cast<double>(qubits) * cycle;

        if (!found || volume < best_volume * (1.0 - 1e-12)) {
            found = true;
            best_volume = volume;
            best.d = d;
            best.se_rounds_per_gate = r;
            best.t_input_error = t_in;
            best.clifford_floor = floor;
            best.ccz_output_error = ccz_error(t_in, floor);
            best.cycle_duration_s = cycle;
            best.cultivation_volume = cult_vol;
            best.cultivation_supply_per_s = supply;
            best.footprint = footprint;
            best.physical_qubits = qubits;
            best.throughput_ccz_per_s = 1.0 / cycle;
        }
    }
    if (!found) {
        throw InfeasibleError("factory_build: no feasible point in the SE-round sweep\n" +
                              diagnostics);
    }
    return best;
}

} // namespace tqre
