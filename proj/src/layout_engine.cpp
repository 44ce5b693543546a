#include "tqre/layout_engine.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace tqre {

long long patch_qubits(int d) {
    if (d < 3 || d % 2 == 0) {
        throw std::domain_error("code distance must be odd and >= 3");
    }
    return 2LL * d * d - 1;
}

long long physical_qubits(const PatchGrid& grid, int d) {
    if (grid.width < 1 || grid.height < 1) {
        throw std::domain_error("patch grid dimensions must be >= 1");
    }
    return 1LL * grid.width * grid.height * patch_qubits(d);
}

GadgetLayout maj_block_layout(int d) {
    patch_qubits(d);  // validates d
    GadgetLayout layout;
    layout.grid = {3, 2};
    layout.max_move_dl = std::sqrt(2.0);
    // Toffoli slot: CCZ teleportation CNOTs, worst move along the block diagonal.
    layout.schedule.push_back(make_transversal_cycle(std::sqrt(2.0), 1.0));
    // Three conditional-CZ slots for the auto-corrected Clifford fix-ups.
    for (int i = 0; i < 3; ++i) {
        layout.schedule.push_back(make_transversal_cycle(1.0, 1.0));
    }
    return layout;
}

double layout_bottleneck_cycle(const GadgetLayout& layout, int d, const PhysicalParams& pp) {
    double worst = 0.0;
    for (const CycleBudget& budget : layout.schedule) {
        worst = std::max(worst, qec_cycle_time(budget, d, pp));
    }
    return worst;
}

FanoutLayout ghz_fanout_layout(long long targets, int grid_spacing, int d) {
    patch_qubits(d);  // validates d
    if (targets < 1) {
        throw std::domain_error("fan-out needs at least one target");
    }
    if (grid_spacing < 1) {
        throw std::domain_error("GHZ grid spacing must be >= 1");
    }
    FanoutLayout layout;
    layout.targets = targets;
    layout.grid_spacing = grid_spacing;

    if (targets == 1) {
        // Degenerate fan-out: a plain transversal CNOT, no GHZ state.
        layout.ghz_members = 1;
        layout.helpers = 0;
        layout.max_move_dl = grid_spacing;
        layout.schedule.push_back(make_transversal_cycle(grid_spacing, 1.0));
        return layout;
    }

    // One member per target (any entry pattern must be servable) plus the
    // underlying grid of the chosen spacing; coarser grids need less fill.
    const double overhead = 0.5 / static_cast<double>(grid_spacing);
    layout.ghz_members = targets + static_cast<long long>(std::ceil(targets * overhead));
    // ZZ helpers sit between neighboring members; one helper row serves the
    // two CNOT layers in turn.
    layout.helpers = (layout.ghz_members + 1) / 2;
    layout.max_move_dl = grid_spacing;

    const double s = grid_spacing;
    CycleBudget prepare;  // |+> init completes with one SE round
    prepare.se_rounds = 1.0;
    prepare.includes_measurement = true;
    layout.schedule.push_back(prepare);
    layout.schedule.push_back(make_transversal_cycle(s, 1.0));  // CNOT layer to helpers
    layout.schedule.push_back(make_transversal_cycle(s, 1.0));  // second CNOT layer
    CycleBudget helper_measure;
    helper_measure.includes_measurement = true;
    layout.schedule.push_back(helper_measure);
    layout.schedule.push_back(make_transversal_cycle(s, 1.0));  // CNOT onto targets
    CycleBudget x_measure;
    x_measure.includes_measurement = true;
    layout.schedule.push_back(x_measure);
    return layout;
}

GadgetLayout factory_layout(int d, int cultivation_copies) {
    patch_qubits(d);  // validates d
    if (cultivation_copies < 1) {
        throw std::domain_error("factory needs at least one cultivation copy");
    }
    GadgetLayout layout;
    layout.grid = {12, 1 + kFactoryStageHeight};
    layout.max_move_dl = 2.0;
    // Four conversion CNOT layers over the 1D row, then the teleported-T layer.
    for (int i = 0; i < 4; ++i) {
        layout.schedule.push_back(make_transversal_cycle(2.0, 1.0));
    }
    layout.schedule.push_back(make_transversal_cycle(1.0, 1.0));
    CycleBudget block_measure;
    block_measure.includes_measurement = true;
    layout.schedule.push_back(block_measure);
    return layout;
}

void write_layout_csv(const GadgetLayout& layout, const std::string& name,
                      std::ostream& patches_out, std::ostream& schedule_out) {
    patches_out << "gadget,patch_x,patch_y\n";
    for (int y = 0; y < layout.grid.height; ++y) {
        for (int x = 0; x < layout.grid.width; ++x) {
            patches_out << name << ',' << x << ',' << y << '\n';
        }
    }
    schedule_out << "gadget,step,gate_layers,se_rounds,includes_measurement,"
                    "move_group,move_distance_dl\n";
    int step = 0;
    for (const CycleBudget& budget : layout.schedule) {
        if (budget.moves.empty()) {
            schedule_out << name << ',' << step << ',' << budget.gate_layers << ','
                         << budget.se_rounds << ',' << (budget.includes_measurement ? 1 : 0)
                         << ",,\n";
        } else {
            for (const MoveStep& move : budget.moves) {
                schedule_out << name << ',' << step << ',' << budget.gate_layers << ','
                             << budget.se_rounds << ','
                             << (budget.includes_measurement ? 1 : 0) << ','
                             << move.parallel_group << ',' << move.distance_dl << '\n';
            }
        }
        ++step;
    }
}

} // namespace tqre
