#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tqre/physical_model.hpp"

namespace tqre {

struct PatchGrid {
    int width = 1;
    int height = 1;
};

/// Physical qubits of one surface-code patch: d^2 data + d^2-1 ancilla.
long long patch_qubits(int d);

/// Physical qubits of a grid of patches at code distance d.
long long physical_qubits(const PatchGrid& grid, int d);

/// Spatial footprint and move schedule of a gadget, in patch units.
struct GadgetLayout {
    PatchGrid grid;
    std::vector<CycleBudget> schedule;
    double max_move_dl = 0.0;
    double storage_density_factor = 1.0;

    long long patches() const { return 1LL * grid.width * grid.height; }
};

/// 3x2 working block executing one MAJ (or UMA) step: a Toffoli slot followed
/// by three conditional-CZ slots, one SE round per transversal layer, moves
/// bounded by sqrt(2)*d*l.
GadgetLayout maj_block_layout(int d);

/// Wall time of the longest cycle in a layout's schedule.
double layout_bottleneck_cycle(const GadgetLayout& layout, int d, const PhysicalParams& pp);

/// GHZ-assisted CNOT fan-out onto `targets` patches, built on a GHZ grid of
/// the given spacing plus per-target fill. Six pipeline stages: prepare,
/// two CNOT layers to helpers, helper measurement, transversal CNOT to
/// targets, X-basis measurement.
struct FanoutLayout {
    long long targets = 0;
    long long ghz_members = 0;
    long long helpers = 0;
    int grid_spacing = 1;
    std::vector<CycleBudget> schedule;
    double max_move_dl = 0.0;

    long long total_patches() const { return ghz_members + helpers; }
};

FanoutLayout ghz_fanout_layout(long long targets, int grid_spacing, int d);

/// Number of patches in a magic-state factory: a 12-wide cultivation row plus
/// a 12 x kFactoryStageHeight conversion stage.
inline constexpr int kFactoryStageHeight = 1;

GadgetLayout factory_layout(int d, int cultivation_copies);

/// Write a layout as two CSV tables: patch coordinates and schedule rows.
void write_layout_csv(const GadgetLayout& layout, const std::string& name,
                      std::ostream& patches_out, std::ostream& schedule_out);

} // namespace tqre
