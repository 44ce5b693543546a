#pragma once

#include <string>

#include "tqre/optimizer.hpp"

namespace tqre {

/// All inputs parsed from one config file. Sections: [physical] and
/// [algorithm] are required, [error_model], [factory], [lookup] and [sweep]
/// are optional. Unknown sections or keys are errors.
struct RunConfig {
    PhysicalParams physical;
    ErrorModelParams error_model;
    AlgorithmConfig algorithm;
    FactoryBuildOptions factory;
    SweepSpec sweep = SweepSpec::defaults();
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Overrides the sweep specification from a standalone file holding only a
/// [sweep] section.
void apply_sweep_overlay(RunConfig& cfg, const std::string& text);

/// Renders a report as markdown.
std::string render_report_markdown(const EstimateReport& report);

/// Phase breakdown CSV: phase,component,patches,physical_qubits,error_share.
std::string phase_breakdown_csv(const EstimateReport& report);

/// Writes all gadget layouts of a config to <dir>/<gadget>_{patches,schedule}.csv.
void emit_layout_csvs(const RunConfig& cfg, const std::string& dir);

} // namespace tqre
