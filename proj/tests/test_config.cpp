#include "tqre/config.hpp"

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "tqre/errors.hpp"

using namespace tqre;

namespace {

const char* kMinimalConfig = R"(
[physical]
site_spacing_um = 12
acceleration_m_s2 = 5500
gate_time_us = 1
measure_time_us = 500
decode_time_us = 500
reaction_time_ms = 1
coherence_time_s = 10

[error_model]
c = 0.1
lambda = 10
p_phys = 1e-3
p_thres = 1e-2
alpha = 0.16666666666666666

[algorithm]
n_bits = 2048
w_exp = 3
w_mul = 4
r_sep = 96
r_pad = 43
code_distance = 27
max_factories = 192
)";

} // namespace

TEST(Config, ParsesMinimal) {
    const RunConfig cfg = parse_config(kMinimalConfig);
    EXPECT_DOUBLE_EQ(cfg.physical.site_spacing_m, 12e-6);
    EXPECT_DOUBLE_EQ(cfg.physical.reaction_time_s, 1e-3);
    EXPECT_EQ(cfg.algorithm.n_bits, 2048);
    EXPECT_EQ(cfg.algorithm.d, 27);
    EXPECT_DOUBLE_EQ(cfg.error_model.lambda, 10.0);
}

TEST(Config, MissingPhysicalSectionIsParseError) {
    EXPECT_THROW(parse_config("[algorithm]\nn_bits = 2048\n"), ConfigError);
}

TEST(Config, UnknownKeyNamesSectionAndKey) {
    std::string text = kMinimalConfig;
    text += "\n[lookup]\nghz_grid_spacin = 2\n";
    try {
        parse_config(text);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("lookup"), std::string::npos);
        EXPECT_NE(what.find("ghz_grid_spacin"), std::string::npos);
    }
}

TEST(Config, UnknownSectionRejected) {
    std::string text = kMinimalConfig;
    text += "\n[physics]\nx = 1\n";
    EXPECT_THROW(parse_config(text), ConfigError);
}

TEST(Config, BadNumberNamesKey) {
    std::string text = kMinimalConfig;
    text += "\n[lookup]\nghz_grid_spacing = two\n";
    try {
        parse_config(text);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("ghz_grid_spacing"), std::string::npos);
    }
}

TEST(Config, DuplicateKeyRejected) {
    std::string text = kMinimalConfig;
    text += "\n[lookup]\npipeline_copies = 1\npipeline_copies = 2\n";
    EXPECT_THROW(parse_config(text), ConfigError);
}

TEST(Config, SweepSectionControlsOptimizer) {
    std::string text = kMinimalConfig;
    text +=
        "\n[sweep]\nobjective = runtime\npairs = r_sep:max_factories,code_distance\n"
        "r_sep_grid = 64,96,128\nqubit_cap = 2.5e7\n";
    const RunConfig cfg = parse_config(text);
    EXPECT_EQ(cfg.sweep.objective, Objective::Runtime);
    ASSERT_EQ(cfg.sweep.pairs.size(), 2u);
    EXPECT_EQ(cfg.sweep.pairs[0].size(), 2u);
    EXPECT_EQ(cfg.sweep.pairs[1].size(), 1u);
    EXPECT_EQ(cfg.sweep.grids[static_cast<size_t>(SweepParam::RSep)].size(), 3u);
    ASSERT_TRUE(cfg.sweep.qubit_cap.has_value());
    EXPECT_DOUBLE_EQ(*cfg.sweep.qubit_cap, 2.5e7);
}

TEST(Config, SweepOverlayFile) {
    RunConfig cfg = parse_config(kMinimalConfig);
    apply_sweep_overlay(cfg,
                        "[sweep]\nobjective = qubits\npairs = code_distance\n"
                        "code_distance_grid = 25,27\ngrid_refine = 1\n");
    EXPECT_EQ(cfg.sweep.objective, Objective::Qubits);
    ASSERT_EQ(cfg.sweep.pairs.size(), 1u);
    EXPECT_TRUE(cfg.sweep.grid_refine);
    EXPECT_THROW(apply_sweep_overlay(cfg, "[algorithm]\nn_bits = 2\n"), ConfigError);
}

TEST(Config, UnlookupModeParsing) {
    std::string text = kMinimalConfig;
    text += "\n[lookup]\nunlookup_mode = full\n";
    EXPECT_EQ(parse_config(text).algorithm.unlookup_mode, UnlookupMode::Full);
    text = kMinimalConfig;
    text += "\n[lookup]\nunlookup_mode = sometimes\n";
    EXPECT_THROW(parse_config(text), ConfigError);
}

TEST(Config, ShippedConfigEstimatesHeadline) {
    const RunConfig cfg = load_config(std::string(TEST_SOURCE_DIR) + "/../configs/rsa2048.cfg");
    const EstimateReport report = estimate(cfg.algorithm, cfg.error_model, cfg.physical);
    EXPECT_TRUE(report.feasible());
    EXPECT_NEAR(static_cast<double>(report.total_physical_qubits), 19e6, 0.15 * 19e6);
    EXPECT_NEAR(report.runtime_s / 86400.0, 5.6, 0.56);
    const std::string markdown = render_report_markdown(report);
    EXPECT_NE(markdown.find("physical qubits"), std::string::npos);
}

TEST(Config, MarkdownAndCsvRendering) {
    const RunConfig cfg = parse_config(kMinimalConfig);
    const EstimateReport report = estimate(cfg.algorithm, cfg.error_model, cfg.physical);
    const std::string csv = phase_breakdown_csv(report);
    EXPECT_NE(csv.find("phase,component,patches,physical_qubits,error_share"),
              std::string::npos);
    EXPECT_NE(csv.find("lookup,cnot_fanout"), std::string::npos);
    EXPECT_NE(csv.find("addition,factories"), std::string::npos);
}

TEST(Config, CultivationCurveFromFile) {
    const std::string path = std::filesystem::temp_directory_path() / "tqre_curve.csv";
    {
        std::ofstream out(path);
        out << "1e-8,1.5e8\n7.7e-7,2.5e4\n1e-5,1e2\n";
    }
    std::string text = kMinimalConfig;
    text += "\n[factory]\ncultivation_curve_csv = " + path + "\n";
    const RunConfig cfg = parse_config(text);
    ASSERT_TRUE(cfg.factory.curve.has_value());
    EXPECT_DOUBLE_EQ(cfg.factory.curve->volume_at(7.7e-7), 2.5e4);
    std::filesystem::remove(path);

    std::string bad = kMinimalConfig;
    bad += "\n[factory]\ncultivation_curve_csv = /nonexistent/curve.csv\n";
    EXPECT_THROW(parse_config(bad), ConfigError);
}

TEST(Config, LayoutEmission) {
    const RunConfig cfg = parse_config(kMinimalConfig);
    const std::string dir = std::filesystem::temp_directory_path() / "tqre_layout_test";
    std::filesystem::remove_all(dir);
    emit_layout_csvs(cfg, dir);
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(dir) / "maj_block_patches.csv"));
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(dir) / "factory_schedule.csv"));
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(dir) / "ghz_fanout_schedule.csv"));
    std::filesystem::remove_all(dir);
}
