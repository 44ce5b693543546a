#include "tqre/shor_algorithm.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "tqre/errors.hpp"

using namespace tqre;

namespace {

AlgorithmConfig table_config() {
    return AlgorithmConfig{};  // defaults mirror the 2048-bit operating point
}

} // namespace

TEST(LookupAdditions, TableParameters) {
    const long long count = count_lookup_additions(table_config());
    EXPECT_EQ(count, 1048576);
    EXPECT_NEAR(static_cast<double>(count), 1.07e6, 0.10 * 1.07e6);
}

TEST(LookupAdditions, MatchesScheduleWalkOnSmallInstances) {
    for (long long n = 1; n <= 16; ++n) {
        for (int w_exp = 1; w_exp <= 3; ++w_exp) {
            for (int w_mul = 1; w_mul <= 3; ++w_mul) {
                AlgorithmConfig cfg = table_config();
                cfg.n_bits = n;
                cfg.exponent_bits = 0;
                cfg.w_exp = w_exp;
                cfg.w_mul = w_mul;
                const auto walk = oracles::windowed_schedule_walk(
                    cfg.effective_exponent_bits(), n, w_exp, w_mul);
                EXPECT_EQ(count_lookup_additions(cfg),
                          static_cast<long long>(walk.size()))
                    << "n=" << n << " w_exp=" << w_exp << " w_mul=" << w_mul;
            }
        }
    }
}

TEST(LookupAdditions, SingleWindowDegenerates) {
    AlgorithmConfig cfg = table_config();
    cfg.n_bits = 8;
    cfg.exponent_bits = 12;
    cfg.w_exp = 12;
    cfg.w_mul = 8;
    // One exponent window, one multiplicand window: one lookup-addition per
    // multiplication pass.
    EXPECT_EQ(count_lookup_additions(cfg), 2);
}

TEST(CczCount, TableParameters) {
    const long long total = ccz_count(table_config());
    EXPECT_NEAR(static_cast<double>(total), 3e9, 0.15 * 3e9);
    // Per-pair composition: 128 lookup + 12 unlookup + 2994 adder ANDs.
    EXPECT_EQ(total, 1048576LL * (128 + 12 + 2994));
}

TEST(CczCount, SumsUnitCounts) {
    AlgorithmConfig cfg = table_config();
    cfg.n_bits = 64;
    cfg.exponent_bits = 12;
    cfg.w_exp = 3;
    cfg.w_mul = 4;
    cfg.r_sep = 16;
    cfg.r_pad = 4;
    const long long pairs = count_lookup_additions(cfg);
    const long long adder = 64 + 4 * 4;
    const long long lookup = 128;
    const long long unlookup = 12;
    EXPECT_EQ(ccz_count(cfg), pairs * (adder + lookup + unlookup));
}

TEST(Budget, PerCczTarget) {
    AlgorithmConfig cfg = table_config();
    const BudgetSplit split = allocate_budget(cfg);
    // 0.05 absolute mass spread over ~3.29e9 states.
    EXPECT_NEAR(split.per_ccz_target, 0.05 / 3.286237184e9, 1e-16);
    EXPECT_DOUBLE_EQ(split.clifford_budget, 0.45);
}

TEST(Budget, ReferenceArithmetic) {
    // 3e9 states at a 5% budget -> 1.67e-11 each.
    EXPECT_NEAR(0.05 / 3e9, 1.67e-11, 0.01e-11);
}

TEST(Budget, InfeasibleSplit) {
    AlgorithmConfig cfg = table_config();
    cfg.ccz_budget_fraction = 0.6;
    cfg.total_error_budget = 0.5;
    EXPECT_THROW(allocate_budget(cfg), InfeasibleError);
}

TEST(Estimate, HeadlineNumbers) {
    const EstimateReport report = estimate(table_config(), ErrorModelParams{}, PhysicalParams{});
    EXPECT_TRUE(report.feasible());
    EXPECT_NEAR(report.runtime_s, 5.6 * 86400.0, 0.10 * 5.6 * 86400.0);
    EXPECT_NEAR(static_cast<double>(report.total_physical_qubits), 19e6, 0.15 * 19e6);
    EXPECT_NEAR(report.lookup_duration_s, 0.17, 0.2 * 0.17);
    EXPECT_NEAR(report.addition_duration_s, 0.28, 0.1 * 0.28);
}

TEST(Estimate, RuntimeIdentity) {
    const EstimateReport report = estimate(table_config(), ErrorModelParams{}, PhysicalParams{});
    const double product = static_cast<double>(report.lookup_addition_count) *
                           (report.lookup_duration_s + report.addition_duration_s);
    EXPECT_NEAR(report.runtime_s, product, 0.05 * product);
    EXPECT_DOUBLE_EQ(report.spacetime_volume_qubit_s,
                     static_cast<double>(report.total_physical_qubits) * report.runtime_s);
}

TEST(Estimate, ErrorWithinBudget) {
    const AlgorithmConfig cfg = table_config();
    const EstimateReport report = estimate(cfg, ErrorModelParams{}, PhysicalParams{});
    EXPECT_LE(report.total_logical_error, cfg.total_error_budget);
    EXPECT_NEAR(report.ccz_error_total, cfg.ccz_budget_fraction, 0.2 * cfg.ccz_budget_fraction);
}

TEST(Estimate, FanoutDominatesLookupPhase) {
    const EstimateReport report = estimate(table_config(), ErrorModelParams{}, PhysicalParams{});
    long long fanout = 0, largest_other = 0;
    double fanout_error = 0.0, other_error = 0.0;
    for (const PhaseComponent& row : report.breakdown) {
        if (row.phase != "lookup") {
            continue;
        }
        if (row.component == "cnot_fanout") {
            fanout = row.patches;
            fanout_error = row.error_share;
        } else {
            largest_other = std::max(largest_other, row.patches);
            other_error = std::max(other_error, row.error_share);
        }
    }
    EXPECT_GT(fanout, largest_other);
    EXPECT_GT(fanout_error, other_error);
}

TEST(Estimate, FactoriesDominateAdditionWorkingSpace) {
    const EstimateReport report = estimate(table_config(), ErrorModelParams{}, PhysicalParams{});
    long long factories = 0, blocks = 0;
    for (const PhaseComponent& row : report.breakdown) {
        if (row.phase != "addition") {
            continue;
        }
        if (row.component == "factories") {
            factories = row.patches;
        }
        if (row.component == "maj_uma_blocks") {
            blocks = row.patches;
        }
    }
    EXPECT_GT(factories, blocks);
}

TEST(Estimate, StorageCompressionShrinksFootprint) {
    AlgorithmConfig dense = table_config();
    dense.storage_density_factor = 10.0;
    const EstimateReport base = estimate(table_config(), ErrorModelParams{}, PhysicalParams{});
    const EstimateReport packed = estimate(dense, ErrorModelParams{}, PhysicalParams{});
    const double reduction =
        1.0 - static_cast<double>(packed.total_physical_qubits) /
                  static_cast<double>(base.total_physical_qubits);
    EXPECT_GE(reduction, 0.10);
    EXPECT_LE(reduction, 0.30);
    EXPECT_NEAR(packed.runtime_s, base.runtime_s, 1e-9 * base.runtime_s);
}

TEST(Estimate, FasterReactionFlooredByFanout) {
    PhysicalParams fast;
    fast.reaction_time_s = 0.1e-3;
    fast.measure_time_s = 0.1e-3;  // keep t_r >= measure
    const EstimateReport base = estimate(table_config(), ErrorModelParams{}, PhysicalParams{});
    const EstimateReport quick = estimate(table_config(), ErrorModelParams{}, fast);
    EXPECT_LT(quick.runtime_s, base.runtime_s);
    // A 10x faster reaction buys far less than 10x: the fan-out stage and the
    // MAJ cycle floor the clock.
    EXPECT_GT(quick.runtime_s, 0.25 * base.runtime_s);
}

TEST(Estimate, FactoryCapViolationIsReported) {
    AlgorithmConfig cfg = table_config();
    cfg.max_factories = 4;
    const EstimateReport report = estimate(cfg, ErrorModelParams{}, PhysicalParams{});
    EXPECT_FALSE(report.feasible());
    bool found = false;
    for (const std::string& v : report.constraint_violations) {
        if (v.find("factories") != std::string::npos ||
            v.find("fleet") != std::string::npos) {
            found = true;
        }
    }
    EXPECT_TRUE(found);
    // The reported duration stays reaction-limited rather than silently
    // stretching to hide the violation.
    EXPECT_NEAR(report.addition_duration_s, 0.278, 1e-12);
}

TEST(Estimate, QpeRotationsIncluded) {
    // One reaction step per exponent bit is part of the runtime.
    const EstimateReport report = estimate(table_config(), ErrorModelParams{}, PhysicalParams{});
    const double pairs_only = static_cast<double>(report.lookup_addition_count) *
                              (report.lookup_duration_s + report.addition_duration_s);
    EXPECT_GE(report.runtime_s, pairs_only + 3072 * 1e-3 - 1e-6);
}

TEST(AlgorithmConfig, ExponentDefaultsToThreeHalves) {
    AlgorithmConfig cfg = table_config();
    EXPECT_EQ(cfg.effective_exponent_bits(), 3072);
    cfg.n_bits = 15;
    EXPECT_EQ(cfg.effective_exponent_bits(), 23);  // ceil(1.5 * 15)
    cfg.exponent_bits = 40;
    EXPECT_EQ(cfg.effective_exponent_bits(), 40);
}

TEST(AlgorithmConfig, Validation) {
    AlgorithmConfig cfg = table_config();
    cfg.ccz_budget_fraction = 0.0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = table_config();
    cfg.storage_density_factor = 0.5;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = table_config();
    cfg.d = 26;
    EXPECT_THROW(cfg.validate(), std::domain_error);
}
