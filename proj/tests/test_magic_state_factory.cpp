#include "tqre/magic_state_factory.hpp"

#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "tqre/errors.hpp"

using namespace tqre;

namespace {

ErrorModelParams defaults() {
    return ErrorModelParams{};
}

PhysicalParams physical() {
    return PhysicalParams{};
}

} // namespace

TEST(CultivationCurve, AnchorReproducedExactly) {
    const CultivationCurve curve = CultivationCurve::default_curve();
    EXPECT_DOUBLE_EQ(curve.volume_at(7.7e-7), 1.5e4);
}

TEST(CultivationCurve, QuadraticSlopeAroundAnchor) {
    const CultivationCurve curve = CultivationCurve::default_curve();
    EXPECT_NEAR(curve.volume_at(7.7e-8) / curve.volume_at(7.7e-7), 100.0, 1e-6);
}

TEST(CultivationCurve, CsvRoundTrip) {
    std::istringstream in("# t_error,qubit_rounds\n1e-7,1e6\n1e-6,1e4\n1e-5,1e2\n");
    const CultivationCurve curve = CultivationCurve::from_csv(in);
    EXPECT_DOUBLE_EQ(curve.volume_at(1e-6), 1e4);
    EXPECT_NEAR(curve.volume_at(3.1622776601683795e-7), 1e5, 1e-3);
}

TEST(CultivationCurve, RejectsNonMonotone) {
    EXPECT_THROW(CultivationCurve({{1e-7, 1e4}, {1e-6, 1e5}}), std::invalid_argument);
    EXPECT_THROW(CultivationCurve({}), std::invalid_argument);
}

TEST(CczError, Rsa2048OperatingPoint) {
    // 28 * (7.7e-7)^2, Clifford floor excluded.
    EXPECT_NEAR(ccz_error(7.7e-7), 1.66012e-11, 1e-16);
}

TEST(CczError, ZeroInputLeavesFloor) {
    EXPECT_DOUBLE_EQ(ccz_error(0.0, 3e-13), 3e-13);
}

TEST(CczError, QuadraticTerm) {
    EXPECT_NEAR(ccz_error(1e-3), 2.8e-5, 1e-12);
}

TEST(RequiredTError, InvertsOperatingPoint) {
    EXPECT_NEAR(required_t_error(1.66e-11), 7.6997e-7, 1e-10);
}

TEST(RequiredTError, RoundTrip) {
    const double t = required_t_error(28.0 * 1e-6 * 1e-6);
    EXPECT_NEAR(t, 1e-6, 1e-18);
    for (double target : {1e-10, 3.3e-11, 5e-12}) {
        const double floor = 0.1 * target;
        const double t_in = required_t_error(target, floor);
        EXPECT_NEAR(ccz_error(t_in, floor), target, 1e-12 * target);
    }
}

TEST(RequiredTError, FloorBoundary) {
    EXPECT_THROW(required_t_error(1e-12, 1e-12), InfeasibleError);
}

TEST(FactoryBuild, SweepOptimumNearOneRoundPerGate) {
    const FactoryModel model = factory_build(1.52e-11, defaults(), physical());
    EXPECT_GE(model.se_rounds_per_gate, 0.5);
    EXPECT_LE(model.se_rounds_per_gate, 2.0);
}

TEST(FactoryBuild, OperatingPointAtDistance27) {
    FactoryBuildOptions opts;
    opts.fixed_d = 27;
    const FactoryModel model = factory_build(1.52e-11, defaults(), physical(), opts);
    EXPECT_EQ(model.d, 27);
    EXPECT_GT(model.cycle_duration_s, 4e-3);
    EXPECT_LT(model.cycle_duration_s, 15e-3);
    EXPECT_GE(model.throughput_ccz_per_s, 65.0);
    // Clifford floor stays a small share of the output error.
    EXPECT_LT(model.clifford_floor, 0.1 * model.ccz_output_error);
    EXPECT_LE(model.ccz_output_error, 1.52e-11 * (1.0 + 1e-9));
}

TEST(FactoryBuild, ThroughputMonotoneInTarget) {
    const FactoryModel strict = factory_build(1e-13, defaults(), physical());
    const FactoryModel loose = factory_build(1e-9, defaults(), physical());
    EXPECT_LE(strict.throughput_ccz_per_s, loose.throughput_ccz_per_s + 1e-9);
    EXPECT_GE(strict.d, loose.d);
}

TEST(FactoryBuild, VanishingPhysicalErrorCollapsesDistance) {
    ErrorModelParams em = defaults();
    em.p_phys = 1e-14;
    em.lambda = em.p_thres / em.p_phys;
    const FactoryModel model = factory_build(1.6e-11, em, physical());
    EXPECT_EQ(model.d, 3);
    EXPECT_GT(model.throughput_ccz_per_s, 0.0);
    // Still floored by moves, measurement and reaction.
    EXPECT_GE(model.cycle_duration_s, physical().reaction_time_s);
}

TEST(FactoryBuild, InfeasibleAtFixedDistanceThrows) {
    FactoryBuildOptions opts;
    opts.fixed_d = 27;
    EXPECT_THROW(factory_build(1e-16, defaults(), physical(), opts), InfeasibleError);
}

TEST(FactoryBuild, CultivationSupplyLimitsCycle) {
    FactoryBuildOptions opts;
    opts.fixed_d = 27;
    opts.fixed_se_rounds = 1.0;
    const FactoryModel model = factory_build(1.52e-11, defaults(), physical(), opts);
    const double schedule = factory_cycle_time(27, 1.0, physical());
    EXPECT_GE(model.cycle_duration_s, schedule);
    EXPECT_GE(model.cycle_duration_s, 8.0 / model.cultivation_supply_per_s - 1e-12);
}
