#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "delaunay/assembly.hpp"
#include "delaunay/errors.hpp"
#include "delaunay/metrics.hpp"

using namespace delaunay;
using namespace delaunay::metrics;

namespace {

constexpr double kPi = std::numbers::pi;

revolution::ProfileCurve unitSphere() {
    return revolution::ProfileCurve({revolution::circularArc(1.0, 0.0, -kPi / 2, kPi / 2)}, false);
}

revolution::ProfileCurve torusAt(double c) {
    return assembly::assembleTorusProfile(assembly::solveBalance(c));
}

}  // namespace

TEST(Metrics, RoundSphere) {
    const auto m = computeMetrics(unitSphere(), 0.0);
    EXPECT_NEAR(m.area, 4 * kPi, 1e-12);
    EXPECT_NEAR(m.volume, 4 * kPi / 3, 1e-12);
    EXPECT_NEAR(m.willmore, 4 * kPi, 1e-12);
    EXPECT_NEAR(m.isoRatio, std::cbrt(36 * kPi), 1e-12);
    EXPECT_EQ(m.helfrich, m.willmore);
}

TEST(Metrics, RoundSphereHelfrichExpansion) {
    const auto h = helfrichExpansion(unitSphere(), 1.0);
    EXPECT_NEAR(h.willmore, 4 * kPi, 1e-12);
    EXPECT_NEAR(h.crossTerm, -8 * kPi, 1e-12);
    EXPECT_NEAR(h.areaTerm, 4 * kPi, 1e-12);
    EXPECT_NEAR(h.sum(), 0.0, 1e-11);
    const auto zero = helfrichExpansion(unitSphere(), 0.0);
    EXPECT_EQ(zero.sum(), zero.willmore);
}

TEST(Metrics, HelfrichExpansionOnTorus) {
    const auto curve = torusAt(1.05);
    const double direct = computeMetrics(curve, 0.1, 1e-11).helfrich;
    EXPECT_NEAR(helfrichExpansion(curve, 0.1, 1e-11).sum(), direct, 1e-8 * direct);
}

TEST(Metrics, VarifoldLimitArea) {
    const auto m = computeMetrics(torusAt(1.001), 0.0);
    EXPECT_NEAR(m.area, 32 * kPi, 0.02 * 32 * kPi);
}

TEST(Metrics, SurfaceInequalities) {
    for (double c : {1.001, 1.05, 1.2}) {
        const auto m = computeMetrics(torusAt(c), 0.0);
        EXPECT_GT(m.willmore, 4 * kPi);
        EXPECT_GT(m.isoRatio, std::cbrt(36 * kPi));
    }
}

TEST(Metrics, AmbientVolumeAgrees) {
    EXPECT_NEAR(ambientVolume(unitSphere()).value, 4 * kPi / 3, 1e-12);
    const auto curve = torusAt(1.1);
    const double meridian = computeMetrics(curve, 0.0, 1e-11).volume;
    EXPECT_NEAR(ambientVolume(curve, 1e-11).value, meridian, 1e-9 * meridian);
}

TEST(Metrics, ErrorEstimatesAreHonest) {
    const auto curve = torusAt(1.05);
    const auto coarse = computeMetrics(curve, 0.0, 1e-6);
    const auto fine = computeMetrics(curve, 0.0, 5e-7);
    const auto reference = computeMetrics(curve, 0.0, 1e-12);
    EXPECT_LE(std::abs(fine.area - coarse.area), coarse.quadratureError.area + fine.quadratureError.area);
    EXPECT_LE(std::abs(coarse.willmore - reference.willmore), coarse.quadratureError.willmore + 1e-12);
    EXPECT_LE(std::abs(coarse.volume - reference.volume), coarse.quadratureError.volume + 1e-12);
}

TEST(Metrics, ToleranceRange) {
    EXPECT_THROW(computeMetrics(unitSphere(), 0.0, 1e-13), DomainError);
    EXPECT_THROW(computeMetrics(unitSphere(), 0.0, 1e-3), DomainError);
}

TEST(Metrics, VolumeNeedsClosedOrAxisCurve) {
    const revolution::ProfileCurve arc({revolution::circularArc(1.0, 0.0, 0.0, kPi / 2)}, false);
    EXPECT_THROW(computeMetrics(arc, 0.0), NotClosedError);
    EXPECT_NO_THROW(integrateQuantity(arc, revolution::Quantity::area()));
}

TEST(Metrics, Deterministic) {
    const auto curve = torusAt(1.05);
    EXPECT_EQ(computeMetrics(curve, 0.0).willmore, computeMetrics(curve, 0.0).willmore);
}
