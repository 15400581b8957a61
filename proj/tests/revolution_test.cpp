#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "delaunay/cmc_profiles.hpp"
#include "delaunay/errors.hpp"
#include "delaunay/quadrature.hpp"
#include "delaunay/revolution.hpp"

using namespace delaunay;
using namespace delaunay::revolution;

namespace {

constexpr double kPi = std::numbers::pi;

ProfilePoint roundTorusMeridian(double r, double R, double t) {
    ProfilePoint p;
    p.t = t;
    p.f = R + r * std::cos(t);
    p.g = r * std::sin(t);
    p.df = -r * std::sin(t);
    p.dg = r * std::cos(t);
    p.ddf = -r * std::cos(t);
    p.ddg = -r * std::sin(t);
    return p;
}

CurveSegment roundTorusArc(double t0, double t1) {
    CurveSegment s;
    s.tag = SegmentTag::generic;
    s.tBegin = t0;
    s.tEnd = t1;
    s.eval = [](double t) { return roundTorusMeridian(1.0, 2.0, t); };
    return s;
}

ProfileCurve unitSphere() { return ProfileCurve({circularArc(1.0, 0.0, -kPi / 2, kPi / 2)}, false); }

double integrateDensity(const ProfileCurve& curve, Quantity q) {
    double total = 0.0;
    for (const auto& s : curve.segments())
        total += quadrature::integrate([&](double t) { return density(s.eval(t), q); }, s.tBegin,
                                       s.tEnd, 1e-13)
                     .value;
    return total;
}

}  // namespace

TEST(FundamentalForms, RoundTorusOuterEquator) {
    const auto ff = fundamentalForms(roundTorusMeridian(1.0, 2.0, 0.0));
    EXPECT_NEAR(2.0 * ff.H, 1.0 + 1.0 / 3.0, 1e-15);
    EXPECT_EQ(ff.F, 0.0);
    EXPECT_EQ(ff.M, 0.0);
}

TEST(FundamentalForms, MeanCurvatureIsAverageOfNormalCurvatures) {
    for (double t : {0.3, 1.2, 2.5, 4.0}) {
        const auto ff = fundamentalForms(roundTorusMeridian(0.7, 2.0, t));
        EXPECT_GT(ff.E, 0.0);
        EXPECT_GT(ff.G, 0.0);
        EXPECT_NEAR(2.0 * ff.H, ff.L / ff.E + ff.N / ff.G, 1e-14);
    }
}

TEST(FundamentalForms, UnduloidAndNodoidSigns) {
    EXPECT_NEAR(meanCurvature(cmc::unduloidPoint(cmc::UnduloidParams::fromAxes(1.0, 0.5), 0.0)),
                0.5, 1e-14);
    EXPECT_NEAR(meanCurvature(cmc::nodoidPoint(cmc::NodoidParams::fromAxes(1.0, 1.0),
                                               cmc::NodoidBranch::plus, 0.0)),
                -0.5, 1e-14);
}

TEST(FundamentalForms, DegeneratePoints) {
    ProfilePoint stalled = roundTorusMeridian(1.0, 2.0, 0.0);
    stalled.df = stalled.dg = 0.0;
    EXPECT_THROW(fundamentalForms(stalled), DegeneratePointError);
    ProfilePoint onAxis = roundTorusMeridian(1.0, 1.0, kPi);
    onAxis.f = 0.0;
    EXPECT_THROW(fundamentalForms(onAxis), DegeneratePointError);
}

TEST(SurfaceQuantities, RoundTorusVolumeIsPositiveCounterclockwise) {
    // Pappus: 2π²Rr² for r = 1, R = 2.
    EXPECT_NEAR(integrateDensity(ProfileCurve({roundTorusArc(0.0, 2 * kPi)}, true),
                                 Quantity::volume()),
                4 * kPi * kPi, 1e-11);
}

TEST(SurfaceQuantities, UnitSphere) {
    const auto sphere = unitSphere();
    EXPECT_NEAR(integrateDensity(sphere, Quantity::area()), 4 * kPi, 1e-12);
    EXPECT_NEAR(integrateDensity(sphere, Quantity::volume()), 4 * kPi / 3, 1e-12);
    EXPECT_NEAR(integrateDensity(sphere, Quantity::willmore()), 4 * kPi, 1e-12);
    EXPECT_NEAR(integrateDensity(sphere, Quantity::helfrich(1.0)), 0.0, 1e-12);
}

TEST(SurfaceQuantities, SampledDensitiesStayFiniteAtTheAxis) {
    const auto samples = sampleSurfaceQuantity(unitSphere(), Quantity::willmore(), 257);
    ASSERT_EQ(samples.size(), 257u);
    for (const auto& s : samples) EXPECT_TRUE(std::isfinite(s.value));
    EXPECT_NEAR(samples[128].value, 2 * kPi, 1e-12);  // equator: H = 1, f = 1
}

TEST(SurfaceQuantities, GenericSegmentMatchesAnalytic) {
    const auto generic = genericSegment(
        [](double t) { return std::pair{2.0 + std::cos(t), std::sin(t)}; }, 0.0, 2 * kPi);
    for (double t : {0.2, 1.0, 3.0}) {
        const auto p = generic.eval(t);
        EXPECT_NEAR(meanCurvature(p), meanCurvature(roundTorusMeridian(1.0, 2.0, t)), 1e-8);
    }
}

TEST(ProfileCurve, ClosedCurveMustClose) {
    EXPECT_THROW(ProfileCurve({roundTorusArc(0.0, kPi)}, true), PatchMismatchError);
    EXPECT_NO_THROW(ProfileCurve({roundTorusArc(0.0, 2 * kPi)}, true));
}

TEST(ProfileCurve, SamplesOrderedAndClosedLoopRepeatsStart) {
    const ProfileCurve loop({roundTorusArc(0.0, kPi), roundTorusArc(kPi, 2 * kPi)}, true);
    const auto samples = loop.sample(33);
    ASSERT_GE(samples.size(), 3u);
    for (std::size_t i = 1; i < samples.size(); ++i) EXPECT_LT(samples[i - 1].t, samples[i].t);
    EXPECT_EQ(samples.front().point.f, samples.back().point.f);
    EXPECT_EQ(samples.front().point.g, samples.back().point.g);
    EXPECT_TRUE(samples[32].patchPoint);
    EXPECT_FALSE(samples[1].patchPoint);
}

TEST(ProfileCurve, AxisEndpoints) {
    EXPECT_TRUE(unitSphere().axisEndpoints());
    EXPECT_FALSE(ProfileCurve({circularArc(1.0, 0.0, 0.0, kPi / 2)}, false).axisEndpoints());
}

TEST(ProfileCurve, ReflectionReversesOrientation) {
    const auto reflected = transformed(circularArc(1.0, 0.0, -kPi / 2, kPi / 2), -1.0, 0.5);
    const ProfileCurve curve({reflected}, false);
    EXPECT_NEAR(curve.startPoint().g, 1.5, 1e-15);
    EXPECT_NEAR(integrateDensity(curve, Quantity::volume()), -4 * kPi / 3, 1e-12);
    EXPECT_NEAR(meanCurvature(reflected.eval(0.7)), -1.0, 1e-14);
}

TEST(Polyline, DetectsFigureEight) {
    const auto lemniscate = genericSegment(
        [](double t) { return std::pair{2.0 + std::sin(t), std::sin(t) * std::cos(t)}; }, 0.0,
        2 * kPi);
    EXPECT_TRUE(polylineSelfIntersects(ProfileCurve({lemniscate}, true).sample(200)));
    EXPECT_FALSE(polylineSelfIntersects(ProfileCurve({roundTorusArc(0.0, 2 * kPi)}, true).sample(200)));
}
