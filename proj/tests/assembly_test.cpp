#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "delaunay/assembly.hpp"
#include "delaunay/elliptic.hpp"
#include "delaunay/errors.hpp"
#include "delaunay/metrics.hpp"

using namespace delaunay;
using namespace delaunay::assembly;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEightPi = 8 * kPi;

double central(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2 * h);
}

}  // namespace

// Roots and energies from 40-digit arithmetic.
TEST(Balance, FrozenSolutions) {
    struct Row {
        double c, y, w;
    };
    for (const Row& r : {Row{1.1, 0.5800144302350867381, 25.02157033138406382},
                         Row{1.05, 0.7515684769231739938, 25.09987358564294837},
                         Row{1.01, 0.9334416947324253541, 25.13102795766651828}}) {
        const auto s = solveBalance(r.c);
        EXPECT_NEAR(s.y, r.y, 1e-13) << "c = " << r.c;
        EXPECT_NEAR(torusEnergy(s).wTotal, r.w, 1e-12) << "c = " << r.c;
    }
}

TEST(Balance, StateInvariants) {
    const auto s = solveBalance(1.1);
    EXPECT_NEAR(s.a - s.y, s.eps, 1e-16);
    EXPECT_LE(std::abs(s.FResidual), kSolverTolerance);
    EXPECT_EQ(s.signChanges, 1);
    EXPECT_NEAR(s.L, s.nodoidPeriod, 1e-10);
}

TEST(Balance, SlopeInYTendsToOne) {
    const double eps = 1e-6;
    EXPECT_NEAR(balanceFunction(1.0 + eps, 0.9).dFdy, 1.0, 1e-4);
}

TEST(Balance, PartialsMatchFiniteDifferences) {
    for (double c : {1.01, 1.1}) {
        const double y = 0.7;
        const auto r = balanceFunction(c, y);
        EXPECT_NEAR(r.dFdy, central([&](double v) { return balanceFunction(c, v).F; }, y, 1e-6), 1e-6);
        EXPECT_NEAR(r.dFdc, central([&](double v) { return balanceFunction(v, y).F; }, c, 1e-6), 1e-6);
    }
}

TEST(Balance, RejectsInvalidArguments) {
    EXPECT_THROW(balanceFunction(1.0, 0.5), DomainError);
    EXPECT_THROW(balanceFunction(1.1, 0.0), DomainError);
    EXPECT_THROW(solveBalance(1.0), RangeError);
    EXPECT_THROW(solveBalance(1.0 + 1e-7), RangeError);
    EXPECT_NO_THROW(solveBalance(1.0 + 1e-6));
}

TEST(Balance, YTendsToOne) {
    EXPECT_NEAR(solveBalance(1.0 + 1e-5).y, 1.0, 1e-3);
    EXPECT_NEAR(solveBalance(1.0 + 1e-6).y, 1.0, 1e-4);
}

TEST(Balance, BisectionAgreesAtOnePointOne) {
    double lo = 0.3, hi = 0.9;
    ASSERT_LT(balanceFunction(1.1, lo).F, 0.0);
    ASSERT_GT(balanceFunction(1.1, hi).F, 0.0);
    while (hi - lo > 1e-15) {
        const double mid = 0.5 * (lo + hi);
        (balanceFunction(1.1, mid).F < 0 ? lo : hi) = mid;
    }
    EXPECT_NEAR(solveBalance(1.1).y, 0.5 * (lo + hi), 1e-10);
}

TEST(SolutionDerivative, MatchesFiniteDifferencesAndBlowsUp) {
    const auto s = solveBalance(1.01);
    const double fd = central([](double c) { return solveBalance(c).y; }, 1.01, 1e-5);
    EXPECT_NEAR(solutionDerivative(s), fd, 1e-4 * std::abs(fd));

    double previous = 0.0;
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const auto t = solveBalance(1.0 + eps);
        const double yp = solutionDerivative(t);
        EXPECT_LT(yp, previous);
        EXPECT_LT(std::abs(eps * yp), 0.2);
        previous = yp;
    }
    EXPECT_LT(std::abs(1e-6 * solutionDerivative(solveBalance(1.0 + 1e-6))), 0.02);
}

TEST(Energy, TotalIsSumAndAboveFourPi) {
    for (double c : {1.001, 1.05, 1.2}) {
        const auto e = torusEnergy(solveBalance(c));
        EXPECT_EQ(e.wTotal, e.wNod + e.wUnd);
        EXPECT_GT(e.wTotal, 4 * kPi);
        EXPECT_LT(e.wTotal, kEightPi);
    }
}

TEST(Energy, TendsToEightPi) {
    EXPECT_NEAR(torusEnergy(solveBalance(1.0 + 1e-6)).wTotal, kEightPi, 1e-9);
}

TEST(Energy, MatchesQuadratureAtOnePointOne) {
    const auto s = solveBalance(1.1);
    const auto m = metrics::computeMetrics(assembleTorusProfile(s), 0.0, 1e-10);
    EXPECT_NEAR(m.willmore, torusEnergy(s).wTotal, 1e-7 * m.willmore);
}

TEST(Energy, DerivativePartsMatchFiniteDifferences) {
    const auto s = solveBalance(1.05);
    const auto p = energyDerivativeParts(s);
    EXPECT_NEAR(p.dWnod_dc, central(nodoidEnergy, 1.05, 1e-5), 1e-6);
    EXPECT_NEAR(p.dWund_dy,
                central([&](double y) { return unduloidEnergy(y, s.eps); }, s.y, 1e-6), 1e-6);
    EXPECT_NEAR(p.dWund_deps,
                central([&](double e) { return unduloidEnergy(s.y, e); }, s.eps, 1e-6), 1e-6);
}

TEST(Energy, AssembledSlopeMatchesChainRule) {
    for (double c : {1.01, 1.05}) {
        const auto s = solveBalance(c);
        const auto p = energyDerivativeParts(s);
        const double chain = p.dWnod_dc + p.dWund_deps + p.dWund_dy * solutionDerivative(s);
        EXPECT_NEAR(torusEnergy(s).dWdc, chain, 1e-10 * std::abs(chain));
        const double fd = central([](double v) { return torusEnergy(solveBalance(v)).wTotal; }, c, 1e-5);
        EXPECT_NEAR(torusEnergy(s).dWdc, fd, 1e-4 * std::abs(fd));
    }
}

TEST(Energy, NodoidSlopeTendsToTwoPi) {
    EXPECT_NEAR(energyDerivativeParts(solveBalance(1.0 + 1e-6)).dWnod_dc, 2 * kPi, 1e-4);
}

TEST(Energy, CoefficientsTendToOne) {
    const auto k = energyDerivativeCoefficients(solveBalance(1.0 + 1e-6));
    EXPECT_NEAR(k.a1, 1.0, 1e-4);
    EXPECT_NEAR(k.a2, 1.0, 1e-4);
    EXPECT_NEAR(k.a3, 1.0, 0.05);
}

TEST(Energy, DecreasingNearOne) {
    double previous = 0.0;
    for (double c : {1.0005, 1.001, 1.005, 1.01}) {
        const auto e = torusEnergy(solveBalance(c));
        EXPECT_LT(e.dWdc, 0.0);
        if (previous != 0.0) EXPECT_LT(e.wTotal, previous);
        previous = e.wTotal;
    }
}

TEST(LimitDiagnostics, Values) {
    EXPECT_NEAR(limitDiagnostics(1.0 + 1e-4).ratio, -0.5, 0.05);
    const auto d = limitDiagnostics(1.0 + 1e-6);
    EXPECT_NEAR(d.Lvalue, 1.0, 1e-4);
    EXPECT_LT(d.epsK1, 1e-4);
    EXPECT_LT(d.epsK2, 1e-4);
    EXPECT_THROW(limitDiagnostics(1.05), RangeError);
}

TEST(ValidatedDomain, CoversDefaultSweepRange) {
    const auto d = validateDomain();
    EXPECT_EQ(d.cMax, kDefaultCLimit);
    EXPECT_EQ(d.grid.size(), 48u);
    for (double c : {1.0005, 1.001, 1.005, 1.01, 1.05, 1.1}) EXPECT_TRUE(isValidated(c));
}

TEST(TorusProfile, ClosedWithC1Joins) {
    const auto s = solveBalance(1.1);
    const auto curve = assembleTorusProfile(s);
    ASSERT_TRUE(curve.closed());
    const auto& segs = curve.segments();
    ASSERT_EQ(segs.size(), 4u);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const auto p = segs[i].end();
        const auto q = segs[(i + 1) % segs.size()].begin();
        EXPECT_LE(std::hypot(p.f - q.f, p.g - q.g), 1e-10);
        const double angle = std::atan2(p.dg, p.df) - std::atan2(q.dg, q.df);
        EXPECT_LE(std::abs(std::remainder(angle, 2 * kPi)), 1e-8);
    }
}

TEST(TorusProfile, NecksAndPeriods) {
    const auto s = solveBalance(1.05);
    const auto layout = torusLayout(s);
    const auto curve = assembleTorusProfile(s);
    const auto& segs = curve.segments();
    // Both necks have radius c − 1 = a − y.
    EXPECT_NEAR(segs[0].begin().f, s.eps, 1e-14);
    EXPECT_NEAR(segs[3].begin().f, s.eps, 1e-14);
    EXPECT_NEAR(layout.topNeckG - layout.bottomNeckG, s.L, 1e-10);
    EXPECT_NEAR(segs[3].begin().g - segs[3].end().g, s.L, 1e-10);
    // The maxima sit at g = 0.
    EXPECT_NEAR(segs[1].eval(0.0).f, s.c + 1, 1e-14);
    EXPECT_NEAR(segs[1].eval(0.0).g, 0.0, 1e-12);
    EXPECT_NEAR(segs[3].eval(kPi).f, s.a + s.y, 1e-14);
    EXPECT_NEAR(segs[3].eval(kPi).g, 0.0, 1e-12);
}

TEST(TorusProfile, EmbeddedAndPositivelyOriented) {
    for (double c : {1.001, 1.1, 1.2}) {
        const auto curve = assembleTorusProfile(solveBalance(c));
        EXPECT_FALSE(revolution::polylineSelfIntersects(curve.sample(512))) << "c = " << c;
        EXPECT_GT(metrics::computeMetrics(curve, 0.0, 1e-8).volume, 0.0);
    }
}

TEST(TorusProfile, MeanCurvatureSignsFollowOrientation) {
    const auto s = solveBalance(1.1);
    const auto curve = assembleTorusProfile(s);
    for (const auto& sample : curve.sample(64)) {
        const double h = revolution::meanCurvature(sample.point);
        if (sample.tag == revolution::SegmentTag::unduloid)
            EXPECT_NEAR(h, -0.5 / s.a, 1e-9);
        else
            EXPECT_NEAR(h, 0.5, 1e-9);
    }
}

TEST(Join, RejectsMismatch) {
    revolution::ProfilePoint p;
    p.f = 1.0;
    p.dg = 1.0;
    revolution::ProfilePoint q = p;
    EXPECT_NO_THROW(requireJoin(p, q, "same"));
    q.g = 1e-6;
    EXPECT_THROW(requireJoin(p, q, "shifted"), PatchMismatchError);
    q = p;
    q.df = 1e-3;
    EXPECT_THROW(requireJoin(p, q, "kinked"), PatchMismatchError);
}
