#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "delaunay/elliptic.hpp"
#include "delaunay/errors.hpp"

using namespace delaunay;
using namespace delaunay::elliptic;

namespace {

EllipticModulus fromComplement(double kPrime) {
    return EllipticModulus::withComplement(std::sqrt((1.0 - kPrime) * (1.0 + kPrime)), kPrime);
}

}  // namespace

// Reference values from 40-digit arithmetic.
TEST(Elliptic, FrozenValues) {
    EXPECT_NEAR(ellipticK(0.5), 1.685750354812596042871, 2e-15);
    EXPECT_NEAR(ellipticE(0.5), 1.467462209339427155460, 2e-15);
    EXPECT_NEAR(ellipticK(0.99), 3.356600523361192376033, 1e-14);
    EXPECT_NEAR(ellipticE(0.99), 1.028475809028804000984, 1e-14);
}

TEST(Elliptic, ZeroModulusGivesQuarterCircle) {
    EXPECT_DOUBLE_EQ(ellipticK(0.0), std::numbers::pi / 2);
    EXPECT_DOUBLE_EQ(ellipticE(0.0), std::numbers::pi / 2);
}

TEST(Elliptic, EAtOneIsOne) { EXPECT_DOUBLE_EQ(ellipticE(1.0), 1.0); }

TEST(Elliptic, ExplicitComplementKeepsPrecisionNearOne) {
    // k' = 2e-6 leaves only 2e-12 between k and 1.
    const auto m = fromComplement(2e-6);
    EXPECT_NEAR(ellipticK(m), 14.50865773853772807126, 1e-13);
    EXPECT_NEAR(ellipticE(m), 1.000000000028017315477, 1e-14);
}

TEST(Elliptic, RejectsModulusOutsideRange) {
    EXPECT_THROW(ellipticK(1.0), DomainError);
    EXPECT_THROW(ellipticK(-0.1), DomainError);
    EXPECT_THROW(ellipticE(1.5), DomainError);
    EXPECT_THROW(EllipticModulus::withComplement(0.6, 0.7), DomainError);
}

TEST(Elliptic, KRefusedTooCloseToOne) {
    EXPECT_THROW(ellipticK(fromComplement(1e-7)), DomainError);  // 1 − k = 5e-15
    EXPECT_NO_THROW(ellipticE(fromComplement(1e-7)));
}

TEST(Elliptic, EBelowK) {
    for (int i = 0; i < 100; ++i) {
        const auto [bigK, bigE] = ellipticKE(EllipticModulus::fromModulus(i / 100.0));
        EXPECT_LE(bigE, bigK);
    }
}

TEST(Elliptic, LegendreRelation) {
    for (double k : {0.1, 0.3, 0.5, 0.8, 0.95}) {
        const auto m = EllipticModulus::fromModulus(k);
        const auto c = EllipticModulus::withComplement(m.kPrime, m.k);
        const auto [bigK, bigE] = ellipticKE(m);
        const auto [bigKc, bigEc] = ellipticKE(c);
        EXPECT_NEAR(bigE * bigKc + bigEc * bigK - bigK * bigKc, std::numbers::pi / 2, 1e-14);
    }
}

TEST(Elliptic, DerivativesMatchCentralDifferences) {
    const double h = 1e-6;
    for (double k : {0.1, 0.4, 0.7, 0.9}) {
        const auto d = ellipticDerivatives(EllipticModulus::fromModulus(k));
        EXPECT_NEAR(d.dKdk, (ellipticK(k + h) - ellipticK(k - h)) / (2 * h), 1e-7 * std::abs(d.dKdk));
        EXPECT_NEAR(d.dEdk, (ellipticE(k + h) - ellipticE(k - h)) / (2 * h), 1e-7 * std::abs(d.dEdk));
    }
}

TEST(Elliptic, DerivativesUndefinedAtZero) {
    EXPECT_THROW(ellipticDerivatives(EllipticModulus::fromModulus(0.0)), DomainError);
}

TEST(Elliptic, GaussTransformIdentities) {
    for (double k : {0.01, 0.25, 0.5, 0.75, 0.99}) {
        const auto g = gaussTransform(EllipticModulus::fromModulus(k));
        EXPECT_NEAR(g.kLhs, g.kRhs, 1e-13);
        EXPECT_NEAR(g.eLhs, g.eRhs, 1e-13);
    }
}

TEST(Elliptic, LogarithmicGrowthNearOne) {
    double previous = 1.0;
    for (double kPrime : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const double gap = std::abs(ellipticK(fromComplement(kPrime)) - std::log(4.0 / kPrime));
        EXPECT_LT(gap, previous);
        previous = gap;
    }
}
