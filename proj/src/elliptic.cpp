#include "delaunay/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"

namespace delaunay::elliptic {
namespace {

constexpr int kMaxAgmIterations = 64;
// One ulp apart is as close as two doubles get; a tighter bound can stall.
constexpr double kAgmRelTol = 2.0 * std::numeric_limits<double>::epsilon();

// AGM(1, k') with the side sum Σ 2^{n-1} c_n², c₀ = k.
struct AgmResult {
    double mean;
    double sideSum;
};

AgmResult agm(double k, double kPrime) {
    double a = 1.0;
    double b = kPrime;
    double weight = 0.5;
    double sum = 0.5 * k * k;
    for (int n = 0; n <= kMaxAgmIterations; ++n) {
        if (std::abs(a - b) <= kAgmRelTol * a) return {a, sum};
        const double c = 0.5 * (a - b);
        const double next = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = next;
        weight *= 2.0;
        sum += weight * c * c;
    }
    throw ConvergenceError("AGM did not converge within 64 iterations for k = " +
                           format::number(k));
}

void requireKFinite(const EllipticModulus& m) {
    if (m.oneMinusK() < kMaxOneMinusK)
        throw DomainError("K(k) diverges: 1 - k = " + format::number(m.oneMinusK()) +
                          " is below 1e-12");
}

}  // namespace

EllipticModulus EllipticModulus::fromModulus(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw DomainError("elliptic modulus must satisfy 0 <= k < 1, got " + format::number(k));
    return withComplement(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

EllipticModulus EllipticModulus::withComplement(double k, double kPrime) {
    if (!(k >= 0.0 && k < 1.0))
        throw DomainError("elliptic modulus must satisfy 0 <= k < 1, got " + format::number(k));
    if (!(kPrime > 0.0 && kPrime <= 1.0))
        throw DomainError("complementary modulus must satisfy 0 < k' <= 1, got " +
                          format::number(kPrime));
    if (std::abs(k * k + kPrime * kPrime - 1.0) > 1e-12)
        throw DomainError("inconsistent modulus pair: k^2 + k'^2 - 1 = " +
                          format::number(k * k + kPrime * kPrime - 1.0));
    EllipticModulus m;
    m.k = k;
    m.kPrime = kPrime;
    // 1 − k' = k²/(1 + k') keeps k₁ ≈ k²/4 accurate for tiny k.
    const double onePlus = 1.0 + kPrime;
    m.k1 = k * k / (onePlus * onePlus);
    m.k1Prime = 2.0 * std::sqrt(kPrime) / onePlus;
    return m;
}

EllipticPair ellipticKE(const EllipticModulus& m) {
    requireKFinite(m);
    const AgmResult r = agm(m.k, m.kPrime);
    const double bigK = std::numbers::pi / (2.0 * r.mean);
    return {bigK, bigK * (1.0 - r.sideSum)};
}

double ellipticK(const EllipticModulus& m) {
    requireKFinite(m);
    return std::numbers::pi / (2.0 * agm(m.k, m.kPrime).mean);
}

double ellipticE(const EllipticModulus& m) {
    const AgmResult r = agm(m.k, m.kPrime);
    const double bigK = std::numbers::pi / (2.0 * r.mean);
    return bigK * (1.0 - r.sideSum);
}

double ellipticK(double k) { return ellipticK(EllipticModulus::fromModulus(k)); }

double ellipticE(double k) {
    if (k == 1.0) return 1.0;
    if (!(k >= 0.0 && k <= 1.0))
        throw DomainError("E(k) requires 0 <= k <= 1, got " + format::number(k));
    return ellipticE(EllipticModulus::fromModulus(k));
}

EllipticDerivatives ellipticDerivatives(const EllipticModulus& m) {
    if (m.k <= 0.0) throw DomainError("elliptic derivatives are undefined at k = 0");
    const auto [bigK, bigE] = ellipticKE(m);
    const double kp2 = m.kPrime * m.kPrime;
    return {bigE / (m.k * kp2) - bigK / m.k, (bigE - bigK) / m.k};
}

GaussTransformSides gaussTransform(const EllipticModulus& m) {
    if (m.k <= 0.0) throw DomainError("Gauss transformation requires 0 < k < 1");
    const auto [bigK, bigE] = ellipticKE(m);
    const auto [k1K, k1E] = ellipticKE(EllipticModulus::withComplement(m.k1, m.k1Prime));
    return {bigK, (1.0 + m.k1) * k1K, bigE,
            (1.0 + m.kPrime) * k1E - m.kPrime * (1.0 + m.k1) * k1K};
}

}  // namespace delaunay::elliptic
