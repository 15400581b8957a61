#pragma once

// Complete elliptic integrals of the first and second kind.
//
//   K(k) = ∫₀^{π/2} dθ / √(1 − k² sin²θ)
//   E(k) = ∫₀^{π/2} √(1 − k² sin²θ) dθ
//
// Both are evaluated with the arithmetic-geometric mean. The modulus carries
// its complementary modulus k' = √(1 − k²) explicitly: callers that know k'
// in closed form (for example k' = ε/(2y + ε)) should pass it, because
// recovering k' from a k close to 1 loses most of its significant digits.

namespace delaunay::elliptic {

/// K is refused once 1 − k drops below this.
inline constexpr double kMaxOneMinusK = 1e-12;

struct EllipticModulus {
    double k{0.0};
    double kPrime{1.0};
    double k1{0.0};       // Gauss-transformed modulus (1 − k')/(1 + k')
    double k1Prime{1.0};  // its complement 2√k'/(1 + k')

    /// 0 ≤ k < 1.
    static EllipticModulus fromModulus(double k);
    /// Modulus with an independently known complement, 0 < k' ≤ 1.
    static EllipticModulus withComplement(double k, double kPrime);

    /// 1 − k, computed without cancellation.
    double oneMinusK() const { return kPrime * kPrime / (1.0 + k); }
};

struct EllipticPair {
    double bigK;
    double bigE;
};

double ellipticK(const EllipticModulus& m);
double ellipticE(const EllipticModulus& m);
EllipticPair ellipticKE(const EllipticModulus& m);

double ellipticK(double k);
/// Accepts k = 1, where E(1) = 1.
double ellipticE(double k);

struct EllipticDerivatives {
    double dKdk;
    double dEdk;
};

/// dK/dk = E/(k k'²) − K/k,  dE/dk = (E − K)/k.  Undefined at k = 0.
EllipticDerivatives ellipticDerivatives(const EllipticModulus& m);

/// Both sides of K(k) = (1 + k₁)K(k₁) and E(k) = (1 + k')E(k₁) − k'(1 + k₁)K(k₁).
struct GaussTransformSides {
    double kLhs;
    double kRhs;
    double eLhs;
    double eRhs;
};

GaussTransformSides gaussTransform(const EllipticModulus& m);

}  // namespace delaunay::elliptic
