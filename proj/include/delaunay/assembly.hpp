#pragma once

// Delaunay tori: one nodoid period (a = 1, focal distance c > 1) glued at its
// two minima to one unduloid period (semi-major axis a = y + ε, focal
// distance y), where ε = c − 1 and y solves the balancing equation
//
//   F(c, y) = (y + ε) E(y/(y + ε)) − L(c) = 0,
//   L(c)    = c [E(1/c) − ε (c + 1)/c² K(1/c)],
//
// which matches the axial periods 4aE(y/a) and 4c[E(1/c) − (1 − 1/c²)K(1/c)]
// while a − y = c − 1 matches the neck radii.

#include <memory>
#include <vector>

#include "delaunay/cmc_profiles.hpp"
#include "delaunay/revolution.hpp"

namespace delaunay::assembly {

/// Smallest admissible ε = c − 1.
inline constexpr double kMinEps = 1e-6;
/// Default upper end of parameter sweeps.
inline constexpr double kDefaultCLimit = 1.2;
inline constexpr double kSolverTolerance = 1e-12;
inline constexpr double kBracketLow = 1e-6;
inline constexpr double kBracketHigh = 10.0;

/// Throws RangeError unless c − 1 ≥ 1e-6 (up to rounding of the literal 1 + 1e-6).
void requireAdmissible(double c);

struct BalanceResidual {
    double F;
    double dFdc;
    double dFdy;
};

/// F and its partials; c > 1, y > 0.
BalanceResidual balanceFunction(double c, double y);

/// L(c) = c[E(1/c) − ε(c + 1)/c² K(1/c)], a quarter of the nodoid period.
double reducedNodoidLength(double c);

struct BalanceState {
    double c{0.0};
    double eps{0.0};
    double y{0.0};
    double a{0.0};              // y + eps
    double L{0.0};              // unduloid period 4aE(y/a)
    double nodoidPeriod{0.0};   // 4c[E(1/c) − (1 − 1/c²)K(1/c)]
    double FResidual{0.0};
    int iterations{0};
    int signChanges{0};         // on the coarse y-scan; > 1 means the root is not unique
};

struct BalanceScan {
    int signChanges{0};
    double bracketLow{0.0};   // sign change nearest y = 1
    double bracketHigh{0.0};
};

/// Coarse log-spaced scan of F(c, ·) over [1e-6, 10].
BalanceScan scanBalance(double c, int samples = 240);

/// Newton from y = 1 on the sign-change bracket, bisection fallback.
BalanceState solveBalance(double c);

/// y'(c) from the closed form; throws ConvergenceError if its denominator vanishes.
double solutionDerivative(const BalanceState& s);

/// 2π(1 + c)E(2√c/(1 + c)).
double nodoidEnergy(double c);
/// 2π(1 + y/(y + ε))E(2√(y(y + ε))/(2y + ε)).
double unduloidEnergy(double y, double eps);

struct TorusEnergy {
    double wNod;
    double wUnd;
    double wTotal;
    double dWdc;
};

TorusEnergy torusEnergy(const BalanceState& s);

struct EnergyDerivativeParts {
    double dWnod_dc;
    double dWund_dy;
    double dWund_deps;
};

EnergyDerivativeParts energyDerivativeParts(const BalanceState& s);

/// The coefficients of dW/dc/(2π) = a₁(1 − 1/(y+ε)²) + a₂ εK(1/c) + a₃ εK(y/(y+ε)).
struct EnergyDerivativeCoefficients {
    double a1;
    double a2;
    double a3;
};

EnergyDerivativeCoefficients energyDerivativeCoefficients(const BalanceState& s);

/// [εK(1/c) + εK(y/(y+ε))]/[1 − 1/(y+ε)²], which tends to −1/2 as c → 1.
double lhopitalRatio(const BalanceState& s);

struct LimitDiagnostics {
    double ratio;
    double epsK1;  // εK(1/c)
    double epsK2;  // εK(y/(y+ε))
    double Lvalue; // L(c)
};

/// Requires 1 < c < 1.01.
LimitDiagnostics limitDiagnostics(double c);

/// True if F(c, ·) has exactly one sign change on the scan and ∂_yF > 0 at the root.
bool isValidated(double c);

struct ValidatedDomain {
    double cMin;
    double cMax;                // largest grid point with every smaller one validated
    std::vector<double> grid;   // the validated grid points
};

/// Grid logarithmic in ε from 1e-6 up to cLimit − 1.
ValidatedDomain validateDomain(double cLimit = kDefaultCLimit, int steps = 48);

/// The nodoid and unduloid of a solved state, positioned as in the torus
/// profile: both maxima at g = 0, necks at g = ∓L/2, meridian counterclockwise.
struct TorusLayout {
    std::shared_ptr<const cmc::Nodoid> nodoid;
    std::shared_ptr<const cmc::Unduloid> unduloid;
    double bottomNeckG;
    double topNeckG;
    // g-shifts applied after reflecting the natural nodoid arcs
    double shiftPlusFirst;
    double shiftMinus;
    double shiftPlusLast;
};

TorusLayout torusLayout(const BalanceState& s);

/// Closed meridian: nodoid (outer, from the bottom neck up to the top neck)
/// followed by the unduloid (inner, back down).
revolution::ProfileCurve assembleTorusProfile(const BalanceState& s);

/// Throws PatchMismatchError if the two points differ by more than posTol
/// in position or tanTol in unit tangent.
void requireJoin(const revolution::ProfilePoint& end, const revolution::ProfilePoint& start,
                 const char* where, double posTol = 1e-8, double tanTol = 1e-6);

}  // namespace delaunay::assembly
