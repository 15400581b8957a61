#include "delaunay/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "delaunay/elliptic.hpp"
#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"

namespace delaunay::assembly {
namespace {

using elliptic::EllipticModulus;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr int kMaxNewtonIterations = 200;

// k = 1/c with k' = √(ε(c + 1))/c.
EllipticModulus inverseModulus(double c) {
    const double eps = c - 1.0;
    return EllipticModulus::withComplement(1.0 / c, std::sqrt(eps * (c + 1.0)) / c);
}

// k = y/(y + ε) with k' = √(ε(2y + ε))/(y + ε).
EllipticModulus ratioModulus(double y, double eps) {
    const double a = y + eps;
    return EllipticModulus::withComplement(y / a, std::sqrt(eps * (2.0 * y + eps)) / a);
}

void requireSolvable(double c, double y) {
    if (!(c > 1.0)) throw DomainError("balance function requires c > 1, got " + format::number(c));
    if (!(y > 0.0)) throw DomainError("balance function requires y > 0, got " + format::number(y));
}

}  // namespace

void requireAdmissible(double c) {
    const double eps = c - 1.0;
    if (!(eps >= kMinEps * (1.0 - 1e-9)))
        throw RangeError("c = " + format::number(c) + " is below the admissible minimum 1 + 1e-6");
}

double reducedNodoidLength(double c) {
    const double eps = c - 1.0;
    const auto [k1, e1] = elliptic::ellipticKE(inverseModulus(c));
    return c * (e1 - eps * (c + 1.0) / (c * c) * k1);
}

BalanceResidual balanceFunction(double c, double y) {
    requireSolvable(c, y);
    const double eps = c - 1.0;
    const auto [kc, ec] = elliptic::ellipticKE(inverseModulus(c));
    const auto [ky, ey] = elliptic::ellipticKE(ratioModulus(y, eps));
    const double lc = c * (ec - eps * (c + 1.0) / (c * c) * kc);
    const double r = eps / y;
    return {(y + eps) * ey - lc, ky + kc - ec, (1.0 + r) * ey - r * ky};
}

BalanceScan scanBalance(double c, int samples) {
    requireSolvable(c, 1.0);
    BalanceScan scan;
    const double logLo = std::log(kBracketLow);
    const double logHi = std::log(kBracketHigh);
    double prevY = kBracketLow;
    double prevF = balanceFunction(c, prevY).F;
    double bestDistance = std::numeric_limits<double>::infinity();
    for (int i = 1; i < samples; ++i) {
        const double y = i + 1 == samples
                             ? kBracketHigh
                             : std::exp(logLo + (logHi - logLo) * i / (samples - 1));
        const double f = balanceFunction(c, y).F;
        if ((prevF < 0.0) != (f < 0.0)) {
            ++scan.signChanges;
            const double distance = std::abs(std::log(std::sqrt(prevY * y)));
            if (distance < bestDistance) {
                bestDistance = distance;
                scan.bracketLow = prevY;
                scan.bracketHigh = y;
            }
        }
        prevY = y;
        prevF = f;
    }
    return scan;
}

BalanceState solveBalance(double c) {
    requireAdmissible(c);
    const BalanceScan scan = scanBalance(c);
    if (scan.signChanges == 0)
        throw NoBracketError("F(c, y) has no sign change for y in [1e-6, 10] at c = " +
                             format::number(c));

    double lo = scan.bracketLow;
    double hi = scan.bracketHigh;
    const double fLo = balanceFunction(c, lo).F;
    const bool increasing = fLo < 0.0;
    double y = (lo < 1.0 && 1.0 < hi) ? 1.0 : 0.5 * (lo + hi);

    BalanceState s;
    s.c = c;
    s.eps = c - 1.0;
    s.signChanges = scan.signChanges;
    for (int it = 1;; ++it) {
        if (it > kMaxNewtonIterations)
            throw ConvergenceError("balance solver did not converge at c = " + format::number(c));
        const BalanceResidual r = balanceFunction(c, y);
        if ((r.F < 0.0) == increasing)
            lo = y;
        else
            hi = y;
        double next = y - r.F / r.dFdy;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = next - y;
        if (std::abs(r.F) <= kSolverTolerance && std::abs(step) <= 1e-12 * std::max(1.0, y)) {
            s.y = y;
            s.FResidual = r.F;
            s.iterations = it;
            break;
        }
        y = next;
    }

    s.a = s.y + s.eps;
    s.L = 4.0 * s.a * elliptic::ellipticE(ratioModulus(s.y, s.eps));
    s.nodoidPeriod = 4.0 * reducedNodoidLength(c);
    return s;
}

double solutionDerivative(const BalanceState& s) {
    const auto [kc, ec] = elliptic::ellipticKE(inverseModulus(s.c));
    const auto [ky, ey] = elliptic::ellipticKE(ratioModulus(s.y, s.eps));
    const double denominator = s.a * ey - s.eps * ky;
    if (!(std::abs(denominator) > 0.0))
        throw ConvergenceError("y'(c) denominator vanishes at c = " + format::number(s.c));
    return (ec - kc - ky) / denominator * s.y;
}

double nodoidEnergy(double c) {
    const auto m = EllipticModulus::withComplement(2.0 * std::sqrt(c) / (1.0 + c),
                                                   (c - 1.0) / (c + 1.0));
    return kTwoPi * (1.0 + c) * elliptic::ellipticE(m);
}

double unduloidEnergy(double y, double eps) {
    const double s = 2.0 * y + eps;
    const auto m = EllipticModulus::withComplement(2.0 * std::sqrt(y * (y + eps)) / s, eps / s);
    return kTwoPi * (1.0 + y / (y + eps)) * elliptic::ellipticE(m);
}

EnergyDerivativeCoefficients energyDerivativeCoefficients(const BalanceState& s) {
    const double z = solutionDerivative(s) / s.y;
    const double a2 = s.a * s.a;
    return {elliptic::ellipticE(inverseModulus(s.c)), 1.0 / (s.c * a2),
            s.y * (1.0 - s.eps * z) / (a2 * s.a)};
}

TorusEnergy torusEnergy(const BalanceState& s) {
    TorusEnergy e{};
    e.wNod = nodoidEnergy(s.c);
    e.wUnd = unduloidEnergy(s.y, s.eps);
    e.wTotal = e.wNod + e.wUnd;

    const auto [a1, a2, a3] = energyDerivativeCoefficients(s);
    const double kc = elliptic::ellipticK(inverseModulus(s.c));
    const double ky = elliptic::ellipticK(ratioModulus(s.y, s.eps));
    const double oneMinus = (s.a - 1.0) * (s.a + 1.0) / (s.a * s.a);
    e.dWdc = kTwoPi * (a1 * oneMinus + a2 * s.eps * kc + a3 * s.eps * ky);
    return e;
}

EnergyDerivativeParts energyDerivativeParts(const BalanceState& s) {
    const auto [kc, ec] = elliptic::ellipticKE(inverseModulus(s.c));
    const auto [ky, ey] = elliptic::ellipticKE(ratioModulus(s.y, s.eps));
    const double k = s.y / s.a;
    const double a2 = s.a * s.a;
    EnergyDerivativeParts p{};
    p.dWnod_dc = kTwoPi * ec;
    p.dWund_dy = kTwoPi * s.eps / (s.y * a2) * (s.a * ey - s.eps * (1.0 + k) * ky);
    // (y + ε)E(y/(y + ε)) replaced by c[E(1/c) − (1 − 1/c²)K(1/c)] via the balance.
    p.dWund_deps = -kTwoPi / a2 *
                   (s.c * ec - s.eps * (s.c + 1.0) / s.c * kc - s.eps * (1.0 + k) * ky);
    return p;
}

double lhopitalRatio(const BalanceState& s) {
    const double kc = elliptic::ellipticK(inverseModulus(s.c));
    const double ky = elliptic::ellipticK(ratioModulus(s.y, s.eps));
    const double denominator = (s.a - 1.0) * (s.a + 1.0) / (s.a * s.a);
    return (s.eps * kc + s.eps * ky) / denominator;
}

LimitDiagnostics limitDiagnostics(double c) {
    if (!(c < 1.01)) throw RangeError("limit diagnostics require 1 < c < 1.01");
    const BalanceState s = solveBalance(c);
    return {lhopitalRatio(s), s.eps * elliptic::ellipticK(inverseModulus(c)),
            s.eps * elliptic::ellipticK(ratioModulus(s.y, s.eps)), reducedNodoidLength(c)};
}

bool isValidated(double c) {
    const BalanceScan scan = scanBalance(c);
    if (scan.signChanges != 1) return false;
    try {
        const BalanceState s = solveBalance(c);
        return balanceFunction(c, s.y).dFdy > 0.0;
    } catch (const Error&) {
        return false;
    }
}

ValidatedDomain validateDomain(double cLimit, int steps) {
    if (steps < 2) throw DomainError("domain validation needs at least two grid points");
    requireAdmissible(cLimit);
    ValidatedDomain d{1.0 + kMinEps, 1.0 + kMinEps, {}};
    const double logLo = std::log(kMinEps);
    const double logHi = std::log(cLimit - 1.0);
    for (int i = 0; i < steps; ++i) {
        const double c =
            i + 1 == steps ? cLimit : 1.0 + std::exp(logLo + (logHi - logLo) * i / (steps - 1));
        if (!isValidated(c)) break;
        d.cMax = c;
        d.grid.push_back(c);
    }
    return d;
}

void requireJoin(const revolution::ProfilePoint& end, const revolution::ProfilePoint& start,
                 const char* where, double posTol, double tanTol) {
    const double gap = std::hypot(end.f - start.f, end.g - start.g);
    const double se = end.speed();
    const double ss = start.speed();
    const double tangentGap =
        std::hypot(end.df / se - start.df / ss, end.dg / se - start.dg / ss);
    if (gap > posTol || tangentGap > tanTol)
        throw PatchMismatchError(std::string(where) + ": position gap " + format::number(gap) +
                                 ", tangent gap " + format::number(tangentGap));
}

TorusLayout torusLayout(const BalanceState& s) {
    using cmc::NodoidBranch;
    TorusLayout t;
    auto nodoid = std::make_shared<const cmc::Nodoid>(cmc::NodoidParams::fromFocal(1.0, s.c));
    auto unduloid =
        std::make_shared<const cmc::Unduloid>(cmc::UnduloidParams::fromFocal(s.a, s.y));
    // Offsets of the natural patched nodoid: plus [0, π/2], minus [−π/2, π/2], plus [−π/2, 0].
    const double offMinus =
        nodoid->g(NodoidBranch::plus, kHalfPi) - nodoid->g(NodoidBranch::minus, -kHalfPi);
    const double offPlusLast = nodoid->g(NodoidBranch::minus, kHalfPi) + offMinus -
                               nodoid->g(NodoidBranch::plus, -kHalfPi);
    // Reflect g so the nodoid runs upward, with its maximum (minus branch, t = 0) at g = 0.
    const double anchor = offMinus;
    t.shiftPlusFirst = anchor;
    t.shiftMinus = anchor - offMinus;
    t.shiftPlusLast = anchor - offPlusLast;
    t.bottomNeckG = -nodoid->g(NodoidBranch::plus, 0.0) + t.shiftPlusFirst;
    t.topNeckG = -nodoid->g(NodoidBranch::plus, 0.0) + t.shiftPlusLast;
    t.nodoid = std::move(nodoid);
    t.unduloid = std::move(unduloid);
    return t;
}

revolution::ProfileCurve assembleTorusProfile(const BalanceState& s) {
    using cmc::NodoidBranch;
    using revolution::transformed;
    const TorusLayout t = torusLayout(s);
    std::vector<revolution::CurveSegment> segments;
    segments.push_back(transformed(cmc::nodoidSegment(t.nodoid, NodoidBranch::plus, 0.0, kHalfPi),
                                   -1.0, t.shiftPlusFirst));
    segments.push_back(transformed(
        cmc::nodoidSegment(t.nodoid, NodoidBranch::minus, -kHalfPi, kHalfPi), -1.0, t.shiftMinus));
    segments.push_back(transformed(
        cmc::nodoidSegment(t.nodoid, NodoidBranch::plus, -kHalfPi, 0.0), -1.0, t.shiftPlusLast));
    segments.push_back(transformed(cmc::unduloidSegment(t.unduloid, 0.0, 2.0 * std::numbers::pi),
                                   -1.0, t.topNeckG));

    requireJoin(segments[2].end(), segments[3].begin(), "torus top neck");
    requireJoin(segments[3].end(), segments[0].begin(), "torus bottom neck");
    return revolution::ProfileCurve(std::move(segments), true);
}

}  // namespace delaunay::assembly
