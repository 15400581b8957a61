#include "delaunay/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <type_traits>

#include "delaunay/assembly.hpp"
#include "delaunay/cmc_profiles.hpp"
#include "delaunay/elliptic.hpp"
#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"
#include "delaunay/metrics.hpp"
#include "delaunay/quadrature.hpp"
#include "delaunay/revolution.hpp"
#include "delaunay/spheres.hpp"

namespace delaunay::verification {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEightPi = 8.0 * kPi;
constexpr double kFullBudgetSeconds = 300.0;

using Clock = std::chrono::steady_clock;

std::string sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

double relErr(double value, double reference) {
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// Observed value must not exceed the tolerance.
CheckResult bounded(int criterion, std::string name, double observed, double tolerance,
                    std::string detail) {
    return {criterion, std::move(name), observed <= tolerance, observed, tolerance,
            std::move(detail), 0.0};
}

// ---- criterion 1 ---------------------------------------------------------

double kQuadrature(double kPrime) {
    return quadrature::integrate(
               [=](double t) {
                   const double s = std::sin(t), c = std::cos(t);
                   return 1.0 / std::sqrt(c * c + kPrime * kPrime * s * s);
               },
               0.0, 0.5 * kPi, 1e-14)
        .value;
}

double eQuadrature(double kPrime) {
    return quadrature::integrate(
               [=](double t) {
                   const double s = std::sin(t), c = std::cos(t);
                   return std::sqrt(c * c + kPrime * kPrime * s * s);
               },
               0.0, 0.5 * kPi, 1e-14)
        .value;
}

std::vector<CheckResult> checkEllipticIdentities() {
    const auto start = Clock::now();
    double gaussWorst = 0.0, quadWorst = 0.0;
    for (int i = 1; i <= 99; ++i) {
        const auto m = elliptic::EllipticModulus::fromModulus(i / 100.0);
        const auto g = elliptic::gaussTransform(m);
        gaussWorst = std::max({gaussWorst, std::abs(g.kLhs - g.kRhs), std::abs(g.eLhs - g.eRhs)});
        const auto [bigK, bigE] = elliptic::ellipticKE(m);
        quadWorst = std::max({quadWorst, relErr(bigK, kQuadrature(m.kPrime)),
                              relErr(bigE, eQuadrature(m.kPrime))});
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::vector<CheckResult> out;
    out.push_back(bounded(1, "Gauss transformation residuals", gaussWorst, 1e-11,
                          "max residual " + sci(gaussWorst) + " over k = 0.01..0.99"));
    out.push_back(bounded(1, "K and E against quadrature", quadWorst, 1e-11,
                          "max rel. error " + sci(quadWorst)));
    out.push_back(bounded(1, "elliptic checks runtime", seconds, 1.0,
                          sci(seconds) + " s (limit 1 s)"));
    return out;
}

// ---- criterion 2 ---------------------------------------------------------

CheckResult checkKAsymptotics() {
    std::vector<double> gaps;
    for (double kp : {1e-2, 1e-3, 1e-4}) {
        const auto m = elliptic::EllipticModulus::withComplement(std::sqrt((1.0 - kp) * (1.0 + kp)), kp);
        gaps.push_back(std::abs(elliptic::ellipticK(m) - std::log(4.0 / kp)));
    }
    const bool decreasing = gaps[1] < gaps[0] && gaps[2] < gaps[1];
    CheckResult r = bounded(2, "K(k) ~ log(4/k')", gaps[1], 5e-3,
                            "|K - log(4/k')| = " + sci(gaps[0]) + ", " + sci(gaps[1]) + ", " +
                                sci(gaps[2]) + " at k' = 1e-2, 1e-3, 1e-4");
    r.passed = r.passed && decreasing;
    if (!decreasing) r.detail += " (not decreasing)";
    return r;
}

// ---- criterion 3 ---------------------------------------------------------

CheckResult checkCmcConstancy() {
    const double as[] = {0.5, 1.0, 1.7, 2.5, 4.0};
    const double fractions[] = {0.1, 0.3, 0.5, 0.7, 0.95};
    constexpr int kPoints = 1024;
    double worst = 0.0;
    for (double a : as)
        for (double fr : fractions) {
            const cmc::Unduloid u(cmc::UnduloidParams::fromAxes(a, fr * a));
            for (int i = 0; i < kPoints; ++i) {
                const double t = 2.0 * kPi * (i + 0.5) / kPoints;
                worst = std::max(worst, std::abs(revolution::meanCurvature(u.point(t)) - 0.5 / a));
            }
            const cmc::Nodoid n(cmc::NodoidParams::fromAxes(a, fr * 2.0 * a));
            for (int i = 0; i < kPoints; ++i) {
                const auto branch = i % 2 == 0 ? cmc::NodoidBranch::plus : cmc::NodoidBranch::minus;
                const double t = -0.5 * kPi + kPi * (i / 2 + 0.5) / (kPoints / 2);
                worst = std::max(worst,
                                 std::abs(revolution::meanCurvature(n.point(branch, t)) + 0.5 / a));
            }
        }
    return bounded(3, "constant mean curvature of unduloids and nodoids", worst, 1e-9,
                   "max |H -+ 1/(2a)| = " + sci(worst) + " on a 5x5 (a, b) grid");
}

// ---- criterion 4 ---------------------------------------------------------

struct OracleValues {
    double area;
    double length;
};

OracleValues unduloidOracle(const cmc::UnduloidParams& p) {
    const cmc::Unduloid u(p);
    const auto area = quadrature::integrate(
        [&](double t) { return revolution::density(u.point(t), revolution::Quantity::area()); },
        0.0, 2.0 * kPi, 1e-12);
    const auto length =
        quadrature::integrate([&](double t) { return u.point(t).dg; }, 0.0, 2.0 * kPi, 1e-12);
    return {area.value, length.value};
}

OracleValues nodoidOracle(const cmc::NodoidParams& p) {
    const cmc::Nodoid n(p);
    using B = cmc::NodoidBranch;
    struct Piece {
        B branch;
        double t0, t1;
    };
    const Piece pieces[] = {{B::plus, 0.0, 0.5 * kPi}, {B::minus, -0.5 * kPi, 0.5 * kPi},
                            {B::plus, -0.5 * kPi, 0.0}};
    double area = 0.0, length = 0.0;
    for (const Piece& pc : pieces) {
        area += quadrature::integrate(
                    [&](double t) {
                        return revolution::density(n.point(pc.branch, t),
                                                   revolution::Quantity::area());
                    },
                    pc.t0, pc.t1, 1e-12)
                    .value;
        length += quadrature::integrate([&](double t) { return n.point(pc.branch, t).dg; },
                                        pc.t0, pc.t1, 1e-12)
                      .value;
    }
    return {area, std::abs(length)};
}

CheckResult checkClosedForms(Level level) {
    const int n = level == Level::full ? 10 : 4;
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double a = 0.5 + 4.5 * i / (n - 1);
            const double fr = 0.05 + 0.9 * j / (n - 1);
            const auto up = cmc::UnduloidParams::fromAxes(a, fr * a);
            const auto uo = unduloidOracle(up);
            worst = std::max({worst, relErr(cmc::unduloidArea(up), uo.area),
                              relErr(cmc::unduloidLength(up), uo.length)});
            const auto np = cmc::NodoidParams::fromAxes(a, 0.2 + 4.8 * j / (n - 1));
            const auto no = nodoidOracle(np);
            worst = std::max({worst, relErr(cmc::nodoidArea(np), no.area),
                              relErr(cmc::nodoidLength(np), no.length)});
        }
    return bounded(4, "closed-form areas and lengths against quadrature", worst, 1e-8,
                   "max rel. error " + sci(worst) + " on a " + std::to_string(n) + "x" +
                       std::to_string(n) + " (a, b) grid");
}

// ---- criterion 5 ---------------------------------------------------------

// Sign change of F(c, ·) nearest y = 1 on a fine uniform grid, then plain bisection.
double bisectionRoot(double c) {
    auto F = [c](double y) { return assembly::balanceFunction(c, y).F; };
    double lo = 0.0, hi = 0.0, best = 1e300;
    double prevY = 1e-4, prevF = F(prevY);
    for (int i = 1; i <= 400; ++i) {
        const double y = 1e-4 + (2.0 - 1e-4) * i / 400.0;
        const double f = F(y);
        if ((prevF < 0.0) != (f < 0.0) && std::abs(0.5 * (y + prevY) - 1.0) < best) {
            best = std::abs(0.5 * (y + prevY) - 1.0);
            lo = prevY;
            hi = y;
        }
        prevY = y;
        prevF = f;
    }
    if (best == 1e300) throw NoBracketError("bisection oracle found no sign change");
    const bool increasing = F(lo) < 0.0;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((F(mid) < 0.0) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<CheckResult> checkBalanceSolver() {
    double residual = 0.0, rootGap = 0.0;
    std::string used;
    for (double c : {1.0005, 1.001, 1.005, 1.01, 1.05, 1.1}) {
        if (!assembly::isValidated(c)) continue;
        const auto s = assembly::solveBalance(c);
        residual = std::max(residual, std::abs(assembly::balanceFunction(c, s.y).F));
        rootGap = std::max(rootGap, std::abs(s.y - bisectionRoot(c)));
        used += (used.empty() ? "" : ", ") + format::number(c);
    }
    const double yLimit = assembly::solveBalance(1.0 + 1e-5).y;
    std::vector<CheckResult> out;
    out.push_back(bounded(5, "balance residual", residual, 1e-12,
                          "max |F(c, y)| = " + sci(residual) + " at c in {" + used + "}"));
    out.push_back(bounded(5, "Newton root against bisection", rootGap, 1e-10,
                          "max |y_newton - y_bisection| = " + sci(rootGap)));
    out.push_back(bounded(5, "y near 1 as c -> 1", std::abs(yLimit - 1.0), 0.01,
                          "y(1 + 1e-5) = " + sci(yLimit)));
    return out;
}

// ---- criterion 6 ---------------------------------------------------------

CheckResult checkDerivatives() {
    constexpr double h = 1e-5;
    auto central = [](const std::function<double(double)>& f, double x) {
        return (f(x + h) - f(x - h)) / (2.0 * h);
    };
    double worst = 0.0;
    std::string worstName;
    auto record = [&](const char* name, double analytic, double numeric) {
        const double e = relErr(analytic, numeric);
        if (e > worst) {
            worst = e;
            worstName = name;
        }
    };
    for (double c : {1.01, 1.05}) {
        const auto s = assembly::solveBalance(c);
        const auto r = assembly::balanceFunction(c, s.y);
        record("dF/dy", r.dFdy,
               central([&](double y) { return assembly::balanceFunction(c, y).F; }, s.y));
        record("dF/dc", r.dFdc,
               central([&](double cc) { return assembly::balanceFunction(cc, s.y).F; }, c));
        record("y'", assembly::solutionDerivative(s),
               central([](double cc) { return assembly::solveBalance(cc).y; }, c));
        const auto parts = assembly::energyDerivativeParts(s);
        record("dWnod/dc", parts.dWnod_dc, central(assembly::nodoidEnergy, c));
        record("dWund/dy", parts.dWund_dy,
               central([&](double y) { return assembly::unduloidEnergy(y, s.eps); }, s.y));
        record("dWund/deps", parts.dWund_deps,
               central([&](double e) { return assembly::unduloidEnergy(s.y, e); }, s.eps));
        record("dW/dc", assembly::torusEnergy(s).dWdc,
               central([](double cc) {
                   return assembly::torusEnergy(assembly::solveBalance(cc)).wTotal;
               }, c));
    }
    return bounded(6, "analytic derivatives against central differences", worst, 1e-4,
                   "max rel. error " + sci(worst) + " (" + worstName + ") at c = 1.01, 1.05");
}

// ---- criterion 7 ---------------------------------------------------------

std::vector<CheckResult> checkEightPi() {
    const auto domain = assembly::validateDomain();
    double minMargin = 1e300, maxSlope = -1e300;
    for (double c : domain.grid) {
        const auto s = assembly::solveBalance(c);
        const auto e = assembly::torusEnergy(s);
        minMargin = std::min(minMargin, kEightPi - e.wTotal);
        if (c <= 1.01) maxSlope = std::max(maxSlope, e.dWdc);
    }
    const double w = assembly::torusEnergy(assembly::solveBalance(1.0 + 1e-4)).wTotal;
    std::vector<CheckResult> out;
    CheckResult below{7, "W < 8 pi on the validated grid", minMargin > 0.0, minMargin, 0.0,
                      "smallest margin 8 pi - W = " + sci(minMargin) + " over " +
                          std::to_string(domain.grid.size()) + " points up to c = " +
                          sci(domain.cMax),
                      0.0};
    out.push_back(below);
    out.push_back({7, "W(1 + 1e-4) in (8 pi - 0.05, 8 pi)", w < kEightPi && w > kEightPi - 0.05,
                   kEightPi - w, 0.05, "8 pi - W = " + sci(kEightPi - w), 0.0});
    out.push_back({7, "dW/dc < 0 for c <= 1.01", maxSlope < 0.0, maxSlope, 0.0,
                   "largest dW/dc = " + sci(maxSlope), 0.0});
    return out;
}

// ---- criterion 8 ---------------------------------------------------------

std::vector<CheckResult> checkLhopital() {
    const double r4 = assembly::limitDiagnostics(1.0 + 1e-4).ratio;
    const double r6 = assembly::limitDiagnostics(1.0 + 1e-6).ratio;
    return {bounded(8, "L'Hopital ratio at c = 1 + 1e-4", std::abs(r4 + 0.5), 0.05,
                    "ratio = " + sci(r4)),
            bounded(8, "L'Hopital ratio at c = 1 + 1e-6", std::abs(r6 + 0.5), 0.01,
                    "ratio = " + sci(r6))};
}

// ---- criterion 9 ---------------------------------------------------------

CheckResult checkSphereIdentity() {
    double worst = 0.0;
    for (double c : {1.01, 1.05, 1.1}) {
        if (!assembly::isValidated(c)) continue;
        const auto spec = spheres::DelaunaySphereSpec::fromBalance(assembly::solveBalance(c));
        const auto m = metrics::computeMetrics(spheres::assembleSphereProfile(spec), 0.0, 1e-11);
        worst = std::max(worst, std::abs(m.willmore - spheres::sphereEnergy(spec)));
    }
    return bounded(9, "sphere energy 4 pi + W(T)/2 against quadrature", worst, 1e-6 * kEightPi,
                   "max |W_quad - (4 pi + W/2)| = " + sci(worst));
}

// ---- criterion 10 --------------------------------------------------------

std::vector<CheckResult> checkVarifoldLimit() {
    const auto s = assembly::solveBalance(1.001);
    const auto m = metrics::computeMetrics(assembly::assembleTorusProfile(s), 0.0, 1e-10);
    const double areaErr = relErr(m.area, 32.0 * kPi);
    const auto spec = spheres::DelaunaySphereSpec::fromBalance(s);
    const double radiusErr = std::max(relErr(spec.rInner, 2.0), relErr(spec.rOuter, 2.0));

    std::vector<double> isos;
    for (double c : {1.1, 1.05, 1.01, 1.005, 1.001})
        isos.push_back(metrics::computeMetrics(
                           assembly::assembleTorusProfile(assembly::solveBalance(c)), 0.0, 1e-10)
                           .isoRatio);
    bool increasing = true;
    std::string trail;
    for (std::size_t i = 0; i < isos.size(); ++i) {
        if (i > 0 && !(isos[i] > isos[i - 1])) increasing = false;
        trail += (i ? ", " : "") + sci(isos[i]);
    }
    return {bounded(10, "torus area near 32 pi at c = 1.001", areaErr, 0.02,
                    "area = " + sci(m.area) + ", rel. gap " + sci(areaErr)),
            bounded(10, "sphere cap radii near 2 at c = 1.001", radiusErr, 0.02,
                    "radii " + sci(spec.rInner) + ", " + sci(spec.rOuter)),
            {10, "iso increases as c decreases", increasing, isos.back(), 0.0,
             "iso at c = 1.1..1.001: " + trail, 0.0}};
}

// ---- criterion 11 --------------------------------------------------------

std::vector<CheckResult> checkHelfrich() {
    const auto curve = assembly::assembleTorusProfile(assembly::solveBalance(1.05));
    const auto m0 = metrics::computeMetrics(curve, 0.0, 1e-10);
    const double same = std::abs(m0.helfrich - m0.willmore);
    double worst = 0.0;
    for (double c0 : {-0.1, 0.1}) {
        const double direct = metrics::computeMetrics(curve, c0, 1e-11).helfrich;
        const auto ex = metrics::helfrichExpansion(curve, c0, 1e-11);
        worst = std::max(worst, relErr(ex.sum(), direct));
    }
    return {bounded(11, "Helfrich with c0 = 0 equals Willmore", same, 1e-12,
                    "|H_0 - W| = " + sci(same)),
            bounded(11, "Helfrich expansion identity", worst, 1e-8,
                    "max rel. error " + sci(worst) + " at c0 = -0.1, 0.1 (c = 1.05)")};
}

template <class F>
void timed(std::vector<CheckResult>& out, int criterion, const char* name, F&& run) {
    const auto start = Clock::now();
    std::vector<CheckResult> produced;
    try {
        if constexpr (std::is_same_v<decltype(run()), CheckResult>)
            produced.push_back(run());
        else
            produced = run();
    } catch (const std::exception& e) {
        produced.push_back({criterion, name, false, std::nan(""), std::nan(""),
                            std::string("threw: ") + e.what(), 0.0});
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (auto& r : produced) {
        r.seconds = seconds / static_cast<double>(produced.size());
        out.push_back(std::move(r));
    }
}

}  // namespace

int Report::failures() const {
    return static_cast<int>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& r) { return !r.passed; }));
}

Report runAcceptance(Level level) {
    const auto start = Clock::now();
    Report report{level, {}, 0.0};
    auto& c = report.checks;
    timed(c, 1, "elliptic identities", checkEllipticIdentities);
    timed(c, 2, "K asymptotics", checkKAsymptotics);
    timed(c, 3, "CMC constancy", checkCmcConstancy);
    timed(c, 4, "closed forms", [level] { return checkClosedForms(level); });
    timed(c, 5, "balance solver", checkBalanceSolver);
    timed(c, 6, "analytic derivatives", checkDerivatives);
    timed(c, 7, "8 pi bound", checkEightPi);
    timed(c, 8, "L'Hopital diagnostic", checkLhopital);
    timed(c, 9, "sphere identity", checkSphereIdentity);
    timed(c, 10, "varifold limit", checkVarifoldLimit);
    timed(c, 11, "Helfrich consistency", checkHelfrich);
    report.seconds = std::chrono::duration<double>(Clock::now() - start).count();

    if (level == Level::full) {
        const int failures = report.failures();
        const bool ok = failures == 0 && report.seconds < kFullBudgetSeconds;
        c.push_back({12, "full run: zero failures within 5 minutes", ok,
                     static_cast<double>(failures), 0.0,
                     std::to_string(failures) + " failing checks, " + sci(report.seconds) + " s",
                     0.0});
    }
    return report;
}

std::string formatLine(const CheckResult& r) {
    return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.criterion) + "] " +
           r.name + ": " + r.detail;
}

nlohmann::ordered_json toJson(const Report& r) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json j{{"criterion", c.criterion}, {"name", c.name},
                                 {"passed", c.passed}};
        j["observed"] = std::isfinite(c.observed) ? nlohmann::ordered_json(c.observed) : nullptr;
        j["tolerance"] = std::isfinite(c.tolerance) ? nlohmann::ordered_json(c.tolerance) : nullptr;
        j["detail"] = c.detail;
        j["seconds"] = c.seconds;
        checks.push_back(std::move(j));
    }
    return {{"level", r.level == Level::full ? "full" : "fast"},
            {"seconds", r.seconds},
            {"failures", r.failures()},
            {"checks", std::move(checks)}};
}

}  // namespace delaunay::verification
