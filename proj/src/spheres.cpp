#include "delaunay/spheres.hpp"

#include <cmath>
#include <numbers>

#include "delaunay/elliptic.hpp"

namespace delaunay::spheres {
namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

std::vector<revolution::CurveSegment> halfTorusSegments(const assembly::TorusLayout& t) {
    using cmc::NodoidBranch;
    using revolution::transformed;
    std::vector<revolution::CurveSegment> segments;
    segments.push_back(transformed(cmc::nodoidSegment(t.nodoid, NodoidBranch::minus, 0.0, kHalfPi),
                                   -1.0, t.shiftMinus));
    segments.push_back(transformed(
        cmc::nodoidSegment(t.nodoid, NodoidBranch::plus, -kHalfPi, 0.0), -1.0, t.shiftPlusLast));
    segments.push_back(transformed(cmc::unduloidSegment(t.unduloid, 0.0, std::numbers::pi), -1.0,
                                   t.topNeckG));
    assembly::requireJoin(segments[1].end(), segments[2].begin(), "sphere neck");
    return segments;
}

}  // namespace

DelaunaySphereSpec DelaunaySphereSpec::fromBalance(const assembly::BalanceState& s) {
    const double k = s.y / s.a;
    const double kPrime = std::sqrt(s.eps * (2.0 * s.y + s.eps)) / s.a;
    const double e = elliptic::ellipticE(elliptic::EllipticModulus::withComplement(k, kPrime));
    return {s, s.a + s.y, s.c + 1.0, 2.0 * s.a * e};
}

double capCenterG(const DelaunaySphereSpec& spec) {
    return assembly::torusLayout(spec.balance).topNeckG - spec.capCenterHeight;
}

revolution::ProfileCurve halfTorusProfile(const DelaunaySphereSpec& spec) {
    return revolution::ProfileCurve(halfTorusSegments(assembly::torusLayout(spec.balance)), false);
}

revolution::ProfileCurve assembleSphereProfile(const DelaunaySphereSpec& spec) {
    const assembly::TorusLayout layout = assembly::torusLayout(spec.balance);
    const double center = layout.topNeckG - spec.capCenterHeight;
    auto half = halfTorusSegments(layout);

    std::vector<revolution::CurveSegment> segments;
    segments.push_back(revolution::circularArc(spec.rOuter, center, -kHalfPi, 0.0));
    assembly::requireJoin(segments.back().end(), half.front().begin(), "outer cap");
    for (auto& s : half) segments.push_back(std::move(s));
    segments.push_back(revolution::circularArc(spec.rInner, center, 0.0, -kHalfPi));
    assembly::requireJoin(segments[segments.size() - 2].end(), segments.back().begin(),
                          "inner cap");
    return revolution::ProfileCurve(std::move(segments), false);
}

double sphereEnergy(const DelaunaySphereSpec& spec) {
    return 2.0 * kCapWillmore + 0.5 * assembly::torusEnergy(spec.balance).wTotal;
}

}  // namespace delaunay::spheres
