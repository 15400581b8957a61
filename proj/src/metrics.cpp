#include "delaunay/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"

namespace delaunay::metrics {
namespace {

using revolution::ProfileCurve;
using revolution::ProfilePoint;

void requireTolerance(double relTol) {
    if (!(relTol >= 1e-12 && relTol <= 1e-4))
        throw DomainError("relative tolerance must lie in [1e-12, 1e-4], got " +
                          format::number(relTol));
}

template <class Density>
quadrature::Estimate integrateSegments(const ProfileCurve& curve, Density density, double relTol) {
    std::vector<double> values;
    std::vector<double> errors;
    std::vector<double> l1;
    for (const auto& seg : curve.segments()) {
        const double lo = std::min(seg.tBegin, seg.tEnd);
        const double hi = std::max(seg.tBegin, seg.tEnd);
        const auto est = quadrature::integrateRelative(
            [&](double t) { return density(seg.eval(t)); }, lo, hi, relTol);
        const double sign = seg.tEnd >= seg.tBegin ? 1.0 : -1.0;
        values.push_back(sign * est.value);
        errors.push_back(est.error);
        l1.push_back(est.l1);
    }
    return {quadrature::pairwiseSum(values), quadrature::pairwiseSum(errors),
            quadrature::pairwiseSum(l1)};
}

}  // namespace

quadrature::Estimate integrateQuantity(const ProfileCurve& curve, revolution::Quantity q,
                                       double relTol) {
    return integrateSegments(
        curve, [q](const ProfilePoint& p) { return revolution::density(p, q); }, relTol);
}

SurfaceMetrics computeMetrics(const ProfileCurve& curve, double c0, double relTol) {
    requireTolerance(relTol);
    if (!curve.closed() && !curve.axisEndpoints())
        throw NotClosedError("volume needs a closed meridian or one with both ends on the axis");
    using revolution::Quantity;
    const auto area = integrateQuantity(curve, Quantity::area(), relTol);
    const auto volume = integrateQuantity(curve, Quantity::volume(), relTol);
    const auto willmore = integrateQuantity(curve, Quantity::willmore(), relTol);
    const auto helfrich = integrateQuantity(curve, Quantity::helfrich(c0), relTol);
    SurfaceMetrics m{};
    m.area = area.value;
    m.volume = volume.value;
    m.willmore = willmore.value;
    m.helfrich = helfrich.value;
    m.isoRatio = area.value / std::cbrt(volume.value * volume.value);
    m.quadratureError = {area.error, volume.error, willmore.error, helfrich.error};
    return m;
}

HelfrichExpansion helfrichExpansion(const ProfileCurve& curve, double c0, double relTol) {
    requireTolerance(relTol);
    using revolution::Quantity;
    HelfrichExpansion h{};
    h.willmore = integrateQuantity(curve, Quantity::willmore(), relTol).value;
    if (c0 != 0.0) {
        h.crossTerm =
            -2.0 * c0 * integrateQuantity(curve, Quantity::meanCurvatureIntegral(), relTol).value;
        h.areaTerm = c0 * c0 * integrateQuantity(curve, Quantity::area(), relTol).value;
    }
    return h;
}

quadrature::Estimate ambientVolume(const ProfileCurve& curve, double relTol) {
    requireTolerance(relTol);
    if (!curve.closed() && !curve.axisEndpoints())
        throw NotClosedError("volume needs a closed meridian or one with both ends on the axis");
    return integrateSegments(
        curve,
        [](const ProfilePoint& p) {
            return 2.0 * std::numbers::pi / 3.0 * p.f * (p.f * p.dg - p.g * p.df);
        },
        relTol);
}

}  // namespace delaunay::metrics
