#include "delaunay/revolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"

namespace delaunay::revolution {

double ProfilePoint::speed() const { return std::hypot(df, dg); }

FundamentalForms fundamentalForms(const ProfilePoint& p) {
    const double speed = p.speed();
    if (!(speed > 0.0))
        throw DegeneratePointError("profile curve is not regular at t = " + format::number(p.t));
    if (!(p.f > 0.0))
        throw DegeneratePointError("profile point on the rotation axis at t = " +
                                   format::number(p.t));
    FundamentalForms ff{};
    ff.E = speed * speed;
    ff.F = 0.0;
    ff.G = p.f * p.f;
    ff.L = (p.df * p.ddg - p.ddf * p.dg) / speed;
    ff.M = 0.0;
    ff.N = p.f * p.dg / speed;
    ff.H = 0.5 * (ff.L / ff.E + ff.N / ff.G);
    return ff;
}

double meanCurvature(const ProfilePoint& p) { return fundamentalForms(p).H; }

std::string_view toString(SegmentTag tag) {
    switch (tag) {
        case SegmentTag::unduloid: return "unduloid";
        case SegmentTag::nodoidPlus: return "nodoidPlus";
        case SegmentTag::nodoidMinus: return "nodoidMinus";
        case SegmentTag::circularArc: return "circularArc";
        case SegmentTag::generic: return "generic";
    }
    return "generic";
}

CurveSegment transformed(CurveSegment segment, double gScale, double gShift) {
    auto inner = std::move(segment.eval);
    segment.eval = [inner = std::move(inner), gScale, gShift](double t) {
        ProfilePoint p = inner(t);
        p.g = gScale * p.g + gShift;
        p.dg *= gScale;
        p.ddg *= gScale;
        return p;
    };
    return segment;
}

CurveSegment genericSegment(std::function<std::pair<double, double>(double)> position,
                            double tBegin, double tEnd, double step) {
    CurveSegment s;
    s.tag = SegmentTag::generic;
    s.tBegin = tBegin;
    s.tEnd = tEnd;
    s.eval = [position = std::move(position), step](double t) {
        const double h = step;
        const auto [fm2, gm2] = position(t - 2 * h);
        const auto [fm1, gm1] = position(t - h);
        const auto [f0, g0] = position(t);
        const auto [fp1, gp1] = position(t + h);
        const auto [fp2, gp2] = position(t + 2 * h);
        ProfilePoint p;
        p.t = t;
        p.f = f0;
        p.g = g0;
        p.df = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
        p.dg = (gm2 - 8 * gm1 + 8 * gp1 - gp2) / (12 * h);
        p.ddf = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
        p.ddg = (-gm2 + 16 * gm1 - 30 * g0 + 16 * gp1 - gp2) / (12 * h * h);
        return p;
    };
    return s;
}

CurveSegment circularArc(double radius, double centerG, double thetaBegin, double thetaEnd) {
    const double dir = thetaEnd >= thetaBegin ? 1.0 : -1.0;
    CurveSegment s;
    s.tag = SegmentTag::circularArc;
    s.tBegin = 0.0;
    s.tEnd = std::abs(thetaEnd - thetaBegin);
    s.eval = [=](double t) {
        const double theta = thetaBegin + dir * t;
        const double c = std::cos(theta);
        const double sn = std::sin(theta);
        ProfilePoint p;
        p.t = t;
        p.f = radius * c;
        p.g = centerG + radius * sn;
        p.df = -radius * sn * dir;
        p.dg = radius * c * dir;
        p.ddf = -radius * c;
        p.ddg = -radius * sn;
        return p;
    };
    return s;
}

ProfileCurve::ProfileCurve(std::vector<CurveSegment> segments, bool closed)
    : segments_(std::move(segments)), closed_(closed) {
    if (segments_.empty()) throw DomainError("profile curve needs at least one segment");
    for (const auto& s : segments_)
        if (!(s.tEnd > s.tBegin)) throw DomainError("segment parameter range must be increasing");
    if (closed_) {
        const ProfilePoint a = startPoint();
        const ProfilePoint b = endPoint();
        const double gap = std::hypot(a.f - b.f, a.g - b.g);
        if (gap > 1e-10)
            throw PatchMismatchError("closed profile does not close: endpoint gap " +
                                     format::number(gap));
    }
}

bool ProfileCurve::axisEndpoints(double tol) const {
    return !closed_ && std::abs(startPoint().f) <= tol && std::abs(endPoint().f) <= tol;
}

std::pair<double, double> ProfileCurve::tRange() const {
    double total = 0.0;
    for (const auto& s : segments_) total += s.tEnd - s.tBegin;
    return {0.0, total};
}

ProfilePoint ProfileCurve::startPoint() const { return segments_.front().begin(); }
ProfilePoint ProfileCurve::endPoint() const { return segments_.back().end(); }

std::vector<CurveSample> ProfileCurve::sample(std::size_t perSegment, Spacing spacing) const {
    return sampleCounts(std::vector<std::size_t>(segments_.size(), perSegment), spacing);
}

std::vector<CurveSample> ProfileCurve::sampleTotal(std::size_t total, Spacing spacing) const {
    const double length = tRange().second;
    std::vector<std::size_t> counts;
    for (const auto& s : segments_) {
        const double share = (s.tEnd - s.tBegin) / length * static_cast<double>(total);
        counts.push_back(std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(share))));
    }
    return sampleCounts(counts, spacing);
}

std::vector<CurveSample> ProfileCurve::sampleCounts(const std::vector<std::size_t>& counts,
                                                    Spacing spacing) const {
    std::vector<CurveSample> out;
    double offset = 0.0;
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        const CurveSegment& s = segments_[i];
        const std::size_t n = std::max<std::size_t>(2, counts[i]);
        const bool lastSegment = i + 1 == segments_.size();
        // Interior segment ends are emitted as the next segment's start.
        const std::size_t emitted = (lastSegment && !closed_) ? n : n - 1;
        const double width = s.tEnd - s.tBegin;
        for (std::size_t j = 0; j < emitted; ++j) {
            const double u = static_cast<double>(j) / static_cast<double>(n - 1);
            const double frac =
                spacing == Spacing::cosine ? 0.5 * (1.0 - std::cos(std::numbers::pi * u)) : u;
            const double t = j + 1 == n ? s.tEnd : s.tBegin + width * frac;
            out.push_back({offset + (t - s.tBegin), s.eval(t), s.tag, j == 0 && (i > 0 || closed_)});
        }
        offset += width;
    }
    if (closed_) {
        CurveSample closing = out.front();
        closing.t = offset;
        closing.patchPoint = true;
        out.push_back(closing);
    }
    return out;
}

double density(const ProfilePoint& p, Quantity q) {
    using K = Quantity::Kind;
    constexpr double twoPi = 2.0 * std::numbers::pi;
    switch (q.kind) {
        case K::area: return twoPi * p.f * p.speed();
        case K::volume: return std::numbers::pi * p.f * p.f * p.dg;
        case K::willmore: {
            const double h = meanCurvature(p);
            return twoPi * h * h * p.f * p.speed();
        }
        case K::helfrich: {
            const double h = meanCurvature(p) - q.c0;
            return twoPi * h * h * p.f * p.speed();
        }
        case K::meanCurvature: return twoPi * meanCurvature(p) * p.f * p.speed();
    }
    return 0.0;
}

std::vector<DensitySample> sampleSurfaceQuantity(const ProfileCurve& curve, Quantity q,
                                                 std::size_t perSegment) {
    std::vector<DensitySample> out;
    for (const CurveSample& s : curve.sample(perSegment)) {
        // Axis points have f = 0; the area-type densities vanish there.
        const bool onAxis = s.point.f <= 0.0;
        if (onAxis && q.kind != Quantity::Kind::volume) {
            out.push_back({s.t, 0.0});
            continue;
        }
        out.push_back({s.t, density(s.point, q)});
    }
    return out;
}

namespace {

double orient(double ax, double ay, double bx, double by, double cx, double cy) {
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

}  // namespace

bool polylineSelfIntersects(const std::vector<CurveSample>& samples) {
    const std::size_t n = samples.size();
    if (n < 4) return false;
    const bool closedLoop = std::hypot(samples.front().point.f - samples.back().point.f,
                                       samples.front().point.g - samples.back().point.g) < 1e-12;
    const std::size_t edges = n - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        const auto& p1 = samples[i].point;
        const auto& p2 = samples[i + 1].point;
        const double minF = std::min(p1.f, p2.f), maxF = std::max(p1.f, p2.f);
        const double minG = std::min(p1.g, p2.g), maxG = std::max(p1.g, p2.g);
        for (std::size_t j = i + 2; j < edges; ++j) {
            if (closedLoop && i == 0 && j + 1 == edges) continue;
            const auto& q1 = samples[j].point;
            const auto& q2 = samples[j + 1].point;
            if (std::max(q1.f, q2.f) < minF || std::min(q1.f, q2.f) > maxF ||
                std::max(q1.g, q2.g) < minG || std::min(q1.g, q2.g) > maxG)
                continue;
            const double d1 = orient(p1.f, p1.g, p2.f, p2.g, q1.f, q1.g);
            const double d2 = orient(p1.f, p1.g, p2.f, p2.g, q2.f, q2.g);
            const double d3 = orient(q1.f, q1.g, q2.f, q2.g, p1.f, p1.g);
            const double d4 = orient(q1.f, q1.g, q2.f, q2.g, p2.f, p2.g);
            if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
                ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
                return true;
        }
    }
    return false;
}

}  // namespace delaunay::revolution
