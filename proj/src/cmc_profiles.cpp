#include "delaunay/cmc_profiles.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "delaunay/elliptic.hpp"
#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"

namespace delaunay::cmc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

double branchSign(NodoidBranch b) { return b == NodoidBranch::plus ? 1.0 : -1.0; }

revolution::SegmentTag branchTag(NodoidBranch b) {
    return b == NodoidBranch::plus ? revolution::SegmentTag::nodoidPlus
                                   : revolution::SegmentTag::nodoidMinus;
}

// Moduli of the shared area formula, k = 2√(ac)/(a + c), k' = |a − c|/(a + c).
elliptic::EllipticModulus areaModulus(double a, double c) {
    const double s = a + c;
    return elliptic::EllipticModulus::withComplement(2.0 * std::sqrt(a * c) / s,
                                                     std::abs(a - c) / s);
}

// a − c cos t and a + c cos t for a ≥ c ≥ 0, without cancellation when a ≈ c.
struct CosFactors {
    double minus;
    double plus;
};

CosFactors cosFactors(double a, double c, double t) {
    const double gap = a - c;
    const double sh = std::sin(0.5 * t);
    const double ch = std::cos(0.5 * t);
    return {gap + 2.0 * c * sh * sh, gap + 2.0 * c * ch * ch};
}

}  // namespace

UnduloidParams UnduloidParams::fromAxes(double a, double b) {
    if (!(b > 0.0 && a >= b))
        throw DomainError("unduloid requires a >= b > 0, got a = " + format::number(a) +
                          ", b = " + format::number(b));
    return {a, b, std::sqrt((a - b) * (a + b))};
}

UnduloidParams UnduloidParams::fromFocal(double a, double c) {
    if (!(c >= 0.0 && c < a))
        throw DomainError("unduloid requires 0 <= c < a, got a = " + format::number(a) +
                          ", c = " + format::number(c));
    return {a, std::sqrt((a - c) * (a + c)), c};
}

NodoidParams NodoidParams::fromAxes(double a, double b) {
    if (!(a > 0.0 && b > 0.0))
        throw DomainError("nodoid requires a, b > 0, got a = " + format::number(a) +
                          ", b = " + format::number(b));
    return {a, b, std::hypot(a, b)};
}

NodoidParams NodoidParams::fromFocal(double a, double c) {
    if (!(a > 0.0 && c > a))
        throw DomainError("nodoid requires c > a > 0, got a = " + format::number(a) +
                          ", c = " + format::number(c));
    return {a, std::sqrt((c - a) * (c + a)), c};
}

Unduloid::Unduloid(UnduloidParams p)
    : p_(p),
      arc_(
          [a = p.a, c = p.c](double x) {
              const auto [lo, hi] = cosFactors(a, c, x);
              return std::sqrt(lo * hi);
          },
          0.0, 2.0 * kPi, 128) {}

double Unduloid::g(double t) const {
    const auto [a, b, c] = p_;
    const auto [n, m] = cosFactors(a, c, t);
    return arc_(t) - c * std::sin(t) * n / std::sqrt(n * m);
}

double Unduloid::periodShift() const { return arc_.total(); }

ProfilePoint Unduloid::point(double t) const {
    const auto [a, b, c] = p_;
    const double cs = std::cos(t);
    const double sn = std::sin(t);
    const auto [n, m] = cosFactors(a, c, t);
    const double d2 = n * m;
    const double d = std::sqrt(d2);
    const double d3 = d2 * d;
    const double w = a * n / d3;
    const double dw = a * c * sn * (d2 - 3.0 * n * c * cs) / (d3 * d2);

    ProfilePoint p;
    p.t = t;
    p.f = b * n / d;
    p.g = arc_(t) - c * sn * n / d;
    p.df = b * c * sn * w;
    p.dg = b * b * w;
    p.ddf = b * c * (cs * w + sn * dw);
    p.ddg = b * b * dw;
    return p;
}

Nodoid::Nodoid(NodoidParams p)
    : p_(p),
      integral_(
          [a = p.a, c = p.c](double x) {
              const double s = std::sin(x);
              const auto [lo, hi] = cosFactors(c, a, x);
              return a * s * s / std::sqrt(lo * (c + a * std::cos(x)));
          },
          -kHalfPi, kHalfPi, 64),
      integralAtZero_(integral_(0.0)) {}

double Nodoid::g(NodoidBranch branch, double t) const {
    const auto [a, b, c] = p_;
    const double s = branchSign(branch);
    const double ac = a * std::cos(t);
    const double lo = cosFactors(c, a, t).minus;
    const double hi = c + ac;
    const double n = s > 0.0 ? lo : hi;
    const double d = std::sqrt(lo * hi);
    const double j = integral_(t) - integralAtZero_;
    return -a * j + s * a * std::sin(t) * n / d;
}

ProfilePoint Nodoid::point(NodoidBranch branch, double t) const {
    const auto [a, b, c] = p_;
    const double s = branchSign(branch);
    const double cs = std::cos(t);
    const double sn = std::sin(t);
    const double ac = a * cs;
    const double lo = cosFactors(c, a, t).minus;
    const double hi = c + ac;
    const double n = s > 0.0 ? lo : hi;
    const double d2 = lo * hi;
    const double d = std::sqrt(d2);
    const double d3 = d2 * d;
    const double w = s * a * n / d3;
    const double dw = s * a * a * sn * (s * d2 - 3.0 * n * ac) / (d3 * d2);

    ProfilePoint p;
    p.t = t;
    p.f = b * n / d;
    p.g = g(branch, t);
    p.df = b * c * sn * w;
    p.dg = b * b * cs * w;
    p.ddf = b * c * (cs * w + sn * dw);
    p.ddg = b * b * (cs * dw - sn * w);
    return p;
}

ProfilePoint unduloidPoint(const UnduloidParams& p, double t) { return Unduloid(p).point(t); }

ProfilePoint nodoidPoint(const NodoidParams& p, NodoidBranch branch, double t) {
    return Nodoid(p).point(branch, t);
}

double unduloidArea(const UnduloidParams& p) {
    return 8.0 * kPi * p.a * (p.a + p.c) * elliptic::ellipticE(areaModulus(p.a, p.c));
}

double unduloidLength(const UnduloidParams& p) {
    const auto m = elliptic::EllipticModulus::withComplement(p.c / p.a, p.b / p.a);
    return 4.0 * p.a * elliptic::ellipticE(m);
}

double nodoidArea(const NodoidParams& p) {
    return 8.0 * kPi * p.a * (p.a + p.c) * elliptic::ellipticE(areaModulus(p.a, p.c));
}

double nodoidLength(const NodoidParams& p) {
    const double kp = p.b / p.c;
    const auto m = elliptic::EllipticModulus::withComplement(p.a / p.c, kp);
    const auto [bigK, bigE] = elliptic::ellipticKE(m);
    return 4.0 * p.c * (bigE - kp * kp * bigK);
}

CurveSegment unduloidSegment(std::shared_ptr<const Unduloid> u, double tBegin, double tEnd) {
    CurveSegment s;
    s.tag = revolution::SegmentTag::unduloid;
    s.tBegin = tBegin;
    s.tEnd = tEnd;
    s.eval = [u = std::move(u)](double t) { return u->point(t); };
    return s;
}

CurveSegment nodoidSegment(std::shared_ptr<const Nodoid> n, NodoidBranch branch, double tBegin,
                           double tEnd) {
    CurveSegment s;
    s.tag = branchTag(branch);
    s.tBegin = tBegin;
    s.tEnd = tEnd;
    s.eval = [n = std::move(n), branch](double t) { return n->point(branch, t); };
    return s;
}

ProfileCurve unduloidCurve(const UnduloidParams& p, int periods) {
    if (periods < 1) throw DomainError("unduloid curve needs at least one period");
    auto u = std::make_shared<const Unduloid>(p);
    const double shift = u->periodShift();
    std::vector<CurveSegment> segments;
    for (int k = 0; k < periods; ++k)
        segments.push_back(
            revolution::transformed(unduloidSegment(u, 0.0, 2.0 * kPi), 1.0, k * shift));
    return ProfileCurve(std::move(segments), false);
}

ProfileCurve patchedNodoidCurve(const NodoidParams& p, int periods, bool halfPeriod) {
    if (periods < 1) throw DomainError("nodoid curve needs at least one period");
    auto n = std::make_shared<const Nodoid>(p);
    using B = NodoidBranch;
    struct Piece {
        B branch;
        double t0;
        double t1;
    };
    std::vector<Piece> pieces;
    if (halfPeriod) {
        pieces = {{B::plus, 0.0, kHalfPi}, {B::minus, -kHalfPi, 0.0}};
    } else {
        for (int k = 0; k < periods; ++k) {
            pieces.push_back({B::plus, 0.0, kHalfPi});
            pieces.push_back({B::minus, -kHalfPi, kHalfPi});
            pieces.push_back({B::plus, -kHalfPi, 0.0});
        }
    }
    std::vector<CurveSegment> segments;
    double offset = 0.0;
    double previousEnd = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const Piece& pc = pieces[i];
        if (i > 0) offset = previousEnd - n->g(pc.branch, pc.t0);
        segments.push_back(
            revolution::transformed(nodoidSegment(n, pc.branch, pc.t0, pc.t1), 1.0, offset));
        previousEnd = n->g(pc.branch, pc.t1) + offset;
    }
    return ProfileCurve(std::move(segments), false);
}

}  // namespace delaunay::cmc
