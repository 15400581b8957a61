#pragma once

// Surfaces of revolution X(t, θ) = (f(t) cos θ, f(t) sin θ, g(t)) generated
// by a planar profile curve (f, g), f ≥ 0 the distance to the axis.
//
// Orientation convention: the unit normal is n = X_t × X_θ / |X_t × X_θ| and
//   2H = (ḟ g̈ − f̈ ġ)/|ċ|³ + ġ/(f |ċ|).
// A meridian running counterclockwise in the (f, g) half-plane (the round
// sphere traversed south to north) has positive enclosed volume π∮f² dg and,
// with this normal, positive H on spheres.

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

namespace delaunay::revolution {

struct ProfilePoint {
    double t{0.0};
    double f{0.0};
    double g{0.0};
    double df{0.0};
    double dg{0.0};
    double ddf{0.0};
    double ddg{0.0};

    double speed() const;
};

struct FundamentalForms {
    double E, F, G;
    double L, M, N;
    double H;
};

/// Requires a regular point with f > 0.
FundamentalForms fundamentalForms(const ProfilePoint& p);

double meanCurvature(const ProfilePoint& p);

enum class SegmentTag { unduloid, nodoidPlus, nodoidMinus, circularArc, generic };

std::string_view toString(SegmentTag tag);

/// A smooth piece of a meridian with its own parameter on [tBegin, tEnd].
struct CurveSegment {
    SegmentTag tag{SegmentTag::generic};
    double tBegin{0.0};
    double tEnd{1.0};
    std::function<ProfilePoint(double)> eval;

    ProfilePoint begin() const { return eval(tBegin); }
    ProfilePoint end() const { return eval(tEnd); }
};

/// g ↦ gScale·g + gShift. A reflection (gScale = −1) reverses the
/// orientation and therefore the sign of H.
CurveSegment transformed(CurveSegment segment, double gScale, double gShift);

/// Segment from positions only; derivatives by 5-point central stencils.
CurveSegment genericSegment(std::function<std::pair<double, double>(double)> position,
                            double tBegin, double tEnd, double step = 1e-3);

/// Arc of the circle of radius r centred at (0, centerG) on the axis, at polar
/// angle θ measured from the +f direction; θ runs over [thetaBegin, thetaEnd]
/// (in that direction, which may be decreasing).
CurveSegment circularArc(double radius, double centerG, double thetaBegin, double thetaEnd);

enum class Spacing { uniform, cosine };

struct CurveSample {
    double t;  // global parameter, strictly increasing along the curve
    ProfilePoint point;
    SegmentTag tag;
    bool patchPoint;  // first point of a segment or the closing point
};

class ProfileCurve {
public:
    ProfileCurve() = default;
    /// For closed curves the end of the last segment must meet the start of
    /// the first within 1e-10.
    ProfileCurve(std::vector<CurveSegment> segments, bool closed);

    const std::vector<CurveSegment>& segments() const { return segments_; }
    bool closed() const { return closed_; }
    /// Both ends on the rotation axis (f = 0), as for sphere-type meridians.
    bool axisEndpoints(double tol = 1e-12) const;

    /// Global parameter range; segment i occupies a sub-interval of length
    /// |tEnd − tBegin|.
    std::pair<double, double> tRange() const;

    ProfilePoint startPoint() const;
    ProfilePoint endPoint() const;

    /// Samples with `perSegment` points per segment (at least 2). Closed
    /// curves end with a copy of their first sample.
    std::vector<CurveSample> sample(std::size_t perSegment, Spacing spacing = Spacing::uniform) const;

    /// Samples distributed over segments in proportion to their parameter
    /// length, `total` points overall (approximately).
    std::vector<CurveSample> sampleTotal(std::size_t total, Spacing spacing = Spacing::uniform) const;

private:
    std::vector<CurveSample> sampleCounts(const std::vector<std::size_t>& counts,
                                          Spacing spacing) const;

    std::vector<CurveSegment> segments_;
    bool closed_{false};
};

/// Revolution densities: integrating over the curve parameter gives the
/// corresponding surface quantity directly (the 2π is included).
struct Quantity {
    enum class Kind { area, volume, willmore, helfrich, meanCurvature };
    Kind kind{Kind::area};
    double c0{0.0};  // spontaneous curvature, helfrich only

    static Quantity area() { return {Kind::area, 0.0}; }
    static Quantity volume() { return {Kind::volume, 0.0}; }
    static Quantity willmore() { return {Kind::willmore, 0.0}; }
    static Quantity helfrich(double c0) { return {Kind::helfrich, c0}; }
    static Quantity meanCurvatureIntegral() { return {Kind::meanCurvature, 0.0}; }
};

/// areaDensity 2πf|ċ|, volumeDensity πf²ġ, willmoreDensity 2πH²f|ċ|,
/// helfrichDensity 2π(H − c0)²f|ċ|, meanCurvature 2πHf|ċ|.
double density(const ProfilePoint& p, Quantity q);

struct DensitySample {
    double t;
    double value;
};

std::vector<DensitySample> sampleSurfaceQuantity(const ProfileCurve& curve, Quantity q,
                                                 std::size_t perSegment = 4096);

/// Proper intersections between non-adjacent edges of the sampled polyline.
bool polylineSelfIntersects(const std::vector<CurveSample>& samples);

}  // namespace delaunay::revolution
