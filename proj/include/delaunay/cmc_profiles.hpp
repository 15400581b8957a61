#pragma once

// Delaunay profiles: roulettes of a focus of a rolling ellipse (unduloid,
// H = 1/(2a)) or hyperbola (nodoid, H = −1/(2a)), in closed form.
//
// Unduloid, one period t ∈ [0, 2π]:
//   f(t) = b (a − c cos t)/√(a² − c² cos² t)
//   g(t) = ∫₀ᵗ √(a² − c² cos² x) dx − c sin t (a − c cos t)/√(a² − c² cos² t)
//
// Nodoid, branch s = ±1, bounded parameter t ∈ [−π/2, π/2]:
//   f_s(t) = b (c − s a cos t)/√(c² − a² cos² t)
//   g_s(t) = −a ∫₀ᵗ a sin² x/√(c² − a² cos² x) dx + s a sin t (c − s a cos t)/√(c² − a² cos² t)
// Both formulas stay regular at t = ±π/2, where f = b and the tangent is
// perpendicular to the axis; that is where the two branches are glued.

#include <memory>

#include "delaunay/quadrature.hpp"
#include "delaunay/revolution.hpp"

namespace delaunay::cmc {

using revolution::CurveSegment;
using revolution::ProfileCurve;
using revolution::ProfilePoint;

struct UnduloidParams {
    double a;  // semi-major axis
    double b;  // semi-minor axis
    double c;  // focal distance √(a² − b²)

    /// a ≥ b > 0 (a = b is the cylinder).
    static UnduloidParams fromAxes(double a, double b);
    /// 0 ≤ c < a.
    static UnduloidParams fromFocal(double a, double c);

    double minRadius() const { return a - c; }
    double maxRadius() const { return a + c; }
    double meanCurvature() const { return 0.5 / a; }
};

struct NodoidParams {
    double a;  // transverse semi-axis
    double b;  // conjugate semi-axis
    double c;  // focal distance √(a² + b²)

    static NodoidParams fromAxes(double a, double b);
    /// c > a > 0.
    static NodoidParams fromFocal(double a, double c);

    double plusMinRadius() const { return c - a; }
    double minusMaxRadius() const { return c + a; }
    double junctionRadius() const { return b; }
    double meanCurvature() const { return -0.5 / a; }
};

enum class NodoidBranch { plus, minus };

/// Unduloid with its running arc-length integral cached.
class Unduloid {
public:
    explicit Unduloid(UnduloidParams p);

    const UnduloidParams& params() const { return p_; }
    ProfilePoint point(double t) const;
    double g(double t) const;
    /// g(2π) − g(0) from the cached integral.
    double periodShift() const;

private:
    UnduloidParams p_;
    quadrature::CumulativeIntegral arc_;
};

class Nodoid {
public:
    explicit Nodoid(NodoidParams p);

    const NodoidParams& params() const { return p_; }
    ProfilePoint point(NodoidBranch branch, double t) const;
    double g(NodoidBranch branch, double t) const;

private:
    NodoidParams p_;
    quadrature::CumulativeIntegral integral_;  // ∫ a sin²x/√(c² − a² cos² x) dx from −π/2
    double integralAtZero_;
};

ProfilePoint unduloidPoint(const UnduloidParams& p, double t);
ProfilePoint nodoidPoint(const NodoidParams& p, NodoidBranch branch, double t);

/// Area of one period of revolution: 8πa(a + c)E(2√(ac)/(a + c)).
double unduloidArea(const UnduloidParams& p);
/// Axial length of one period: 4aE(c/a).
double unduloidLength(const UnduloidParams& p);
/// Area of one period (both branches): 8πa(a + c)E(2√(ac)/(a + c)).
double nodoidArea(const NodoidParams& p);
/// Axial length of one period: 4c[E(a/c) − (b/c)² K(a/c)].
double nodoidLength(const NodoidParams& p);

/// One segment per period, t ∈ [0, 2π] each, starting at the minimum.
ProfileCurve unduloidCurve(const UnduloidParams& p, int periods = 1);

/// Plus and minus arcs glued at radius b, starting at the plus-branch
/// minimum c − a. With `halfPeriod`, runs from that minimum to the
/// minus-branch maximum c + a only.
ProfileCurve patchedNodoidCurve(const NodoidParams& p, int periods = 1, bool halfPeriod = false);

/// Pieces shared by the torus and sphere assemblies.
CurveSegment unduloidSegment(std::shared_ptr<const Unduloid> u, double tBegin, double tEnd);
CurveSegment nodoidSegment(std::shared_ptr<const Nodoid> n, NodoidBranch branch, double tBegin,
                           double tEnd);

}  // namespace delaunay::cmc
