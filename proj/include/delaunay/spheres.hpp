#pragma once

// Delaunay spheres: half a Delaunay torus (each CMC piece from its neck to
// its maximum) closed off by two concentric quarter circles centred on the
// axis at the height of the maxima.

#include "delaunay/assembly.hpp"
#include "delaunay/revolution.hpp"

namespace delaunay::spheres {

struct DelaunaySphereSpec {
    assembly::BalanceState balance;
    double rInner;           // a + y, the unduloid maximum
    double rOuter;           // c + 1, the nodoid maximum
    double capCenterHeight;  // 2aE(y/a) = L/2, the axial distance from a neck to the maxima

    static DelaunaySphereSpec fromBalance(const assembly::BalanceState& s);
};

/// Height of the common cap centre in the profile coordinates (the maxima sit there).
double capCenterG(const DelaunaySphereSpec& spec);

/// Open meridian from axis to axis: outer cap, nodoid (max to neck),
/// unduloid (neck to max), inner cap. Runs counterclockwise.
revolution::ProfileCurve assembleSphereProfile(const DelaunaySphereSpec& spec);

/// The nodoid and unduloid halves of the sphere profile without the caps.
revolution::ProfileCurve halfTorusProfile(const DelaunaySphereSpec& spec);

/// 4π + W(T)/2.
double sphereEnergy(const DelaunaySphereSpec& spec);

/// Each quarter-circle cap is half a round sphere: W = 2π regardless of radius.
inline constexpr double kCapWillmore = 2.0 * 3.14159265358979323846;

}  // namespace delaunay::spheres
