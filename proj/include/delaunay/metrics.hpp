#pragma once

// Quadrature of surface quantities over a profile curve. Independent of the
// closed forms: H comes from the fundamental forms of the sampled derivatives.

#include "delaunay/quadrature.hpp"
#include "delaunay/revolution.hpp"

namespace delaunay::metrics {

inline constexpr double kDefaultRelTol = 1e-10;

/// ∫ density over the whole curve, one adaptive integral per segment so that
/// no panel straddles a join.
quadrature::Estimate integrateQuantity(const revolution::ProfileCurve& curve,
                                       revolution::Quantity q, double relTol = kDefaultRelTol);

struct MetricErrors {
    double area;
    double volume;
    double willmore;
    double helfrich;
};

struct SurfaceMetrics {
    double area;
    double volume;
    double willmore;
    double helfrich;
    double isoRatio;  // area / volume^(2/3)
    MetricErrors quadratureError;
};

/// Requires relTol in [1e-12, 1e-4]; volume needs a closed curve or one
/// with both ends on the axis (NotClosedError otherwise).
SurfaceMetrics computeMetrics(const revolution::ProfileCurve& curve, double c0,
                              double relTol = kDefaultRelTol);

struct HelfrichExpansion {
    double willmore;
    double crossTerm;  // −2c0 ∫H dμ
    double areaTerm;   // c0²·area
    double sum() const { return willmore + crossTerm + areaTerm; }
};

HelfrichExpansion helfrichExpansion(const revolution::ProfileCurve& curve, double c0,
                                    double relTol = kDefaultRelTol);

/// Enclosed volume as (1/3)∫ x·n dμ, which reduces to (2π/3)∫ f(f ġ − g ḟ) dt.
quadrature::Estimate ambientVolume(const revolution::ProfileCurve& curve,
                                   double relTol = kDefaultRelTol);

}  // namespace delaunay::metrics
