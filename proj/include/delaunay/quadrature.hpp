#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace delaunay::quadrature {

using Integrand = std::function<double(double)>;

struct Estimate {
    double value{0.0};
    double error{0.0};  // estimated absolute error
    double l1{0.0};     // ∫|f|, the scale the relative tolerance refers to
};

/// Adaptive 15-point Gauss–Kronrod on [a, b]. Subdivides until the embedded
/// error estimate is below relTol·∫|f|; throws QuadratureError if the depth
/// limit is reached first. Nodes are interior, so f is never evaluated at a or b.
Estimate integrate(const Integrand& f, double a, double b, double relTol,
                   unsigned maxDepth = 40);

/// Same, but keeps refining until error ≤ relTol·|value| (falls back to the
/// L1-relative bound when the value itself is below the rounding floor).
Estimate integrateRelative(const Integrand& f, double a, double b, double relTol,
                           unsigned maxDepth = 40);

/// Running integral t ↦ ∫_{t0}^{t} f, served from a table of panel sums so
/// that each query costs one short quadrature.
class CumulativeIntegral {
public:
    CumulativeIntegral(Integrand f, double t0, double t1, std::size_t panels = 64,
                       double relTol = 1e-15);

    double operator()(double t) const;
    double lower() const { return t0_; }
    double upper() const { return t1_; }
    double total() const { return cumulative_.back(); }

private:
    Integrand f_;
    double t0_;
    double t1_;
    double width_;
    double relTol_;
    std::vector<double> cumulative_;
};

/// Pairwise summation; fixed association order for reproducible totals.
double pairwiseSum(const std::vector<double>& terms);

}  // namespace delaunay::quadrature
