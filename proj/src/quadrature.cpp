#include "delaunay/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"

namespace delaunay::quadrature {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxPanels = 1u << 13;

struct Panel {
    double a;
    double b;
    double value;
    double error;
    double l1;
    bool operator<(const Panel& other) const { return error < other.error; }
};

// One 7/15-point Gauss–Kronrod panel; error is |K15 − G7|.
Panel evaluatePanel(const Integrand& f, double a, double b) {
    using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    static const auto& x = Rule::abscissa();
    static const auto& wk = Rule::weights();
    static const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double kronrod = wk[0] * f0;
    double gauss = wg[0] * f0;
    double l1 = wk[0] * std::abs(f0);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double fl = f(mid - half * x[i]);
        const double fr = f(mid + half * x[i]);
        kronrod += wk[i] * (fl + fr);
        l1 += wk[i] * (std::abs(fl) + std::abs(fr));
        // Even Kronrod indices coincide with the 7-point Gauss nodes.
        if (i % 2 == 0) gauss += wg[i / 2] * (fl + fr);
    }
    const double value = kronrod * half;
    const double absL1 = l1 * std::abs(half);
    const double err = std::max(std::abs((kronrod - gauss) * half), 50.0 * kEps * absL1);
    return {a, b, value, err, absL1};
}

enum class Target { l1, value };

Estimate adaptive(const Integrand& f, double a, double b, double relTol, unsigned maxDepth,
                  Target target) {
    if (a == b) return {};
    const double tol = std::max(relTol, 100.0 * kEps);
    const double minWidth = std::abs(b - a) * std::ldexp(1.0, -static_cast<int>(maxDepth));

    std::priority_queue<Panel> heap;
    Panel first = evaluatePanel(f, a, b);
    heap.push(first);
    double value = first.value;
    double error = first.error;
    double l1 = first.l1;

    auto goal = [&] {
        const double scale = target == Target::value ? std::abs(value) : l1;
        return std::max(tol * scale, 100.0 * kEps * l1);
    };

    while (error > goal()) {
        if (heap.size() >= kMaxPanels)
            throw QuadratureError("adaptive quadrature exceeded " + std::to_string(kMaxPanels) +
                                  " panels on [" + format::number(a) + ", " + format::number(b) +
                                  "]; error estimate " + format::number(error));
        Panel worst = heap.top();
        if (std::abs(worst.b - worst.a) < minWidth)
            throw QuadratureError("adaptive quadrature hit the subdivision depth limit on [" +
                                  format::number(a) + ", " + format::number(b) + "]");
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluatePanel(f, worst.a, mid);
        Panel right = evaluatePanel(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum the final panels in parameter order so the total does not depend
    // on the order refinements happened in.
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& p, const Panel& q) { return std::min(p.a, p.b) < std::min(q.a, q.b); });
    std::vector<double> values, errors, l1s;
    for (const Panel& p : panels) {
        values.push_back(p.value);
        errors.push_back(p.error);
        l1s.push_back(p.l1);
    }
    Estimate e{pairwiseSum(values), pairwiseSum(errors), pairwiseSum(l1s)};
    if (!std::isfinite(e.value))
        throw QuadratureError("non-finite integral on [" + format::number(a) + ", " +
                              format::number(b) + "]");
    return e;
}

}  // namespace

Estimate integrate(const Integrand& f, double a, double b, double relTol, unsigned maxDepth) {
    return adaptive(f, a, b, relTol, maxDepth, Target::l1);
}

Estimate integrateRelative(const Integrand& f, double a, double b, double relTol,
                           unsigned maxDepth) {
    return adaptive(f, a, b, relTol, maxDepth, Target::value);
}

CumulativeIntegral::CumulativeIntegral(Integrand f, double t0, double t1, std::size_t panels,
                                       double relTol)
    : f_(std::move(f)),
      t0_(t0),
      t1_(t1),
      width_((t1 - t0) / static_cast<double>(panels)),
      relTol_(relTol),
      cumulative_(panels + 1, 0.0) {
    for (std::size_t i = 0; i < panels; ++i) {
        const double lo = t0_ + width_ * static_cast<double>(i);
        const double hi = (i + 1 == panels) ? t1_ : lo + width_;
        cumulative_[i + 1] = cumulative_[i] + integrate(f_, lo, hi, relTol_).value;
    }
}

double CumulativeIntegral::operator()(double t) const {
    if (t == t0_) return 0.0;
    if (t < t0_) return -integrate(f_, t, t0_, relTol_).value;
    if (t >= t1_) return cumulative_.back() + integrate(f_, t1_, t, relTol_).value;
    const auto panels = cumulative_.size() - 1;
    auto i = static_cast<std::size_t>((t - t0_) / width_);
    i = std::min(i, panels - 1);
    const double lo = t0_ + width_ * static_cast<double>(i);
    const double hi = (i + 1 == panels) ? t1_ : lo + width_;
    // Integrate from whichever panel edge is nearer.
    if (t - lo <= hi - t) return cumulative_[i] + integrate(f_, lo, t, relTol_).value;
    return cumulative_[i + 1] - integrate(f_, t, hi, relTol_).value;
}

double pairwiseSum(const std::vector<double>& terms) {
    if (terms.empty()) return 0.0;
    std::vector<double> level = terms;
    while (level.size() > 1) {
        std::vector<double> next((level.size() + 1) / 2);
        for (std::size_t i = 0; i < next.size(); ++i)
            next[i] = level[2 * i] + (2 * i + 1 < level.size() ? level[2 * i + 1] : 0.0);
        level.swap(next);
    }
    return level.front();
}

}  // namespace delaunay::quadrature
