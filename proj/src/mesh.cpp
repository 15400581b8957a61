#include "delaunay/mesh.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"

namespace delaunay::mesh {
namespace {

using Vec = std::array<double, 3>;

Vec sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Vec cross(const Vec& a, const Vec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

TriangleMesh revolveProfile(const revolution::ProfileCurve& curve, std::size_t uSamples,
                            std::size_t vSamples) {
    if (uSamples < 8 || vSamples < 8) throw DomainError("mesh needs at least 8 samples per direction");
    const bool sphere = curve.axisEndpoints(1e-9);
    if (!curve.closed() && !sphere)
        throw NotClosedError("mesh needs a closed meridian or one with both ends on the axis");

    auto samples = curve.sampleTotal(uSamples);
    if (curve.closed()) samples.pop_back();  // the copy of the first point

    TriangleMesh m;
    const std::size_t nv = vSamples;
    auto ringPoint = [&](const revolution::ProfilePoint& p, std::size_t j) -> Vec {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nv);
        return {p.f * std::cos(theta), p.f * std::sin(theta), p.g};
    };

    if (curve.closed()) {
        const std::size_t nu = samples.size();
        for (const auto& s : samples)
            for (std::size_t j = 0; j < nv; ++j) m.vertices.push_back(ringPoint(s.point, j));
        auto id = [&](std::size_t i, std::size_t j) { return (i % nu) * nv + (j % nv); };
        for (std::size_t i = 0; i < nu; ++i)
            for (std::size_t j = 0; j < nv; ++j) {
                m.faces.push_back({id(i, j), id(i, j + 1), id(i + 1, j)});
                m.faces.push_back({id(i + 1, j), id(i, j + 1), id(i + 1, j + 1)});
            }
        return m;
    }

    // Sphere: poles are the first and last samples, rings in between.
    const std::size_t rings = samples.size() - 2;
    m.vertices.push_back({0.0, 0.0, samples.front().point.g});
    for (std::size_t i = 1; i + 1 < samples.size(); ++i)
        for (std::size_t j = 0; j < nv; ++j) m.vertices.push_back(ringPoint(samples[i].point, j));
    m.vertices.push_back({0.0, 0.0, samples.back().point.g});
    const std::size_t first = 0;
    const std::size_t last = m.vertices.size() - 1;
    auto id = [&](std::size_t r, std::size_t j) { return 1 + r * nv + (j % nv); };
    for (std::size_t j = 0; j < nv; ++j) m.faces.push_back({first, id(0, j + 1), id(0, j)});
    for (std::size_t r = 0; r + 1 < rings; ++r)
        for (std::size_t j = 0; j < nv; ++j) {
            m.faces.push_back({id(r, j), id(r, j + 1), id(r + 1, j)});
            m.faces.push_back({id(r + 1, j), id(r, j + 1), id(r + 1, j + 1)});
        }
    for (std::size_t j = 0; j < nv; ++j)
        m.faces.push_back({last, id(rings - 1, j), id(rings - 1, j + 1)});
    return m;
}

long eulerCharacteristic(const TriangleMesh& m) {
    std::map<std::pair<std::size_t, std::size_t>, int> edges;
    for (const auto& f : m.faces)
        for (int k = 0; k < 3; ++k) {
            const std::size_t a = f[k], b = f[(k + 1) % 3];
            edges[{std::min(a, b), std::max(a, b)}]++;
        }
    return static_cast<long>(m.vertices.size()) - static_cast<long>(edges.size()) +
           static_cast<long>(m.faces.size());
}

bool isWatertight(const TriangleMesh& m) {
    std::map<std::pair<std::size_t, std::size_t>, int> directed;
    for (const auto& f : m.faces)
        for (int k = 0; k < 3; ++k) directed[{f[k], f[(k + 1) % 3]}]++;
    for (const auto& [edge, count] : directed) {
        if (count != 1) return false;
        const auto twin = directed.find({edge.second, edge.first});
        if (twin == directed.end() || twin->second != 1) return false;
    }
    return true;
}

double surfaceArea(const TriangleMesh& m) {
    double area = 0.0;
    for (const auto& f : m.faces) {
        const Vec n = cross(sub(m.vertices[f[1]], m.vertices[f[0]]),
                            sub(m.vertices[f[2]], m.vertices[f[0]]));
        area += 0.5 * std::sqrt(dot(n, n));
    }
    return area;
}

double signedVolume(const TriangleMesh& m) {
    double volume = 0.0;
    for (const auto& f : m.faces)
        volume += dot(m.vertices[f[0]], cross(m.vertices[f[1]], m.vertices[f[2]])) / 6.0;
    return volume;
}

void writeObj(std::ostream& out, const TriangleMesh& m) {
    for (const auto& v : m.vertices)
        out << "v " << format::number(v[0]) << ' ' << format::number(v[1]) << ' '
            << format::number(v[2]) << '\n';
    for (const auto& f : m.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

}  // namespace delaunay::mesh
