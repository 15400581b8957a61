#pragma once

// Triangle meshes of surfaces of revolution, for export and discrete checks.

#include <array>
#include <cstddef>
#include <ostream>
#include <vector>

#include "delaunay/revolution.hpp"

namespace delaunay::mesh {

struct TriangleMesh {
    std::vector<std::array<double, 3>> vertices;
    std::vector<std::array<std::size_t, 3>> faces;  // zero-based, counterclockwise seen from outside
};

/// Revolves the meridian with about `uSamples` points along the curve and
/// `vSamples` angular steps. A closed meridian gives a torus; one with both
/// ends on the axis gives a sphere with a single vertex at each pole.
TriangleMesh revolveProfile(const revolution::ProfileCurve& curve, std::size_t uSamples,
                            std::size_t vSamples);

/// V − E + F, counting each undirected edge once.
long eulerCharacteristic(const TriangleMesh& m);

/// True if every edge is shared by exactly two faces, traversed once in each direction.
bool isWatertight(const TriangleMesh& m);

double surfaceArea(const TriangleMesh& m);
/// Signed volume; positive for outward orientation.
double signedVolume(const TriangleMesh& m);

/// Wavefront OBJ with vertex and face records only.
void writeObj(std::ostream& out, const TriangleMesh& m);

}  // namespace delaunay::mesh
