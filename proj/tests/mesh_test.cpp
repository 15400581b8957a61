#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "delaunay/assembly.hpp"
#include "delaunay/commands.hpp"
#include "delaunay/errors.hpp"
#include "delaunay/mesh.hpp"
#include "delaunay/metrics.hpp"

using namespace delaunay;
using namespace delaunay::mesh;

TEST(Mesh, TorusTopology) {
    const auto m = commands::buildMesh(1.1, commands::ProfileKind::torus, 64, 32);
    EXPECT_EQ(eulerCharacteristic(m), 0);
    EXPECT_TRUE(isWatertight(m));
    EXPECT_GT(signedVolume(m), 0.0);
}

TEST(Mesh, SphereTopology) {
    const auto m = commands::buildMesh(1.1, commands::ProfileKind::sphere, 64, 32);
    EXPECT_EQ(eulerCharacteristic(m), 2);
    EXPECT_TRUE(isWatertight(m));
    EXPECT_GT(signedVolume(m), 0.0);
}

TEST(Mesh, AreaAndVolumeConvergeToQuadrature) {
    const auto s = assembly::solveBalance(1.1);
    const auto curve = assembly::assembleTorusProfile(s);
    const auto exact = metrics::computeMetrics(curve, 0.0);
    double previous = 1e300;
    for (std::size_t n : {64, 128, 256, 512}) {
        const auto m = revolveProfile(curve, n, n);
        const double gap = std::abs(surfaceArea(m) - exact.area);
        EXPECT_LT(gap, previous / 3.0) << n;  // second order
        previous = gap;
    }
    EXPECT_LT(previous, 1e-3 * exact.area);
    const auto fine = revolveProfile(curve, 512, 512);
    EXPECT_NEAR(signedVolume(fine), exact.volume, 1e-3 * exact.volume);
}

TEST(Mesh, RejectsOpenCurvesAndTinyGrids) {
    const revolution::ProfileCurve arc(
        {revolution::circularArc(1.0, 0.0, 0.0, std::numbers::pi / 2)}, false);
    EXPECT_THROW(revolveProfile(arc, 16, 16), NotClosedError);
    EXPECT_THROW(commands::buildMesh(1.1, commands::ProfileKind::torus, 4, 16), DomainError);
    EXPECT_THROW(commands::buildMesh(1.1, commands::ProfileKind::nodoid, 16, 16), DomainError);
}

TEST(Mesh, ObjRecords) {
    const auto m = commands::buildMesh(1.1, commands::ProfileKind::sphere, 16, 8);
    std::ostringstream out;
    writeObj(out, m);
    std::istringstream in(out.str());
    std::string line;
    std::size_t vertices = 0, faces = 0;
    while (std::getline(in, line)) {
        ASSERT_TRUE(line.rfind("v ", 0) == 0 || line.rfind("f ", 0) == 0) << line;
        (line[0] == 'v' ? vertices : faces)++;
    }
    EXPECT_EQ(vertices, m.vertices.size());
    EXPECT_EQ(faces, m.faces.size());
    std::ostringstream again;
    writeObj(again, commands::buildMesh(1.1, commands::ProfileKind::sphere, 16, 8));
    EXPECT_EQ(out.str(), again.str());
}
