#pragma once

// The work behind each delaunay-lab subcommand, kept out of main() so the
// tests can drive it directly.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "delaunay/mesh.hpp"
#include "delaunay/revolution.hpp"

namespace delaunay::commands {

/// Default quadrature tolerance, overridden by DELAUNAY_LAB_RELTOL.
double defaultRelTol();

struct SolveReport {
    double c, eps, y, a, L;
    double wNod, wUnd, wTotal, dWdc;
    double area, volume, iso;
    double margin;  // 8π − wTotal
    double ratioLhopital;
    double FResidual;
    int iterations;
};

SolveReport cmdSolve(double c, double relTol);
nlohmann::ordered_json toJson(const SolveReport& r);

enum class SweepSpacing { linear, logEps };

struct SweepConfig {
    double cMin;
    double cMax;
    int steps;
    SweepSpacing spacing{SweepSpacing::logEps};
    double relTol;
    unsigned threads{0};  // 0 picks the hardware concurrency
};

struct SweepRow {
    double c;
    std::optional<SolveReport> report;
    std::string error;  // "<kind>: <message>" when the row failed
};

std::vector<double> sweepGrid(const SweepConfig& config);
/// Rows in grid order; failures are recorded per row rather than aborting.
std::vector<SweepRow> runSweep(const SweepConfig& config);
/// Header `c,eps,y,a,L,w_nod,w_und,w_total,dw_dc,area,volume,iso,ratio_lhopital`,
/// plus an `error` column when any row failed.
void writeSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows);

enum class ProfileKind { torus, sphere, unduloid, nodoid };

struct ProfileRequest {
    ProfileKind which{ProfileKind::torus};
    double c{1.1};
    double a{1.0};  // unduloid/nodoid only
    double b{1.0};
    int periods{2};
};

revolution::ProfileCurve buildProfile(const ProfileRequest& request);
/// Columns t,f,g,marker; marker is 1 at patch points.
void writeProfileCsv(std::ostream& out, const std::vector<revolution::CurveSample>& samples);

mesh::TriangleMesh buildMesh(double c, ProfileKind which, std::size_t u, std::size_t v);

struct EllipticReport {
    double k, kPrime, bigK, bigE;
};
EllipticReport cmdElliptic(double k);

}  // namespace delaunay::commands
