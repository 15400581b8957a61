#include "delaunay/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

#include "delaunay/assembly.hpp"
#include "delaunay/cmc_profiles.hpp"
#include "delaunay/elliptic.hpp"
#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"
#include "delaunay/metrics.hpp"
#include "delaunay/spheres.hpp"

namespace delaunay::commands {
namespace {

constexpr double kEightPi = 8.0 * std::numbers::pi;

std::string describe(const std::exception& e) {
    if (const auto* d = dynamic_cast<const Error*>(&e)) return std::string(d->kind()) + ": " + d->what();
    return std::string("internal: ") + e.what();
}

}  // namespace

double defaultRelTol() {
    const char* env = std::getenv("DELAUNAY_LAB_RELTOL");
    if (env == nullptr || *env == '\0') return metrics::kDefaultRelTol;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 1e-12 && v <= 1e-4))
        throw DomainError(std::string("DELAUNAY_LAB_RELTOL must be a number in [1e-12, 1e-4], got '") +
                          env + "'");
    return v;
}

SolveReport cmdSolve(double c, double relTol) {
    const auto s = assembly::solveBalance(c);
    const auto e = assembly::torusEnergy(s);
    const auto m = metrics::computeMetrics(assembly::assembleTorusProfile(s), 0.0, relTol);
    return {c,      s.eps,    s.y,         s.a,    s.L,
            e.wNod, e.wUnd,   e.wTotal,    e.dWdc, m.area,
            m.volume, m.isoRatio, kEightPi - e.wTotal, assembly::lhopitalRatio(s), s.FResidual,
            s.iterations};
}

nlohmann::ordered_json toJson(const SolveReport& r) {
    return {{"c", r.c},           {"eps", r.eps},         {"y", r.y},
            {"a", r.a},           {"L", r.L},             {"w_nod", r.wNod},
            {"w_und", r.wUnd},    {"w_total", r.wTotal},  {"dw_dc", r.dWdc},
            {"area", r.area},     {"volume", r.volume},   {"iso", r.iso},
            {"margin_8pi", r.margin}, {"ratio_lhopital", r.ratioLhopital},
            {"F_residual", r.FResidual}, {"iterations", r.iterations}};
}

std::vector<double> sweepGrid(const SweepConfig& config) {
    if (config.steps < 2) throw DomainError("sweep needs at least 2 steps");
    if (!(config.cMin < config.cMax)) throw DomainError("sweep needs c-min < c-max");
    assembly::requireAdmissible(config.cMin);
    const auto domain = assembly::validateDomain(config.cMax);
    if (domain.cMax < config.cMax)
        throw RangeError("c-max = " + format::number(config.cMax) +
                         " exceeds the validated domain (largest validated c = " +
                         format::number(domain.cMax) + ")");

    std::vector<double> grid(static_cast<std::size_t>(config.steps));
    const double n = config.steps - 1;
    for (int i = 0; i < config.steps; ++i) {
        if (config.spacing == SweepSpacing::linear) {
            grid[i] = config.cMin + (config.cMax - config.cMin) * i / n;
        } else {
            const double lo = std::log(config.cMin - 1.0);
            const double hi = std::log(config.cMax - 1.0);
            grid[i] = 1.0 + std::exp(lo + (hi - lo) * i / n);
        }
    }
    grid.front() = config.cMin;
    grid.back() = config.cMax;
    return grid;
}

std::vector<SweepRow> runSweep(const SweepConfig& config) {
    const auto grid = sweepGrid(config);
    std::vector<SweepRow> rows(grid.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            rows[i].c = grid[i];
            try {
                rows[i].report = cmdSolve(grid[i], config.relTol);
            } catch (const std::exception& e) {
                rows[i].error = describe(e);
            }
        }
    };
    unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(grid.size()));
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.size() + threads - 1) / threads;
    for (std::size_t begin = 0; begin < grid.size(); begin += chunk)
        pool.emplace_back(work, begin, std::min(grid.size(), begin + chunk));
    for (auto& t : pool) t.join();
    return rows;
}

void writeSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows) {
    const bool anyError =
        std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.report; });
    out << "c,eps,y,a,L,w_nod,w_und,w_total,dw_dc,area,volume,iso,ratio_lhopital";
    if (anyError) out << ",error";
    out << '\n';
    using format::number;
    for (const SweepRow& row : rows) {
        if (row.report) {
            const SolveReport& r = *row.report;
            for (double v : {r.c, r.eps, r.y, r.a, r.L, r.wNod, r.wUnd, r.wTotal, r.dWdc, r.area,
                             r.volume, r.iso})
                out << number(v) << ',';
            out << number(r.ratioLhopital);
            if (anyError) out << ',';
        } else {
            out << number(row.c) << ',' << number(row.c - 1.0) << std::string(11, ',');
            std::string message = row.error;
            std::replace(message.begin(), message.end(), ',', ';');
            std::replace(message.begin(), message.end(), '\n', ' ');
            out << ',' << message;
        }
        out << '\n';
    }
}

revolution::ProfileCurve buildProfile(const ProfileRequest& request) {
    switch (request.which) {
        case ProfileKind::torus:
            return assembly::assembleTorusProfile(assembly::solveBalance(request.c));
        case ProfileKind::sphere:
            return spheres::assembleSphereProfile(
                spheres::DelaunaySphereSpec::fromBalance(assembly::solveBalance(request.c)));
        case ProfileKind::unduloid:
            return cmc::unduloidCurve(cmc::UnduloidParams::fromAxes(request.a, request.b),
                                      request.periods);
        case ProfileKind::nodoid:
            return cmc::patchedNodoidCurve(cmc::NodoidParams::fromAxes(request.a, request.b),
                                           request.periods);
    }
    throw DomainError("unknown profile kind");
}

void writeProfileCsv(std::ostream& out, const std::vector<revolution::CurveSample>& samples) {
    out << "t,f,g,marker\n";
    for (const auto& s : samples)
        out << format::number(s.t) << ',' << format::number(s.point.f) << ','
            << format::number(s.point.g) << ',' << (s.patchPoint ? 1 : 0) << '\n';
}

mesh::TriangleMesh buildMesh(double c, ProfileKind which, std::size_t u, std::size_t v) {
    if (which != ProfileKind::torus && which != ProfileKind::sphere)
        throw DomainError("mesh supports torus and sphere only");
    ProfileRequest request;
    request.which = which;
    request.c = c;
    return mesh::revolveProfile(buildProfile(request), u, v);
}

EllipticReport cmdElliptic(double k) {
    const auto m = elliptic::EllipticModulus::fromModulus(k);
    const auto [bigK, bigE] = elliptic::ellipticKE(m);
    return {m.k, m.kPrime, bigK, bigE};
}

}  // namespace delaunay::commands
