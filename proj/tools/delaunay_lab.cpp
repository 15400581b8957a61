// delaunay-lab: balance, energies, profiles and meshes of Delaunay tori and
// spheres, plus the acceptance suite.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "delaunay/commands.hpp"
#include "delaunay/errors.hpp"
#include "delaunay/format.hpp"
#include "delaunay/mesh.hpp"
#include "delaunay/verification.hpp"

namespace {

using namespace delaunay;

// Writes to the named file, or stdout for "-".
void withOutput(const std::string& path, const std::function<void(std::ostream&)>& write) {
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot open '" + path + "' for writing");
    write(out);
    if (!out) throw Error("io", "failed writing '" + path + "'");
}

int fail(const std::string& kind, const std::string& message) {
    std::string line = message;
    for (char& ch : line)
        if (ch == '\n') ch = ' ';
    std::cerr << "error: " << kind << ": " << line << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delaunay tori and spheres: balancing, energies and the 8 pi bound"};
    app.require_subcommand(1);

    const std::map<std::string, commands::ProfileKind> kinds{
        {"torus", commands::ProfileKind::torus},
        {"sphere", commands::ProfileKind::sphere},
        {"unduloid", commands::ProfileKind::unduloid},
        {"nodoid", commands::ProfileKind::nodoid}};

    double c = 1.1;
    std::string out = "-";

    auto* solve = app.add_subcommand("solve", "solve the balance at c and report energies");
    solve->add_option("--c", c, "family parameter c > 1")->required();

    commands::SweepConfig sweep{1.0 + 1e-5, 1.1, 50, commands::SweepSpacing::logEps, 0.0, 0};
    std::string spacing = "logEps";
    auto* sweepCmd = app.add_subcommand("sweep", "tabulate the family over a c-grid as CSV");
    sweepCmd->add_option("--c-min", sweep.cMin, "smallest c")->required();
    sweepCmd->add_option("--c-max", sweep.cMax, "largest c")->required();
    sweepCmd->add_option("--steps", sweep.steps, "number of grid points")->required();
    sweepCmd->add_option("--spacing", spacing, "linear or logEps (logarithmic in c - 1)")
        ->check(CLI::IsMember({"linear", "logEps"}));
    sweepCmd->add_option("--threads", sweep.threads, "worker threads (0 = all cores)");
    sweepCmd->add_option("--out", out, "output path, - for stdout");

    commands::ProfileRequest profile;
    std::string which = "torus";
    std::size_t samples = 512;
    auto* profileCmd = app.add_subcommand("profile", "sample a meridian as CSV (t,f,g,marker)");
    profileCmd->add_option("--c", profile.c, "family parameter (torus, sphere)");
    profileCmd->add_option("--which", which, "torus, sphere, unduloid or nodoid")
        ->check(CLI::IsMember({"torus", "sphere", "unduloid", "nodoid"}));
    profileCmd->add_option("--samples", samples, "approximate number of samples (>= 16)");
    profileCmd->add_option("--a", profile.a, "semi-axis a (unduloid, nodoid)");
    profileCmd->add_option("--b", profile.b, "semi-axis b (unduloid, nodoid)");
    profileCmd->add_option("--periods", profile.periods, "periods (unduloid, nodoid)");
    profileCmd->add_option("--out", out, "output path, - for stdout");

    std::size_t u = 256, v = 128;
    auto* meshCmd = app.add_subcommand("mesh", "triangulate a torus or sphere as OBJ");
    meshCmd->add_option("--c", c, "family parameter c > 1")->required();
    meshCmd->add_option("--which", which, "torus or sphere")
        ->check(CLI::IsMember({"torus", "sphere"}));
    meshCmd->add_option("--u", u, "samples along the meridian (>= 8)");
    meshCmd->add_option("--v", v, "angular steps (>= 8)");
    meshCmd->add_option("--out", out, "output path, - for stdout");

    double k = 0.5;
    auto* ellipticCmd = app.add_subcommand("elliptic", "complete elliptic integrals K(k), E(k)");
    ellipticCmd->add_option("--k", k, "modulus 0 <= k < 1")->required();

    std::string level = "fast";
    std::string reportPath;
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
    verify->add_option("--report", reportPath, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what());
    }

    try {
        if (*solve) {
            const auto report = commands::cmdSolve(c, commands::defaultRelTol());
            std::cout << commands::toJson(report).dump(2) << '\n';
        } else if (*sweepCmd) {
            sweep.spacing = spacing == "linear" ? commands::SweepSpacing::linear
                                                : commands::SweepSpacing::logEps;
            sweep.relTol = commands::defaultRelTol();
            const auto rows = commands::runSweep(sweep);
            withOutput(out, [&](std::ostream& os) { commands::writeSweepCsv(os, rows); });
        } else if (*profileCmd) {
            if (samples < 16) throw DomainError("--samples must be at least 16");
            profile.which = kinds.at(which);
            const auto curve = commands::buildProfile(profile);
            withOutput(out, [&](std::ostream& os) {
                commands::writeProfileCsv(os, curve.sampleTotal(samples));
            });
        } else if (*meshCmd) {
            const auto m = commands::buildMesh(c, kinds.at(which), u, v);
            withOutput(out, [&](std::ostream& os) { mesh::writeObj(os, m); });
        } else if (*ellipticCmd) {
            const auto r = commands::cmdElliptic(k);
            std::cout << "{\"k\": " << format::number(r.k) << ", \"k_prime\": "
                      << format::number(r.kPrime) << ", \"K\": " << format::number(r.bigK)
                      << ", \"E\": " << format::number(r.bigE) << "}\n";
        } else if (*verify) {
            const auto report = verification::runAcceptance(
                level == "full" ? verification::Level::full : verification::Level::fast);
            for (const auto& check : report.checks)
                std::cout << verification::formatLine(check) << '\n';
            std::cout << report.failures() << " of " << report.checks.size() << " checks failed in "
                      << format::number(report.seconds) << " s\n";
            if (!reportPath.empty())
                withOutput(reportPath, [&](std::ostream& os) {
                    os << verification::toJson(report).dump(2) << '\n';
                });
            if (report.failures() != 0)
                return fail("verification", std::to_string(report.failures()) + " checks failed");
        }
    } catch (const Error& e) {
        return fail(e.kind(), e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
    return 0;
}
