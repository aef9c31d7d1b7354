// Acceptance gate: one line per criterion, nonzero exit iff any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "weylheat/cli.hpp"
#include "weylheat/suites.hpp"

using namespace weylheat;

namespace {

int failures = 0;

void report_line(int index, const std::string& label, bool pass, double seconds,
                 const std::string& detail) {
    std::printf("%s criterion %2d: %s (%.2f s)%s\n", pass ? "PASS" : "FAIL", index, label.c_str(),
                seconds, detail.empty() ? "" : ("  [" + detail + "]").c_str());
    if (!pass) ++failures;
}

void run_criterion(int index, const std::string& label, double time_limit,
                   const std::function<std::vector<Report>()>& fn) {
    auto start = std::chrono::steady_clock::now();
    std::vector<Report> reps;
    std::string detail;
    bool pass = true;
    try {
        reps = fn();
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const Report& rep : reps) {
        for (const CheckRecord& rec : rep.records) {
            if (!rec.pass) {
                pass = false;
                if (detail.size() < 240)
                    detail += rep.suite + "/" + rec.check + "=" + std::to_string(rec.statistic) + " ";
            }
        }
    }
    if (seconds > time_limit) {
        pass = false;
        detail += "over time limit " + std::to_string(time_limit) + "s";
    }
    report_line(index, label, pass, seconds, detail);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    const std::uint64_t seed = 0xC0FFEEULL;
    suites::SuiteOptions opts;
    opts.seed = seed;

    run_criterion(1, "group and character census", 1.0,
                  [&] { return std::vector<Report>{suites::suite_census()}; });

    run_criterion(2, "orthant product formula vs group sum (<= 1e-12)", 5.0,
                  [&] { return std::vector<Report>{suites::suite_product_equivalence(seed, 100)}; });

    run_criterion(3, "dihedral closed forms vs group sums (<= 1e-12)", 5.0,
                  [&] { return std::vector<Report>{suites::suite_dihedral_equivalence(seed, 100)}; });

    run_criterion(4, "Carslaw-Jaeger cross-oracle (<= 1e-8 of trivial scale)", 30.0,
                  [&] { return std::vector<Report>{suites::suite_cj_cross({3, 4, 6}, seed, 50)}; });

    run_criterion(5, "kernel boundary conditions on all facets", 10.0,
                  [&] { return std::vector<Report>{suites::suite_boundary(seed)}; });

    run_criterion(6, "heat-equation FD residual (<= 1e-5)", 10.0,
                  [&] { return std::vector<Report>{suites::suite_residual(seed, 50)}; });

    run_criterion(7, "mass properties (conservation, range, monotonicity, erf)", 20.0,
                  [&] { return std::vector<Report>{suites::suite_mass(seed)}; });

    run_criterion(8, "small-time localization (<= 1e-6 outside-ball mass)", 20.0,
                  [&] { return std::vector<Report>{suites::suite_localization(seed, 10)}; });

    run_criterion(9, "Chapman-Kolmogorov residual (<= 1e-7)", 60.0,
                  [&] { return std::vector<Report>{suites::suite_ck(seed)}; });

    run_criterion(10, "operator identities H1 (<= 1e-7) and H2/H3 (<= 1e-11)", 60.0, [&] {
        return std::vector<Report>{suites::suite_pairing(seed), suites::suite_intertwining(seed)};
    });

    run_criterion(11, "Monte-Carlo Neumann oracle (95% of bins within 4 sigma)", 120.0,
                  [&] { return std::vector<Report>{suites::suite_mc_neumann(opts)}; });

    run_criterion(12, "Monte-Carlo Dirichlet mass (3 sigma + 0.01 bias allowance)", 120.0,
                  [&] { return std::vector<Report>{suites::suite_mc_dirichlet(opts)}; });

    // Criterion 13: byte-identical JSON reports across repeated CLI runs.
    {
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string detail;
        try {
            namespace fs = std::filesystem;
            fs::path dir = fs::temp_directory_path() / "weylheat-determinism";
            fs::create_directories(dir);
            std::vector<std::vector<std::string>> invocations;
            for (const std::string& s : suites::verify_suite_names())
                invocations.push_back({"weylheat", "verify", "--suite", s, "--seed", "42",
                                       "--mc-samples", "100000", "--mc-dirichlet-samples", "20000",
                                       "--mc-steps", "1000"});
            for (const std::string& s : suites::checks_suite_names())
                invocations.push_back({"weylheat", "checks", "--suite", s, "--seed", "42"});
            int idx = 0;
            for (auto inv : invocations) {
                fs::path a = dir / ("run" + std::to_string(idx) + "a.json");
                fs::path b = dir / ("run" + std::to_string(idx) + "b.json");
                for (const fs::path& p : {a, b}) {
                    std::vector<std::string> args = inv;
                    args.push_back("--output");
                    args.push_back(p.string());
                    std::vector<const char*> argv;
                    for (const std::string& s : args) argv.push_back(s.c_str());
                    int rc = cli::run(static_cast<int>(argv.size()), argv.data());
                    if (rc != 0) {
                        pass = false;
                        detail += inv[3] + " rc=" + std::to_string(rc) + " ";
                    }
                }
                if (slurp(a) != slurp(b)) {
                    pass = false;
                    detail += inv[3] + " not byte-identical ";
                }
                ++idx;
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report_line(13, "deterministic CLI reports (fixed seed, repeated runs)", pass, seconds, detail);
    }

    if (failures == 0) std::printf("all 13 acceptance criteria passed\n");
    return failures;
}
