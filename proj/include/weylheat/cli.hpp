#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylheat/grid.hpp"
#include "weylheat/io.hpp"
#include "weylheat/suites.hpp"

namespace weylheat::cli {

namespace detail {

inline Vec parse_doubles(const std::string& s) {
    Vec out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

inline std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

/// Shared --system/--family flags and their resolution to a root system.
struct SystemArgs {
    std::string system_json;  // file path or inline JSON
    std::string family;
    int n = 0;
    int d = 0;
    std::string J;

    void attach(CLI::App* cmd) {
        cmd->add_option("--system", system_json, "root system as inline JSON or a path to a JSON file");
        cmd->add_option("--family", family, "root system family: dihedral | orthogonal");
        cmd->add_option("--n", n, "dihedral order (>= 3)");
        cmd->add_option("--d", d, "ambient dimension for the orthogonal family");
        cmd->add_option("--J", J, "comma-separated 1-based mirrored axes for the orthogonal family");
    }

    RootSystem resolve() const {
        if (!system_json.empty()) {
            std::string text = system_json;
            if (!text.empty() && text.front() != '{') {
                std::ifstream in(text);
                if (!in) throw std::invalid_argument("cannot open system file: " + text);
                std::ostringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            return load_system_json(json::parse(text));
        }
        if (family == "dihedral") return dihedral_roots(n);
        if (family == "orthogonal") {
            std::vector<int> axes = J.empty() ? std::vector<int>{} : parse_ints(J);
            if (axes.empty())
                for (int j = 1; j <= d; ++j) axes.push_back(j);
            return orthogonal_roots(d, axes);
        }
        throw std::invalid_argument("no root system given: use --system or --family");
    }
};

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("REFLECT_KERNEL_SEED")) return std::strtoull(env, nullptr, 10);
    return 0xC0FFEEULL;
}

inline void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << payload;
}

inline const TwoCharacter& need_character(const ReflectionGroup& w,
                                          const std::vector<TwoCharacter>& cs,
                                          const std::string& name) {
    const TwoCharacter* chi = resolve_character(w, cs, name);
    if (!chi) throw std::invalid_argument("unknown character '" + name + "' for this system");
    return *chi;
}

struct GridArgs {
    std::string kind = "tensor";
    double lo = 0.25, hi = 3.0;
    int per_axis = 24;
    double rmin = 0.25, rmax = 3.0;
    int nr = 20, ntheta = 12;

    void attach(CLI::App* cmd) {
        cmd->add_option("--grid", kind, "grid geometry: tensor | polar");
        cmd->add_option("--lo", lo, "tensor grid lower bound (all axes)");
        cmd->add_option("--hi", hi, "tensor grid upper bound (all axes)");
        cmd->add_option("--gn", per_axis, "tensor grid nodes per axis");
        cmd->add_option("--rmin", rmin, "polar grid inner radius");
        cmd->add_option("--rmax", rmax, "polar grid outer radius");
        cmd->add_option("--nr", nr, "polar grid radial bins");
        cmd->add_option("--ntheta", ntheta, "polar grid angular bins");
    }

    GridField build(const RootSystem& rs) const {
        if (kind == "polar") return GridField::polar(rs, rmin, rmax, nr, ntheta);
        if (kind != "tensor") throw std::invalid_argument("unknown grid kind: " + kind);
        Vec l(static_cast<std::size_t>(rs.dimension), lo), h(static_cast<std::size_t>(rs.dimension), hi);
        return GridField::tensor(rs, l, h, per_axis);
    }
};

/// Named initial data for the solve subcommand.
inline std::function<double(const Vec&)> named_datum(const std::string& name, const Vec& center,
                                                     double width) {
    if (name == "one") return [](const Vec&) { return 1.0; };
    double a = 1.0 / (2.0 * width * width);
    if (name == "gauss")
        return [center, a](const Vec& y) { return std::exp(-a * norm_sq(y - center)); };
    if (name == "poly-gauss")
        return [center, a](const Vec& y) { return y[0] * std::exp(-a * norm_sq(y - center)); };
    throw std::invalid_argument("unknown initial datum: " + name + " (one | gauss | poly-gauss)");
}

}  // namespace detail

/// Entry point used by the binary and by tests; argv[0] is the program name.
inline int run(int argc, const char* const* argv) {
    CLI::App app{"finite reflection groups, symmetrized heat kernels, and their verification suites"};
    app.require_subcommand(1);

    detail::SystemArgs sys_group, sys_homs, sys_kernel, sys_grid, sys_solve;
    std::string out_group, out_homs, out_kernel, out_grid, out_solve, out_verify, out_checks;
    std::string format_homs = "table", format_group = "csv", format_grid = "csv", format_solve = "csv";

    // group
    CLI::App* cmd_group = app.add_subcommand("group", "generate the reflection group, dump as CSV");
    sys_group.attach(cmd_group);
    cmd_group->add_option("--format", format_group, "csv | json");
    cmd_group->add_option("--output", out_group, "output path (default stdout)");

    // homs
    CLI::App* cmd_homs = app.add_subcommand("homs", "enumerate the homomorphisms W -> {+-1}");
    sys_homs.attach(cmd_homs);
    cmd_homs->add_option("--format", format_homs, "table | json");
    cmd_homs->add_option("--output", out_homs, "output path (default stdout)");

    // kernel
    CLI::App* cmd_kernel = app.add_subcommand("kernel", "evaluate the symmetrized heat kernel");
    sys_kernel.attach(cmd_kernel);
    std::string kern_chi = "trivial", kern_x, kern_y;
    double kern_t = 1.0;
    cmd_kernel->add_option("--character", kern_chi, "character name or bit vector");
    cmd_kernel->add_option("--t", kern_t, "time parameter")->required();
    cmd_kernel->add_option("--x", kern_x, "comma-separated point in the chamber")->required();
    cmd_kernel->add_option("--y", kern_y, "comma-separated point in the chamber")->required();
    cmd_kernel->add_option("--output", out_kernel, "output path (default stdout)");

    // grid
    CLI::App* cmd_grid = app.add_subcommand("grid", "sample the kernel on a chamber grid, emit CSV");
    sys_grid.attach(cmd_grid);
    detail::GridArgs grid_args;
    grid_args.attach(cmd_grid);
    std::string grid_chi = "trivial", grid_y;
    double grid_t = 1.0;
    int grid_threads = 1;
    cmd_grid->add_option("--character", grid_chi, "character name or bit vector");
    cmd_grid->add_option("--t", grid_t, "time parameter")->required();
    cmd_grid->add_option("--y", grid_y, "source point")->required();
    cmd_grid->add_option("--threads", grid_threads, "fill threads");
    cmd_grid->add_option("--format", format_grid, "csv | json");
    cmd_grid->add_option("--output", out_grid, "output path (default stdout)");

    // solve
    CLI::App* cmd_solve = app.add_subcommand("solve", "apply the heat semigroup to initial data");
    sys_solve.attach(cmd_solve);
    detail::GridArgs solve_grid;
    solve_grid.attach(cmd_solve);
    std::string solve_chi = "trivial", solve_f = "gauss", solve_fc;
    double solve_t = 0.5, solve_fw = 0.5;
    int solve_threads = 1;
    cmd_solve->add_option("--character", solve_chi, "character name or bit vector");
    cmd_solve->add_option("--t", solve_t, "time parameter")->required();
    cmd_solve->add_option("--f", solve_f, "initial datum: one | gauss | poly-gauss");
    cmd_solve->add_option("--fc", solve_fc, "datum center (comma-separated)");
    cmd_solve->add_option("--fw", solve_fw, "datum width");
    cmd_solve->add_option("--threads", solve_threads, "fill threads");
    cmd_solve->add_option("--format", format_solve, "csv | json");
    cmd_solve->add_option("--output", out_solve, "output path (default stdout)");

    // verify / checks
    suites::SuiteOptions opts;
    opts.seed = detail::default_seed();
    std::string verify_suite = "all", checks_suite = "all";
    std::vector<int> cj_ns = {3, 4, 6};

    CLI::App* cmd_verify = app.add_subcommand("verify", "run oracle verification suites, emit a JSON report");
    cmd_verify->add_option("--suite", verify_suite, "census | product-equivalence | dihedral-equivalence | cj-cross | bessel | pairing | intertwining | mc-neumann | mc-dirichlet | all");
    cmd_verify->add_option("--n", cj_ns, "dihedral orders for cj-cross");
    cmd_verify->add_option("--seed", opts.seed, "RNG seed (default env REFLECT_KERNEL_SEED)");
    cmd_verify->add_option("--mc-samples", opts.mc_samples, "folded-density sample count");
    cmd_verify->add_option("--mc-dirichlet-samples", opts.mc_dirichlet_samples, "killed-path sample count");
    cmd_verify->add_option("--mc-steps", opts.mc_steps, "killed-path Euler steps");
    cmd_verify->add_option("--threads", opts.threads, "Monte-Carlo threads");
    cmd_verify->add_option("--output", out_verify, "output path (default stdout)");

    CLI::App* cmd_checks = app.add_subcommand("checks", "run IBVP check suites, emit a JSON report");
    cmd_checks->add_option("--suite", checks_suite, "boundary | residual | mass | localization | ck | all");
    cmd_checks->add_option("--seed", opts.seed, "RNG seed (default env REFLECT_KERNEL_SEED)");
    cmd_checks->add_option("--output", out_checks, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_group->parsed()) {
            ReflectionGroup w = generate_group(sys_group.resolve());
            std::ostringstream os;
            if (format_group == "json")
                os << group_to_json(w).dump(2) << "\n";
            else
                dump_group_csv(os, w);
            detail::write_output(out_group, os.str());
            return 0;
        }
        if (cmd_homs->parsed()) {
            ReflectionGroup w = generate_group(sys_homs.resolve());
            auto cs = enumerate_characters(w);
            std::ostringstream os;
            if (format_homs == "json") {
                json arr = json::array();
                for (const TwoCharacter& c : cs) {
                    json rec;
                    rec["name"] = c.name;
                    rec["values"] = c.values;
                    rec["kernel_size"] = character_kernel(c).size();
                    arr.push_back(std::move(rec));
                }
                os << arr.dump(2) << "\n";
            } else {
                os << "name,values_on_simple_reflections,kernel_size\n";
                for (const TwoCharacter& c : cs) {
                    os << c.name << ",";
                    for (std::size_t k = 0; k < w.root_system().simple.size(); ++k) {
                        if (k) os << " ";
                        os << (c(w.simple_reflection(static_cast<int>(k))) == 1 ? "+1" : "-1");
                    }
                    os << "," << character_kernel(c).size() << "\n";
                }
            }
            detail::write_output(out_homs, os.str());
            return 0;
        }
        if (cmd_kernel->parsed()) {
            ReflectionGroup w = generate_group(sys_kernel.resolve());
            auto cs = enumerate_characters(w);
            const TwoCharacter& chi = detail::need_character(w, cs, kern_chi);
            SymmetrizedKernel k = heat_kernel(w, chi, kern_t);
            double v = k(detail::parse_doubles(kern_x), detail::parse_doubles(kern_y));
            detail::write_output(out_kernel, format_double(v) + "\n");
            return 0;
        }
        if (cmd_grid->parsed()) {
            ReflectionGroup w = generate_group(sys_grid.resolve());
            auto cs = enumerate_characters(w);
            const TwoCharacter& chi = detail::need_character(w, cs, grid_chi);
            SymmetrizedKernel k = heat_kernel(w, chi, grid_t);
            Vec y = detail::parse_doubles(grid_y);
            GridField g = grid_args.build(w.root_system());
            g.metadata = {"subcommand=grid", "character=" + chi.name, "t=" + format_double(grid_t),
                          "y=" + grid_y, "seed=" + std::to_string(detail::default_seed()),
                          "threads=" + std::to_string(grid_threads)};
            g.fill([&](const Vec& x) { return k(x, y); }, grid_threads);
            std::ostringstream os;
            if (format_grid == "json")
                os << grid_to_json(g).dump(2) << "\n";
            else
                g.write_csv(os);
            detail::write_output(out_grid, os.str());
            return 0;
        }
        if (cmd_solve->parsed()) {
            ReflectionGroup w = generate_group(sys_solve.resolve());
            auto cs = enumerate_characters(w);
            const TwoCharacter& chi = detail::need_character(w, cs, solve_chi);
            Vec center(static_cast<std::size_t>(w.dimension()), 1.0);
            if (!solve_fc.empty()) center = detail::parse_doubles(solve_fc);
            auto f = detail::named_datum(solve_f, center, solve_fw);
            GridField g = solve_grid.build(w.root_system());
            g.metadata = {"subcommand=solve", "character=" + chi.name, "t=" + format_double(solve_t),
                          "f=" + solve_f, "fw=" + format_double(solve_fw),
                          "seed=" + std::to_string(detail::default_seed()),
                          "threads=" + std::to_string(solve_threads)};
            g.fill([&](const Vec& x) { return solve_heat(w, chi, solve_t, x, f); }, solve_threads);
            std::ostringstream os;
            if (format_solve == "json")
                os << grid_to_json(g).dump(2) << "\n";
            else
                g.write_csv(os);
            detail::write_output(out_solve, os.str());
            return 0;
        }
        if (cmd_verify->parsed() || cmd_checks->parsed()) {
            bool is_verify = cmd_verify->parsed();
            std::string which = is_verify ? verify_suite : checks_suite;
            std::vector<std::string> names;
            if (which == "all")
                names = is_verify ? suites::verify_suite_names() : suites::checks_suite_names();
            else
                names.push_back(which);
            json combined = json::array();
            bool all_pass = true;
            for (const std::string& name : names) {
                Report rep = (name == "cj-cross") ? suites::suite_cj_cross(cj_ns, opts.seed)
                                                  : suites::run_suite(name, opts);
                all_pass = all_pass && rep.all_pass();
                combined.push_back(rep.to_json());
            }
            json out;
            out["seed"] = opts.seed;
            out["all_pass"] = all_pass;
            out["suites"] = std::move(combined);
            detail::write_output(is_verify ? out_verify : out_checks, out.dump(2) + "\n");
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace weylheat::cli
