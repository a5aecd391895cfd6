// unimod: exact and numerical checks for the products
// prod (1+q^{3k+1})(1+q^{3k+2}) and their relatives.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 invalid
// configuration, 3 a numerical certificate was inconclusive, 4 internal error.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "unimod/cache.hpp"
#include "unimod/run.hpp"

int main(int argc, char** argv) {
    unimod::RunConfig cfg;
    CLI::App app{"Unimodality checks for partition products"};
    app.set_version_flag("--version", std::string(unimod::version));

    app.add_option("command", cfg.command,
                   "expand | verify | lemma | induction | borwein | almkvist | certify | integral | trig | sweep-f")
        ->required()
        ->check(CLI::IsMember({"expand", "verify", "lemma", "induction", "borwein", "almkvist", "certify",
                               "integral", "trig", "sweep-f"}));
    app.add_option("--family", cfg.family, "main | odd | borwein | almkvist")->capture_default_str();
    app.add_option("--n", cfg.n, "explicit n values (repeatable)");
    app.add_option("--n-min", cfg.n_min, "first n of a sweep");
    app.add_option("--n-max", cfg.n_max, "last n of a sweep");
    app.add_option("--r", cfg.r, "Almkvist parameter r")->capture_default_str();
    app.add_option("-A,--A", cfg.A, "coefficients ignored at each end (odd family)")->capture_default_str();
    app.add_option("--bound", cfg.bound, "certify target: E | i2 | gamma | f");
    app.add_option("--mu", cfg.mu, "mu values for --bound i2");
    app.add_option("--grid", cfg.grid_points, "theta grid points for --bound E")->capture_default_str();
    app.add_option("--samples", cfg.samples, "random identity samples for trig")->capture_default_str();
    app.add_option("--trig-grid", cfg.trig_grid, "grid points per inequality for trig")->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed for trig")->capture_default_str();
    app.add_option("--mode", cfg.mode, "integral: coeff | sign")->capture_default_str();
    app.add_option("--refine", cfg.refine, "quadrature panel refinement factor (>= 1)")->capture_default_str();
    app.add_option("--out", cfg.out, "CSV output file, - for stdout");
    app.add_option("--report", cfg.report, "JSON report file (default stdout)");
    app.add_option("--cache-dir", cfg.cache_dir, "coefficient cache directory")->envname(unimod::cache_dir_env);
    app.add_option("--threads", cfg.threads, "worker threads, 0 = all cores")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : unimod::exit_invalid_config;
    }

    try {
        return unimod::run(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
