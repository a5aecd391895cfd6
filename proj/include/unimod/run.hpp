#pragma once

// Command pipelines behind the unimod tool. Each command turns a RunConfig
// into a list of CheckReport / BoundCertificate objects and optional CSV.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unimod/json_io.hpp"

namespace unimod {

inline constexpr std::string_view version = "0.1.0";

enum ExitStatus : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_invalid_config = 2,
    exit_inconclusive = 3,
};

struct RunConfig {
    /// expand, verify, lemma, induction, borwein, almkvist, certify,
    /// integral, trig, sweep-f
    std::string command;
    /// main, odd, borwein, almkvist
    std::string family = "main";
    /// Explicit n values; when empty the command sweeps [n_min, n_max].
    std::vector<std::int64_t> n;
    std::optional<std::int64_t> n_min;
    std::optional<std::int64_t> n_max;
    std::int64_t r = 3;
    std::int64_t A = 0;
    /// certify: E, i2, gamma, f
    std::string bound;
    /// certify --bound i2; default {1, 6n+3}.
    std::vector<double> mu;
    std::int64_t grid_points = 20000;
    std::int64_t samples = 1000;
    std::int64_t trig_grid = 10000;
    std::uint64_t seed = 1;
    /// integral: coeff (reconstruct every coefficient) or sign (derivative sign accord)
    std::string mode = "coeff";
    double refine = 1.0;
    /// CSV destination, "-" for standard output.
    std::string out;
    /// JSON report destination; empty means standard output unless the CSV
    /// is going there.
    std::string report;
    std::optional<std::filesystem::path> cache_dir;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

[[nodiscard]] Json to_json(const RunConfig& config);

struct RunResult {
    int status = exit_ok;
    Json results = Json::array();
    std::string csv;
    std::vector<std::string> warnings;
};

/// Runs the pipeline without writing report files. Throws InvalidConfig for
/// unusable configurations.
[[nodiscard]] RunResult execute(const RunConfig& config);

/// {metadata:{version, config, timestamp}, results}.
[[nodiscard]] Json make_report(const RunConfig& config, const Json& results);

/// execute() plus output: CSV to config.out, the JSON report to config.report
/// or `out`, warnings and errors to `err`. Returns an ExitStatus.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace unimod
