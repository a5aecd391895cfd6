#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracle.hpp"
#include "unimod/cache.hpp"
#include "unimod/checksum.hpp"
#include "unimod/errors.hpp"
#include "unimod/product.hpp"
#include "unimod/run.hpp"

using namespace unimod;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("unimod_test_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

RunConfig config(std::string command) {
    RunConfig c;
    c.command = std::move(command);
    c.threads = 2;
    return c;
}

}  // namespace

TEST_CASE("cache round trip, missing entry and corruption") {
    TempDir tmp;
    CoefficientCache cache(tmp.path / "nested");
    const ProductSpec spec = MainFamily{5};
    CHECK_FALSE(cache.load(spec).has_value());

    const Polynomial b5 = build_product(spec);
    cache.store(spec, b5);
    CHECK(fs::exists(cache.entry_path(spec)));
    CHECK(fs::exists(cache.checksum_path(spec)));
    CHECK(cache.entry_path(spec).filename() == "main_5.csv");
    const auto loaded = cache.load(spec);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == b5);

    // Large coefficients survive as decimal strings.
    const ProductSpec big = MainFamily{60};
    cache.store(big, build_product(big));
    CHECK(cache.load(big).value() == build_product(big));

    {
        std::fstream f(cache.entry_path(spec), std::ios::in | std::ios::out);
        f.seekp(2);
        f.put('9');
    }
    CHECK_THROWS_AS((void)cache.load(spec), CacheCorrupt);

    cache.store(spec, b5);
    fs::remove(cache.checksum_path(spec));
    CHECK_THROWS_AS((void)cache.load(spec), CacheCorrupt);

    // A matching checksum over unparseable text is still corrupt.
    const ProductSpec other = MainFamily{1};
    cache.store(other, build_product(other));
    {
        std::ofstream f(cache.entry_path(other), std::ios::trunc);
        f << "garbage\n";
    }
    {
        std::ofstream f(cache.checksum_path(other), std::ios::trunc);
        f << to_hex(fnv1a64("garbage\n")) << "\n";
    }
    CHECK_THROWS_AS((void)cache.load(other), CacheCorrupt);
}

TEST_CASE("expand writes the coefficient dump") {
    auto cfg = config("expand");
    cfg.n = {0};
    cfg.out = "-";
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == exit_ok);
    CHECK(out.str() == "0,1\n1,1\n2,1\n3,1\n");
    CHECK(err.str().empty());

    cfg.n = {3};
    cfg.family = "borwein";
    out.str("");
    CHECK(run(cfg, out, err) == exit_ok);
    std::istringstream in(out.str());
    const Polynomial p = read_coefficients(in);
    const auto oracle_coeffs = oracle::expand({{-1, 1}, {-1, 2}, {-1, 4}, {-1, 5}, {-1, 7}, {-1, 8}, {-1, 10}, {-1, 11}});
    CHECK(p == Polynomial(oracle_coeffs));
}

TEST_CASE("report envelope and exit codes") {
    auto cfg = config("verify");
    cfg.n_max = 20;
    std::ostringstream out, err;
    CHECK(run(cfg, out, err) == exit_ok);
    const auto report = Json::parse(out.str());
    CHECK(report["metadata"]["version"] == std::string(version));
    CHECK(report["metadata"]["config"]["command"] == "verify");
    CHECK(report["metadata"].contains("timestamp"));
    CHECK(report["results"].size() == 42);
    CHECK(report["results"][1]["kind"] == "unimodal");
    CHECK(report["results"][1]["n"] == 0);

    auto failing = config("verify");
    failing.family = "odd";
    failing.n = {27};
    CHECK(execute(failing).status == exit_check_failed);
    failing.A = 3;
    CHECK(execute(failing).status == exit_ok);

    auto bad = config("verify");
    bad.n_min = 5;
    bad.n_max = 4;
    CHECK(run(bad, out, err) == exit_invalid_config);
    CHECK_THROWS_AS((void)execute(config("frobnicate")), InvalidConfig);
    auto bad_family = config("verify");
    bad_family.family = "cubic";
    CHECK_THROWS_AS((void)execute(bad_family), InvalidConfig);
    auto bad_grid = config("certify");
    bad_grid.bound = "E";
    bad_grid.grid_points = 10;
    CHECK_THROWS_AS((void)execute(bad_grid), InvalidConfig);
    auto bad_bound = config("certify");
    bad_bound.bound = "Z";
    CHECK_THROWS_AS((void)execute(bad_bound), InvalidConfig);
    auto no_n = config("expand");
    CHECK_THROWS_AS((void)execute(no_n), InvalidConfig);
    auto lemma0 = config("lemma");
    lemma0.n = {0};
    CHECK_THROWS_AS((void)execute(lemma0), InvalidConfig);

    auto b = config("borwein");
    b.n_max = 10;
    CHECK(execute(b).status == exit_ok);
}

TEST_CASE("status reflects failed and inconclusive certificates") {
    auto cfg = config("certify");
    cfg.bound = "gamma";
    CHECK(execute(cfg).status == exit_ok);

    // Below the threshold f exceeds 0.851, a definite failure.
    cfg.bound = "f";
    cfg.n_min = 100;
    cfg.n_max = 200;
    CHECK(execute(cfg).status == exit_check_failed);
}

TEST_CASE("commands are idempotent and cache-independent") {
    TempDir tmp;
    auto cfg = config("verify");
    cfg.n_max = 30;
    const auto cold_uncached = execute(cfg).results.dump();
    cfg.cache_dir = tmp.path;
    const auto cold = execute(cfg);
    CHECK(cold.warnings.empty());
    CHECK(fs::exists(tmp.path / "main_30.csv"));
    const auto warm = execute(cfg);
    CHECK(warm.results.dump() == cold.results.dump());
    CHECK(cold_uncached == cold.results.dump());

    auto lemma = config("lemma");
    lemma.n_max = 30;
    lemma.cache_dir = tmp.path;
    CHECK(execute(lemma).results.dump() == execute(lemma).results.dump());

    // Different thread counts, same report.
    auto one = cfg;
    one.threads = 1;
    CHECK(execute(one).results.dump() == cold.results.dump());

    // A damaged entry is reported, rebuilt and rewritten.
    {
        std::ofstream f(tmp.path / "main_12.csv", std::ios::app);
        f << "999,1\n";
    }
    const auto repaired = execute(cfg);
    REQUIRE(repaired.warnings.size() == 1);
    CHECK(repaired.warnings.front().find("main_12") != std::string::npos);
    CHECK(repaired.results.dump() == cold.results.dump());
    CHECK(execute(cfg).warnings.empty());

    // Report files: identical results sections across runs.
    auto e = config("certify");
    e.bound = "E";
    e.n = {168};
    e.grid_points = 2000;
    e.report = (tmp.path / "a.json").string();
    e.out = (tmp.path / "a.csv").string();
    std::ostringstream out, err;
    CHECK(run(e, out, err) == exit_ok);
    CHECK(out.str().empty());
    const auto first = Json::parse(std::ifstream(e.report))["results"].dump();
    std::ifstream csv(e.out);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "theta,exponent,bound");
    CHECK(run(e, out, err) == exit_ok);
    CHECK(Json::parse(std::ifstream(e.report))["results"].dump() == first);
}

TEST_CASE("sweep-f and trig outputs") {
    auto f = config("sweep-f");
    f.n_min = 168;
    f.n_max = 170;
    const auto r = execute(f);
    CHECK(r.status == exit_ok);
    CHECK(r.csv.rfind("n,f_value\n168,8.50237946", 0) == 0);
    CHECK(r.results.size() == 3);

    auto t = config("trig");
    t.samples = 200;
    t.trig_grid = 1000;
    const auto tr = execute(t);
    CHECK(tr.status == exit_ok);
    CHECK(tr.results.size() == 7);
    t.seed = 2;
    CHECK(execute(t).status == exit_ok);
}
