#include "unimod/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "unimod/analytic.hpp"
#include "unimod/cache.hpp"
#include "unimod/checksum.hpp"
#include "unimod/errors.hpp"
#include "unimod/product.hpp"
#include "unimod/trig.hpp"
#include "unimod/verify.hpp"

namespace unimod {

namespace {

constexpr double pi = std::numbers::pi;

[[noreturn]] void invalid(const std::string& what) { throw InvalidConfig(what); }

unsigned thread_count(const RunConfig& cfg) {
    return cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
}

// Requested n values in ascending order without repeats.
std::vector<std::int64_t> n_values(const RunConfig& cfg, std::int64_t default_min, std::int64_t default_max,
                                   std::int64_t lowest) {
    std::vector<std::int64_t> ns;
    if (!cfg.n.empty()) {
        ns = cfg.n;
    } else {
        const std::int64_t lo = cfg.n_min.value_or(default_min);
        const std::int64_t hi = cfg.n_max.value_or(default_max);
        if (lo > hi) invalid("n_min (" + std::to_string(lo) + ") exceeds n_max (" + std::to_string(hi) + ")");
        for (std::int64_t n = lo; n <= hi; ++n) ns.push_back(n);
    }
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (ns.front() < lowest) invalid(cfg.command + ": n must be >= " + std::to_string(lowest));
    return ns;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Runs task(i) for i in [0, count) on a small pool and rethrows the first
// exception after all workers finish.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& task) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        task(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
    }
    if (failure) std::rethrow_exception(failure);
}

// --- polynomial sources --------------------------------------------------

enum class Family { main, odd, borwein, almkvist };

Family parse_family(const std::string& name) {
    if (name == "main") return Family::main;
    if (name == "odd") return Family::odd;
    if (name == "borwein") return Family::borwein;
    if (name == "almkvist") return Family::almkvist;
    invalid("unknown family '" + name + "' (expected main, odd, borwein or almkvist)");
}

ProductSpec spec_of(Family f, std::int64_t n, std::int64_t r) {
    const auto un = static_cast<std::size_t>(n);
    switch (f) {
        case Family::main: return MainFamily{un};
        case Family::odd: return odd_parts_family(un);
        case Family::borwein: return borwein_family(un);
        case Family::almkvist: return AlmkvistFamily{static_cast<std::size_t>(r), un};
    }
    return MainFamily{un};
}

// Yields the family's polynomials for ascending n. Incremental families are
// extended one factor group at a time from the last polynomial produced;
// cached entries are used where present and stored where missing.
class PolynomialSource {
public:
    PolynomialSource(Family family, std::int64_t r, const RunConfig& cfg, std::vector<std::string>& warnings)
        : family_(family), r_(r), warnings_(warnings) {
        if (cfg.cache_dir) cache_.emplace(*cfg.cache_dir);
    }

    Polynomial get(std::int64_t n) {
        const ProductSpec spec = spec_of(family_, n, r_);
        std::optional<Polynomial> p;
        if (cache_) {
            try {
                p = cache_->load(spec);
            } catch (const CacheCorrupt& e) {
                warnings_.push_back(std::string(e.what()) + "; rebuilding " + family_key(spec));
            }
        }
        if (!p) {
            p = build(n, spec);
            if (cache_) cache_->store(spec, *p);
        }
        if (family_ != Family::almkvist) {
            prev_ = *p;
            prev_n_ = n;
        }
        return std::move(*p);
    }

private:
    Polynomial build(std::int64_t n, const ProductSpec& spec) {
        if (family_ == Family::almkvist) return build_product(spec);
        if (prev_n_ < 0 || prev_n_ > n) {
            prev_ = family_ == Family::odd ? Polynomial::one() : build_product(spec_of(family_, 0, r_));
            prev_n_ = 0;
        }
        while (prev_n_ < n) {
            const auto k = static_cast<std::size_t>(++prev_n_);
            switch (family_) {
                case Family::main: prev_ = recurrence_step(prev_, k); break;
                case Family::odd: prev_ = mul_binomial(std::move(prev_), Sign::plus, 2 * k - 1); break;
                case Family::borwein:
                    prev_ = mul_binomial(std::move(prev_), Sign::minus, 3 * k + 1);
                    prev_ = mul_binomial(std::move(prev_), Sign::minus, 3 * k + 2);
                    break;
                case Family::almkvist: break;
            }
        }
        return prev_;
    }

    Family family_;
    std::int64_t r_;
    std::vector<std::string>& warnings_;
    std::optional<CoefficientCache> cache_;
    Polynomial prev_;
    std::int64_t prev_n_ = -1;
};

using PolyCheck = std::function<std::vector<Json>(std::int64_t n, const Polynomial& p)>;

// Builds polynomials sequentially and checks each batch in a worker pool.
Json sweep(Family family, std::int64_t r, const std::vector<std::int64_t>& ns, const RunConfig& cfg,
           std::vector<std::string>& warnings, const PolyCheck& check) {
    PolynomialSource source(family, r, cfg, warnings);
    const unsigned threads = thread_count(cfg);
    const std::size_t batch = 2 * static_cast<std::size_t>(threads);
    Json results = Json::array();
    for (std::size_t start = 0; start < ns.size(); start += batch) {
        const std::size_t end = std::min(ns.size(), start + batch);
        std::vector<Polynomial> polys;
        for (std::size_t i = start; i < end; ++i) polys.push_back(source.get(ns[i]));
        std::vector<std::vector<Json>> out(polys.size());
        parallel_for(polys.size(), threads, [&](std::size_t i) { out[i] = check(ns[start + i], polys[i]); });
        for (auto& group : out)
            for (auto& j : group) results.push_back(std::move(j));
    }
    return results;
}

CheckReport tagged(CheckReport r, std::int64_t n) {
    r.n = n;
    return r;
}

// --- commands ------------------------------------------------------------

RunResult cmd_expand(const RunConfig& cfg) {
    const Family family = parse_family(cfg.family);
    if (cfg.n.size() != 1) invalid("expand: give exactly one --n");
    const std::int64_t n = cfg.n.front();
    if (n < (family == Family::almkvist ? 1 : 0)) invalid("expand: n out of range");
    RunResult res;
    PolynomialSource source(family, cfg.r, cfg, res.warnings);
    const Polynomial p = source.get(n);
    std::ostringstream dump;
    write_coefficients(dump, p);
    res.csv = std::move(dump).str();
    CheckReport r;
    r.kind = "expand";
    r.n = n;
    r.details = family_key(spec_of(family, n, cfg.r)) + ": degree " + std::to_string(p.degree()) + ", dump fnv1a " +
                to_hex(fnv1a64(res.csv));
    res.results.push_back(to_json(r));
    return res;
}

RunResult cmd_verify(const RunConfig& cfg) {
    const Family family = parse_family(cfg.family);
    RunResult res;
    if (cfg.A < 0) invalid("verify: A must be >= 0");
    PolyCheck check;
    std::vector<std::int64_t> ns;
    switch (family) {
        case Family::main:
        case Family::almkvist:
            ns = family == Family::main ? n_values(cfg, 0, 167, 0) : n_values(cfg, 11, 40, 1);
            check = [](std::int64_t n, const Polynomial& p) {
                return std::vector<Json>{to_json(tagged(check_symmetric(p), n)),
                                         to_json(tagged(check_unimodal(p), n))};
            };
            break;
        case Family::odd: {
            // smallest n whose degree n^2 leaves room for the window
            std::int64_t first = 1;
            while (first * first < 2 * cfg.A) ++first;
            ns = n_values(cfg, first, 40, first);
            const auto A = static_cast<std::size_t>(cfg.A);
            check = [A](std::int64_t n, const Polynomial& p) {
                return std::vector<Json>{to_json(tagged(check_almost_unimodal(p, A), n))};
            };
            break;
        }
        case Family::borwein: invalid("verify: use the borwein command for the Borwein product");
    }
    if (family == Family::almkvist && cfg.r < 2) invalid("verify: r must be >= 2");
    res.results = sweep(family, cfg.r, ns, cfg, res.warnings, check);
    return res;
}

RunResult cmd_lemma(const RunConfig& cfg) {
    if (parse_family(cfg.family) != Family::main) invalid("lemma: only the main family");
    RunResult res;
    const auto ns = n_values(cfg, 1, 167, 1);
    res.results = sweep(Family::main, 0, ns, cfg, res.warnings, [](std::int64_t n, const Polynomial& p) {
        return std::vector<Json>{to_json(check_lemma_range(n, p))};
    });
    return res;
}

RunResult cmd_induction(const RunConfig& cfg) {
    RunResult res;
    const std::int64_t n_max = !cfg.n.empty() ? cfg.n.back() : cfg.n_max.value_or(167);
    if (n_max < 0) invalid("induction: n_max must be >= 0");
    res.results.push_back(to_json(replay_induction(n_max)));
    return res;
}

RunResult cmd_borwein(const RunConfig& cfg) {
    RunResult res;
    const auto ns = n_values(cfg, 0, 60, 0);
    res.results = sweep(Family::borwein, 0, ns, cfg, res.warnings, [](std::int64_t n, const Polynomial& p) {
        return std::vector<Json>{to_json(tagged(check_sign_pattern(p, "+--"), n))};
    });
    return res;
}

RunResult cmd_almkvist(const RunConfig& cfg) {
    if (cfg.r < 2) invalid("almkvist: r must be >= 2");
    RunResult res;
    const auto ns = n_values(cfg, 11, 40, 1);
    res.results = sweep(Family::almkvist, cfg.r, ns, cfg, res.warnings, [](std::int64_t n, const Polynomial& p) {
        return std::vector<Json>{to_json(tagged(check_symmetric(p), n)), to_json(tagged(check_unimodal(p), n))};
    });
    return res;
}

IntegralOptions integral_options(const RunConfig& cfg) {
    if (!(cfg.refine >= 1.0)) invalid("refine must be >= 1");
    IntegralOptions o;
    o.refine = cfg.refine;
    o.quadrature.threads = cfg.threads;
    return o;
}

RunResult cmd_certify(const RunConfig& cfg) {
    RunResult res;
    std::ostringstream csv;
    if (cfg.bound == "E") {
        if (cfg.grid_points < 1000) invalid("certify E: grid must have at least 1000 points");
        std::vector<std::int64_t> ns = cfg.n.empty() ? std::vector<std::int64_t>{168, 300, 1000, 5000} : cfg.n;
        if (cfg.n.empty() && (cfg.n_min || cfg.n_max)) ns = n_values(cfg, 168, 168, 1);
        for (auto n : ns)
            if (n < 1) invalid("certify E: n must be >= 1");
        const bool keep = !cfg.out.empty();
        if (keep && ns.size() != 1) invalid("certify E: CSV output needs exactly one n");
        if (keep) csv << "theta,exponent,bound\n";
        for (auto n : ns) {
            const auto e = certify_E_bound(n, cfg.grid_points, {}, keep);
            res.results.push_back(to_json(e.envelope));
            res.results.push_back(to_json(e.low_branch));
            res.results.push_back(to_json(e.high_branch));
            char line[96];
            for (const auto& s : e.samples) {
                std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", s.theta, s.exponent, s.bound);
                csv << line;
            }
        }
    } else if (cfg.bound == "i2") {
        const auto ns = cfg.n.empty() && !cfg.n_min && !cfg.n_max ? std::vector<std::int64_t>{168}
                                                                    : n_values(cfg, 168, 168, 1);
        const auto opts = integral_options(cfg);
        for (auto n : ns) {
            const std::vector<double> mus =
                cfg.mu.empty() ? std::vector<double>{1.0, 6.0 * static_cast<double>(n) + 3.0} : cfg.mu;
            for (double mu : mus) res.results.push_back(to_json(i2_ratio_check(n, mu, opts)));
        }
    } else if (cfg.bound == "gamma") {
        res.results.push_back(to_json(certify_gamma_tail()));
    } else if (cfg.bound == "f") {
        const auto lo = cfg.n_min.value_or(168), hi = cfg.n_max.value_or(5000);
        if (lo < 1 || lo > hi) invalid("certify f: need 1 <= n_min <= n_max");
        const auto chain = certify_f_chain(lo, hi);
        res.results.push_back(to_json(chain.below_ceiling));
        res.results.push_back(to_json(chain.log_derivative));
        res.results.push_back(to_json(chain.strictly_decreasing));
    } else {
        invalid("certify: --bound must be one of E, i2, gamma, f");
    }
    res.csv = std::move(csv).str();
    return res;
}

// Every coefficient of B_n from the integral, against the exact value.
CheckReport reconstruction_report(std::int64_t n, const Polynomial& p, const IntegralOptions& opts) {
    CheckReport r;
    r.kind = "integral_reconstruction";
    r.n = n;
    double worst = 0.0;
    std::int64_t worst_m = 0;
    for (std::int64_t m = 0; m <= static_cast<std::int64_t>(p.degree()); ++m) {
        const double exact = coeff(p, m).get_d();
        const double approx = coeff_by_integral(n, m, opts);
        const double rel = std::abs(approx - exact) / std::max(1.0, std::abs(exact));
        if (rel > worst) {
            worst = rel;
            worst_m = m;
        }
        if (rel > 1e-6 && !r.first_violation) {
            r.first_violation = m;
            r.passed = false;
        }
    }
    r.details = "max relative error " + fmt(worst) + " at m = " + std::to_string(worst_m);
    return r;
}

// Sign of I_n(mu) against a_n(m) - a_n(m-1), m = (d_n - mu)/2, for every
// coefficient-valued mu in (0, 6n+3]. Pairs with a zero difference or an
// unresolved integral are not compared.
CheckReport sign_accord_report(std::int64_t n, const Polynomial& p, const IntegralOptions& opts) {
    CheckReport r;
    r.kind = "sign_accord";
    r.n = n;
    const std::int64_t d = 3 * (n + 1) * (n + 1);
    int compared = 0, zero_diff = 0, unresolved = 0;
    for (std::int64_t mu = 1; mu <= 6 * n + 3; ++mu) {
        if ((d - mu) % 2 != 0) continue;
        const std::int64_t m = (d - mu) / 2;
        const int diff = sgn(coeff(p, m) - coeff(p, m - 1));
        const auto q = quad_I(n, static_cast<double>(mu), 0.0, pi / 2, opts);
        if (std::abs(q.value) <= q.abs_error_estimate) {
            ++unresolved;
            continue;
        }
        if (diff == 0) {
            ++zero_diff;
            continue;
        }
        ++compared;
        const int sign = q.value > 0 ? 1 : -1;
        if (sign != diff && !r.first_violation) {
            r.passed = false;
            r.first_violation = m;
            r.details = "mu = " + std::to_string(mu) + ": I = " + fmt(q.value) + " but a(m) - a(m-1) has sign " +
                        std::to_string(diff) + "; ";
        }
    }
    r.details += std::to_string(compared) + " compared, " + std::to_string(zero_diff) + " zero differences, " +
                 std::to_string(unresolved) + " below the error estimate";
    return r;
}

RunResult cmd_integral(const RunConfig& cfg) {
    RunResult res;
    const auto opts = integral_options(cfg);
    if (cfg.mode == "coeff") {
        const auto ns = n_values(cfg, 0, 8, 0);
        res.results = sweep(Family::main, 0, ns, cfg, res.warnings, [&](std::int64_t n, const Polynomial& p) {
            return std::vector<Json>{to_json(reconstruction_report(n, p, opts))};
        });
    } else if (cfg.mode == "sign") {
        const auto ns = n_values(cfg, 0, 12, 0);
        res.results = sweep(Family::main, 0, ns, cfg, res.warnings, [&](std::int64_t n, const Polynomial& p) {
            return std::vector<Json>{to_json(sign_accord_report(n, p, opts))};
        });
    } else {
        invalid("integral: --mode must be coeff or sign");
    }
    return res;
}

BoundCertificate identity_certificate(TrigIdentity id, const RunConfig& cfg) {
    constexpr double tolerance = 1e-9;
    BoundCertificate c;
    c.bound_id = std::string(to_string(id));
    c.grid = {0.0, pi, cfg.samples};
    std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(id));
    std::uniform_int_distribution<std::int64_t> nd(1, 10000);
    std::uniform_real_distribution<double> xd(0.0, pi);
    double worst = 0.0;
    std::int64_t skipped = 0;
    for (std::int64_t done = 0; done < cfg.samples;) {
        const std::int64_t n = nd(rng);
        const double x = xd(rng);
        double res;
        try {
            res = std::abs(trig_identity_residual(id, n, x));
        } catch (const NearSingular&) {
            ++skipped;
            continue;
        }
        ++done;
        if (res >= worst) {
            worst = res;
            c.n = n;
            c.argmin = x;
        }
    }
    c.min_margin = tolerance - worst;
    c.passed = c.min_margin > 0.0;
    c.details = "max |residual| " + fmt(worst) + " over " + std::to_string(cfg.samples) + " samples (" +
                std::to_string(skipped) + " near-singular draws skipped)";
    return c;
}

BoundCertificate inequality_certificate(TrigInequality id, std::int64_t points) {
    constexpr double tolerance = 1e-12;
    BoundCertificate c;
    c.bound_id = std::string(to_string(id));
    c.error_budget = tolerance;
    c.min_margin = std::numeric_limits<double>::infinity();
    auto visit = [&](double x, std::int64_t n) {
        const double m = trig_inequality_margin(id, {x, n});
        if (m < c.min_margin) {
            c.min_margin = m;
            c.argmin = x;
            c.n = n;
        }
    };
    if (id == TrigInequality::sin_ratio_bound) {
        // n = 1..100 against midpoints of a grid on (0, 2 pi), which avoid multiples of pi
        const std::int64_t xs = std::max<std::int64_t>(1, points / 100);
        c.grid = {0.0, 2 * pi, xs * 100};
        for (std::int64_t n = 1; n <= 100; ++n)
            for (std::int64_t j = 0; j < xs; ++j) visit((static_cast<double>(j) + 0.5) * 2 * pi / static_cast<double>(xs), n);
    } else {
        double lo = 0.0, hi = 10.0;
        if (id == TrigInequality::sin_lower) hi = 2.0;
        if (id == TrigInequality::cos_lower) lo = -1.0, hi = 1.0;
        c.grid = {lo, hi, points};
        for (std::int64_t i = 0; i < points; ++i)
            visit(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1), 0);
    }
    c.passed = c.min_margin >= -tolerance;
    c.details = "minimum margin " + fmt(c.min_margin) + " at x = " + fmt(c.argmin);
    return c;
}

RunResult cmd_trig(const RunConfig& cfg) {
    if (cfg.samples < 1) invalid("trig: samples must be >= 1");
    if (cfg.trig_grid < 100) invalid("trig: grid must have at least 100 points");
    RunResult res;
    for (auto id : {TrigIdentity::sin2_sum, TrigIdentity::sin4_sum})
        res.results.push_back(to_json(identity_certificate(id, cfg)));
    for (auto id : {TrigInequality::sin_lower, TrigInequality::cos_lower, TrigInequality::sin_sandwich,
                    TrigInequality::cos_upper, TrigInequality::sin_ratio_bound})
        res.results.push_back(to_json(inequality_certificate(id, cfg.trig_grid)));
    return res;
}

RunResult cmd_sweep_f(const RunConfig& cfg) {
    RunResult res;
    const auto lo = cfg.n_min.value_or(168), hi = cfg.n_max.value_or(5000);
    if (lo < 1 || lo > hi) invalid("sweep-f: need 1 <= n_min <= n_max");
    const auto chain = certify_f_chain(lo, hi);
    res.results.push_back(to_json(chain.below_ceiling));
    res.results.push_back(to_json(chain.log_derivative));
    res.results.push_back(to_json(chain.strictly_decreasing));
    std::ostringstream csv;
    csv << "n,f_value\n";
    char line[64];
    for (std::int64_t n = lo; n <= hi; ++n) {
        // f(n) leaves the double range near n = 4600
        std::snprintf(line, sizeof line, "%lld,%.12Le\n", static_cast<long long>(n),
                      std::exp(static_cast<long double>(f_log_value(n))));
        csv << line;
    }
    res.csv = std::move(csv).str();
    return res;
}

int status_of(const Json& results) {
    bool failed = false, unsure = false;
    for (const auto& r : results) {
        if (r.value("passed", true)) continue;
        if (r.value("inconclusive", false))
            unsure = true;
        else
            failed = true;
    }
    return failed ? exit_check_failed : unsure ? exit_inconclusive : exit_ok;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + path + " for writing");
    f << content;
    if (!f.flush()) throw Error("write failed: " + path);
}

}  // namespace

Json to_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["family"] = c.family;
    j["n"] = c.n;
    j["n_min"] = c.n_min ? Json(*c.n_min) : Json(nullptr);
    j["n_max"] = c.n_max ? Json(*c.n_max) : Json(nullptr);
    j["r"] = c.r;
    j["A"] = c.A;
    j["bound"] = c.bound;
    j["mu"] = c.mu;
    j["grid_points"] = c.grid_points;
    j["samples"] = c.samples;
    j["trig_grid"] = c.trig_grid;
    j["seed"] = c.seed;
    j["mode"] = c.mode;
    j["refine"] = c.refine;
    j["out"] = c.out;
    j["report"] = c.report;
    j["cache_dir"] = c.cache_dir ? Json(c.cache_dir->string()) : Json(nullptr);
    j["threads"] = c.threads;
    return j;
}

RunResult execute(const RunConfig& cfg) {
    static const std::map<std::string, std::function<RunResult(const RunConfig&)>> commands{
        {"expand", cmd_expand},     {"verify", cmd_verify},     {"lemma", cmd_lemma},
        {"induction", cmd_induction}, {"borwein", cmd_borwein}, {"almkvist", cmd_almkvist},
        {"certify", cmd_certify},   {"integral", cmd_integral}, {"trig", cmd_trig},
        {"sweep-f", cmd_sweep_f},
    };
    const auto it = commands.find(cfg.command);
    if (it == commands.end()) invalid("unknown command '" + cfg.command + "'");
    for (auto n : cfg.n)
        if (n < 0) invalid("n must be >= 0");
    RunResult res;
    try {
        res = it->second(cfg);
    } catch (const std::invalid_argument& e) {
        invalid(e.what());
    }
    res.status = status_of(res.results);
    return res;
}

Json make_report(const RunConfig& config, const Json& results) {
    Json report;
    report["metadata"] = {{"version", std::string(version)}, {"config", to_json(config)}, {"timestamp", utc_timestamp()}};
    report["results"] = results;
    return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RunResult res;
    try {
        res = execute(config);
    } catch (const InvalidConfig& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_config;
    }
    for (const auto& w : res.warnings) err << "warning: " << w << '\n';

    if (config.out == "-")
        out << res.csv;
    else if (!config.out.empty())
        write_file(config.out, res.csv);

    const std::string report = make_report(config, res.results).dump(2) + "\n";
    if (!config.report.empty())
        write_file(config.report, report);
    else if (config.out != "-")
        out << report;
    return res.status;
}

}  // namespace unimod
