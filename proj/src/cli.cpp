#include "ygraph/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "ygraph/asymptotics.hpp"
#include "ygraph/error.hpp"
#include "ygraph/jacobian.hpp"
#include "ygraph/oracles.hpp"
#include "ygraph/spanning_trees.hpp"

namespace ygraph {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    long n = 0;
    long k = 1;
    long l = 1;
    long m = 1;
    std::string method;
    bool json = false;
    bool timing = false;
    PrecisionBits precision = 0;
    long n_from = 0;
    long n_to = -1;
    std::string out_path;
    long max_n = 0;
};

// Raised for input problems that are not library errors (bad method names,
// range rules of the closed forms in the CLI, I/O).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PrecisionBits precision_cap() {
    if (const char* env = std::getenv("YGRAPH_MAX_PRECISION")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 64) throw UsageError("YGRAPH_MAX_PRECISION must be an integer >= 64");
        return static_cast<PrecisionBits>(v);
    }
    return kDefaultPrecisionCap;
}

Json params_json(const YGraphParams& p) { return Json{{"n", p.n()}, {"k", p.k()}, {"l", p.l()}, {"m", p.m()}}; }

Json factors_json(const AbelianGroup& g) {
    Json arr = Json::array();
    for (const auto& d : g.invariant_factors()) arr.push_back(to_decimal(d));
    return arr;
}

std::string factors_text(const AbelianGroup& g) {
    std::string s;
    for (const auto& d : g.invariant_factors()) {
        if (!s.empty()) s += ' ';
        s += to_decimal(d);
    }
    return s;
}

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

bool is_y111(const YGraphParams& p) { return p.k() == 1 && p.l() == 1 && p.m() == 1; }

void require_closed_range(const YGraphParams& p) {
    if (!is_y111(p)) throw UsageError("closed form requires k=l=m=1");
    if (p.n() < 4) throw UsageError("closed form requires n >= 4");
}

int cmd_jacobian(const Config& c, std::ostream& out) {
    const YGraphParams p = validate_params(c.n, c.k, c.l, c.m);
    const std::string method = c.method.empty() ? "reduced" : c.method;
    Stopwatch clock;
    AbelianGroup g;
    if (method == "snf") {
        g = jacobian_of(p, JacobianRoute::full);
    } else if (method == "reduced") {
        g = jacobian_of(p, JacobianRoute::reduced);
    } else {
        require_closed_range(p);
        g = jacobian_y111_closed(p.n());
    }
    const double ms = clock.elapsed_ms();

    if (c.json) {
        Json j{{"params", params_json(p)},
               {"method", method},
               {"invariant_factors", factors_json(g)},
               {"free_rank", g.free_rank()},
               {"order", to_decimal(g.order())}};
        if (c.timing) j["timing_ms"] = ms;
        out << j.dump() << '\n';
    } else {
        out << "Jac(" << p << ") via " << method << '\n';
        out << "invariant factors: " << factors_text(g) << '\n';
        out << "free rank: " << g.free_rank() << '\n';
        out << "order: " << to_decimal(g.order()) << '\n';
        if (c.timing) out << "timing_ms: " << ms << '\n';
    }
    return kExitOk;
}

int cmd_trees(const Config& c, std::ostream& out) {
    const YGraphParams p = validate_params(c.n, c.k, c.l, c.m);
    const std::string method = c.method.empty() ? "resultant" : c.method;
    Stopwatch clock;
    BigInt value;
    std::optional<PrecisionBits> bits;
    if (method == "kirchhoff") {
        value = tree_count_kirchhoff(p);
    } else if (method == "resultant") {
        value = tree_count_resultant(p);
    } else if (method == "chebyshev") {
        const auto report =
            tree_count_chebyshev(p, c.precision > 0 ? c.precision : kDefaultPrecision, precision_cap());
        value = report.value;
        bits = report.precision_used;
    } else {
        require_closed_range(p);
        value = tree_count_y111_closed(p.n());
    }
    const double ms = clock.elapsed_ms();

    if (c.json) {
        Json j{{"params", params_json(p)}, {"method", method}, {"value", to_decimal(value)}};
        if (bits) j["precision_bits"] = *bits;
        if (c.timing) j["timing_ms"] = ms;
        out << j.dump() << '\n';
    } else {
        out << to_decimal(value) << '\n';
        if (bits) out << "precision_bits: " << *bits << '\n';
        if (c.timing) out << "timing_ms: " << ms << '\n';
    }
    return kExitOk;
}

int cmd_asymptotics(const Config& c, std::ostream& out) {
    if (c.k < 1 || c.l < 1 || c.m < 1) throw UsageError("jumps must be positive");
    const PrecisionBits bits = c.precision > 0 ? c.precision : kMahlerPrecision;
    Stopwatch clock;
    const MahlerReport r = mahler_roots(c.k, c.l, c.m, bits);
    const double ms = clock.elapsed_ms();
    const BigFloat diff = abs(r.a_roots - r.a_integral);
    const long denom = c.k * c.k + c.l * c.l + c.m * c.m;
    const std::string formula = "tau(n) ~ n/" + std::to_string(denom) + " * A^n";
    constexpr int kDigits = 20;

    if (c.json) {
        Json j{{"params", Json{{"k", c.k}, {"l", c.l}, {"m", c.m}}},
               {"method", "mahler"},
               {"values",
                Json{{"A_roots", r.a_roots.to_string(kDigits)},
                     {"A_integral", r.a_integral.to_string(kDigits)},
                     {"difference", diff.to_string(6)}}},
               {"prefactor", formula},
               {"precision_bits", r.precision}};
        if (c.timing) j["timing_ms"] = ms;
        out << j.dump() << '\n';
    } else {
        out << "A (roots)    = " << r.a_roots.to_string(kDigits) << '\n';
        out << "A (integral) = " << r.a_integral.to_string(kDigits) << '\n';
        out << "difference   = " << diff.to_string(6) << '\n';
        out << formula << '\n';
        if (c.timing) out << "timing_ms: " << ms << '\n';
    }
    return kExitOk;
}

struct SweepRow {
    BigInt tau;
    AbelianGroup jacobian;
    std::string ratio;
};

int cmd_sweep(const Config& c, std::ostream& out) {
    std::vector<YGraphParams> params;
    for (long n = c.n_from; n <= c.n_to; ++n) params.push_back(validate_params(n, c.k, c.l, c.m));
    const bool has_ratio = std::gcd(std::gcd(c.k, c.l), c.m) == 1;

    std::vector<SweepRow> rows(params.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(params.size());
    {
        const unsigned workers =
            std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(params.size())));
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers && !params.empty(); ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < params.size(); i = next++) {
                    try {
                        const YGraphParams& p = params[i];
                        SweepRow& row = rows[i];
                        row.tau = tree_count_resultant(p);
                        row.jacobian = jacobian_of(p, JacobianRoute::reduced);
                        if (has_ratio) {
                            // Uses the jump values as given, not the reduced ones,
                            // so A is the same for every row.
                            const BigFloat estimate = asymptotic_estimate(c.k, c.l, c.m, p.n());
                            row.ratio = (BigFloat(row.tau, estimate.precision()) / estimate).to_string(12);
                        } else {
                            row.ratio = "NA";
                        }
                    } catch (...) {
                        failures[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto& f : failures)
        if (f) std::rethrow_exception(f);

    std::ostringstream csv;
    csv << "n,tau,jacobian,ratio\n";
    for (std::size_t i = 0; i < params.size(); ++i)
        csv << params[i].n() << ',' << to_decimal(rows[i].tau) << ',' << factors_text(rows[i].jacobian) << ','
            << rows[i].ratio << '\n';

    if (c.out_path.empty()) {
        out << csv.str();
    } else {
        std::ofstream file(c.out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open " + c.out_path + " for writing");
        file << csv.str();
        if (!file.flush()) throw UsageError("failed writing " + c.out_path);
        if (!c.json) out << "wrote " << params.size() << " rows to " << c.out_path << '\n';
    }
    if (c.json && !c.out_path.empty())
        out << Json{{"params", Json{{"k", c.k}, {"l", c.l}, {"m", c.m}, {"n_from", c.n_from}, {"n_to", c.n_to}}},
                    {"method", "sweep"},
                    {"rows", params.size()},
                    {"path", c.out_path}}
                   .dump()
            << '\n';
    return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
    if (c.max_n < 2) throw UsageError("--max-n must be at least 2");
    if (c.max_n > kConsistencyMaxN) throw UsageError("--max-n is limited to " + std::to_string(kConsistencyMaxN));
    Stopwatch clock;
    const ConsistencyReport report = consistency_suite(c.max_n);
    const double ms = clock.elapsed_ms();

    const ConsistencyEntry* first_failure = nullptr;
    for (const auto& e : report.entries)
        if (!e.all_passed && first_failure == nullptr) first_failure = &e;

    if (c.json) {
        Json entries = Json::array();
        for (const auto& e : report.entries) {
            Json routes = Json::object();
            for (const auto& [name, value] : e.route_values) routes[name] = value;
            entries.push_back(Json{{"params", params_json(e.params)},
                                   {"checks_run", e.checks_run},
                                   {"all_passed", e.all_passed},
                                   {"values", routes},
                                   {"failures", e.failures}});
        }
        Json j{{"params", Json{{"max_n", c.max_n}}},
               {"method", "verify"},
               {"all_passed", report.all_passed},
               {"checks_run", report.checks_run},
               {"entries", entries}};
        if (c.timing) j["timing_ms"] = ms;
        out << j.dump() << '\n';
    } else {
        for (const auto& e : report.entries) {
            out << e.params << ": " << e.checks_run << " checks " << (e.all_passed ? "ok" : "FAILED") << '\n';
            for (const auto& [name, value] : e.route_values) out << "  " << name << " = " << value << '\n';
        }
        if (report.all_passed)
            out << "all checks passed (" << report.checks_run << " checks, " << report.entries.size()
                << " graphs)\n";
        if (c.timing) out << "timing_ms: " << ms << '\n';
    }
    if (first_failure != nullptr) {
        err << "verification failed for " << first_failure->params << ": " << first_failure->failures.front()
            << '\n';
        return kExitVerificationFailure;
    }
    return kExitOk;
}

bool is_input_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::BadSize:
        case ErrorKind::LoopEdge:
        case ErrorKind::DisconnectedGraph:
        case ErrorKind::OutOfStatedRange:
        case ErrorKind::BadGcd:
        case ErrorKind::TooLarge:
            return true;
        default:
            return false;
    }
}

void add_params(CLI::App* cmd, Config& c, bool with_n) {
    if (with_n) cmd->add_option("--n", c.n, "number of vertices per segment")->required();
    cmd->add_option("--k", c.k, "jump of the first outer segment")->required();
    cmd->add_option("--l", c.l, "jump of the second outer segment")->required();
    cmd->add_option("--m", c.m, "jump of the third outer segment")->required();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Jacobian groups, spanning-tree counts and growth constants of Y-graphs"};
    app.require_subcommand(1);
    app.add_flag("--json", c.json, "structured output");
    app.add_flag("--timing", c.timing, "report wall-clock time");
    app.add_option("--precision", c.precision, "starting precision in bits")->check(CLI::Range(16, 1 << 20));

    auto* jac = app.add_subcommand("jacobian", "invariant factors of the Jacobian group");
    add_params(jac, c, true);
    jac->add_option("--method", c.method, "snf | reduced | closed")
        ->check(CLI::IsMember({"snf", "reduced", "closed"}));

    auto* trees = app.add_subcommand("trees", "number of spanning trees");
    add_params(trees, c, true);
    trees->add_option("--method", c.method, "kirchhoff | resultant | chebyshev | closed")
        ->check(CLI::IsMember({"kirchhoff", "resultant", "chebyshev", "closed"}));

    auto* asym = app.add_subcommand("asymptotics", "growth constant A by roots and by quadrature");
    add_params(asym, c, false);

    auto* sweep = app.add_subcommand("sweep", "CSV table of tau and Jac over a range of n");
    add_params(sweep, c, false);
    sweep->add_option("--n-from", c.n_from)->required();
    sweep->add_option("--n-to", c.n_to)->required();
    sweep->add_option("--out", c.out_path, "output file (stdout if omitted)");

    auto* verify = app.add_subcommand("verify", "cross-check every route for all graphs up to --max-n");
    verify->add_option("--max-n", c.max_n)->required();

    // Global flags are accepted after the subcommand as well.
    for (auto* sub : {jac, trees, asym, sweep, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalidInput;
    }

    try {
        if (*jac) return cmd_jacobian(c, out);
        if (*trees) return cmd_trees(c, out);
        if (*asym) return cmd_asymptotics(c, out);
        if (*sweep) return cmd_sweep(c, out);
        return cmd_verify(c, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? kExitInvalidInput : kExitVerificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailure;
    }
}

}  // namespace ygraph
