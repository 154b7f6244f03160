#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ygraph/cli.hpp"

using namespace ygraph;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ygraph");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("jacobian closed --json") {
    const Run r = run({"jacobian", "--n", "5", "--k", "1", "--l", "1", "--m", "1", "--method", "closed", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["invariant_factors"] == nlohmann::json({"33", "33", "33", "165"}));
    CHECK(j["free_rank"] == 0);
    CHECK(j["order"] == "5929605");
    CHECK(j["method"] == "closed");
    CHECK(j["params"]["n"] == 5);
    CHECK(!j.contains("timing_ms"));
    // Re-serialising the parsed object gives back the same bytes.
    CHECK(nlohmann::ordered_json::parse(r.out).dump() + "\n" == r.out);
}

TEST_CASE("jacobian errors use exit code 2") {
    const Run r = run({"jacobian", "--n", "6", "--k", "2", "--l", "2", "--m", "4"});
    CHECK(r.code == kExitInvalidInput);
    CHECK(r.err.find("disconnected: gcd(k,l,m,n)=2") != std::string::npos);
    CHECK(run({"jacobian", "--n", "6", "--k", "1", "--l", "2", "--m", "2", "--method", "closed"}).code == 2);
    CHECK(run({"jacobian", "--n", "6", "--k", "1", "--l", "1", "--m", "1", "--method", "bogus"}).code == 2);
    CHECK(run({"jacobian", "--n", "6"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("jacobian routes print the same group") {
    const std::vector<std::string> base{"jacobian", "--n", "6", "--k", "2", "--l", "2", "--m", "3", "--json"};
    auto with = [&](const std::string& method) {
        auto args = base;
        args.push_back("--method");
        args.push_back(method);
        return nlohmann::json::parse(run(args).out);
    };
    CHECK(with("snf")["invariant_factors"] == with("reduced")["invariant_factors"]);
}

TEST_CASE("trees") {
    const Run k = run({"trees", "--n", "4", "--k", "1", "--l", "1", "--m", "1", "--method", "kirchhoff"});
    CHECK(k.code == 0);
    CHECK(k.out == "218700\n");

    const Run res = run({"trees", "--n", "10", "--k", "1", "--l", "1", "--m", "2", "--method", "resultant", "--json"});
    const Run che = run({"trees", "--n", "10", "--k", "1", "--l", "1", "--m", "2", "--method", "chebyshev", "--json"});
    const auto jr = nlohmann::json::parse(res.out);
    const auto jc = nlohmann::json::parse(che.out);
    CHECK(jr["value"].is_string());
    CHECK(jr["value"] == jc["value"]);
    CHECK(jc.contains("precision_bits"));
    CHECK(!jr.contains("precision_bits"));

    const Run closed = run({"trees", "--n", "2", "--k", "1", "--l", "1", "--m", "1", "--method", "closed"});
    CHECK(closed.code == 2);
    CHECK(closed.err.find("n >= 4") != std::string::npos);
}

TEST_CASE("output is deterministic; timing only on request") {
    const std::vector<std::string> args{"trees", "--n", "12", "--k", "1", "--l", "2", "--m", "3", "--method", "chebyshev", "--json"};
    CHECK(run(args).out == run(args).out);
    auto timed = args;
    timed.push_back("--timing");
    CHECK(nlohmann::json::parse(run(timed).out).contains("timing_ms"));
}

TEST_CASE("asymptotics") {
    const Run r = run({"asymptotics", "--k", "1", "--l", "1", "--m", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::stod(j["values"]["A_roots"].get<std::string>()) == doctest::Approx(22.7697).epsilon(1e-5));
    CHECK(std::stod(j["values"]["A_integral"].get<std::string>()) == doctest::Approx(22.7697).epsilon(1e-5));
    CHECK(run({"asymptotics", "--k", "1", "--l", "2", "--m", "2"}).out.find("23.5623") != std::string::npos);
    CHECK(run({"asymptotics", "--k", "2", "--l", "2", "--m", "4"}).code == 2);
}

TEST_CASE("sweep") {
    const std::string path = "sweep_test_out.csv";
    const Run r = run({"sweep", "--k", "1", "--l", "1", "--m", "1", "--n-from", "4", "--n-to", "8", "--out", path});
    REQUIRE(r.code == 0);
    const auto lines = lines_of(path);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "n,tau,jacobian,ratio");
    CHECK(lines[1].starts_with("4,218700,3 3 3 45 180,"));
    CHECK(lines[2].starts_with("5,5929605,33 33 33 165,"));
    CHECK(lines[3].starts_with("6,149299200,"));

    double previous = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const double ratio = std::stod(lines[i].substr(lines[i].rfind(',') + 1));
        CHECK(ratio > previous);
        CHECK(ratio < 1.0);
        previous = ratio;
    }

    CHECK(run({"sweep", "--k", "1", "--l", "1", "--m", "1", "--n-from", "8", "--n-to", "4", "--out", path}).code == 0);
    CHECK(lines_of(path) == std::vector<std::string>{"n,tau,jacobian,ratio"});
    std::remove(path.c_str());

    CHECK(run({"sweep", "--k", "1", "--l", "1", "--m", "1", "--n-from", "4", "--n-to", "5", "--out", "/nonexistent/dir/x.csv"})
              .code == 2);
    // gcd(k,l,m) > 1: no growth constant, ratio is NA.
    const Run na = run({"sweep", "--k", "2", "--l", "2", "--m", "2", "--n-from", "5", "--n-to", "5"});
    CHECK(na.out.find(",NA\n") != std::string::npos);
}

TEST_CASE("verify") {
    const Run ok = run({"verify", "--max-n", "5"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);
    CHECK(run({"verify", "--max-n", "3"}).out.find("tree:enumeration") != std::string::npos);
    CHECK(run({"verify", "--max-n", "20"}).code == 2);
}
