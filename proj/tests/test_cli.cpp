#include "cli.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wzpi;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "wzpi");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("wzpi_test_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("list") {
    const Run r = run({"list"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("65-8") != std::string::npos);
    CHECK(r.out.find("example-1") != std::string::npos);
    const Run j = run({"list", "--json"});
    CHECK(j.code == kExitOk);
    CHECK(nlohmann::json::parse(j.out).is_object());
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"prove", "--example", "1", "--bogus"}).code == kExitUsage);
    CHECK(run({"prove", "--example", "1", "--digits", "0"}).code == kExitUsage);
    CHECK(run({"prove", "--example", "9"}).code == kExitUsage);
    CHECK(run({"prove", "--example", "1", "--k-range", "5..2"}).code == kExitUsage);
    CHECK(run({"prove", "--task", testing::data_file("malformed.task")}).code == kExitUsage);
    CHECK(run({"prove", "--task", testing::data_file("missing.task")}).code == kExitUsage);
    CHECK(run({"eval", "no-such-series"}).code == kExitUsage);
}

TEST_CASE("prove Example 1") {
    const Run r = run({"prove", "--example", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("fully-validated") != std::string::npos);
    const Run f = run({"prove", "--example", "1", "--max-order", "2"});
    CHECK(f.code == kExitVerificationFailed);
    CHECK(f.out.find("failed(no-telescoper)") != std::string::npos);
}

TEST_CASE("prove a task file") {
    const Run r = run({"prove", "--task", testing::data_file("example1.task"), "--json"});
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["status"] == "fully-validated");
}

TEST_CASE("JSON output round-trips byte for byte") {
    const Run a = run({"prove", "--example", "1", "--json"});
    REQUIRE(a.code == kExitOk);
    CHECK(nlohmann::json::parse(a.out).dump(2) + "\n" == a.out);
    const std::string path = temp_path("report.json");
    const Run b = run({"prove", "--example", "1", "--json", "--out", path});
    CHECK(b.code == kExitOk);
    CHECK(slurp(path) == a.out);
    std::filesystem::remove(path);
}

TEST_CASE("telescope and verify-cert") {
    const std::string cert = temp_path("binomial.cert");
    const Run t = run({"telescope", "--term", testing::data_file("binomial.term"), "--out", cert});
    REQUIRE(t.code == kExitOk);
    CHECK(run({"verify-cert", cert}).code == kExitOk);

    std::string text = slurp(cert);
    const auto pos = text.find("P0: -2");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 6, "P0: -3");
    const std::string bad = temp_path("perturbed.cert");
    std::ofstream(bad) << text;
    const Run v = run({"verify-cert", bad});
    CHECK(v.code == kExitVerificationFailed);
    CHECK(run({"verify-cert", temp_path("absent.cert")}).code == kExitUsage);
    std::filesystem::remove(cert);
    std::filesystem::remove(bad);
}

TEST_CASE("eval") {
    const Run s = run({"eval", "65-8", "--digits", "40"});
    CHECK(s.code == kExitOk);
    const Run w = run({"eval", "--term", testing::data_file("anchor.term"), "--weighted", "5", "42", "1/64"});
    CHECK(w.code == kExitOk);
    CHECK(w.out.find("16/pi") != std::string::npos);
    const Run d = run({"eval", "--term", testing::data_file("anchor.term"), "--weighted", "1", "4", "-1"});
    CHECK(d.code == kExitVerificationFailed);
    const Run wrong = run({"eval", "65-8", "--closed", "9*sqrt(7)/pi+1"});
    CHECK(wrong.code != kExitOk);
    CHECK(run({"eval", "65-8", "--closed", "10/pi"}).code == kExitVerificationFailed);
}
