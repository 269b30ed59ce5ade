#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "json.hpp"

#include "projclose/errors.hpp"
#include "projclose/report.hpp"
#include "projclose/subplane.hpp"

using namespace projclose;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

BasisSpec basis(long a1, long a2, long a3, long b1, long b2, long b3, long c1, long c2,
                long c3) {
    return {rational_triple(a1, a2, a3), rational_triple(b1, b2, b3),
            rational_triple(c1, c2, c3)};
}

fs::path temp_file(const std::string& tag) {
    return fs::temp_directory_path() /
           ("projclose_cli_" + std::to_string(::getpid()) + "_" + tag);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

struct CliResult {
    int exit_code;
    std::string out;
};

// Runs the installed binary through the shell; stderr is dropped so ctest
// logs stay readable.
CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(PROJCLOSE_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = ::pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), std::move(out)};
}

CliResult run_cli_env(const std::string& env, const std::string& args) {
    const std::string cmd =
        env + " " + std::string(PROJCLOSE_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = ::pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), std::move(out)};
}

} // namespace

TEST_CASE("parse_coordinate handles integers, fractions and whitespace") {
    CHECK(cli::parse_coordinate("3", false) == ExactScalar(3));
    CHECK(cli::parse_coordinate(" -7 ", false) == ExactScalar(-7));
    CHECK(cli::parse_coordinate("-4/6", false) == ExactScalar::parse("-2/3"));
    CHECK(cli::parse_coordinate("10/5", false) == ExactScalar(2));

    CHECK_THROWS_AS(cli::parse_coordinate("", false), Error);
    CHECK_THROWS_AS(cli::parse_coordinate("  ", false), Error);
    CHECK_THROWS_AS(cli::parse_coordinate("abc", false), Error);
    CHECK_THROWS_AS(cli::parse_coordinate("1/0", false), Error);
    CHECK_THROWS_AS(cli::parse_coordinate("1.5x", true), Error);
    CHECK_THROWS_AS(cli::parse_coordinate(".", true), Error);
}

TEST_CASE("float coordinates are gated behind approx_floats") {
    CHECK_THROWS_AS(cli::parse_coordinate("0.5", false), Error);
    try {
        cli::parse_coordinate("0.5", false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse_error);
    }

    std::string warning;
    CHECK(cli::parse_coordinate("0.5", true, &warning) == ExactScalar::parse("1/2"));
    CHECK(warning == "approximated 0.5 as 1/2");
    CHECK(cli::parse_coordinate("1e-3", true, &warning) == ExactScalar::parse("1/1000"));
    CHECK(warning == "approximated 0.5 as 1/2; approximated 1e-3 as 1/1000");
}

TEST_CASE("basis and quadrangle strings split on semicolons") {
    const BasisSpec b = cli::parse_basis("1,0,0; 0,1,0 ;0,1,1", false);
    CHECK(b.u[0] == ExactScalar(1));
    CHECK(b.v[1] == ExactScalar(1));
    CHECK(b.w[2] == ExactScalar(1));
    CHECK_THROWS_AS(cli::parse_basis("1,0,0;0,1,0", false), Error);
    CHECK_THROWS_AS(cli::parse_basis("1,0;0,1,0;0,0,1", false), Error);

    const auto q = cli::parse_quadrangle("1,0,0;0,1,0;0,0,1;1,1,1", false);
    CHECK(q[3][0] == ExactScalar(1));
    CHECK_THROWS_AS(cli::parse_quadrangle("1,0,0;0,1,0;0,0,1", false), Error);
}

TEST_CASE("command names round-trip") {
    for (const char* name : {"closure", "classify", "density", "verify", "moebius"})
        CHECK(std::string(cli::to_string(cli::parse_command(name))) == name);
    CHECK_THROWS_AS(cli::parse_command("meow"), Error);
}

TEST_CASE("closure reports land in the output file with a CSV sibling") {
    const fs::path out = temp_file("closure.json");
    const fs::path sibling = temp_file("closure.points.csv");

    cli::RunConfig config;
    config.command = cli::Command::closure;
    config.basis = basis(1, 0, 0, 0, 1, 0, 0, 1, 1);
    config.output = out.string();
    REQUIRE(cli::run(config) == 0);

    const json j = json::parse(slurp(out));
    CHECK(j["config"]["command"] == "closure");
    CHECK(j["config"]["basis"] == "1,0,0;0,1,0;0,1,1");
    CHECK(j["classification"]["kind"] == "degenerate_five_point");
    CHECK(j["classification"]["witness"] == 0);
    CHECK(j["stabilized"] == true);
    CHECK(j["cap_hit"] == "none");
    REQUIRE(j["trace"].size() == 3);
    CHECK(j["trace"][0]["points"] == 3);
    CHECK(j["trace"][1]["points"] == 5);
    CHECK(j["trace"][2]["new_points"] == 0);
    CHECK_FALSE(j["trace"][0].contains("ms"));
    CHECK_FALSE(j.contains("density"));
    CHECK_FALSE(j.contains("axioms"));

    // the sibling CSV mirrors the store exactly
    const std::vector<std::string> rows = lines_of(slurp(sibling));
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "level,x1,x2,x3");
    const ClosureResult res = run_closure(*config.basis);
    for (std::size_t i = 0; i < res.store.size(); ++i) {
        const HPoint& p = res.store.point(i);
        const std::string want = std::to_string(res.store.level(i)) + "," +
                                 p.x1().get_str() + "," + p.x2().get_str() + "," +
                                 p.x3().get_str();
        CHECK(rows[i + 1] == want);
    }

    fs::remove(out);
    fs::remove(sibling);
}

TEST_CASE("timings are opt in") {
    const fs::path out = temp_file("timed.json");
    cli::RunConfig config;
    config.command = cli::Command::closure;
    config.basis = basis(1, 0, 0, 0, 1, 0, 0, 0, 1);
    config.output = out.string();
    config.include_timings = true;
    REQUIRE(cli::run(config) == 0);
    const json j = json::parse(slurp(out));
    CHECK(j["config"]["timings"] == true);
    CHECK(j["trace"][0].contains("ms"));
    fs::remove(out);
    fs::remove(temp_file("timed.points.csv"));
}

TEST_CASE("density and verify attach their sections") {
    const fs::path dout = temp_file("density.json");
    cli::RunConfig dconf;
    dconf.command = cli::Command::density;
    dconf.basis = basis(1, 0, 0, 1, 1, 0, 1, 1, 1);
    dconf.caps = ClosureCaps{4, 100000};
    dconf.samples = 500;
    dconf.output = dout.string();
    REQUIRE(cli::run(dconf) == 0);
    const json dj = json::parse(slurp(dout));
    REQUIRE(dj.contains("density"));
    REQUIRE(dj["density"].size() == 4);
    CHECK(dj["density"][0].contains("covering_radius"));
    CHECK(dj["density"][0].contains("min_separation"));
    CHECK(dj["config"]["samples"] == 500);
    fs::remove(dout);
    fs::remove(temp_file("density.points.csv"));

    const fs::path vout = temp_file("verify.json");
    cli::RunConfig vconf;
    vconf.command = cli::Command::verify;
    vconf.basis = basis(1, 0, 0, 0, 1, 0, 0, 1, 1);
    vconf.samples = 250;
    vconf.seed = 9;
    vconf.output = vout.string();
    REQUIRE(cli::run(vconf) == 0);
    const json vj = json::parse(slurp(vout));
    REQUIRE(vj.contains("axioms"));
    CHECK(vj["axioms"]["p1_checked"] == 250);
    CHECK(vj["axioms"]["p1_failures"] == 0);
    CHECK(vj["axioms"]["p2_failures"] == 0);
    CHECK(vj["axioms"]["p3_found"] == false);
    CHECK(vj["axioms"]["ortho_failures"] == 0);
    CHECK_FALSE(fs::exists(temp_file("verify.points.csv")));  // verify has no store
    fs::remove(vout);
}

TEST_CASE("moebius rounds come from the level cap") {
    const fs::path out = temp_file("moebius.json");
    cli::RunConfig config;
    config.command = cli::Command::moebius;
    config.quadrangle = std::array<RationalTriple, 4>{
        rational_triple(1, 0, 0), rational_triple(0, 1, 0), rational_triple(0, 0, 1),
        rational_triple(1, 1, 1)};
    config.caps.max_level = 2;
    config.output = out.string();
    REQUIRE(cli::run(config) == 0);
    const json j = json::parse(slurp(out));
    REQUIRE(j["trace"].size() == 3);
    CHECK(j["trace"][2]["points"] == 13);
    const std::vector<std::string> rows = lines_of(slurp(temp_file("moebius.points.csv")));
    CHECK(rows.size() == 14);
    fs::remove(out);
    fs::remove(temp_file("moebius.points.csv"));
}

TEST_CASE("run reports failures through exit codes") {
    cli::RunConfig bad;
    bad.command = cli::Command::classify;
    bad.basis = basis(1, 0, 0, 0, 1, 0, 1, 1, 0);  // dependent
    CHECK(cli::run(bad) == 2);

    cli::RunConfig missing;
    missing.command = cli::Command::closure;
    CHECK(cli::run(missing) == 2);

    cli::RunConfig badfmt;
    badfmt.command = cli::Command::classify;
    badfmt.basis = basis(1, 0, 0, 0, 1, 0, 0, 0, 1);
    badfmt.format = cli::OutputFormat::csv;
    CHECK(cli::run(badfmt) == 2);

    const fs::path out = temp_file("capped.json");
    cli::RunConfig capped;
    capped.command = cli::Command::closure;
    capped.basis = basis(1, 0, 0, 1, 1, 0, 1, 1, 1);
    capped.caps = ClosureCaps{6, 50};
    capped.output = out.string();
    CHECK(cli::run(capped) == 3);
    const json j = json::parse(slurp(out));  // report still lands on a cap abort
    CHECK(j["cap_hit"] == "point_cap");
    CHECK(j["trace"].size() == 4);
    fs::remove(out);
    fs::remove(temp_file("capped.points.csv"));
}

TEST_CASE("csv format writes the point table itself") {
    const fs::path out = temp_file("points.csv");
    cli::RunConfig config;
    config.command = cli::Command::closure;
    config.basis = basis(1, 0, 0, 0, 1, 0, 0, 1, 1);
    config.format = cli::OutputFormat::csv;
    config.output = out.string();
    REQUIRE(cli::run(config) == 0);
    const std::vector<std::string> rows = lines_of(slurp(out));
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "level,x1,x2,x3");
    CHECK(rows[1] == "1,1,0,0");
    fs::remove(out);
}

TEST_CASE("cli: closure run and frozen trace") {
    const CliResult r = run_cli("closure --basis \"1,0,0;1,1,0;1,1,1\" --levels 4");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["classification"]["kind"] == "dense_infinite");
    REQUIRE(j["trace"].size() == 4);
    const std::uint64_t expect[] = {3, 6, 11, 24};
    for (std::size_t i = 0; i < 4; ++i) CHECK(j["trace"][i]["points"] == expect[i]);
    CHECK(j["cap_hit"] == "level_cap");
}

TEST_CASE("cli: identical configurations give identical bytes") {
    const std::string args = "density --basis \"1,0,0;1,1,0;1,1,1\" --levels 4 --samples 400";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    const CliResult one = run_cli(args + " --threads 1");
    const CliResult four = run_cli(args + " --threads 4");
    CHECK(one.out == four.out);
    CHECK(one.out == a.out);

    const CliResult env_threads = run_cli_env("PROJCLOSE_THREADS=4", args);
    CHECK(env_threads.out == one.out);

    const CliResult scalar = run_cli_env("PROJCLOSE_KERNEL=scalar", args);
    CHECK(scalar.out == one.out);
}

TEST_CASE("cli: csv to stdout") {
    const CliResult r = run_cli("closure --basis \"1,0,0;0,1,0;0,1,1\" --format csv");
    REQUIRE(r.exit_code == 0);
    const std::vector<std::string> rows = lines_of(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "level,x1,x2,x3");
}

TEST_CASE("cli: error paths exit with 2 and cap aborts with 3") {
    CHECK(run_cli("classify --basis \"1,0,0;0,1,0;1,1,0\"").exit_code == 2);
    CHECK(run_cli("classify --basis \"1,0,0;0,1,0;0,0,1\" --format csv").exit_code == 2);
    CHECK(run_cli("closure --basis \"1,0,0;bogus;0,0,1\"").exit_code == 2);
    CHECK(run_cli("closure").exit_code == 2);  // --basis is required
    CHECK(run_cli("closure --basis \"1,0,0;1,1,0;1,1,1\" --no-such-flag").exit_code == 2);
    CHECK(run_cli("moebius --quadrangle \"1,0,0;0,1,0;1,1,0;1,1,1\"").exit_code == 2);
    CHECK(run_cli("closure --basis \"1,0,0;1,1,0;1,1,1\" --max-points 50").exit_code == 3);
}

TEST_CASE("cli: float coordinates require the flag") {
    CHECK(run_cli("classify --basis \"0.5,0,0;0,1,0;0,1,1\"").exit_code == 2);
    const CliResult ok =
        run_cli("classify --basis \"0.5,0,0;0,1,0;0,1,1\" --approx-floats");
    REQUIRE(ok.exit_code == 0);
    const json j = json::parse(ok.out);
    CHECK(j["classification"]["kind"] == "degenerate_five_point");
    CHECK(j["config"]["basis"] == "1/2,0,0;0,1,0;0,1,1");
}

TEST_CASE("cli: timings flag adds per-level wall time") {
    const CliResult r = run_cli("closure --basis \"1,0,0;0,1,0;0,0,1\" --timings");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["trace"][0].contains("ms"));
}

TEST_CASE("cli: help is not an error") {
    CHECK(run_cli("--help").exit_code == 0);
    const CliResult r = run_cli("closure --help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("--basis") != std::string::npos);
}
