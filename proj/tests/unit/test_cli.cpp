#include <doctest.h>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "akb/cli.hpp"
#include "akb/error.hpp"
#include "akb/json_io.hpp"

using namespace akb;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "akb");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::vector<std::string> kSmall{"--e", "4", "--charge", "1,0,2", "--lambda", "((1,1),(2),(2,1))"};
const std::vector<std::string> kCore{"--e", "5", "--charge=0,-2,1", "--lambda", "((4,3,1),(4,2^3),(3,2))"};

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("caps parsing") {
    const Caps c = parse_caps("n=5,delta=3");
    CHECK(c.max_n == 5);
    CHECK(c.max_delta == 3);
    CHECK(c.max_r == 3);
    CHECK(parse_caps("e=4", c).max_n == 5);
    CHECK_THROWS_AS(parse_caps("x=1"), InputError);
    CHECK_THROWS_AS(parse_caps("n=-1"), InputError);
    CHECK_THROWS_AS(parse_caps("r=0"), InputError);
    CHECK_THROWS_AS(parse_caps("e=1"), InputError);
    CHECK_THROWS_AS(parse_caps("n"), InputError);
}

TEST_CASE("weight, residues and hub commands") {
    auto w = run(cat({"weight"}, kSmall));
    CHECK(w.code == kExitOk);
    CHECK(w.out == "3\n");
    auto wj = run(cat({"weight", "--format", "json"}, kSmall));
    CHECK(Json::parse(wj.out).at("weight") == 3);
    auto h = run(cat({"hub", "--format", "json"}, kSmall));
    REQUIRE(h.code == kExitOk);
    CHECK(Json::parse(h.out).dump().find("[-1,2,-3,-1]") != std::string::npos);
    auto r = run(cat({"residues", "--format", "json"}, kSmall));
    REQUIRE(r.code == kExitOk);
    CHECK(Json::parse(r.out).dump().find("[0,0,1,1,1,2,3]") != std::string::npos);
}

TEST_CASE("k-values command") {
    auto k = run(cat({"k-values", "--format", "json"}, kCore));
    REQUIRE(k.code == kExitOk);
    const auto j = Json::parse(k.out);
    CHECK(j.at("K").at("0") == -1);
    CHECK(j.at("K").at("1") == 1);
    CHECK(j.at("K").at("3") == 0);
    CHECK(j.at("base_tuples").size() == 2);
}

TEST_CASE("input errors exit with status 2") {
    CHECK(run({"weight", "--e", "4", "--charge", "1,0,2", "--lambda", "((1,2))"}).code == kExitInputError);
    CHECK(run({"weight", "--e", "4", "--charge", "1,0", "--lambda", "((1),(1),(1))"}).code == kExitInputError);
    CHECK(run({"no-such-command"}).code == kExitInputError);
    CHECK(run({"weight", "--bogus"}).code == kExitInputError);
    CHECK(run({}).code == kExitInputError);
    // The condition fails at i = 0, so certification has no hypothesis to work with.
    auto c = run(cat({"certify", "--i", "0", "--caps", "n=23"}, kCore));
    CHECK(c.code == kExitInputError);
    CHECK(c.err.find("hypothesis") != std::string::npos);
    // Enumeration beyond the caps is refused before it starts.
    CHECK(run({"blocks", "--n", "9", "--r", "1", "--e", "2"}).code == kExitInputError);
}

TEST_CASE("failure reporting maps exception types to exit statuses") {
    std::ostringstream err;
    CHECK(report_failure(std::make_exception_ptr(VerificationError("phi-weight", "3 != 4")), err) ==
          kExitVerificationFailed);
    CHECK(err.str().find("phi-weight") != std::string::npos);
    CHECK(report_failure(std::make_exception_ptr(HypothesisError("x")), err) == kExitInputError);
    CHECK(report_failure(std::make_exception_ptr(InputError("x")), err) == kExitInputError);
    CHECK_THROWS_AS(report_failure(std::make_exception_ptr(std::logic_error("x")), err), std::logic_error);
}

TEST_CASE("caps come from the environment and --caps overrides them") {
    const auto blocks = std::vector<std::string>{"blocks", "--n", "6", "--r", "1", "--e", "2"};
    ::setenv(kCapsEnv, "n=5", 1);
    CHECK(run(blocks).code == kExitInputError);
    CHECK(run(cat(blocks, {"--caps", "n=6"})).code == kExitOk);
    ::setenv(kCapsEnv, "n=nope", 1);
    CHECK(run(cat({"weight"}, kSmall)).code == kExitInputError);
    ::unsetenv(kCapsEnv);
    CHECK(run(blocks).code == kExitOk);
}

TEST_CASE("--out writes the document to a file and output is deterministic") {
    const auto path = std::filesystem::temp_directory_path() / "akb_cli_test_out.json";
    auto r = run({"certify", "--e", "2", "--charge", "0,0", "--i", "0", "--lambda", "((1),(1))", "--format", "json",
                  "--out", path.string()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto j = Json::parse(ss.str());
    CHECK(j.at("schema") == 1);
    CHECK(certificate_from_json(j).delta == 2);
    std::filesystem::remove(path);

    auto a = run({"scopes-map", "--e", "2", "--charge", "0,0", "--i", "0", "--lambda", "((1),(1))", "--format", "json"});
    auto b = run({"scopes-map", "--e", "2", "--charge", "0,0", "--i", "0", "--lambda", "((1),(1))", "--format", "json"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
}

TEST_CASE("verify-all on a small grid") {
    auto r = run({"verify-all", "--n", "5", "--r", "2", "--e", "3", "--format", "json"});
    CHECK(r.code == kExitOk);
    const auto j = Json::parse(r.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("ok") == true);
    CHECK(j.at("checks").size() > 50);
    auto again = run({"verify-all", "--n", "5", "--r", "2", "--e", "3", "--format", "json"});
    CHECK(again.out == r.out);
}

TEST_CASE("branch command") {
    auto r = run({"branch", "--e", "2", "--charge", "0", "--i", "1", "--lambda", "((2,1))"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("v + v^-1") != std::string::npos);
    CHECK(run({"branch", "--e", "2", "--charge", "0", "--i", "0", "--lambda", "((2,1))"}).code == kExitInputError);
}
