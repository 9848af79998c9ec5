#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "sepvar/cli.hpp"

using namespace sepvar;
using json = nlohmann::ordered_json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("resolve") {
    auto r = run({"resolve", "--n", "2", "--k", "3", "--sigma", "1,1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema"] == "sepvar/1");
    CHECK(j["r"] == 1);
    CHECK(j["stages"][0][0]["weight"] == json::array({"-1", "-2", "-2"}));
    CHECK(j["stages"][1][0]["weight"] == json::array({"-2", "-2", "-3"}));
    CHECK(j["stages"][1][0]["shift"] == 1);

    // Identical requests produce byte-identical output.
    auto again = run({"resolve", "--n", "2", "--k", "3", "--sigma", "1,1"});
    CHECK(again.out == r.out);

    // Semistable range: r = 0, single stage.
    auto semi = run({"resolve", "--n", "5", "--k", "3", "--sigma", "1"});
    REQUIRE(semi.code == 0);
    json js = json::parse(semi.out);
    CHECK(js["r"] == 0);
    CHECK(js["stages"].size() == 1);
}

TEST_CASE("resolve rejects sigma outside Sigma_{n,k} with exit 2") {
    auto r = run({"resolve", "--n", "2", "--k", "3", "--sigma", "2,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("first two columns") != std::string::npos);
}

TEST_CASE("hilbert") {
    auto r = run({"hilbert", "--n", "2", "--k", "3", "--sigma", "1,1"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["kernel"]["display"] == "3q(1+q)/(1-q)^5");
    CHECK(j["I"]["display"] == "(1+q+q^2)/(1-q)^5");
    CHECK(j["kernel_expansion"][2] == 18);

    // Half-integer weights print as exact rationals in sigma0 output.
    auto s0 = run({"sigma0", "--n", "3", "--k", "3", "--max-boxes", "3"});
    REQUIRE(s0.code == 0);
    CHECK(s0.out.find("/2") != std::string::npos);
}

TEST_CASE("hilbert without sigma reports I only") {
    auto r = run({"hilbert", "--n", "2", "--k", "3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.contains("I"));
    CHECK_FALSE(j.contains("kernel"));
}

TEST_CASE("generator with verification") {
    auto r = run({"generator", "--n", "2", "--k", "2", "--sigma", "2", "--verify"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["verify"]["all_pass"] == true);
    CHECK(j["weight"] == json::array({"-3", "-3"}));
    CHECK(j["terms"].size() == 3);

    auto latex = run({"generator", "--n", "2", "--k", "2", "--sigma", "2", "--format", "latex"});
    REQUIRE(latex.code == 0);
    CHECK(latex.out.find("\\begin{vmatrix}") != std::string::npos);
    CHECK(latex.out.find("r_{12}") != std::string::npos);

    // Labels outside Sigma^0 are rejected as bad input.
    auto bad = run({"generator", "--n", "4", "--k", "2", "--sigma", "2"});
    CHECK(bad.code == 2);
}

TEST_CASE("sigma0 lists the reducible labels") {
    auto r = run({"sigma0", "--n", "2", "--k", "2", "--max-boxes", "4"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["members"].size() == 3);  // (2), (3), (4)
    CHECK(j["members"][0]["sigma"] == "2");
    CHECK(j["members"][0]["gamma_min"] == "2e1");
    CHECK(j["members"][0]["lambda_prime"] == json::array({"-3", "-3"}));
    CHECK(j["members"][0]["level_of_reduction"] == 1);
}

TEST_CASE("oracle tables handle the trivial sigma") {
    auto r = run({"oracle", "--n", "2", "--k", "2", "--sigma", "", "--max-degree", "2",
                  "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("degree,dim_P,dim_H,dim_I,dim_ker_total,dim_ker_sigma") == 0);
    CHECK(r.out.find("0,1,1,1,0,0") != std::string::npos);

    auto j = run({"oracle", "--n", "2", "--k", "2", "--max-degree", "1"});
    REQUIRE(j.code == 0);
    json parsed = json::parse(j.out);
    CHECK(parsed["table"][0]["dim_P"] == 1);
    CHECK_FALSE(parsed["table"][0].contains("dim_ker_sigma"));
}

TEST_CASE("crosscheck runs the agreement suite") {
    auto r = run({"crosscheck", "--n", "2", "--k", "2", "--max-boxes", "3", "--max-degree", "2"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["failures"] == 0);
    CHECK(j["checks"].size() > 0);
}

TEST_CASE("bad arguments exit 2") {
    CHECK(run({"resolve", "--n", "2"}).code == 2);
    CHECK(run({"unknown-subcommand"}).code == 2);
    CHECK(run({"resolve", "--n", "-1", "--k", "2", "--sigma", "1"}).code == 2);
    CHECK(run({"oracle", "--n", "2", "--k", "2", "--format", "yaml"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).code == 0);
}
