// End-to-end tests of the command-line tool. The binary path comes from the
// MTC_CLI_BIN environment variable (set by ctest).

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* path = std::getenv("MTC_CLI_BIN");
    REQUIRE(path != nullptr);
    return path;
}

RunResult run(const std::string& args) {
    const std::string command = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("validate succeeds on builtins", "[cli]") {
    const RunResult r = run("validate --builtin cyclic:4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("VALID") != std::string::npos);
}

TEST_CASE("unknown builtin family fails with exit 1", "[cli]") {
    const RunResult r = run("validate --builtin nosuch:3");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("unknown builtin family") != std::string::npos);
}

TEST_CASE("usage errors exit 2", "[cli]") {
    CHECK(run("").exit_code == 2);                         // missing subcommand
    CHECK(run("validate").exit_code == 2);                 // no input source
    CHECK(run("validate --builtin a --input b").exit_code == 2);
    CHECK(run("torus --builtin su2:2").exit_code == 2);    // --support required
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("enumerate on su2:4 reports the two algebras", "[cli]") {
    const RunResult r = run("enumerate --builtin su2:4 --json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.at("count").get<int>() == 2);
    const auto& algebras = doc.at("algebras");
    CHECK(algebras[0]["support"] == nlohmann::json::array({0}));
    CHECK(algebras[1]["support"] == nlohmann::json::array({0, 4}));
    CHECK(algebras[1]["ksb"][0] == nlohmann::json::array({4, 4, "0/1"}));
    const auto z = algebras[1]["Z"];
    CHECK(z[0][0] == 1);
    CHECK(z[0][4] == 1);
    CHECK(z[2][2] == 2);
    CHECK(z[1][1] == 0);
    CHECK(algebras[1]["modular_invariant"] == true);
    CHECK(algebras[1]["physical"] == true);
}

TEST_CASE("json output is byte-identical across runs", "[cli]") {
    const RunResult a = run("enumerate --builtin cyclic:6 --json");
    const RunResult b = run("enumerate --builtin cyclic:6 --json");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("torus subcommand evaluates a user-specified algebra", "[cli]") {
    const RunResult r = run("torus --builtin su2:2 --support 0,2 --ksb 2,2=1/2 --json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("symmetrizer_relation") == true);
    CHECK(doc.at("physical") == true);
    CHECK(doc.at("modular_invariant") == true);
    const auto& z = doc.at("Z");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(z[i][j].get<std::string>() == (i == j ? "1" : "0"));
}

TEST_CASE("torus rejects labels outside the support generators", "[cli]") {
    const RunResult r = run("torus --builtin su2:2 --support 0,2 --ksb 1,1=1/2");
    CHECK(r.exit_code == 1);
}

TEST_CASE("torus human output marks conjugate labels", "[cli]") {
    const RunResult r = run("torus --builtin cyclic:4 --support 0");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("1~3") != std::string::npos); // label 1 conjugate to 3
}

TEST_CASE("picard report", "[cli]") {
    const RunResult r = run("picard --builtin cyclic:6 --json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("elements").size() == 6);
    CHECK(doc.at("generators")[0].at("order") == 6);
    CHECK(doc.at("q")[1] == "1/12");
    CHECK(doc.at("action")[1][1] == 2);
}

TEST_CASE("boundary subcommand on the D-type algebra", "[cli]") {
    const RunResult r = run("boundary --builtin su2:4 --support 0,4 --json");
    REQUIRE(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc.at("total") == 4);
    CHECK(doc.at("module_count_hint") == 4);
    CHECK(doc.at("verdict") == "consistent");
    CHECK(doc.at("orbits").size() == 3);
}

TEST_CASE("boundary rejects non-validated algebras", "[cli]") {
    // Xi(2,2) = +1 on su2:2 fails the T filter
    const RunResult r = run("boundary --builtin su2:2 --support 0,2 --ksb 2,2=0/1");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("not a validated algebra") != std::string::npos);
}

TEST_CASE("file input round-trips through validate", "[cli]") {
    const std::string data = std::string(MTC_TEST_DATA_DIR) + "/toric_code.json";
    const RunResult r = run("validate --input " + data);
    CHECK(r.exit_code == 0);

    const RunResult e = run("enumerate --input " + data + " --json");
    REQUIRE(e.exit_code == 0);
    const auto doc = nlohmann::json::parse(e.output);
    CHECK(doc.at("count").get<int>() == 6);
}

TEST_CASE("malformed files fail with exit 1", "[cli]") {
    const std::string path = "/tmp/mtc_cli_malformed.json";
    {
        std::ofstream out(path);
        out << "{\"name\": \"broken\", \"labels\": [\"0\"]}";
    }
    const RunResult r = run("validate --input " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("theta") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("every subcommand succeeds on every builtin at desk scale", "[cli]") {
    std::vector<std::string> specs;
    for (int k = 1; k <= 10; ++k)
        specs.push_back("su2:" + std::to_string(k));
    for (int n = 2; n <= 12; n += 2)
        specs.push_back("cyclic:" + std::to_string(n));
    for (const auto& spec : specs) {
        INFO(spec);
        CHECK(run("validate --builtin " + spec).exit_code == 0);
        CHECK(run("picard --builtin " + spec + " --json").exit_code == 0);
        CHECK(run("enumerate --builtin " + spec + " --json").exit_code == 0);
        CHECK(run("torus --builtin " + spec + " --support 0 --json").exit_code == 0);
        CHECK(run("boundary --builtin " + spec + " --support 0 --json").exit_code == 0);
    }
}

TEST_CASE("builtins listing", "[cli]") {
    const RunResult r = run("builtins");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("su2") != std::string::npos);
    CHECK(r.output.find("cyclic") != std::string::npos);
}
