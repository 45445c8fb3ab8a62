// End-to-end checks of the hilbchern binary: exact output bytes, exit codes
// and the JSON schemas. The binary path comes from HILBCHERN_BIN (set by
// ctest).

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string binary_path() {
    if (const char* env = std::getenv("HILBCHERN_BIN")) return env;
    FAIL("set HILBCHERN_BIN to the hilbchern binary path (ctest does this automatically)");
    return {};
}

RunResult run(const std::string& args) {
    std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("compute: golden outputs") {
    auto alpha1 = run("compute chern tangent -n 3 -k 2 --method equivariant");
    CHECK(alpha1.exit_code == 0);
    CHECK(alpha1.output == "-1/3*p[3]\n");

    auto ch1 = run("compute ch tangent -n 1 --method series");
    CHECK(ch1.exit_code == 0);
    CHECK(ch1.output == "2*p[1]\n");

    auto taut2 = run("compute ch taut -n 2 --method direct");
    CHECK(taut2.exit_code == 0);
    CHECK(taut2.output == "1*p[1,1] - 1/2*p[2]\n");

    auto total3 = run("compute chern tangent -n 3 --method series");
    CHECK(total3.exit_code == 0);
    CHECK(total3.output == "1/6*p[1,1,1] - 1/3*p[3]\n");

    // both routes agree and the output is deterministic
    CHECK(run("compute chern tangent -n 5 --method equivariant").output ==
          run("compute chern tangent -n 5 --method series").output);
    CHECK(run("compute chern tangent -n 5 --method equivariant --threads 4").output ==
          run("compute chern tangent -n 5 --method equivariant --threads 1").output);

    auto zero = run("compute chern tangent -n 2 -k 5 --method equivariant");
    CHECK(zero.exit_code == 0);
    CHECK(zero.output == "0\n");
}

TEST_CASE("compute: json format") {
    auto r = run("compute chern tangent -n 3 -k 2 --method series --format json");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["mu"] == nlohmann::json::array({3}));
    CHECK(doc[0]["coeff"] == "-1/3");
}

TEST_CASE("compute: unsupported combinations exit 2") {
    CHECK(run("compute chern taut -n 2 --method equivariant").exit_code == 2);
    CHECK(run("compute chern taut -n 2 --method direct").exit_code == 2);
    CHECK(run("compute ch tangent -n 2 --method direct").exit_code == 2);
    CHECK(run("compute ch tangent -n 2 --method series --weights /dev/null").exit_code == 2);
    CHECK(run("compute chern tangent -n 2 --method equivariant --weights /dev/null").exit_code == 2);
    CHECK(run("compute brote tangent -n 2 --method series").exit_code == 2);
    CHECK(run("compute chern tangent --method series").exit_code == 2);
    CHECK(run("compute chern tangent -n -4 --method series").exit_code == 2);
}

TEST_CASE("compute: custom weight tables") {
    std::string path = "cli_weights_test.json";
    {
        std::ofstream out(path);
        out << R"({"2": [0], "1,1": [1]})";
    }
    auto r = run("compute ch taut -n 2 --method equivariant --weights " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1/2*p[1,1] - 1/4*p[2]\n");

    {
        std::ofstream out(path);
        out << R"({"2": [0], "1,1": [1, 2]})";  // rank mismatch
    }
    CHECK(run("compute ch taut -n 2 --method equivariant --weights " + path).exit_code == 2);

    {
        std::ofstream out(path);
        out << R"({"2": [0]})";  // missing fixed point
    }
    CHECK(run("compute ch taut -n 2 --method equivariant --weights " + path).exit_code == 2);

    CHECK(run("compute ch taut -n 2 --method equivariant --weights does_not_exist.json")
              .exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("char and schur") {
    auto single = run("char --lambda 2,1 --mu 3");
    CHECK(single.exit_code == 0);
    CHECK(single.output == "-1\n");

    auto trivial = run("char --lambda 3 --mu 1,1,1");
    CHECK(trivial.output == "1\n");

    auto row = run("char --lambda 2,1");
    CHECK(row.exit_code == 0);
    CHECK(row.output == "3: -1\n2,1: 0\n1,1,1: 2\n");

    auto row_json = run("char --lambda 2,1 --format json");
    auto doc = nlohmann::json::parse(row_json.output);
    CHECK(doc["lambda"] == nlohmann::json::array({2, 1}));
    REQUIRE(doc["row"].size() == 3);
    CHECK(doc["row"][0]["mu"] == nlohmann::json::array({3}));
    CHECK(doc["row"][0]["value"] == "-1");

    auto schur = run("schur --lambda 2");
    CHECK(schur.exit_code == 0);
    CHECK(schur.output == "1/2*p[1,1] + 1/2*p[2]\n");

    CHECK(run("char --lambda 2,1 --mu 2,2").exit_code == 2);
    CHECK(run("char --lambda 1,2 --mu 3").exit_code == 2);
    CHECK(run("char --lambda x").exit_code == 2);
    CHECK(run("schur --lambda 0").exit_code == 2);
}

TEST_CASE("verify: exit codes and report schema") {
    auto ids = run("verify identities --max-k 3 --max-n 5");
    CHECK(ids.exit_code == 0);
    CHECK(ids.output.find("PASS pk-factorization") != std::string::npos);
    CHECK(ids.output.find("FAIL") == std::string::npos);

    auto cross = run("verify crosscheck --max-n 4");
    CHECK(cross.exit_code == 0);

    auto decomp = run("verify decomposition --max-n 5");
    CHECK(decomp.exit_code == 0);

    auto all = run("verify all --max-n 3 --max-k 2 --format json");
    CHECK(all.exit_code == 0);
    auto doc = nlohmann::json::parse(all.output);
    CHECK(doc["suite"] == "all");
    REQUIRE(doc["results"].is_array());
    CHECK(doc["results"].size() >= 10);
    for (const auto& item : doc["results"]) {
        CHECK(item.contains("name"));
        CHECK(item.contains("detail"));
        CHECK(item["pass"].is_boolean());
        CHECK(item["pass"] == true);
    }

    CHECK(run("verify bogus").exit_code == 2);
    CHECK(run("verify all --max-n 0").exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}
