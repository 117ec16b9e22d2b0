#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lieforge/cli.hpp"

using lieforge::run_cli;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/lieforge_test_") + name;
}

}  // namespace

TEST_CASE("code info prints the parameter triple") {
    const auto res = run({"code", "info", "--name", "hamming7"});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("[7,4,3]") != std::string::npos);
    CHECK(res.out.find("weight_enumerator: [1,0,0,7,7,0,0,1]") != std::string::npos);

    const auto json = run({"code", "info", "--name", "simplex7", "--format", "json"});
    CHECK(json.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json.out);
    CHECK(parsed["n"] == 7);
    CHECK(parsed["k"] == 3);
    CHECK(parsed["d"] == 4);
}

TEST_CASE("code info reads the text format from a file") {
    const std::string path = temp_path("code.txt");
    {
        std::ofstream f(path);
        f << "4 3\n1001\n0101\n0011\n";
    }
    const auto res = run({"code", "info", "--file", path});
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("[4,3,2]") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli input errors exit with status 2") {
    CHECK(run({"code", "info", "--name", "nosuch"}).exit_code == 2);
    CHECK(run({"code", "info"}).exit_code == 2);
    CHECK(run({"code", "info", "--name", "hamming7", "--file", "x"}).exit_code == 2);
    CHECK(run({"bogus"}).exit_code == 2);
    CHECK(run({"verify", "--in", "/nonexistent/file.json"}).exit_code == 2);
    CHECK(run({"algebra", "build", "--type", "e9"}).exit_code == 2);
    CHECK(run({"classical", "build", "--series", "x", "--n", "2"}).exit_code == 2);
}

TEST_CASE("lattice roots emits count, type, and the root list") {
    const auto res = run({"lattice", "roots", "--code", "exthamming8"});
    CHECK(res.exit_code == 0);
    const auto parsed = nlohmann::json::parse(res.out);
    CHECK(parsed["count"] == 240);
    CHECK(parsed["type"] == "E8");
    CHECK(parsed["roots"].size() == 240);

    const auto table = run({"lattice", "roots", "--code", "simplex7", "--format", "table"});
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("roots: 126") != std::string::npos);
    CHECK(table.out.find("type: E7") != std::string::npos);
}

TEST_CASE("algebra build then verify round trip") {
    const std::string path = temp_path("f4.json");
    const auto build = run({"algebra", "build", "--type", "f4", "--out", path});
    CHECK(build.exit_code == 0);
    CHECK(build.err.find("dim 52") != std::string::npos);
    {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        CHECK(nlohmann::json::parse(buf.str())["dim"] == 52);
    }

    const auto verify = run({"verify", "--in", path,
                             "--checks", "jacobi,killing,centralizer,roots,spectrum"});
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("jacobi: pass") != std::string::npos);
    CHECK(verify.out.find("roots: 48 of type F4") != std::string::npos);

    const auto json = run({"verify", "--in", path, "--checks", "roots", "--format", "json"});
    CHECK(json.exit_code == 0);
    CHECK(nlohmann::json::parse(json.out)["root_type"] == "F4");

    CHECK(run({"verify", "--in", path, "--checks", "bogus"}).exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("verify fails with exit 1 on a corrupted table") {
    const std::string path = temp_path("f4_bad.json");
    const auto build = run({"algebra", "build", "--type", "f4", "--out", path});
    REQUIRE(build.exit_code == 0);
    {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        auto j = nlohmann::json::parse(buf.str());
        for (auto& entry : j["brackets"]) {
            if (!entry[2].empty()) {
                entry[2][0][1] = -entry[2][0][1].get<std::int64_t>();
                break;
            }
        }
        std::ofstream outf(path);
        outf << j.dump();
    }
    const auto verify = run({"verify", "--in", path, "--checks", "jacobi"});
    CHECK(verify.exit_code == 1);
    CHECK(verify.out.find("jacobi: fail") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("lattice roots of a non-root-lattice fails as a check, not as input") {
    // even code whose weight-4 words meet in an odd number of coordinates
    const std::string path = temp_path("odd_meet.txt");
    {
        std::ofstream f(path);
        f << "7 2\n1111000\n0111100\n";
    }
    const auto res = run({"lattice", "roots", "--file", path});
    CHECK(res.exit_code == 1);
    CHECK_FALSE(res.err.empty());
    std::remove(path.c_str());
}

TEST_CASE("classical build emits and cross-checks") {
    const auto res = run({"classical", "build", "--series", "c", "--n", "3"});
    CHECK(res.exit_code == 0);
    CHECK(res.err.find("dim 21") != std::string::npos);
    CHECK(res.err.find("crosscheck ok") != std::string::npos);
    const auto parsed = nlohmann::json::parse(res.out);
    CHECK(parsed["dim"] == 21);
}

TEST_CASE("build output is byte-deterministic") {
    const auto a = run({"algebra", "build", "--type", "e7"});
    const auto b = run({"algebra", "build", "--type", "e7"});
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("version flag") {
    const auto res = run({"--version"});
    CHECK(res.exit_code == 0);
}
