#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#ifndef _WIN32
#include <sys/wait.h>
#endif
#include <sstream>
#include <string>

namespace {

const std::string kCli = FOLDNET_CLI_PATH;

int run(const std::string& args, const std::string& stdout_file = "cli_out.txt") {
    const std::string cmd = kCli + " " + args + " >" + stdout_file + " 2>cli_err.txt";
    const int status = std::system(cmd.c_str());
    if (status < 0) return -1;
#ifdef _WIN32
    return status;
#else
    return WEXITSTATUS(status);
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("build writes a network and a summary line") {
    REQUIRE(run("build 3 --collapsed --out cli_net3.json") == 0);
    const std::string summary = slurp("cli_out.txt");
    CHECK(summary.find("m=3 hidden_layers=4 max_width=4 params=") != std::string::npos);
    const std::string json = slurp("cli_net3.json");
    CHECK(json.find("hidden_layers") != std::string::npos);

    CHECK(run("build 0") == 2);
    CHECK(run("build") == 2);
}

TEST_CASE("eval") {
    REQUIRE(run("build 4 --out cli_net4.json") == 0);
    REQUIRE(run("eval --net cli_net4.json --x 0 --y 0") == 0);
    CHECK(slurp("cli_out.txt").find("class=+1 pre_sign=") != std::string::npos);

    REQUIRE(run("eval --net cli_net4.json --x 0 --y 1.001") == 0);
    CHECK(slurp("cli_out.txt").find("class=-1") != std::string::npos);

    std::ofstream("cli_bad.json") << "{ not json";
    CHECK(run("eval --net cli_bad.json --x 0 --y 0") == 1);
    CHECK(slurp("cli_err.txt").find("error") != std::string::npos);
    CHECK(run("eval --net cli_missing.json --x 0 --y 0") == 1);
}

TEST_CASE("regions") {
    REQUIRE(run("build 2 --out cli_net2.json") == 0);
    REQUIRE(run("regions --net cli_net2.json --count-only") == 0);
    const std::string out = slurp("cli_out.txt");
    CHECK(out.find("regions=") != std::string::npos);
    CHECK(out.find("bound=4096") != std::string::npos);

    REQUIRE(run("regions --net cli_net2.json --out cli_decomp.json") == 0);
    CHECK(slurp("cli_decomp.json").find("pre_sign") != std::string::npos);
}

TEST_CASE("verify") {
    CHECK(run("verify --m 2 --suite bounds") == 0);
    CHECK(run("verify --m 2 --suite lemma2") == 0);
    CHECK(slurp("cli_out.txt").find("distinct_regions=4") != std::string::npos);
    CHECK(run("verify --m 2 --suite zero-error --json") == 0);
    CHECK(slurp("cli_out.txt").find("\"passed\":true") != std::string::npos);
    CHECK(run("verify --m 2 --suite bogus") == 2);

    // corrupted network injected via --net
    std::ofstream("cli_corrupt.json")
        << R"({"hidden_layers": [{"weights": [[0,0],[0,0]], "bias": [0,0]}],)"
        << R"( "head": {"a": 1, "b": 0, "c": 5}})";
    CHECK(run("verify --m 2 --suite zero-error --net cli_corrupt.json") == 1);
}

TEST_CASE("render") {
    REQUIRE(run("render --target problem --m 3 --out cli_p3.svg") == 0);
    const std::string svg = slurp("cli_p3.svg");
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("16 edges") != std::string::npos);

    REQUIRE(run("render --target arrangement --n 4 --out cli_arr.svg") == 0);
    CHECK(slurp("cli_arr.svg").find("11 regions") != std::string::npos);

    CHECK(run("render --target problem --m 2 --out /nonexistent/x.svg") == 1);
    CHECK(run("render --target bogus --m 2 --out x.svg") == 2);
}

TEST_CASE("quiet suppresses stdout") {
    REQUIRE(run("--quiet build 2") == 0);
    CHECK(slurp("cli_out.txt").empty());
}
