#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
#ifdef CRM_CLI_PATH
    return CRM_CLI_PATH;
#else
    const char* p = std::getenv("CRM_CLI_PATH");
    REQUIRE(p != nullptr);
    return p;
#endif
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("hk subcommand prints scaled minimal Betti numbers") {
    auto r = run("hk 0 1 2 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("q=24: 3 8 6 1") != std::string::npos);
}

TEST_CASE("predict subcommand prints the truncated strand") {
    auto r = run("predict 2 3 3 1 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("24 37 15") != std::string::npos);
}

TEST_CASE("westwick JSON pipes into rankcheck and certifies") {
    std::string tmp = "/tmp/crm_cli_ww.json";
    auto w = run("westwick 2 2");
    REQUIRE(w.exit_code == 0);
    {
        std::ofstream f(tmp);
        f << w.out;
    }
    auto r = run("rankcheck " + tmp + " --rho 4 --exhaustive 5 --exhaustive 7 --samples 50");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"Certified\"") != std::string::npos);
    std::remove(tmp.c_str());
}

TEST_CASE("rankcheck refutes a wrong rank claim with exit code 2") {
    std::string tmp = "/tmp/crm_cli_ww2.json";
    auto w = run("westwick 2 2");
    REQUIRE(w.exit_code == 0);
    {
        std::ofstream f(tmp);
        f << w.out;
    }
    auto r = run("rankcheck " + tmp + " --rho 3 --exhaustive 5 --samples 10");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("\"Refuted\"") != std::string::npos);
    std::remove(tmp.c_str());
}

TEST_CASE("skew verify accepts the builtin skew pencil") {
    // construct the builtin via paper-examples is slow; use westwick (not skew)
    std::string tmp = "/tmp/crm_cli_ww3.json";
    auto w = run("westwick 2 1");
    REQUIRE(w.exit_code == 0);
    {
        std::ofstream f(tmp);
        f << w.out;
    }
    auto r = run("skew verify " + tmp);
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("not skew") != std::string::npos);
    std::remove(tmp.c_str());
}

TEST_CASE("catalog lists the small Artinian strands") {
    auto r = run("catalog --n 2 --tmax 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(1,3,3,1)") != std::string::npos);
    CHECK(r.out.find("(3,8,6,1)") != std::string::npos);
    CHECK(r.out.find("(6,15,10,1)") != std::string::npos);
}

TEST_CASE("betti subcommand renders the dot matrix of a window file") {
    std::string tmp = "/tmp/crm_cli_win.json";
    auto w = run("construct steiner --n 2 --s 1 --r 2 --m 0 --hi 4");
    REQUIRE(w.exit_code == 0);
    {
        std::ofstream f(tmp);
        f << w.out;
    }
    auto r = run("betti " + tmp);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3") != std::string::npos);
    std::remove(tmp.c_str());
}

TEST_CASE("unknown options exit with the usage code") {
    CHECK(run("hk").exit_code == 64);
    CHECK(run("frobnicate").exit_code == 64);
    CHECK(run("westwick 2").exit_code == 64);
}
