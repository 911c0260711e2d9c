// Drives the installed binary through popen; GAMMACONE_CLI_PATH comes from
// the build system.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
    int status = -1;
    std::string out;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(GAMMACONE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, std::move(out)};
}

RunResult run_cli_env(const std::string& env, const std::string& args) {
    std::string cmd = env + " " + std::string(GAMMACONE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int rc = pclose(pipe);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, std::move(out)};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("principal counts agree three ways on a long path") {
    auto r = run_cli("principal --family path:7");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "pi1 {0,2,4,6}"));
    CHECK(contains(r.out, "pi2 {1,3,5}"));
    CHECK(contains(r.out, "sigma formula 272"));
    CHECK(contains(r.out, "sigma induction 272"));
    CHECK(contains(r.out, "sigma sweep 272"));

    auto swapped = run_cli("principal --family path:7 --side 1");
    CHECK(swapped.status == 0);
    CHECK(contains(swapped.out, "pi1 {1,3,5}"));
    CHECK(contains(swapped.out, "sigma formula 272"));
}

TEST_CASE("block reports cover both sides and sum to the count") {
    auto even = run_cli("blocks --family path:7 --json");
    REQUIRE(even.status == 0);
    auto j = nlohmann::json::parse(even.out);
    CHECK(j["total"] == "272");
    CHECK(j["blocks"].size() == 14);
    long long sum = 0;
    for (const auto& b : j["blocks"])
        sum += std::stoll(b["count"].get<std::string>());
    CHECK(sum == 272);

    auto odd = run_cli("blocks --family path:7 --json --side 1");
    REQUIRE(odd.status == 0);
    auto k = nlohmann::json::parse(odd.out);
    CHECK(k["total"] == "272");
    REQUIRE(k["blocks"].size() == 5);
    std::vector<long long> counts;
    for (const auto& b : k["blocks"])
        counts.push_back(std::stoll(b["count"].get<std::string>()));
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<long long>{48, 48, 48, 48, 80});
}

TEST_CASE("gamma vector output halves the symmetric multiset") {
    auto r = run_cli("gamma-vector --family star:4");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "orientations 8"));
    CHECK(contains(r.out, "sigma multiset 2(6,2,2,2)"));
    CHECK(contains(r.out, "max 6"));
    CHECK(contains(r.out, "argmax equals the principal pair: yes"));
    CHECK_FALSE(contains(r.out, "experimental"));

    // a cycle is outside the theorem, so the claim is labeled
    std::ofstream f("/tmp/gammacone_cli_cycle.edges");
    f << "0 1\n1 2\n2 3\n0 3\n";
    f.close();
    auto c = run_cli("gamma-vector /tmp/gammacone_cli_cycle.edges");
    CHECK(c.status == 0);
    CHECK(contains(c.out, "(experimental)"));
}

TEST_CASE("json output is byte stable across runs") {
    auto a = run_cli("gamma-vector --family path:4 --json");
    auto b = run_cli("gamma-vector --family path:4 --json");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto c = run_cli("blocks --family d:5 --json");
    auto d = run_cli("blocks --family d:5 --json");
    CHECK(c.status == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("extensions reports sigma and the covering pairs") {
    auto r = run_cli("extensions --family path:3 --orientation 0b00");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "sigma 1"));
    CHECK(contains(r.out, "hasse 0<1 1<2"));

    auto j = run_cli("extensions --family path:3 --orientation 0b10 --json");
    REQUIRE(j.status == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["orientation_bits"] == "0b10");
    CHECK(parsed["sigma"] == "2");
}

TEST_CASE("series tables pin the published discrepancy") {
    auto r = run_cli("series --max-n 4");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "family a"));
    CHECK(contains(r.out, "family d"));
    CHECK(contains(r.out, "4\t5\t5\tyes"));
    CHECK(contains(r.out, "4\t6\t11\tno"));

    auto j = run_cli("series --max-n 5 --json");
    REQUIRE(j.status == 0);
    auto parsed = nlohmann::json::parse(j.out);
    REQUIRE(parsed["a"].size() == 5);
    CHECK(parsed["a"][4]["direct"] == "16");
    CHECK(parsed["a"][4]["match"] == true);
    CHECK(parsed["d"][0]["direct"] == "6");
    CHECK(parsed["d"][0]["series"] == "11");
    CHECK(parsed["d"][0]["match"] == false);
    CHECK(parsed["e"][0]["match"] == true);
}

TEST_CASE("file input round trips through info") {
    std::ofstream f("/tmp/gammacone_cli_tree.edges");
    f << "vertices 5\n# a star with an extra tail\n0 1\n1 2\n1 3\n3 4\n";
    f.close();
    auto r = run_cli("info /tmp/gammacone_cli_tree.edges");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "vertices 5"));
    CHECK(contains(r.out, "edges 4"));
    CHECK(contains(r.out, "class tree"));

    auto j = run_cli("info /tmp/gammacone_cli_tree.edges --json");
    REQUIRE(j.status == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["vertices"] == 5);
    CHECK(parsed["class"] == "tree");
}

TEST_CASE("guards, usage errors, and failures use distinct exit codes") {
    CHECK(run_cli("gamma-vector --family path:30").status == 3);
    CHECK(run_cli("principal").status == 2);
    CHECK(run_cli("principal --family nosuch:5").status == 2);
    CHECK(run_cli("principal --family path").status == 2);
    CHECK(run_cli("extensions --family path:3 --orientation 0b9").status == 2);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("series --max-n 10").status == 3);
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli_env("GAMMACONE_THREADS=abc", "info --family path:3").status == 2);
    CHECK(run_cli_env("GAMMACONE_THREADS=4", "info --family path:3").status == 0);
}

TEST_CASE("the invariant suite passes from the command line") {
    auto r = run_cli("verify --seed 1");
    CHECK(r.status == 0);
    CHECK(contains(r.out, "all checks passed"));
}
