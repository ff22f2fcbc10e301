#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "fo2/monoid.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FO2ALT_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, got);
    }
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string write_z2_table() {
    const std::string path = "cli_test_z2.tbl";
    std::ofstream f(path);
    f << "elements: 2\nidentity: 0\n0 1\n1 0\ngen: a 1\n";
    return path;
}

}

TEST_CASE("version flag") {
    const RunResult r = run_cli("--version");
    CHECK(r.status == 0);
    CHECK(r.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("ranker evaluation output") {
    const RunResult r = run_cli("ranker eval --word bca --ranker Xa.Yb.Xc");
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["result"]["defined"] == true);
    CHECK(j["result"]["position"] == 2);
    CHECK(j["result"]["condensed"] == true);
    CHECK(j["result"]["chain"].size() == 3);
    CHECK(j["input"]["word"] == "bca");

    const RunResult loose = run_cli("ranker eval --word bac --ranker Xa.Yb.Xc");
    CHECK(loose.status == 0);
    const json jl = json::parse(loose.out);
    CHECK(jl["result"]["position"] == 3);
    CHECK(jl["result"]["condensed"] == false);

    const RunResult undef = run_cli("ranker eval --word b --ranker Xa");
    CHECK(undef.status == 0);
    CHECK(json::parse(undef.out)["result"]["defined"] == false);
}

TEST_CASE("ranker agreement exit codes") {
    CHECK(run_cli("ranker agree --u ab --v ba --class R:1,1").status == 0);
    CHECK(run_cli("ranker agree --u ab --v ba --class RX:1,2").status == 1);
    CHECK(run_cli("ranker agree --u ab --v ba --class uR:2 --cap 3").status == 1);
    CHECK(run_cli("ranker agree --u ab --v ba --class uR:2").status == 2);
    CHECK(run_cli("ranker agree --u ab --v ba --class R:1,1 --mode bogus").status == 2);
}

TEST_CASE("word equivalence output and exit codes") {
    const RunResult yes = run_cli("equiv --u abab --v abba -m 1 -n 1");
    CHECK(yes.status == 0);
    CHECK(yes.out.find("true") != std::string::npos);

    const RunResult no = run_cli("equiv --u abab --v abba -m 1 -n 2");
    CHECK(no.status == 1);
    CHECK(no.out.find("false") != std::string::npos);

    CHECK(run_cli("equiv --u bac --v bca -m 1 -n 2").status == 1);
    CHECK(run_cli("equiv --u abab --v abba -m 1 -n 2 --mode plain").status == 1);
    CHECK(run_cli("equiv --u abab --v abba -m 1 -n 2 --mode cong-right").status == 0);
    CHECK(run_cli("equiv --u abab --v abba -m 1 -n 2 --mode cong-left").status == 0);
    CHECK(run_cli("equiv --u a --v a -m 2 -n 1").status == 2);
}

TEST_CASE("analysis report") {
    const RunResult r = run_cli("analyze --regex \"[bc]*ca[ab]*\" --json");
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["monoid"]["size"] == 8);
    CHECK(j["monoid"]["da"] == true);
    CHECK(j["levels"]["fo2_definable"] == true);
    CHECK(j["levels"]["joint_level"] == 3);
    CHECK(j["levels"]["alternation_interval"][0] == 2);
    CHECK(j["levels"]["alternation_interval"][1] == 3);
    CHECK(j["join_identity"] == false);
    CHECK(j["input"]["value"] == "[bc]*ca[ab]*");

    const RunResult text = run_cli("analyze --regex \"(ab)*\"");
    CHECK(text.status == 0);
    CHECK(text.out.find("aperiodic: yes") != std::string::npos);
    CHECK(text.out.find("da: no") != std::string::npos);
    CHECK(text.out.find("fo2 definable: no") != std::string::npos);
}

TEST_CASE("analysis input validation") {
    CHECK(run_cli("analyze").status == 2);
    CHECK(run_cli("analyze --regex a --dfa x.dfa").status == 2);
    CHECK(run_cli("analyze --regex \"(ab\"").status == 2);
    CHECK(run_cli("analyze --dfa does_not_exist.dfa").status == 2);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
}

TEST_CASE("identity checking against a table file") {
    const std::string path = write_z2_table();
    const RunResult r = run_cli("monoid identity --table " + path +
                                " --lhs \"x1^w\" --rhs \"x1^w x1\"");
    CHECK(r.status == 1);
    const json j = json::parse(r.out);
    CHECK(j["result"]["holds"] == false);
    CHECK(j["result"]["counterexample"]["x1"] == 1);

    const RunResult ok = run_cli("monoid identity --table " + path +
                                 " --lhs \"x1 x2\" --rhs \"x2 x1\"");
    CHECK(ok.status == 0);
    CHECK(json::parse(ok.out)["result"]["holds"] == true);

    CHECK(run_cli("monoid identity --table " + path +
                  " --lhs \"x1^w\" --rhs \"x9^w\"")
              .status == 2);
    std::remove(path.c_str());
}

TEST_CASE("quotient table output round trips") {
    const RunResult r = run_cli("monoid quotient --alphabet ab -m 1 -n 1");
    CHECK(r.status == 0);
    const fo2::FiniteMonoid m = fo2::parse_monoid_table_text(r.out);
    CHECK(m.size == 4);
    for (int s = 0; s < m.size; ++s) {
        CHECK(m.mul(s, s) == s);
    }

    const RunResult j = run_cli("monoid quotient --alphabet a -m 1 -n 2 --json");
    CHECK(j.status == 0);
    const json parsed = json::parse(j.out);
    CHECK(parsed["result"]["size"] == 3);
    CHECK(parsed["result"]["representatives"].size() == 3);

    CHECK(run_cli("monoid quotient --alphabet a -m 1 -n 2 --cap 1").status == 3);
    CHECK(run_cli("monoid quotient --alphabet ab -m 1 -n 1 --side down").status == 2);
}
