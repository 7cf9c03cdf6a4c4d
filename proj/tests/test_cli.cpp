#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;  // path to the davlab executable, from the last argv entry

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string out_file = "/tmp/davlab_cli_test_out.txt";
    std::string cmd = g_binary + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return {code, ss.str()};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli [doctest args] <davlab binary>\n");
        return 1;
    }
    g_binary = argv[argc - 1];
    doctest::Context ctx(argc - 1, argv);
    return ctx.run();
}

using nlohmann::ordered_json;

TEST_CASE("exit code 0 on successful verification") {
    auto r = run("verify theorem --max-order 6");
    CHECK(r.exit_code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j.at("all_match") == true);
    CHECK(j.at("groups").get<int>() == 5);  // C2, C4, C2xC2, C6, S3
}

TEST_CASE("exit code 2 on usage errors") {
    CHECK(run("").exit_code == 2);                       // missing subcommand
    CHECK(run("davenport small").exit_code == 2);        // missing group flags
    CHECK(run("frobnicate").exit_code == 2);             // unknown subcommand
    CHECK(run("davenport small --s 0 --m 3 --r 7 --ptype A").exit_code == 2);  // bad r
    CHECK(run("additive cd --p 4 --sets '[[0,1]]'").exit_code == 2);  // composite p
}

TEST_CASE("help exits zero") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("davenport --help").exit_code == 0);
}

TEST_CASE("davenport values through the CLI") {
    auto r = run("davenport large --s 0 --m 3 --r 2 --ptype A");
    REQUIRE(r.exit_code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j.at("D").get<int>() == 6);

    r = run("davenport small --s 2 --m 1 --r 3 --ptype B");
    REQUIRE(r.exit_code == 0);
    CHECK(ordered_json::parse(r.out).at("d").get<int>() == 4);

    // the default cap rejects order 16 without --deep
    CHECK(run("davenport small --s 3 --m 1 --r 7 --ptype A").exit_code == 2);
}

TEST_CASE("group build round-trips through --cayley") {
    std::string path = "/tmp/davlab_cli_test_group.json";
    auto r = run("--out " + path + " group build --s 1 --m 3 --r 5 --ptype B");
    REQUIRE(r.exit_code == 0);
    // extract the inner group object for the --cayley input
    std::ifstream in(path);
    ordered_json j;
    in >> j;
    std::string gpath = "/tmp/davlab_cli_test_cayley.json";
    std::ofstream out(gpath);
    out << j.at("group").dump() << "\n";
    out.close();
    auto r2 = run("davenport large --cayley " + gpath);
    REQUIRE(r2.exit_code == 0);
    CHECK(ordered_json::parse(r2.out).at("D").get<int>() == 9);
}

TEST_CASE("classification listing") {
    auto r = run("group classify --max-order 12");
    REQUIRE(r.exit_code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j.size() == 15);
}

TEST_CASE("randomized additive checks are seed-deterministic") {
    auto a = run("--seed 7 additive dgm --mod 6 --trials 20");
    auto b = run("--seed 7 additive dgm --mod 6 --trials 20");
    auto c = run("--seed 8 additive dgm --mod 6 --trials 20");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    auto j = ordered_json::parse(a.out);
    CHECK(j.at("all_ok") == true);
    CHECK(j.at("trials").size() == 20);
    CHECK(j.at("trials")[0].at("seed").get<long long>() == 7);
}

TEST_CASE("additive single instances and falsification-free runs") {
    auto r = run("additive keyeq --mod 6 --seq '[[1,2],[3,1]]' --n 2");
    CHECK(r.exit_code == 0);

    r = run("additive lemma43 --p 3 --trials 25");
    CHECK(r.exit_code == 0);

    r = run("additive dicyclic --p 3 --trials 25 --len 6");
    CHECK(r.exit_code == 0);
    CHECK(ordered_json::parse(r.out).at("all_ok") == true);
}

TEST_CASE("setpartition check") {
    auto r = run("setpartition check --mult '[3,1,1]' --ell 1 --n 2");
    REQUIRE(r.exit_code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j.at("exists") == true);
    CHECK(j.at("blocks").size() == 2);

    r = run("setpartition check --mult '[5]' --ell 1 --n 2");
    REQUIRE(r.exit_code == 0);
    CHECK(ordered_json::parse(r.out).at("exists") == false);
}

TEST_CASE("witness subcommand") {
    auto r = run("witness --s 1 --m 3 --r 5 --ptype B");
    REQUIRE(r.exit_code == 0);
    auto j = ordered_json::parse(r.out);
    CHECK(j.at("ok") == true);
    CHECK(j.at("claimed_length").get<int>() == 9);

    r = run("witness --check-all-upto 16");
    REQUIRE(r.exit_code == 0);
    CHECK(ordered_json::parse(r.out).size() == 11);  // non-abelian classes up to 16
}

TEST_CASE("bounds subcommand") {
    auto r = run("bounds --s 2 --m 1 --r 3 --ptype A");
    REQUIRE(r.exit_code == 0);
    CHECK(ordered_json::parse(r.out).at("all_ok") == true);
}

TEST_CASE("export: verify bundle to csv and json") {
    std::string bundle = "/tmp/davlab_cli_test_bundle.json";
    auto r = run("--out " + bundle + " verify theorem --max-order 8");
    REQUIRE(r.exit_code == 0);

    auto csv = run("export --in " + bundle + " --format csv");
    REQUIRE(csv.exit_code == 0);
    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "order,s,m,r,type,kind,n_plus,n_minus,d,D,d_formula,D_formula,match");
    int rows = 0;
    for (std::string line; std::getline(lines, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 9);  // isomorphism classes with order in [2, 8]

    auto js = run("export --in " + bundle + " --format json");
    REQUIRE(js.exit_code == 0);
    CHECK(ordered_json::parse(js.out).size() == 9);

    CHECK(run("export --in " + bundle + " --format xml").exit_code == 2);
    CHECK(run("export --in /tmp/definitely_missing_bundle.json").exit_code == 2);
}
