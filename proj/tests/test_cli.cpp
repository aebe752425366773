#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sav/cli.hpp"

using namespace sav;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("count subcommand", "[cli]") {
    CliResult r = run({"count", "--pattern", "312", "--n", "10"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "845\n");
    REQUIRE(r.err.empty());

    r = run({"count", "--pattern", "312", "--n-max", "3", "--format", "csv"});
    REQUIRE(r.out == "n,count,provenance\n1,1,enumerated\n2,2,enumerated\n3,4,enumerated\n");

    r = run({"count", "--pattern", "132", "--n-max", "3"});
    REQUIRE(r.out == "1 1\n2 2\n3 5\n");

    r = run({"count", "--pattern", "312", "--n-min", "4", "--n-max", "5"});
    REQUIRE(r.out == "4 9\n5 19\n");

    r = run({"count", "--pattern", "312", "--n", "3", "--format", "json"});
    REQUIRE(r.out == "{\"pattern\":\"312\",\"n\":3,\"count\":4,\"provenance\":\"enumerated\"}\n");

    r = run({"count", "--pattern", "321", "--n", "7", "--mode", "avoiding"});
    REQUIRE(r.out == "429\n");

    r = run({"count", "--pattern", "312", "--n", "8", "--predicate", "ends-in-1"});
    REQUIRE(r.out == "4\n");

    r = run({"count", "--pattern", "312", "--n", "11", "--threads", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "1801\n");

    r = run({"count", "--pattern", "312", "--n", "10", "--prefix-depth", "3"});
    REQUIRE(r.out == "845\n");
}

TEST_CASE("enumerate subcommand", "[cli]") {
    CliResult r = run({"enumerate", "--pattern", "312", "--n", "3"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "123\n132\n213\n321\n");

    r = run({"enumerate", "--pattern", "312", "--n", "4", "--format", "json"});
    REQUIRE(first_line(r.out) == "{\"n\":4,\"one_line\":[1,2,3,4]}");

    r = run({"enumerate", "--pattern", "312", "--n", "3", "--format", "csv"});
    REQUIRE(first_line(r.out) == "n,one_line");
    REQUIRE(r.out.find("3,1 2 3\n") != std::string::npos);

    r = run({"enumerate", "--pattern", "312", "--n", "6", "--limit", "10"});
    REQUIRE(r.code == 1);
    REQUIRE(r.err.find("raise --limit") != std::string::npos);
}

TEST_CASE("family subcommand", "[cli]") {
    CliResult r = run({"family", "--name", "unimodal", "--n", "8", "--k", "5"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "67854321\n32145876\n");

    r = run({"family", "--name", "layered", "--layers", "4,4"});
    REQUIRE(r.out == "43218765\n");

    r = run({"family", "--name", "layered", "--layers", "4,x"});
    REQUIRE(r.code == 2);
    REQUIRE(r.err.find("usage error") != std::string::npos);

    r = run({"family", "--name", "ending-in-1", "--n", "4"});
    REQUIRE(r.out == "3421\n4321\n");

    r = run({"family", "--name", "block-cyclic", "--n", "3"});
    REQUIRE(r.out == "123\n132\n213\n231\n312\n");

    r = run({"family", "--name", "block-cyclic", "--n", "2", "--format", "json"});
    REQUIRE(first_line(r.out) == "{\"family\":\"block-cyclic\",\"n\":2,\"one_line\":[1,2]}");
}

TEST_CASE("witness subcommand", "[cli]") {
    CliResult r = run({"witness", "--k", "3"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "75863142\n43218765\n");

    r = run({"witness", "--k", "3", "--base"});
    REQUIRE(r.out == "75863142\n43218765\n3 1 4 2\n");

    REQUIRE(run({"witness"}).code == 2);           // --k is required
    REQUIRE(run({"witness", "--k", "9"}).code == 2);  // out of range
}

TEST_CASE("series subcommand", "[cli]") {
    CliResult r = run({"series", "--family", "sav312", "--from", "1"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "1 1\n2 2\n3 4\n4 9\n5 19\n6 41\n7 87\n8 186\n9 396\n10 845\n");

    r = run({"series", "--family", "ending-in-1", "--terms", "6"});
    REQUIRE(r.out == "0 0\n1 1\n2 1\n3 1\n4 2\n5 2\n6 3\n");

    r = run({"series", "--family", "block-cyclic", "--terms", "6"});
    REQUIRE(r.out == "0 1\n1 1\n2 2\n3 5\n4 12\n5 28\n6 65\n");

    r = run({"series", "--num", "1", "--den", "1,-1", "--terms", "3"});
    REQUIRE(r.out == "0 1\n1 1\n2 1\n3 1\n");

    r = run({"series", "--family", "sav312", "--terms", "2", "--format", "csv"});
    REQUIRE(r.out == "n,coefficient\n0,1\n1,1\n2,2\n");

    REQUIRE(run({"series", "--family", "sav312", "--num", "1", "--den", "1,-1"}).code == 2);
    REQUIRE(run({"series"}).code == 2);
    REQUIRE(run({"series", "--num", "1"}).code == 2);

    r = run({"series", "--num", "1", "--den", "2,1", "--terms", "2"});
    REQUIRE(r.code == 1);  // not an integer series
    REQUIRE(r.err.find("error:") != std::string::npos);
}

TEST_CASE("growth subcommand", "[cli]") {
    CliResult r = run({"growth", "--family", "sav312"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "root 0.4689899435\nrate 2.132241882\n");

    r = run({"growth", "--family", "block-cyclic"});
    double root = 0, rate = 0;
    REQUIRE(std::sscanf(r.out.c_str(), "root %lf\nrate %lf", &root, &rate) == 2);
    REQUIRE_THAT(root, Catch::Matchers::WithinAbs(0.430159709, 1e-8));
    REQUIRE_THAT(rate, Catch::Matchers::WithinAbs(2.324717957, 1e-8));

    r = run({"growth", "--den", "1,-2"});
    REQUIRE(std::sscanf(r.out.c_str(), "root %lf\nrate %lf", &root, &rate) == 2);
    REQUIRE_THAT(root, Catch::Matchers::WithinAbs(0.5, 1e-9));
    REQUIRE_THAT(rate, Catch::Matchers::WithinAbs(2.0, 1e-9));

    REQUIRE(run({"growth"}).code == 2);
    REQUIRE(run({"growth", "--den", "1,0,1"}).code == 1);  // no root in (0, 1)
}

TEST_CASE("verify subcommand", "[cli]") {
    const CliResult r = run({"verify", "--criterion", "1", "--criterion", "6"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("PASS") != std::string::npos);
    REQUIRE(r.out.find("FAIL") == std::string::npos);
    REQUIRE(r.out.find("acceptance: all criteria passed") != std::string::npos);
}

TEST_CASE("bfile subcommand", "[cli]") {
    CliResult r = run({"bfile", "--pattern", "312", "--n-max", "4"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "1 1\n2 2\n3 4\n4 9\n");

    r = run({"bfile", "--pattern", "312", "--n-max", "4", "--start", "3"});
    REQUIRE(r.out == "3 4\n4 9\n");

    r = run({"bfile", "--pattern", "321", "--n-max", "4", "--mode", "avoiding"});
    REQUIRE(r.out == "1 1\n2 2\n3 5\n4 14\n");
}

TEST_CASE("exit codes and diagnostics", "[cli]") {
    REQUIRE(run({}).code == 2);                          // a subcommand is required
    REQUIRE(run({"nosuchcmd"}).code == 2);
    REQUIRE(run({"count", "--bogus"}).code == 2);
    REQUIRE(run({"count", "--pattern", "312"}).code == 2);  // needs --n or --n-max
    REQUIRE(run({"count", "--pattern", "312", "--n", "3", "--n-max", "5"}).code == 2);

    CliResult r = run({"count", "--pattern", "302", "--n", "3"});
    REQUIRE(r.code == 1);
    REQUIRE(r.err.find("error:") != std::string::npos);

    r = run({"count", "--pattern", "312", "--n", "15"});
    REQUIRE(r.code == 1);
    REQUIRE(r.err.find("raise max_n") != std::string::npos);

    r = run({"--help"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("Usage") != std::string::npos);
}

TEST_CASE("config file", "[cli]") {
    const std::string path = "/tmp/sav_cli_test_config.txt";
    {
        std::ofstream f(path);
        f << "# raised limits for this test\nmax_n = 16\nthreads = 2\n";
    }
    CliResult r = run({"--config", path, "count", "--pattern", "312", "--n", "12"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "3841\n");

    // also accepted after the subcommand
    r = run({"count", "--config", path, "--pattern", "312", "--n", "12"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "3841\n");

    {
        std::ofstream f(path);
        f << "bogus = 1\n";
    }
    REQUIRE(run({"--config", path, "count", "--pattern", "312", "--n", "3"}).code == 2);
    REQUIRE(run({"--config", "/tmp/definitely_missing_config.txt", "count", "--pattern", "312",
                 "--n", "3"})
                .code == 2);
    std::remove(path.c_str());
}

TEST_CASE("count subcommand at depth equal to n", "[cli]") {
    // prefix depth clamps to n for tiny lengths
    const CliResult r = run({"count", "--pattern", "312", "--n", "2", "--threads", "2",
                             "--prefix-depth", "8"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "2\n");
}
