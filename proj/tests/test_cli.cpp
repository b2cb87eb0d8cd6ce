#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "ytc/cli.hpp"

using namespace ytc;

namespace {

struct CliRun {
    int exit_code = 0;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("young subcommand reproduces the worked example") {
    CliRun r = run({"young", "--lambda", "5,4,2", "-t", "3"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("{1,2,6,7,11}\n") == 0);
    CHECK(r.out.find("{7,8,9,10,11}\n") != std::string::npos);
    // twelve facets, one per line
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);
}

TEST_CASE("young json round-trips") {
    CliRun r = run({"young", "--lambda", "5,4,2", "-t", "3", "--json"});
    REQUIRE(r.exit_code == 0);
    SimplicialComplex parsed = complex_from_json(json::parse(r.out));
    CHECK(parsed == young_complex(Partition({5, 4, 2}), 3));
}

TEST_CASE("pd and dim subcommands print bare numbers") {
    CHECK(run({"pd", "-n", "19", "-t", "4", "-k", "3"}).out == "5\n");
    CHECK(run({"pd", "-n", "19", "-t", "4", "-k", "3", "--oracle"}).exit_code == 2);
    CHECK(run({"pd", "-n", "9", "-t", "2", "-k", "3", "--oracle"}).out == "4\n");
    CHECK(run({"dim", "-n", "15", "-t", "5", "-k", "3"}).out == "14\n");
    CHECK(run({"dim", "-n", "15", "-t", "5", "-k", "3", "--oracle"}).out == "14\n");
}

TEST_CASE("exit codes distinguish domain and capacity errors") {
    CliRun domain = run({"pd", "-n", "3", "-t", "2", "-k", "5"});
    CHECK(domain.exit_code == 1);
    CHECK(domain.err.find("floor(n/t)") != std::string::npos);

    CliRun capacity = run({"young", "--lambda", "64", "-t", "1"});
    CHECK(capacity.exit_code == 2);

    CliRun unknown = run({"young", "--lambda", "2,1", "-t", "1", "--bogus"});
    CHECK(unknown.exit_code == 1);

    CliRun nonmonotone = run({"young", "--lambda", "2,5", "-t", "1"});
    CHECK(nonmonotone.exit_code == 1);
    CHECK(nonmonotone.err.find("part 2") != std::string::npos);
}

TEST_CASE("homotopy subcommand, both parameterizations") {
    CHECK(run({"homotopy", "-n", "9", "-t", "2", "-k", "3"}).out == "3*S^1 v S^2\n");
    CHECK(run({"homotopy", "--lambda", "5,4,2", "-t", "3"}).out == "contractible\n");
    CHECK(run({"homotopy", "-n", "6", "-t", "2", "-k", "3"}).out == "S^-1\n");

    CliRun j = run({"homotopy", "-n", "9", "-t", "2", "-k", "3", "--json"});
    CHECK(homotopy_from_json(json::parse(j.out)) == dual_homotopy(9, 3, 2));
}

TEST_CASE("homology subcommand") {
    CliRun r = run({"homology", "--lambda", "3,3,3,3", "-t", "2"});
    CHECK(r.out == "H~_1 = 3\nH~_2 = 1\n");

    CliRun j = run({"homology", "-n", "9", "-t", "2", "-k", "3", "--json", "--field", "gf2"});
    BettiVector b = betti_from_json(json::parse(j.out));
    CHECK(b.betti(1) == 3);
    CHECK(b.betti(2) == 1);

    CHECK(run({"homology", "-t", "2"}).exit_code == 1);
}

TEST_CASE("dual subcommand with and without the oracle route") {
    CliRun fast = run({"dual", "-n", "9", "-t", "2", "-k", "3", "--json"});
    CliRun slow = run({"dual", "-n", "9", "-t", "2", "-k", "3", "--oracle", "--json"});
    CHECK(complex_from_json(json::parse(fast.out)) == complex_from_json(json::parse(slow.out)));

    CHECK(run({"dual", "-n", "6", "-t", "2", "-k", "3"}).out == "{}\n");
    CHECK(run({"dual", "-n", "5", "-t", "2", "-k", "3"}).out == "(void: no faces)\n");
}

TEST_CASE("pathideal subcommand") {
    CliRun r = run({"pathideal", "-n", "6", "-t", "2", "-k", "3"});
    CHECK(r.out == "{1,2,3,4,5,6}\n");

    CliRun j = run({"pathideal", "-n", "9", "-t", "2", "-k", "3", "--json"});
    auto [spec, supports] = monomial_set_from_json(json::parse(j.out));
    CHECK(spec.n == 9);
    CHECK(supports.size() == 20);
}

TEST_CASE("helly subcommand") {
    CHECK(run({"helly", "--lambda", "5,4,2", "-t", "3"}).out == "5\n");
    CHECK(run({"helly", "--lambda", "5,4,2", "-t", "3", "--oracle"}).out == "5\n");
    CHECK(run({"helly", "--lambda", "7", "-t", "2"}).out == "simplex (no nonfaces)\n");
}

TEST_CASE("leray subcommand") {
    CHECK(run({"leray", "-n", "9", "-t", "2", "-k", "3"}).out == "3\n");
    CHECK(run({"leray", "-n", "9", "-t", "2", "-k", "3", "--oracle"}).out == "3\n");
}

TEST_CASE("graph subcommand formats") {
    CliRun dot = run({"graph", "-n", "9", "-t", "2", "-k", "3", "--dot"});
    CHECK(dot.out.find("digraph G {") == 0);
    CHECK(dot.out.find("\"9,3\" -> \"6,2\" [label=1];") != std::string::npos);

    CliRun text = run({"graph", "-n", "9", "-t", "2", "-k", "3"});
    CHECK(text.out.find("(9,3) -> (7,2) [0]") != std::string::npos);
    CHECK(text.out.find("N(6,2,1) = 1") != std::string::npos);

    CliRun j = run({"graph", "-n", "9", "-t", "2", "-k", "3", "--json"});
    json parsed = json::parse(j.out);
    CHECK(parsed["edges"].size() == 9);
    CHECK(parsed["leaves"].size() == 5);
    CHECK(parsed["path_counts"].size() == 7);

    CHECK(run({"graph", "-n", "8", "-t", "2", "-k", "3"}).exit_code == 1);
}

TEST_CASE("decomp subcommand") {
    CliRun r = run({"decomp", "--lambda", "3,3", "-t", "2", "--shelling", "--cm"});
    CHECK(r.out == "vertex-decomposable: false\nshellable: false\ncohen-macaulay(q): false\n");

    CliRun j = run({"decomp", "--lambda", "3,2", "-t", "2", "--json"});
    json parsed = json::parse(j.out);
    CHECK(parsed["vd"]["verdict"] == true);
    CHECK(parsed["vd"]["tree"].contains("vertex"));
}

TEST_CASE("identical invocations give byte-identical output") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"young", "--lambda", "4,3,1", "-t", "2", "--json"},
          {"graph", "-n", "12", "-t", "2", "-k", "3", "--dot"},
          {"homology", "--lambda", "3,3", "-t", "2", "--json"}}) {
        CliRun first = run(args);
        CliRun second = run(args);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("verify subcommand with tiny bounds") {
    CliRun r = run({"verify", "--max-n", "6", "--max-t", "2", "--max-k", "2", "--max-cells", "5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("help exits zero") {
    CHECK(run({"--help"}).exit_code == 0);
}
