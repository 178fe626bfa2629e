// End-to-end tests of the CLI binary (path supplied via ZIMIN_CLI).
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("ZIMIN_CLI");
    return p ? p : "./zimin";
}

RunResult run_cli(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string first_line(const std::string& s) {
    auto pos = s.find('\n');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

} // namespace

TEST_CASE("check subcommand and exit codes") {
    auto r = run_cli("check instance --word freezer --pattern cool");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) == "true");
    CHECK(r.out.find("c -> fr") != std::string::npos);
    CHECK(r.out.find("o -> e") != std::string::npos);
    CHECK(r.out.find("l -> zer") != std::string::npos);

    CHECK(run_cli("check unavoidable --pattern aba").exit_code == 0);
    auto rf = run_cli("check unavoidable --pattern aa");
    CHECK(rf.exit_code == 1);
    CHECK(first_line(rf.out) == "false");

    CHECK(run_cli("check instance --word 0101 --pattern aba").exit_code == 1);
    CHECK(run_cli("check encounters --word xfreezerx --pattern cool").exit_code == 0);
    CHECK(run_cli("check zimin-instance --word 0110 --n 2").exit_code == 0);

    CHECK(run_cli("check instance --word 'a b!' --pattern aba").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("seq subcommand formats") {
    auto r = run_cli("seq b --q 2 --ell 1 --max 9");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n0\n0\n2\n3\n6\n14\n25\n52\n100\n");

    auto csv = run_cli("seq b --q 2 --ell 1 --max 6 --format csv");
    CHECK(csv.out.find("kind,q,ell,m,value") == 0);
    CHECK(csv.out.find("b,2,1,6,14") != std::string::npos);

    auto a = run_cli("seq a --q 2 --max 6");
    CHECK(a.out == "0\n2\n2\n4\n6\n12\n20\n");

    auto bh = run_cli("seq bhat --q 2 --ell 1 --max 3");
    CHECK(bh.out == "0\n0\n0\n2\n");

    auto js = run_cli("seq c --q 3 --ell 1 --max 4 --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"kind\": \"c\"") != std::string::npos);

    CHECK(run_cli("seq nosuch --q 2 --max 3").exit_code == 2);
}

TEST_CASE("density subcommands") {
    auto z2 = run_cli("density z2 --q 2 --digits 5");
    CHECK(z2.exit_code == 0);
    CHECK(first_line(z2.out) == "0.73221");
    CHECK(z2.out.find("params: N=") != std::string::npos);

    auto z3 = run_cli("density z3 --q 2 --digits 8");
    CHECK(z3.exit_code == 0);
    CHECK(first_line(z3.out) == "0.11944370");

    auto js = run_cli("density z2 --q 3 --digits 7 --format json");
    CHECK(js.out.find("\"target\": \"I(Z2,3)\"") != std::string::npos);
    CHECK(js.out.find("\"lower\": \"") != std::string::npos);
    CHECK(js.out.find("\"digits\": 7") != std::string::npos);

    auto zn = run_cli("density zn-bounds --n 4 --q 3 --caps 8,8 --digits 6");
    CHECK(zn.exit_code == 0);
    CHECK(zn.out.find("generic-lower:") != std::string::npos);
    CHECK(zn.out.find("chain-upper:") != std::string::npos);

    auto emp = run_cli("density empirical --zimin 2 --q 2 --n 8 --digits 6");
    CHECK(emp.exit_code == 0);
    CHECK(emp.out.find("mode:   exhaustive") != std::string::npos);

    // budget violation surfaces as the compute exit code
    CHECK(run_cli("density empirical --zimin 3 --q 2 --n 60").exit_code == 3);
    // malformed numeric/parameter input is a usage error
    CHECK(run_cli("density z2 --q 2 --eps nonsense").exit_code == 2);
    CHECK(run_cli("seq b --q 1 --ell 1 --max 4").exit_code == 2);
}

TEST_CASE("deterministic output") {
    auto a = run_cli("density z2 --q 2 --digits 7 --format json");
    auto b = run_cli("density z2 --q 2 --digits 7 --format json");
    CHECK(a.out == b.out);

    auto m1 = run_cli("density empirical --zimin 3 --q 2 --n 30 --mode montecarlo "
                      "--samples 5000 --seed 99 --digits 6");
    auto m2 = run_cli("density empirical --zimin 3 --q 2 --n 30 --mode montecarlo "
                      "--samples 5000 --seed 99 --digits 6");
    CHECK(m1.out == m2.out);
    CHECK(m1.out.find("seed:   99") != std::string::npos);
}

TEST_CASE("cache soundness") {
    namespace fs = std::filesystem;
    fs::path cache = fs::temp_directory_path() / "zimin_cli_cache.json";
    fs::remove(cache);
    std::string flag = " --cache " + cache.string();

    auto plain = run_cli("seq b --q 2 --ell 2 --max 12");
    auto first = run_cli("seq b --q 2 --ell 2 --max 12" + flag);
    CHECK(fs::exists(cache));
    auto second = run_cli("seq b --q 2 --ell 2 --max 12" + flag);
    CHECK(plain.out == first.out);
    CHECK(plain.out == second.out);

    auto d_plain = run_cli("density z3 --q 2 --digits 6");
    auto d_cached = run_cli("density z3 --q 2 --digits 6" + flag);
    CHECK(d_plain.out == d_cached.out);
    fs::remove(cache);
}

TEST_CASE("tables") {
    auto t4 = run_cli("table t4");
    CHECK(t4.exit_code == 0);
    CHECK(t4.out.find("0.11944370") != std::string::npos);
    CHECK(t4.out.find("0.00092532") != std::string::npos);

    auto t1csv = run_cli("table t1 --format csv");
    CHECK(t1csv.out.find("I(Z2,q),0.7322132,0.4430202,0.3122520,0.2399355,0.1944229") !=
          std::string::npos);
    CHECK(t1csv.out.find("I(Z3,q),0.1194437,0.0183514,0.0051925,0.0019974,0.0009253") !=
          std::string::npos);

    auto t3 = run_cli("table t3 --format csv");
    CHECK(t3.out.find("q^-1,0.50000") != std::string::npos);
    CHECK(t3.out.find("I(Z2,q),0.73221") != std::string::npos);
    CHECK(t3.out.find("0.14062") != std::string::npos);

    // t2 renders the same quantity as t1's first row on shared columns
    auto t1 = run_cli("table t1 --format csv");
    auto t2 = run_cli("table t2 --format csv");
    auto t1_z2 = t1.out.substr(t1.out.find("I(Z2,q)"));
    t1_z2 = first_line(t1_z2);
    auto t2_z2 = t2.out.substr(t2.out.find("I(Z2,q)"));
    t2_z2 = first_line(t2_z2);
    CHECK(t2_z2.find(t1_z2) == 0);

    auto md = run_cli("table t4 --format md");
    CHECK(md.out.find("| I(Z3,q) |") != std::string::npos);
}

TEST_CASE("verify quick suites pass") {
    auto r = run_cli("verify recursions --budget quick");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS a-vs-enumeration") != std::string::npos);

    auto c = run_cli("verify cases --budget quick");
    CHECK(c.exit_code == 0);

    auto s = run_cli("verify sandwich --budget quick");
    CHECK(s.exit_code == 0);
}
