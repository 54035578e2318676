#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd =
        env + " " + std::string(CNSLAB_CLI_PATH) + " " + args + " > " + out_path + " 2> cli_test_stderr.tmp";
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    return result;
}

} // namespace

TEST_CASE("expand prints the DigitString JSON") {
    const CliResult r = run_cli("expand --d 1 --alpha \"-1+1*w[1]\" --gamma \"2+0*w[1]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"base\":\"-1+1*w[1]\",\"d\":1,\"digits\":[0,0,1,1]}\n");
}

TEST_CASE("expand output feeds evaluate back to the same gamma text") {
    const CliResult expanded = run_cli("expand --alpha \"-2+1*w[1]\" --gamma \"-17+42*w[1]\" --out cli_digits.tmp");
    REQUIRE(expanded.exit_code == 0);
    const CliResult evaluated = run_cli("evaluate --in cli_digits.tmp");
    CHECK(evaluated.exit_code == 0);
    CHECK(evaluated.out == "-17+42*w[1]\n");
    std::remove("cli_digits.tmp");
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::string args = "sweep --alpha \"-1+1*w[1]\" --beta \"-2+1*w[1]\" --n-max 300";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("a,b,norm,abs,Za,Sa,La,Zb,Sb,Lb,lhs,bound_C0\n", 0) == 0);

    // the CNSLAB_THREADS cap must not change the bytes
    const CliResult c = run_cli(args, "CNSLAB_THREADS=1");
    const CliResult d = run_cli(args, "CNSLAB_THREADS=3");
    CHECK(c.out == a.out);
    CHECK(d.out == a.out);
}

TEST_CASE("subcommand outputs") {
    const CliResult validate = run_cli("validate --d 1 --alpha \"-1+1*w[1]\"");
    CHECK(validate.exit_code == 0);
    CHECK(validate.out.find("criterion_ok = true") != std::string::npos);
    CHECK(validate.out.find("ring_match = true") != std::string::npos);

    const CliResult multdep =
        run_cli("multdep --alpha \"-1+1*w[1]\" --beta \"-1-1*w[1]\" --format json");
    CHECK(multdep.exit_code == 0);
    CHECK(multdep.out ==
          "{\"dependent\":true,\"u\":1,\"v\":1,\"w\":4}\n");

    const CliResult bound = run_cli("bound --x 1e6 --C 0");
    CHECK(bound.exit_code == 0);
    CHECK(bound.out.rfind("2.71994968", 0) == 0);

    const CliResult scan = run_cli("scan --katai-szabo --a-max 2");
    CHECK(scan.exit_code == 0);
    CHECK(scan.out ==
          "[\"-1-1*w[1]\",\"-1+1*w[1]\",\"-2-1*w[1]\",\"-2+1*w[1]\"]\n");

    const CliResult lebesgue = run_cli("scan --lebesgue --a-max 50");
    CHECK(lebesgue.exit_code == 0);
    CHECK(lebesgue.out == "[]\n");

    const CliResult qi = run_cli("scan --qi --a-max 3");
    CHECK(qi.exit_code == 0);
    CHECK(qi.out == "[[\"-1+1*w[1]\",\"-1-1*w[1]\"]]\n");

    const CliResult stats = run_cli("stats --alpha \"-1+1*w[1]\" --gamma \"2+0*w[1]\" --format text");
    CHECK(stats.exit_code == 0);
    CHECK(stats.out.find("Z = 2") != std::string::npos);
    CHECK(stats.out.find("L = 3") != std::string::npos);
}

TEST_CASE("exit codes: 1 for usage errors, 2 for domain errors") {
    CHECK(run_cli("expand --no-such-flag").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("scan --a-max 3").exit_code == 1); // no scan mode picked

    // x = 10 < e^e: domain error
    CHECK(run_cli("bound --x 10 --C 0").exit_code == 2);
    // gamma lies in another field
    CHECK(run_cli("expand --alpha \"-1+1*w[1]\" --gamma \"1+1*w[2]\"").exit_code == 2);
    // dependent bases cannot sweep
    CHECK(run_cli("sweep --alpha \"-1+1*w[1]\" --beta \"-1-1*w[1]\" --n-max 50").exit_code == 2);
    // unparseable element text
    CHECK(run_cli("validate --alpha \"garbage\"").exit_code == 2);

    std::remove("cli_test_stdout.tmp");
    std::remove("cli_test_stderr.tmp");
}
