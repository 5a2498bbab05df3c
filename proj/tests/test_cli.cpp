// End-to-end tests of the installed command-line surface: flag parsing,
// exit codes (0 success / 1 violation / 2 usage), output formats, config
// files, and byte-identical repeated runs.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef CIGENERA_CLI_PATH
#error "CIGENERA_CLI_PATH must point at the cigenera binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "cigenera_cli_tests";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("stdout_" + std::to_string(counter++) + ".txt");
    const std::string command = std::string(CIGENERA_CLI_PATH) + " " + args + " > " +
                                out.string() + " 2> /dev/null";
    const int status = std::system(command.c_str());
    std::ifstream in(out, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    fs::remove(out);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buffer.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("single genus queries print bare exact values") {
    CHECK_EQ(run_cli("genus --ci \"X3(5)\" --genus todd").output, "0\n");
    CHECK_EQ(run_cli("genus --ci \"X2(2,2)\" --genus signature").output, "-4\n");
    CHECK_EQ(run_cli("genus --ci \"X2(4)\" --genus ahat").output, "2\n");
    CHECK_EQ(run_cli("genus --ci \"X1(3)\" --genus euler").output, "0\n");
    CHECK_EQ(run_cli("genus --dim 2 --degrees 6 --genus chi-k --k 1 --level 2").output, "8\n");
    // non-integral values print as reduced fractions
    CHECK_EQ(run_cli("genus --ci \"X2(3)\" --genus ak --ak-k 2").output, "5/2\n");
    CHECK_EQ(run_cli("genus --ci \"X3(5)\" --genus todd").exit_code, 0);
}

TEST_CASE("oracle cross-check prints every route and agrees") {
    const RunResult r =
        run_cli("genus --ci \"X2(6)\" --genus chi-k --k 1 --level 2 --oracle all");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.find("closed=8") != std::string::npos);
    CHECK(r.output.find("genfun=8") != std::string::npos);
    CHECK(r.output.find("chern-root=8") != std::string::npos);
    CHECK(r.output.find("[agree]") != std::string::npos);
}

TEST_CASE("chi-y prints the polynomial") {
    const RunResult r = run_cli("genus --ci \"X2()\" --genus chi-y");
    CHECK_EQ(r.exit_code, 0);
    CHECK_EQ(r.output, "chi_y(X2()) = 1 + -1*y + 1*y^2\n");
}

TEST_CASE("json output for a single query") {
    const RunResult r = run_cli("genus --ci \"X2(6)\" --genus todd --format json");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.find("\"c1\": -2") != std::string::npos);
    CHECK(r.output.find("\"values\"") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK_EQ(run_cli("genus --ci \"not a space\" --genus todd").exit_code, 2);
    CHECK_EQ(run_cli("genus --genus todd").exit_code, 2);            // no space given
    CHECK_EQ(run_cli("genus --ci \"X2(4)\" --genus bogus").exit_code, 2);
    CHECK_EQ(run_cli("genus --ci \"X2(4)\" --genus chi-k").exit_code, 2);  // missing k/N
    CHECK_EQ(run_cli("frobnicate").exit_code, 2);
    CHECK_EQ(run_cli("").exit_code, 2);  // subcommand required
    CHECK_EQ(run_cli("sweep --checks todd,bogus --n-max 2").exit_code, 2);
    CHECK_EQ(run_cli("sweep --n-min 5 --n-max 2").exit_code, 2);
    CHECK_EQ(run_cli("sweep --d-max 1").exit_code, 2);
    CHECK_EQ(run_cli("table --genus chi-y --n-max 2").exit_code, 2);
    CHECK_EQ(run_cli("genus --ci \"X2(4)\" --dim 2 --genus todd").exit_code, 2);
    CHECK_EQ(run_cli("genus --ci \"X2(4)\" --genus euler --oracle chern-root").exit_code, 2);
}

TEST_CASE("version flag") {
    const RunResult r = run_cli("--version");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.find("cigenera") != std::string::npos);
}

TEST_CASE("sweep runs clean and exits 0") {
    const RunResult r =
        run_cli("sweep --n-max 3 --r-max 2 --d-max 3 --levels 2 --ak 2 --checks todd,chik,ak");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.find("[PASS] todd") != std::string::npos);
    CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("sweep reports are byte-identical across runs") {
    const fs::path first = scratch_dir() / "report_a.json";
    const fs::path second = scratch_dir() / "report_b.json";
    const std::string args =
        "sweep --n-max 3 --r-max 1 --d-max 3 --levels 2 --ak 2 --checks todd,oracles "
        "--format json --out ";
    CHECK_EQ(run_cli(args + first.string()).exit_code, 0);
    CHECK_EQ(run_cli(args + second.string()).exit_code, 0);
    const std::string a = slurp(first);
    const std::string b = slurp(second);
    CHECK_FALSE(a.empty());
    CHECK_EQ(a, b);
    fs::remove(first);
    fs::remove(second);
}

TEST_CASE("table emits the documented CSV schema") {
    const RunResult r =
        run_cli("table --n-max 2 --r-max 1 --d-max 3 --genus todd,signature --format csv");
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.rfind("n,r,degrees,c1,genus_label,k,N,value\n", 0) == 0);
    CHECK(r.output.find("2,1,3,1,todd,,,1\n") != std::string::npos);
}

TEST_CASE("config files supply defaults and flags override them") {
    const fs::path cfg = scratch_dir() / "sweep.cfg";
    std::ofstream(cfg) << "n-max=2\nr-max=1\nd-max=3\nlevels=2\nak=2\nchecks=todd\nformat=csv\n";
    const RunResult from_file = run_cli("sweep --config " + cfg.string());
    CHECK_EQ(from_file.exit_code, 0);
    CHECK(from_file.output.rfind("check_id,", 0) == 0);  // csv came from the file
    const RunResult overridden = run_cli("sweep --config " + cfg.string() + " --format text");
    CHECK_EQ(overridden.exit_code, 0);
    CHECK(overridden.output.find("[PASS] todd") != std::string::npos);
    fs::remove(cfg);
}
