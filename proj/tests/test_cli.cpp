#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

// Every case here spawns the real binary, so these tests pin down the
// observable contract: byte-exact output and exit codes.

namespace {

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_shell(const std::string& command) {
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

// stdout only; stderr only.
RunResult run_cli(const std::string& args) {
    return run_shell(std::string(HOOKDEC_CLI_PATH) + " " + args + " 2>/dev/null");
}

RunResult run_cli_stderr(const std::string& args) {
    return run_shell(std::string(HOOKDEC_CLI_PATH) + " " + args + " 2>&1 1>/dev/null");
}

} // namespace

TEST_CASE("coefficient and multiplicity queries") {
    RunResult r = run_cli("lr --lambda 2,1 --mu 1 --nu 2");
    CHECK(r.status == 0);
    CHECK(r.output == "1\n");

    // Mismatched sizes are a zero coefficient, not an error.
    r = run_cli("lr --lambda 2,1 --mu 1 --nu 1");
    CHECK(r.status == 0);
    CHECK(r.output == "0\n");

    r = run_cli("lr --lambda - --mu - --nu -");
    CHECK(r.status == 0);
    CHECK(r.output == "1\n");

    r = run_cli("mult --kind rect --lambda 2,1 --mu 2,1 --t 1");
    CHECK(r.status == 0);
    CHECK(r.output == "2\n");

    r = run_cli("mult --kind square --lambda 2,2 --t 0");
    CHECK(r.status == 0);
    CHECK(r.output == "2\n");

    r = run_cli("mult --kind square-graded --lambda 2,2 --t 0 --j 2");
    CHECK(r.status == 0);
    CHECK(r.output == "1\n");
}

TEST_CASE("rectangular tables") {
    RunResult r = run_cli("table --n 3 --t 1 --k 2 --m 2");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "lambda\tmu\tmult\n"
          "3\t2,1\t2\n"
          "2,1\t3\t2\n"
          "2,1\t2,1\t2\n");

    r = run_cli("table --n 3 --t 1 --k 2 --m 2 --format json");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "{\"context\":{\"k\":2,\"kind\":\"rect\",\"m\":2,\"n\":3,\"t\":1},"
          "\"entries\":[{\"lambda\":\"3\",\"mu\":\"2,1\",\"mult\":2},"
          "{\"lambda\":\"2,1\",\"mu\":\"3\",\"mult\":2},"
          "{\"lambda\":\"2,1\",\"mu\":\"2,1\",\"mult\":2}]}\n");
}

TEST_CASE("square tables") {
    RunResult r = run_cli("table --n 2 --t 0");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "lambda\tmult\n"
          "4\t1\n"
          "3,1\t1\n"
          "2,2\t2\n"
          "2,1,1\t1\n"
          "1,1,1,1\t1\n");

    r = run_cli("table --n 2 --t 1");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "lambda\tmult\n"
          "3,1\t2\n"
          "2,1,1\t2\n");

    r = run_cli("table --n 2 --t 0 --k 2 --format json");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "{\"context\":{\"k\":2,\"kind\":\"square\",\"n\":2,\"t\":0},"
          "\"entries\":[{\"lambda\":\"4\",\"mult\":1},{\"lambda\":\"3,1\",\"mult\":1},"
          "{\"lambda\":\"2,2\",\"mult\":2}]}\n");

    r = run_cli("table --n 2 --t 0 --j 0 --format json");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "{\"context\":{\"j\":0,\"kind\":\"square\",\"n\":2,\"t\":0},"
          "\"entries\":[{\"lambda\":\"4\",\"mult\":1},{\"lambda\":\"2,2\",\"mult\":1}]}\n");
}

TEST_CASE("size caps") {
    RunResult r = run_cli("table --n 9 --t 0 --k 2 --m 2");
    CHECK(r.status == 4);
    CHECK(r.output.empty());
    r = run_cli_stderr("table --n 9 --t 0 --k 2 --m 2");
    CHECK(r.output.find("ResourceLimit") != std::string::npos);
    CHECK(r.output.find("--unsafe-max-n") != std::string::npos);

    r = run_cli("table --n 5 --t 0");
    CHECK(r.status == 4);

    // Lifting the cap turns the same query into a (small) answer.
    r = run_cli("table --n 5 --t 0 --k 1 --unsafe-max-n 5 --format json");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "{\"context\":{\"k\":1,\"kind\":\"square\",\"n\":5,\"t\":0},"
          "\"entries\":[{\"lambda\":\"10\",\"mult\":1}]}\n");

    r = run_cli("verify --suite rect --max-n 9");
    CHECK(r.status == 4);
}

TEST_CASE("verification suites") {
    const RunResult r = run_cli("verify --suite bn --max-n 3");
    CHECK(r.status == 0);
    CHECK(r.output ==
          "PASS  bn/matching-decomposition  n<=3\n"
          "PASS  bn/dimension-sums  n<=3\n"
          "PASS  bn/restriction-trivial  n<=3\n"
          "PASS  bn/restriction-sign  n<=3\n"
          "PASS  bn/eigenvalue  n<=3\n"
          "PASS  bn/restriction-dimension  n<=3\n"
          "all checks passed\n");
}

TEST_CASE("exit codes for bad input") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("").status == 2);          // a subcommand is required
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("mult --lambda 2,1").status == 2); // --t missing
    CHECK(run_cli("mult --kind bogus --lambda 2 --t 0").status == 2);
    CHECK(run_cli("mult --kind rect --lambda 2 --t 0").status == 2); // --mu missing

    RunResult r = run_cli_stderr("lr --lambda 1,2 --mu 1 --nu 2");
    CHECK(r.status == 2);
    CHECK(r.output.find("Parse") != std::string::npos);

    r = run_cli_stderr("mult --kind rect --lambda 2,1 --mu 2 --t 0");
    CHECK(r.status == 3);
    CHECK(r.output.find("SizeMismatch") != std::string::npos);

    r = run_cli_stderr("mult --kind square --lambda 2,1 --t 0");
    CHECK(r.status == 3);
    CHECK(r.output.find("OddSize") != std::string::npos);

    CHECK(run_cli("mult --kind rect --lambda 2 --mu 2 --t 5").status == 3);
}

TEST_CASE("character table cache directory") {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("hookdec-cli-cache-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string env = "HOOKDEC_CACHE_DIR='" + dir.string() + "' ";

    const std::string expected =
        "PASS  bn/matching-decomposition  n<=2\n"
        "PASS  bn/dimension-sums  n<=2\n"
        "PASS  bn/restriction-trivial  n<=2\n"
        "PASS  bn/restriction-sign  n<=2\n"
        "PASS  bn/eigenvalue  n<=2\n"
        "PASS  bn/restriction-dimension  n<=2\n"
        "all checks passed\n";

    RunResult r = run_shell(env + HOOKDEC_CLI_PATH + " verify --suite bn --max-n 2 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(r.output == expected);

    // The run populated the cache with the tables it needed.
    bool found = false;
    for (const auto& entry : fs::directory_iterator(dir)) {
        found = true;
        CHECK(entry.path().extension() == ".json");
    }
    CHECK(found);

    // Corrupt every cached file: the next run must fall back to building
    // the tables and still succeed.
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::ofstream out(entry.path());
        out << "garbage";
    }
    r = run_shell(env + HOOKDEC_CLI_PATH + " verify --suite bn --max-n 2 2>/dev/null");
    CHECK(r.status == 0);
    CHECK(r.output == expected);

    fs::remove_all(dir);
}
