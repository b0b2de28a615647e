// Black-box tests for the command-line surface. Takes the binary path as
// argv[1] and drives it through /bin/sh, checking exit codes and bytes.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

int g_failures = 0;

#define REQUIRE(cond, msg)                                                         \
    do {                                                                           \
        if (!(cond)) {                                                             \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (msg)  \
                      << "\n";                                                     \
            ++g_failures;                                                          \
        }                                                                          \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (pipe == nullptr)
        return result;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: sticks_cli_tests <path-to-sticks-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];

    // exact: human renderings
    {
        RunResult r = run(cli + " exact --k 2 --n 3");
        REQUIRE(r.exit_code == 0, "exact 2 3 exit");
        REQUIRE(r.output == "1/2 = 0.500000 (exact)\n", "exact 2 3 output, got: " + r.output);

        r = run(cli + " exact --k 4 --n 5");
        REQUIRE(r.exit_code == 0, "exact 4 5 exit");
        REQUIRE(r.output == "1/24 ≈ 0.041667\n", "exact 4 5 output, got: " + r.output);

        r = run(cli + " exact --k 3 --n 3");
        REQUIRE(r.exit_code == 0, "exact 3 3 exit");
        REQUIRE(r.output == "1 (no 4-subset exists)\n", "exact 3 3 output, got: " + r.output);

        r = run(cli + " exact --k 2 --n 5 --digits 8");
        REQUIRE(contains(r.output, "0.03333333"), "exact digits flag, got: " + r.output);
    }

    // exact: machine formats and byte stability
    {
        const RunResult a = run(cli + " exact --k 3 --n 6 --format json");
        const RunResult b = run(cli + " exact --k 3 --n 6 --format json");
        REQUIRE(a.exit_code == 0, "exact json exit");
        REQUIRE(a.output == b.output, "exact json byte-stable");
        const auto j = nlohmann::ordered_json::parse(a.output);
        REQUIRE(j["k"] == 3 && j["n"] == 6, "exact json fields");
        REQUIRE(j["numerator"] == "1" && j["denominator"] == "504", "exact json value 1/504");

        const RunResult c = run(cli + " exact --k 2 --n 3 --format csv");
        REQUIRE(c.output == "k,n,numerator,denominator,decimal,exact\n2,3,1,2,0.500000,true\n",
                "exact csv bytes, got: " + c.output);
    }

    // table
    {
        RunResult r = run(cli + " table --k 2 --n-max 5 --format csv");
        REQUIRE(r.exit_code == 0, "table csv exit");
        REQUIRE(r.output ==
                    "n,numerator,denominator,decimal\n"
                    "3,1,2,0.500000\n"
                    "4,1,6,0.166667\n"
                    "5,1,30,0.033333\n",
                "table csv bytes, got: " + r.output);

        r = run(cli + " table --k 2 --n-max 3 --format csv");
        REQUIRE(r.output == "n,numerator,denominator,decimal\n3,1,2,0.500000\n",
                "table single row, got: " + r.output);

        r = run(cli + " table --k 3 --n-max 7 --format json");
        REQUIRE(r.exit_code == 0, "table json exit");
        const auto arr = nlohmann::ordered_json::parse(r.output);
        REQUIRE(arr.is_array() && arr.size() == 4, "table json rows");
        REQUIRE(arr[0]["n"] == 4 && arr[0]["denominator"] == "6", "table json first row");

        r = run(cli + " table --k 3 --n-max 3");
        REQUIRE(r.exit_code != 0, "table n-max below k+1 rejected");
        REQUIRE(contains(r.output, "n-max must be >= k+1"), "table bound named, got: " + r.output);
    }

    // simulate
    {
        const std::string cmd =
            cli + " simulate --k 3 --n 5 --trials 20000 --seed 42 --workers 3 --format json";
        const RunResult a = run(cmd);
        const RunResult b = run(cmd);
        REQUIRE(a.exit_code == 0, "simulate exit");
        REQUIRE(a.output == b.output, "simulate json bit-identical across invocations");
        const auto j = nlohmann::ordered_json::parse(a.output);
        REQUIRE(j["trials"] == 20000 && j["seed"] == 42 && j["workers"] == 3,
                "simulate json config echo");
        REQUIRE(j["sampler"] == "uniform-sort", "simulate default sampler");

        const RunResult human = run(cli + " simulate --k 2 --n 3 --trials 5000 --seed 1");
        REQUIRE(human.exit_code == 0, "simulate human exit");
        REQUIRE(contains(human.output, "exact     = 1/2"), "simulate human exact line");
        REQUIRE(contains(human.output, "|estimate-exact|/stderr"), "simulate human z line");

        const RunResult csv = run(cli + " simulate --k 2 --n 4 --trials 1000 --seed 3 --format csv "
                                        "--sampler exponential-sums");
        REQUIRE(csv.exit_code == 0, "simulate csv exit");
        REQUIRE(contains(csv.output,
                         "k,n,trials,seed,workers,sampler,successes,estimate,stderr,ci95_low,ci95_high"),
                "simulate csv header");
        REQUIRE(contains(csv.output, "exponential-sums"), "simulate csv sampler echo");

        const RunResult bad = run(cli + " simulate --k 2 --n 3 --trials 0");
        REQUIRE(bad.exit_code != 0, "simulate trials=0 rejected");
        REQUIRE(contains(bad.output, "trials must be >= 1"), "trials bound named");

        const RunResult badsampler = run(cli + " simulate --k 2 --n 3 --sampler bogus");
        REQUIRE(badsampler.exit_code != 0, "bogus sampler rejected");
        REQUIRE(contains(badsampler.output, "uniform-sort"), "sampler error names choices");
    }

    // verify
    {
        RunResult r = run(cli + " verify --k-max 4 --l-max 12 --n-max 10");
        REQUIRE(r.exit_code == 0, "verify exit 0, got: " + r.output);
        REQUIRE(contains(r.output, "closed-form-vs-iterated"), "verify family line");
        REQUIRE(contains(r.output, "verify: all identities hold"), "verify summary");

        r = run(cli + " verify --k-max 1");
        REQUIRE(r.exit_code != 0, "verify k-max=1 rejected");
        REQUIRE(contains(r.output, "k-max must be >= 2"), "verify bound named");

        r = run("STICKS_VERIFY_TAMPER=1 " + cli + " verify --k-max 3 --l-max 5 --n-max 6");
        REQUIRE(r.exit_code == 1, "tampered verify exits nonzero");
        REQUIRE(contains(r.output, "first failure"), "tampered verify reports the tuple");
        REQUIRE(contains(r.output, "FAILED"), "tampered verify summary");
    }

    // rvec
    {
        const RunResult r = run(cli + " rvec --k 4 --l 3");
        REQUIRE(r.exit_code == 0, "rvec exit");
        REQUIRE(contains(r.output, "agreement: exact"), "rvec agreement line, got: " + r.output);
        const RunResult j = run(cli + " rvec --k 3 --l 4 --format json");
        const auto parsed = nlohmann::ordered_json::parse(j.output);
        REQUIRE(parsed["iterated"] == parsed["closed_form"], "rvec json agreement");
    }

    // flag and environment validation
    {
        RunResult r = run(cli + " exact --k 1 --n 3");
        REQUIRE(r.exit_code != 0, "k=1 rejected");
        REQUIRE(contains(r.output, "k must be >= 2"), "k bound named, got: " + r.output);

        r = run(cli + " exact --k 2");
        REQUIRE(r.exit_code != 0, "missing --n rejected");
        REQUIRE(contains(r.output, "error"), "missing flag error prefixed");

        r = run(cli + " exact --k abc --n 3");
        REQUIRE(r.exit_code != 0, "non-numeric k rejected");

        r = run(cli + " nosuchcommand");
        REQUIRE(r.exit_code != 0, "unknown subcommand rejected");

        r = run("STICKS_MAX_K=4 " + cli + " exact --k 5 --n 6");
        REQUIRE(r.exit_code != 0, "env cap enforced");
        REQUIRE(contains(r.output, "k must be <= 4"), "env cap named, got: " + r.output);

        r = run("STICKS_MAX_K=4 " + cli + " exact --k 4 --n 6");
        REQUIRE(r.exit_code == 0, "env cap allows boundary");

        r = run("STICKS_MAX_K=banana " + cli + " exact --k 2 --n 3");
        REQUIRE(r.exit_code != 0, "garbage env cap rejected");
        REQUIRE(contains(r.output, "STICKS_MAX_K"), "env cap error names the variable");
    }

    if (g_failures == 0) {
        std::cout << "cli tests: all passed\n";
        return 0;
    }
    std::cerr << "cli tests: " << g_failures << " failure(s)\n";
    return 1;
}
