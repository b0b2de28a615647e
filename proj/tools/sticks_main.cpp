#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sticks/exact.hpp"
#include "sticks/kfib.hpp"
#include "sticks/mc.hpp"
#include "sticks/verify.hpp"

namespace {

using nlohmann::ordered_json;

enum class Format { Human, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "human")
        return Format::Human;
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    throw std::domain_error("format must be one of human|json|csv (got '" + name + "')");
}

std::string double_str(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

int cmd_exact(int k, int n, int digits, Format format) {
    const sticks::ExactProbability p = sticks::exact_probability(k, n);
    const sticks::Decimal d = sticks::decimal_expand(p.value, digits);
    const std::string num = boost::multiprecision::numerator(p.value).str();
    const std::string den = boost::multiprecision::denominator(p.value).str();
    switch (format) {
    case Format::Human:
        if (n <= k)
            std::cout << "1 (no " << k + 1 << "-subset exists)\n";
        else if (d.exact)
            std::cout << num << "/" << den << " = " << d.text << " (exact)\n";
        else
            std::cout << num << "/" << den << " ≈ " << d.text << "\n";
        break;
    case Format::Json: {
        ordered_json j;
        j["k"] = k;
        j["n"] = n;
        j["numerator"] = num;
        j["denominator"] = den;
        j["decimal"] = d.text;
        j["exact"] = d.exact;
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::Csv:
        std::cout << "k,n,numerator,denominator,decimal,exact\n"
                  << k << "," << n << "," << num << "," << den << "," << d.text << ","
                  << (d.exact ? "true" : "false") << "\n";
        break;
    }
    return 0;
}

int cmd_table(int k, int n_max, int digits, Format format) {
    if (n_max < k + 1)
        throw std::domain_error("n-max must be >= k+1 = " + std::to_string(k + 1) + " (got " +
                                std::to_string(n_max) + ")");
    struct Row {
        int n;
        std::string num, den, decimal;
    };
    std::vector<Row> rows;
    for (int n = k + 1; n <= n_max; ++n) {
        const sticks::ExactProbability p = sticks::exact_probability(k, n);
        rows.push_back(Row{n, boost::multiprecision::numerator(p.value).str(),
                           boost::multiprecision::denominator(p.value).str(),
                           sticks::decimal_expand(p.value, digits).text});
    }
    switch (format) {
    case Format::Human:
        std::cout << "avoidance probabilities for k=" << k << " (no " << k + 1 << "-gon among n sticks)\n";
        for (const Row& r : rows)
            std::cout << "n=" << r.n << "  " << r.num << "/" << r.den << "  " << r.decimal << "\n";
        break;
    case Format::Json: {
        ordered_json arr = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json j;
            j["n"] = r.n;
            j["numerator"] = r.num;
            j["denominator"] = r.den;
            j["decimal"] = r.decimal;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump() << "\n";
        break;
    }
    case Format::Csv:
        std::cout << "n,numerator,denominator,decimal\n";
        for (const Row& r : rows)
            std::cout << r.n << "," << r.num << "," << r.den << "," << r.decimal << "\n";
        break;
    }
    return 0;
}

int cmd_simulate(const sticks::SimulationConfig& config, Format format) {
    const sticks::EstimateReport report = sticks::estimate(config);
    switch (format) {
    case Format::Human: {
        std::cout << "k=" << config.k << " n=" << config.n << " trials=" << config.trials
                  << " seed=" << config.seed << " workers=" << config.workers
                  << " sampler=" << sticks::to_string(config.sampler) << "\n";
        std::cout << "successes = " << report.successes << "\n";
        std::cout << "estimate  = " << fixed6(report.estimate) << "\n";
        std::cout << "stderr    = " << fixed6(report.std_error) << "\n";
        std::cout << "ci95      = [" << fixed6(report.ci95_low) << ", " << fixed6(report.ci95_high)
                  << "]\n";
        if (config.n <= 10000) {
            const sticks::ExactProbability p = sticks::exact_probability(config.k, config.n);
            std::cout << "exact     = " << boost::multiprecision::numerator(p.value).str();
            if (p.value != 1)
                std::cout << "/" << boost::multiprecision::denominator(p.value).str();
            std::cout << " = " << sticks::decimal_render(p, 6) << "\n";
            const double diff = std::abs(report.estimate - static_cast<double>(p.value));
            if (report.std_error > 0)
                std::cout << "|estimate-exact|/stderr = " << fixed6(diff / report.std_error) << "\n";
            else
                std::cout << "|estimate-exact|/stderr = " << (diff == 0 ? "0.000000" : "inf") << "\n";
        }
        break;
    }
    case Format::Json:
        std::cout << sticks::to_json(report) << "\n";
        break;
    case Format::Csv:
        std::cout << "k,n,trials,seed,workers,sampler,successes,estimate,stderr,ci95_low,ci95_high\n"
                  << config.k << "," << config.n << "," << config.trials << "," << config.seed << ","
                  << config.workers << "," << sticks::to_string(config.sampler) << ","
                  << report.successes << "," << double_str(report.estimate) << ","
                  << double_str(report.std_error) << "," << double_str(report.ci95_low) << ","
                  << double_str(report.ci95_high) << "\n";
        break;
    }
    return 0;
}

int cmd_rvec(int k, std::int64_t l, Format format) {
    const sticks::RVector iterated = sticks::r_vector(k, l);
    const sticks::RVector closed = sticks::r_vector_closed_form(k, l);
    const bool agree = iterated.entries == closed.entries;
    switch (format) {
    case Format::Human:
        std::cout << "R^" << l << " for k=" << k << " (iterated | closed-form)\n";
        for (int i = 0; i < k; ++i)
            std::cout << "R_" << i + 1 << "  " << iterated.entries[static_cast<std::size_t>(i)]
                      << "  " << closed.entries[static_cast<std::size_t>(i)] << "\n";
        std::cout << "agreement: " << (agree ? "exact" : "MISMATCH") << "\n";
        break;
    case Format::Json: {
        ordered_json j;
        j["k"] = k;
        j["l"] = l;
        j["iterated"] = ordered_json::array();
        j["closed_form"] = ordered_json::array();
        for (int i = 0; i < k; ++i) {
            j["iterated"].push_back(iterated.entries[static_cast<std::size_t>(i)].str());
            j["closed_form"].push_back(closed.entries[static_cast<std::size_t>(i)].str());
        }
        j["agree"] = agree;
        std::cout << j.dump() << "\n";
        break;
    }
    case Format::Csv:
        std::cout << "i,iterated,closed_form\n";
        for (int i = 0; i < k; ++i)
            std::cout << i + 1 << "," << iterated.entries[static_cast<std::size_t>(i)] << ","
                      << closed.entries[static_cast<std::size_t>(i)] << "\n";
        break;
    }
    return agree ? 0 : 1;
}

int cmd_verify(int k_max, std::int64_t l_max, int n_max) {
    const bool tamper = std::getenv("STICKS_VERIFY_TAMPER") != nullptr; // testing hook
    const sticks::VerifyReport report = sticks::run_verify({k_max, l_max, n_max}, tamper);
    std::uint64_t failures = 0;
    for (const sticks::VerifyFamily& family : report.families) {
        std::printf("%-24s %llu/%llu\n", family.name.c_str(),
                    static_cast<unsigned long long>(family.checks - family.failures),
                    static_cast<unsigned long long>(family.checks));
        if (family.failures != 0) {
            std::printf("  first failure %s\n", family.first_failure.c_str());
            failures += family.failures;
        }
    }
    if (failures == 0) {
        std::printf("verify: all identities hold (k-max=%d, l-max=%lld, n-max=%d)\n", k_max,
                    static_cast<long long>(l_max), n_max);
        return 0;
    }
    std::printf("verify: FAILED (%llu identity failures)\n",
                static_cast<unsigned long long>(failures));
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("STICKS_MAX_K")) {
        char* end = nullptr;
        errno = 0;
        const long cap = std::strtol(env, &end, 10);
        if (errno != 0 || end == env || *end != '\0' || cap < 2 || cap > 1000000) {
            std::cerr << "error: STICKS_MAX_K must be an integer >= 2 (got '" << env << "')\n";
            return 2;
        }
        sticks::set_max_order(static_cast<int>(cap));
    }

    CLI::App app{"exact and Monte Carlo polygon-avoidance probabilities for uniform random sticks"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return std::string("error: ") + e.what() + "\n";
    });

    int k = 2, n = 1, digits = 6, n_max = 0, k_max = 8, verify_n_max = 25;
    std::int64_t l = 1, l_max = 50;
    std::string format_name = "human";
    std::string sampler_name = "uniform-sort";
    std::uint64_t trials = 1000000, seed = 0;
    std::uint32_t workers = 1;
    int exit_code = 0;

    CLI::App* exact = app.add_subcommand("exact", "exact avoidance probability for one (k, n)");
    exact->add_option("--k", k, "recurrence order k (>= 2)")->required();
    exact->add_option("--n", n, "number of sticks (>= 1)")->required();
    exact->add_option("--digits", digits, "fractional digits in the decimal rendering")
        ->capture_default_str();
    exact->add_option("--format", format_name, "human|json|csv")->capture_default_str();
    exact->callback([&] { exit_code = cmd_exact(k, n, digits, parse_format(format_name)); });

    CLI::App* table = app.add_subcommand("table", "tabulate probabilities for n = k+1..n-max");
    table->add_option("--k", k, "recurrence order k (>= 2)")->required();
    table->add_option("--n-max", n_max, "largest stick count (>= k+1)")->required();
    table->add_option("--digits", digits, "fractional digits in the decimal column")
        ->capture_default_str();
    table->add_option("--format", format_name, "human|json|csv")->capture_default_str();
    table->callback([&] { exit_code = cmd_table(k, n_max, digits, parse_format(format_name)); });

    CLI::App* simulate = app.add_subcommand("simulate", "seeded Monte Carlo estimate");
    simulate->add_option("--k", k, "recurrence order k (>= 2)")->required();
    simulate->add_option("--n", n, "number of sticks (>= 1)")->required();
    simulate->add_option("--trials", trials, "number of trials (>= 1)")->capture_default_str();
    simulate->add_option("--seed", seed, "64-bit base seed")->capture_default_str();
    simulate->add_option("--workers", workers, "independent substreams (>= 1)")
        ->capture_default_str();
    simulate->add_option("--sampler", sampler_name, "uniform-sort|exponential-sums")
        ->capture_default_str();
    simulate->add_option("--format", format_name, "human|json|csv")->capture_default_str();
    simulate->callback([&] {
        sticks::SimulationConfig config{k, n, trials, seed, workers,
                                        sticks::sampler_from_string(sampler_name)};
        exit_code = cmd_simulate(config, parse_format(format_name));
    });

    CLI::App* verify = app.add_subcommand("verify", "run the exact identity suite");
    verify->add_option("--k-max", k_max, "largest order to check (>= 2)")->capture_default_str();
    verify->add_option("--l-max", l_max, "largest R-vector index (>= 1)")->capture_default_str();
    verify->add_option("--n-max", verify_n_max, "largest stick count (>= 3)")->capture_default_str();
    verify->callback([&] { exit_code = cmd_verify(k_max, l_max, verify_n_max); });

    CLI::App* rvec = app.add_subcommand("rvec", "dump R^l, iterated next to closed-form");
    rvec->add_option("--k", k, "recurrence order k (>= 2)")->required();
    rvec->add_option("--l", l, "index l (>= 1)")->required();
    rvec->add_option("--format", format_name, "human|json|csv")->capture_default_str();
    rvec->callback([&] { exit_code = cmd_rvec(k, l, parse_format(format_name)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
