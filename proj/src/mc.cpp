#include "sticks/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace sticks {

std::string to_string(Sampler sampler) {
    switch (sampler) {
    case Sampler::UniformSort:
        return "uniform-sort";
    case Sampler::ExponentialSums:
        return "exponential-sums";
    }
    throw std::logic_error("unreachable sampler value");
}

Sampler sampler_from_string(const std::string& name) {
    if (name == "uniform-sort")
        return Sampler::UniformSort;
    if (name == "exponential-sums")
        return Sampler::ExponentialSums;
    throw std::domain_error("sampler must be 'uniform-sort' or 'exponential-sums' (got '" +
                            name + "')");
}

bool window_condition_sorted(std::span<const double> sorted, int k) {
    const auto n = static_cast<std::int64_t>(sorted.size());
    for (std::int64_t l = 0; l + k < n; ++l) {
        double window = 0.0;
        for (std::int64_t i = l; i < l + k; ++i)
            window += sorted[static_cast<std::size_t>(i)];
        if (window > sorted[static_cast<std::size_t>(l + k)])
            return false;
    }
    return true;
}

bool window_condition_holds(const StickSample& sample, int k) {
    return window_condition_sorted(sample.sorted, k);
}

bool no_subset_forms_polygon(const std::vector<double>& lengths, int k) {
    const int n = static_cast<int>(lengths.size());
    const int m = k + 1;
    if (n < m)
        return true;
    std::vector<int> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        int arg_max = idx[0];
        for (int j = 1; j < m; ++j)
            if (lengths[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] >
                lengths[static_cast<std::size_t>(arg_max)])
                arg_max = idx[static_cast<std::size_t>(j)];
        double rest = 0.0;
        for (int j = 0; j < m; ++j)
            if (idx[static_cast<std::size_t>(j)] != arg_max)
                rest += lengths[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        if (rest > lengths[static_cast<std::size_t>(arg_max)])
            return false; // this subset forms a (k+1)-gon
        int j = m - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - m + j)
            --j;
        if (j < 0)
            return true;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < m; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
}

namespace {

void fill_uniform_sorted(int n, Xoshiro256pp& rng, std::vector<double>& lengths,
                         std::vector<double>& sorted) {
    lengths.resize(static_cast<std::size_t>(n));
    for (double& x : lengths)
        x = rng.next_unit_open();
    sorted.assign(lengths.begin(), lengths.end());
    std::sort(sorted.begin(), sorted.end());
}

void fill_exponential_sorted(int n, Xoshiro256pp& rng, std::vector<double>& sorted) {
    sorted.resize(static_cast<std::size_t>(n));
    double acc = 0.0;
    for (double& x : sorted) {
        acc += rng.next_exponential();
        x = acc;
    }
    const double total = acc + rng.next_exponential();
    for (double& x : sorted)
        x /= total;
}

void check_config(const SimulationConfig& config) {
    if (config.k < 2)
        throw std::domain_error("k must be >= 2 (got " + std::to_string(config.k) + ")");
    if (config.n < 1)
        throw std::domain_error("n must be >= 1 (got " + std::to_string(config.n) + ")");
    if (config.trials < 1)
        throw std::domain_error("trials must be >= 1 (got " + std::to_string(config.trials) + ")");
    if (config.workers < 1)
        throw std::domain_error("workers must be >= 1 (got " + std::to_string(config.workers) + ")");
}

std::uint64_t worker_trials(std::uint64_t trials, std::uint32_t workers, std::uint32_t w) {
    return trials / workers + (w < trials % workers ? 1 : 0);
}

std::uint64_t run_worker(const SimulationConfig& config, std::uint32_t w) {
    Xoshiro256pp rng(substream_seed(config.seed, w));
    const std::uint64_t rounds = worker_trials(config.trials, config.workers, w);
    std::vector<double> lengths, sorted;
    lengths.reserve(static_cast<std::size_t>(config.n));
    sorted.reserve(static_cast<std::size_t>(config.n));
    std::uint64_t successes = 0;
    if (config.sampler == Sampler::UniformSort) {
        for (std::uint64_t t = 0; t < rounds; ++t) {
            fill_uniform_sorted(config.n, rng, lengths, sorted);
            successes += window_condition_sorted(sorted, config.k);
        }
    } else {
        for (std::uint64_t t = 0; t < rounds; ++t) {
            fill_exponential_sorted(config.n, rng, sorted);
            successes += window_condition_sorted(sorted, config.k);
        }
    }
    return successes;
}

} // namespace

StickSample sample_uniform_sorted(int n, Xoshiro256pp& rng) {
    if (n < 1)
        throw std::domain_error("n must be >= 1 (got " + std::to_string(n) + ")");
    StickSample sample;
    fill_uniform_sorted(n, rng, sample.lengths, sample.sorted);
    return sample;
}

StickSample sample_exponential_representation(int n, Xoshiro256pp& rng) {
    if (n < 1)
        throw std::domain_error("n must be >= 1 (got " + std::to_string(n) + ")");
    StickSample sample;
    fill_exponential_sorted(n, rng, sample.sorted);
    sample.lengths = sample.sorted;
    return sample;
}

std::vector<std::uint64_t> per_worker_successes(const SimulationConfig& config) {
    check_config(config);
    std::vector<std::uint64_t> tallies(config.workers, 0);
    const std::uint32_t threads = std::min<std::uint32_t>(config.workers, 64);
    if (threads <= 1) {
        for (std::uint32_t w = 0; w < config.workers; ++w)
            tallies[w] = run_worker(config, w);
        return tallies;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::uint32_t t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::uint32_t w = t; w < config.workers; w += threads)
                tallies[w] = run_worker(config, w);
        });
    for (std::thread& th : pool)
        th.join();
    return tallies;
}

EstimateReport estimate(const SimulationConfig& config) {
    const std::vector<std::uint64_t> tallies = per_worker_successes(config);
    EstimateReport report;
    report.config = config;
    report.successes = std::accumulate(tallies.begin(), tallies.end(), std::uint64_t{0});
    const double trials = static_cast<double>(config.trials);
    report.estimate = static_cast<double>(report.successes) / trials;
    report.std_error = std::sqrt(report.estimate * (1.0 - report.estimate) / trials);
    report.ci95_low = report.estimate - 1.96 * report.std_error;
    report.ci95_high = report.estimate + 1.96 * report.std_error;
    return report;
}

std::string to_json(const EstimateReport& report) {
    nlohmann::ordered_json j;
    j["k"] = report.config.k;
    j["n"] = report.config.n;
    j["trials"] = report.config.trials;
    j["seed"] = report.config.seed;
    j["workers"] = report.config.workers;
    j["sampler"] = to_string(report.config.sampler);
    j["successes"] = report.successes;
    j["estimate"] = report.estimate;
    j["stderr"] = report.std_error;
    j["ci95"] = nlohmann::ordered_json::array({report.ci95_low, report.ci95_high});
    return j.dump();
}

} // namespace sticks
