#include "warpband/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "warpband/band.hpp"
#include "warpband/errors.hpp"
#include "warpband/reference.hpp"
#include "warpband/wavefront.hpp"

namespace warpband {

std::size_t hardware_workers() noexcept {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

std::size_t resolve_workers(std::optional<std::size_t> workers) {
    if (!workers) return hardware_workers();
    if (*workers == 0) throw InvalidInput("worker count must be at least 1");
    return *workers;
}

double twed_parallel(const TimeSeries& a, const TimeSeries& b, const TwedParams& params, std::size_t workers) {
    if (workers == 0) throw InvalidInput("worker count must be at least 1");
    params.validate();
    if (a.dim() != b.dim()) {
        throw InvalidInput("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }

    LocalCosts costs;
    if (workers > 1) {
        auto costs_b = std::async(std::launch::async, [&] { return local_costs(b, params.degree); });
        costs.a = local_costs(a, params.degree);
        costs.b = costs_b.get();
    } else {
        costs = local_costs(a, b, params.degree);
    }

    const BandProblem problem(a, b, params, costs);
    DiagonalBand band(problem.band_length(), std::numeric_limits<double>::infinity());
    seed_band(band);
    return sweep_band(problem, band, WavefrontOptions{.workers = workers});
}

DistanceMatrix::DistanceMatrix(std::size_t rows, std::size_t cols, bool symmetric)
    : rows_(rows), cols_(cols), symmetric_(symmetric), entries_(rows * cols, 0.0) {}

namespace {

void check_dimensions(const std::vector<TimeSeries>& list, std::size_t dim, const char* name) {
    for (std::size_t k = 0; k < list.size(); ++k) {
        if (list[k].dim() != dim) {
            throw InvalidInput(std::string("series ") + std::to_string(k) + " of " + name + " has dimension " +
                               std::to_string(list[k].dim()) + ", expected " + std::to_string(dim));
        }
    }
}

std::size_t longest(const std::vector<TimeSeries>& list) {
    std::size_t n = 0;
    for (const auto& s : list) n = std::max(n, s.size());
    return n;
}

}  // namespace

DistanceMatrix twed_batch(const BatchSpec& spec, BatchStats* stats) {
    spec.params.validate();
    const auto& list_a = spec.list_a;
    const auto& list_b = spec.list_b ? *spec.list_b : spec.list_a;
    if (list_a.empty() || list_b.empty()) throw InvalidInput("batch lists must not be empty");
    if (spec.symmetric && spec.list_b && *spec.list_b != spec.list_a) {
        throw InvalidInput("symmetric batch requires list B to be the same collection as list A");
    }
    const std::size_t dim = list_a.front().dim();
    check_dimensions(list_a, dim, "list A");
    check_dimensions(list_b, dim, "list B");

    const std::size_t workers = resolve_workers(spec.workers);
    const std::size_t rows = list_a.size();
    const std::size_t cols = list_b.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(spec.symmetric ? rows * (rows + 1) / 2 : rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = spec.symmetric ? i : 0; j < cols; ++j) pairs.emplace_back(i, j);
    }

    DistanceMatrix out(rows, cols, spec.symmetric);
    std::atomic<std::size_t> invocations{0};
    const bool across_pairs = std::max(longest(list_a), longest(list_b)) < kPairParallelBelow;

    if (across_pairs) {
        // Each entry has exactly one writer: the worker that claimed its pair.
        std::atomic<std::size_t> next{0};
        const auto work = [&] {
            for (std::size_t p = next.fetch_add(1); p < pairs.size(); p = next.fetch_add(1)) {
                const auto [i, j] = pairs[p];
                out.at(i, j) = twed_parallel(list_a[i], list_b[j], spec.params, 1);
                invocations.fetch_add(1, std::memory_order_relaxed);
            }
        };
        std::vector<std::jthread> pool;
        const std::size_t threads = std::min(workers, pairs.size());
        for (std::size_t w = 1; w < threads; ++w) pool.emplace_back(work);
        work();
    } else {
        for (const auto& [i, j] : pairs) {
            out.at(i, j) = twed_parallel(list_a[i], list_b[j], spec.params, workers);
            invocations.fetch_add(1, std::memory_order_relaxed);
        }
    }

    if (spec.symmetric) {
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < i; ++j) out.at(i, j) = out.at(j, i);
        }
    }
    if (stats) {
        stats->solver_invocations = invocations.load();
        stats->across_pairs = across_pairs;
    }
    return out;
}

TimeSeries random_series(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> values(n * dim);
    for (auto& v : values) v = uniform(rng);
    return TimeSeries::with_unit_times(std::move(values), dim);
}

namespace {

template <class Fn>
double seconds(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool close(double x, double y) {
    if (x == y) return true;
    return std::abs(x - y) <= 1e-12 * std::max(std::abs(x), std::abs(y));
}

}  // namespace

std::vector<BenchRecord> bench(const BenchOptions& options) {
    if (options.sizes.empty()) throw InvalidInput("bench needs at least one size");
    if (options.trials == 0) throw InvalidInput("bench needs at least one trial");
    if (options.workers == 0) throw InvalidInput("worker count must be at least 1");
    options.params.validate();

    std::mt19937_64 rng(options.seed);
    std::vector<BenchRecord> records;
    for (const std::size_t n : options.sizes) {
        if (n == 0) throw InvalidInput("bench sizes must be positive");
        BenchRecord record;
        record.size = n;
        record.workers = options.workers;
        record.parity = true;
        const bool with_reference = n <= options.cutoff;
        double best_band = std::numeric_limits<double>::infinity();
        double best_reference = std::numeric_limits<double>::infinity();

        for (std::size_t trial = 0; trial < options.trials; ++trial) {
            const TimeSeries a = random_series(n, options.dim, rng);
            const TimeSeries b = random_series(n, options.dim, rng);
            double band_value = 0.0;
            best_band = std::min(best_band, seconds([&] {
                band_value = twed_parallel(a, b, options.params, options.workers);
            }));
            double check = 0.0;
            if (with_reference) {
                best_reference = std::min(best_reference, seconds([&] {
                    check = twed_reference(a, b, options.params);
                }));
            } else {
                check = twed_band(a, b, options.params);
            }
            record.parity = record.parity && close(band_value, check);
        }

        record.band_seconds = best_band;
        if (with_reference) {
            record.reference_seconds = best_reference;
            record.speedup = best_reference / best_band;
        }
        records.push_back(record);
    }
    return records;
}

}  // namespace warpband
