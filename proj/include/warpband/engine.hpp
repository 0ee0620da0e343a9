#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "warpband/time_series.hpp"

namespace warpband {

/// std::thread::hardware_concurrency(), or 1 when unknown.
std::size_t hardware_workers() noexcept;

/// Resolves an optional worker count; nullopt means hardware_workers().
/// Throws InvalidInput for an explicit 0.
std::size_t resolve_workers(std::optional<std::size_t> workers);

/// Band TWED with cells of each diagonal shared across up to `workers`
/// threads. Bit-identical to twed_band for every worker count.
double twed_parallel(const TimeSeries& a, const TimeSeries& b, const TwedParams& params, std::size_t workers);

/// Dense |listA| x |listB| matrix of pairwise distances, row-major.
class DistanceMatrix {
public:
    DistanceMatrix(std::size_t rows, std::size_t cols, bool symmetric = false);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool symmetric() const noexcept { return symmetric_; }

    double at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    double& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<double>& entries() const noexcept { return entries_; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    bool symmetric_;
    std::vector<double> entries_;
};

struct BatchSpec {
    std::vector<TimeSeries> list_a;
    // nullopt compares list_a against itself.
    std::optional<std::vector<TimeSeries>> list_b;
    TwedParams params;
    // Solve only i <= j and mirror. Requires a self comparison.
    bool symmetric = false;
    // nullopt uses every hardware thread.
    std::optional<std::size_t> workers;
};

struct BatchStats {
    std::size_t solver_invocations = 0;
    bool across_pairs = false;  // true: pairs spread over workers; false: cells of each pair
};

/// Series shorter than this are batched across pairs rather than across the
/// cells of one diagonal.
inline constexpr std::size_t kPairParallelBelow = 512;

DistanceMatrix twed_batch(const BatchSpec& spec, BatchStats* stats = nullptr);

struct BenchOptions {
    std::vector<std::size_t> sizes;
    TwedParams params;
    std::size_t workers = 1;
    std::size_t trials = 3;
    std::uint64_t seed = 42;
    // The quadratic reference is skipped for sizes above this.
    std::size_t cutoff = 8192;
    std::size_t dim = 1;
};

struct BenchRecord {
    std::size_t size = 0;
    double band_seconds = 0.0;  // best of trials
    std::optional<double> reference_seconds;
    std::optional<double> speedup;  // reference / band
    bool parity = false;
    std::size_t workers = 1;
};

/// Times the band solver (and, up to the cutoff, the reference) on seeded
/// random pairs of each size. Parity compares the band value with the
/// reference when it ran, otherwise with the single-threaded band.
std::vector<BenchRecord> bench(const BenchOptions& options);

/// n samples uniform in [0, 1) at timestamps 0, 1, ..., n-1.
TimeSeries random_series(std::size_t n, std::size_t dim, std::mt19937_64& rng);

}  // namespace warpband
