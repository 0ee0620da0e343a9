#pragma once

// Multi-threaded driver for the diagonal sweep.
//
// Each diagonal is split into contiguous chunks. Workers claim chunks through a
// single atomic ticket holding (diagonal << 32 | chunk), so a claim always names
// a chunk of the diagonal that is currently open. The worker that finishes the
// last chunk of diagonal d rotates the band and opens d + 1; nobody can claim a
// chunk of d + 1 before that, which is the barrier between diagonals. Chunk
// boundaries never change what a cell computes, so the result is bit-identical
// for every worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "warpband/band.hpp"

namespace warpband {

struct WavefrontOptions {
    std::size_t workers = 1;
    // Smallest number of cells handed to one worker at a time.
    std::size_t min_chunk = 256;
};

namespace detail {

inline std::size_t chunk_count(std::size_t cells, const WavefrontOptions& opts) {
    const std::size_t by_size = (cells + opts.min_chunk - 1) / opts.min_chunk;
    return std::max<std::size_t>(1, std::min(opts.workers, by_size));
}

}  // namespace detail

/// Sweeps diagonals 1 .. nA+nB of `problem` into `band`, which must hold the
/// seeded origin. Returns the solved distance. Probe callbacks may arrive from
/// several threads at once when workers > 1.
template <class Probe = NullProbe>
double sweep_band(const BandProblem& problem, DiagonalBand& band, const WavefrontOptions& opts,
                  Probe& probe = null_probe()) {
    if (opts.workers == 0) throw InvalidInput("worker count must be at least 1");
    if (opts.min_chunk == 0) throw InvalidInput("chunk size must be at least 1");
    if (band.length() != problem.band_length()) throw StateError("band length does not match the problem");
    if (band.diagonal_in(BandRole::current) != 0u) throw StateError("band must be seeded before sweeping");

    const std::size_t last = problem.last_diagonal();
    const std::size_t widest = std::min(problem.rows(), problem.cols()) + 1;
    const std::size_t workers = std::min(opts.workers, detail::chunk_count(widest, opts));

    if (workers == 1) {
        for (std::size_t d = 1; d <= last; ++d) {
            cycle_buffers(band);
            band_step(d, band, problem, probe);
        }
        return band.z()[problem.cols()];
    }

    constexpr std::uint64_t kChunkMask = 0xffffffffu;
    constexpr int kSpinsBeforeWait = 64;
    std::atomic<std::uint64_t> ticket{0};
    std::atomic<std::size_t> remaining{0};

    const auto chunks_of = [&](std::size_t d) {
        return detail::chunk_count(diagonal_span(d, problem.rows(), problem.cols()).size(), opts);
    };

    // Called by exactly one thread once diagonal d - 1 is complete.
    const auto open_diagonal = [&](std::size_t d) {
        cycle_buffers(band);
        probe.on_diagonal(d);
        remaining.store(chunks_of(d), std::memory_order_relaxed);
        ticket.store(static_cast<std::uint64_t>(d) << 32, std::memory_order_release);
        ticket.notify_all();
    };

    const auto run_chunk = [&](std::size_t d, std::size_t chunk) {
        const DiagonalSpan span = diagonal_span(d, problem.rows(), problem.cols());
        const std::size_t count = chunks_of(d);
        const std::size_t width = (span.size() + count - 1) / count;
        const std::size_t lo = span.first + chunk * width;
        const std::size_t hi = std::min(span.last, lo + width);
        band_step_cells(d, lo, hi, band.z(), band.lag1(), band.lag2(), problem, probe);
    };

    const auto work = [&] {
        int spins = 0;
        for (;;) {
            const std::uint64_t seen = ticket.load(std::memory_order_acquire);
            const std::size_t d = static_cast<std::size_t>(seen >> 32);
            if (d > last) return;
            if ((seen & kChunkMask) >= chunks_of(d)) {
                // Everything on the open diagonal is claimed; wait for the next one.
                if (++spins < kSpinsBeforeWait) {
                    std::this_thread::yield();
                } else {
                    ticket.wait(seen, std::memory_order_acquire);
                    spins = 0;
                }
                continue;
            }
            spins = 0;
            const std::uint64_t got = ticket.fetch_add(1, std::memory_order_acq_rel);
            const std::size_t gd = static_cast<std::size_t>(got >> 32);
            const std::size_t gc = static_cast<std::size_t>(got & kChunkMask);
            if (gd > last) return;
            if (gc >= chunks_of(gd)) continue;

            run_chunk(gd, gc);
            if (remaining.fetch_sub(1, std::memory_order_acq_rel) == 1) {
                band.mark_written(gd);
                if (gd == last) {
                    ticket.store(static_cast<std::uint64_t>(last + 1) << 32, std::memory_order_release);
                    ticket.notify_all();
                    return;
                }
                open_diagonal(gd + 1);
            }
        }
    };

    if (last >= 1) {
        open_diagonal(1);
        std::vector<std::jthread> pool;
        pool.reserve(workers - 1);
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
        pool.clear();  // joins
    }
    return band.z()[problem.cols()];
}

}  // namespace warpband
