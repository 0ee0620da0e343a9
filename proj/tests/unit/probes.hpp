#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <vector>

// Records every callback of a band solve. Cell writes are tallied on a full
// (nA+1) x (nB+1) overlay, which is fine for tests and nothing else.
struct RecordingProbe {
    RecordingProbe(std::size_t na, std::size_t nb)
        : na(na), nb(nb), writes((na + 1) * (nb + 1)) {}

    void on_acquire(std::size_t length) { acquisitions.push_back(length); }
    void on_diagonal(std::size_t d) { diagonals.push_back(d); }
    void on_cell(std::size_t d, std::size_t idx) {
        const std::size_t row = d - idx;
        if (idx > d || row > na || idx > nb) {
            ++out_of_matrix;
            return;
        }
        ++writes[row * (nb + 1) + idx];
    }

    bool every_cell_written_once() const {
        for (const auto& w : writes)
            if (w != 1) return false;
        return out_of_matrix == 0;
    }

    std::size_t na;
    std::size_t nb;
    std::vector<std::size_t> acquisitions;
    std::vector<std::size_t> diagonals;
    std::vector<std::size_t> writes;
    std::size_t out_of_matrix = 0;
};

// Thread-safe variant for parallel sweeps.
struct AtomicWriteProbe {
    AtomicWriteProbe(std::size_t na, std::size_t nb)
        : na(na), nb(nb), writes(std::make_unique<std::atomic<unsigned>[]>((na + 1) * (nb + 1))) {}

    void on_acquire(std::size_t) {}
    void on_diagonal(std::size_t) { diagonals.fetch_add(1); }
    void on_cell(std::size_t d, std::size_t idx) {
        const std::size_t row = d - idx;
        if (idx > d || row > na || idx > nb) {
            out_of_matrix.fetch_add(1);
            return;
        }
        writes[row * (nb + 1) + idx].fetch_add(1);
    }

    bool every_cell_written_once() const {
        for (std::size_t k = 0; k < (na + 1) * (nb + 1); ++k)
            if (writes[k].load() != 1) return false;
        return out_of_matrix.load() == 0;
    }

    std::size_t na;
    std::size_t nb;
    std::unique_ptr<std::atomic<unsigned>[]> writes;
    std::atomic<std::size_t> diagonals{0};
    std::atomic<std::size_t> out_of_matrix{0};
};
