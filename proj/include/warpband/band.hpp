#pragma once

// Linear-memory TWED and LCS solvers.
//
// The DP matrix is swept by ortho-diagonals (cells with constant row + col).
// A cell only depends on its upper, left and upper-left neighbours, which live
// on the two preceding diagonals, so three rotating buffers hold all the state
// the recurrence ever reads and every cell of a diagonal is independent of the
// others. Diagonal storage is indexed by column, which makes the three reads
// for cell idx land at idx, idx-1 and idx-1 of the lagged buffers.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "warpband/costs.hpp"
#include "warpband/errors.hpp"
#include "warpband/time_series.hpp"

namespace warpband {

struct DiagonalCoord {
    std::int64_t orthodiag = 0;  // row + col
    std::int64_t idx = 0;        // position along the diagonal, equal to col

    friend bool operator==(const DiagonalCoord&, const DiagonalCoord&) = default;
};

struct MatrixCoord {
    std::int64_t row = 0;
    std::int64_t col = 0;

    friend bool operator==(const MatrixCoord&, const MatrixCoord&) = default;
};

/// (row, col) -> (row + col, col). Throws InvalidInput on negative input.
DiagonalCoord ortho_diag(std::int64_t row, std::int64_t col);

/// (orthodiag, idx) -> (orthodiag - idx, idx). Throws InvalidInput if idx is
/// outside [0, orthodiag].
MatrixCoord row_col(DiagonalCoord coord);

/// Number of diagonals covering an (nA+1) x (nB+1) DP matrix: nA + nB + 1.
std::size_t diagonal_count(std::size_t na, std::size_t nb);

/// Half-open range of idx values on diagonal d that fall inside an
/// (nA+1) x (nB+1) matrix.
struct DiagonalSpan {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t size() const noexcept { return last - first; }
};

inline DiagonalSpan diagonal_span(std::size_t d, std::size_t na, std::size_t nb) noexcept {
    return {d > na ? d - na : 0, std::min(d, nb) + 1};
}

/// Instrumentation hooks; the default does nothing and compiles away.
struct NullProbe {
    void on_acquire(std::size_t /*length*/) {}
    void on_diagonal(std::size_t /*d*/) {}
    void on_cell(std::size_t /*d*/, std::size_t /*idx*/) {}
};

inline NullProbe& null_probe() {
    static NullProbe probe;
    return probe;
}

enum class BandRole { current = 0, lag1 = 1, lag2 = 2 };

/// Three equally sized diagonal buffers whose roles (current, once lagged,
/// twice lagged) rotate as the sweep advances. Buffers are acquired once at
/// construction and reused for the whole solve.
///
/// Each buffer remembers which diagonal it last received so that stepping out
/// of order is detected instead of silently reading stale data.
template <class T>
class BasicDiagonalBand {
public:
    template <class Probe = NullProbe>
    BasicDiagonalBand(std::size_t length, T fill, Probe& probe = null_probe()) : length_(length) {
        for (auto& buffer : buffers_) {
            buffer.assign(length, fill);
            probe.on_acquire(length);
        }
    }

    std::size_t length() const noexcept { return length_; }

    std::span<T> z() noexcept { return buffers_[slot(BandRole::current)]; }
    std::span<const T> z() const noexcept { return buffers_[slot(BandRole::current)]; }
    std::span<const T> lag1() const noexcept { return buffers_[slot(BandRole::lag1)]; }
    std::span<const T> lag2() const noexcept { return buffers_[slot(BandRole::lag2)]; }

    std::span<const T> buffer(BandRole role) const noexcept { return buffers_[slot(role)]; }

    /// Diagonal last written into the buffer currently playing `role`.
    std::optional<std::size_t> diagonal_in(BandRole role) const noexcept {
        const auto tag = tags_[slot(role)];
        return tag < 0 ? std::nullopt : std::optional<std::size_t>(static_cast<std::size_t>(tag));
    }

    /// current -> lag1 -> lag2 -> current. Pointer rotation only.
    void cycle() noexcept { rotation_ = (rotation_ + 1) % 3; }

    /// Records that the current buffer now holds diagonal d.
    void mark_written(std::size_t d) noexcept { tags_[slot(BandRole::current)] = static_cast<std::ptrdiff_t>(d); }

    /// Throws StateError unless the lagged buffers hold diagonals d-1 and d-2.
    void require_ready_for(std::size_t d) const {
        if (d < 1) throw StateError("band step requires d >= 1; diagonal 0 is the seeded origin");
        if (diagonal_in(BandRole::lag1) != d - 1) {
            throw StateError("band not warmed up: diagonal " + std::to_string(d - 1) + " missing before step " +
                             std::to_string(d));
        }
        if (d >= 2 && diagonal_in(BandRole::lag2) != d - 2) {
            throw StateError("band not warmed up: diagonal " + std::to_string(d - 2) + " missing before step " +
                             std::to_string(d));
        }
    }

private:
    std::size_t slot(BandRole role) const noexcept {
        return (static_cast<std::size_t>(role) + 3 - rotation_) % 3;
    }

    std::size_t length_;
    std::array<std::vector<T>, 3> buffers_;
    std::array<std::ptrdiff_t, 3> tags_{-1, -1, -1};
    std::size_t rotation_ = 0;
};

using DiagonalBand = BasicDiagonalBand<double>;

template <class T>
void cycle_buffers(BasicDiagonalBand<T>& band) noexcept {
    band.cycle();
}

/// Inputs of one TWED solve laid out for diagonal sweeps. Series A is stored
/// in reverse so that walking idx upward along a diagonal (row decreasing)
/// reads A, B and their deletion costs all with unit stride.
class BandProblem {
public:
    BandProblem(const TimeSeries& a, const TimeSeries& b, const TwedParams& params);
    BandProblem(const TimeSeries& a, const TimeSeries& b, const TwedParams& params, const LocalCosts& costs);

    std::size_t rows() const noexcept { return na_; }  // nA
    std::size_t cols() const noexcept { return nb_; }  // nB
    std::size_t dim() const noexcept { return dim_; }
    const TwedParams& params() const noexcept { return params_; }

    /// (nA + 1) + (nB + 1): storage per diagonal.
    std::size_t band_length() const noexcept { return na_ + nb_ + 2; }
    std::size_t last_diagonal() const noexcept { return na_ + nb_; }

    // Row-reversed A: entry k describes matrix row nA - k.
    const double* a_sample(std::size_t k) const { return a_values_.data() + k * dim_; }
    double a_time(std::size_t k) const { return a_times_[k]; }
    double a_deletion(std::size_t k) const { return a_deletion_[k]; }

    // B in natural order: entry j describes matrix column j.
    const double* b_sample(std::size_t j) const { return b_values_.data() + j * dim_; }
    double b_time(std::size_t j) const { return b_times_[j]; }
    double b_deletion(std::size_t j) const { return b_deletion_[j]; }

private:
    std::size_t na_;
    std::size_t nb_;
    std::size_t dim_;
    TwedParams params_;
    std::vector<double> a_values_;
    std::vector<double> a_times_;
    std::vector<double> a_deletion_;
    std::vector<double> b_values_;
    std::vector<double> b_times_;
    std::vector<double> b_deletion_;
};

/// Writes the origin cell (diagonal 0) into the current buffer.
template <class Probe = NullProbe>
void seed_band(DiagonalBand& band, Probe& probe = null_probe()) {
    band.z()[0] = 0.0;
    band.mark_written(0);
    probe.on_cell(0, 0);
}

/// Computes cells [lo, hi) of diagonal d (clipped to the matrix) into `z`,
/// reading the two preceding diagonals. Cells are independent of each other,
/// so disjoint ranges of the same diagonal may be filled concurrently.
template <class Probe = NullProbe>
void band_step_cells(std::size_t d, std::size_t lo, std::size_t hi, std::span<double> z,
                     std::span<const double> lag1, std::span<const double> lag2, const BandProblem& problem,
                     Probe& probe = null_probe()) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t na = problem.rows();
    const std::size_t nb = problem.cols();
    const DiagonalSpan span = diagonal_span(d, na, nb);
    const std::size_t first = std::max(lo, span.first);
    const std::size_t last = std::min(hi, span.last);
    if (first >= last) return;

    // Boundary cells: column 0 at idx 0, row 0 at idx d.
    if (first == 0) {
        z[0] = inf;
        probe.on_cell(d, 0);
    }
    const bool has_row0 = d <= nb && last == d + 1;
    if (has_row0) {
        z[d] = inf;
        probe.on_cell(d, d);
    }

    const std::size_t begin = std::max<std::size_t>(first, 1);
    const std::size_t end = has_row0 ? d : last;
    const double nu = problem.params().nu;

    with_distance(problem.dim(), problem.params().degree, [&](const auto& dist) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const std::size_t k = na + idx - d;  // reversed row of A
            const double delete_a = lag1[idx] + problem.a_deletion(k);
            const double delete_b = lag1[idx - 1] + problem.b_deletion(idx);
            const double match =
                lag2[idx - 1] + match_cost(dist, problem.a_sample(k), problem.a_sample(k + 1), problem.b_sample(idx),
                                           problem.b_sample(idx - 1), problem.a_time(k), problem.a_time(k + 1),
                                           problem.b_time(idx), problem.b_time(idx - 1), nu);
            z[idx] = std::min(std::min(delete_a, delete_b), match);
            probe.on_cell(d, idx);
        }
    });
}

/// Fills the whole of diagonal d in the band's current buffer. The band must
/// already hold diagonals d-1 and d-2 in its lagged buffers.
template <class Probe = NullProbe>
void band_step(std::size_t d, DiagonalBand& band, const BandProblem& problem, Probe& probe = null_probe()) {
    band.require_ready_for(d);
    if (band.length() != problem.band_length()) throw StateError("band length does not match the problem");
    probe.on_diagonal(d);
    band_step_cells(d, 0, d + 1, band.z(), band.lag1(), band.lag2(), problem, probe);
    band.mark_written(d);
}

/// Sequential linear-memory TWED.
template <class Probe>
double twed_band(const TimeSeries& a, const TimeSeries& b, const TwedParams& params, Probe& probe) {
    const BandProblem problem(a, b, params);
    DiagonalBand band(problem.band_length(), std::numeric_limits<double>::infinity(), probe);
    seed_band(band, probe);
    for (std::size_t d = 1; d <= problem.last_diagonal(); ++d) {
        cycle_buffers(band);
        band_step(d, band, problem, probe);
    }
    return band.z()[problem.cols()];
}

double twed_band(const TimeSeries& a, const TimeSeries& b, const TwedParams& params);

/// LCS length in linear memory: the same three-diagonal sweep with integer
/// buffers. A match reads the twice-lagged diagonal, a skip the once-lagged.
std::size_t lcs_band(std::string_view s, std::string_view t);

}  // namespace warpband
