#include "warpband/band.hpp"

#include <algorithm>
#include <string>

namespace warpband {

DiagonalCoord ortho_diag(std::int64_t row, std::int64_t col) {
    if (row < 0 || col < 0) {
        throw InvalidInput("ortho_diag needs non-negative indices, got (" + std::to_string(row) + ", " +
                           std::to_string(col) + ")");
    }
    return {row + col, col};
}

MatrixCoord row_col(DiagonalCoord coord) {
    if (coord.idx < 0 || coord.idx > coord.orthodiag) {
        throw InvalidInput("diagonal index " + std::to_string(coord.idx) + " outside diagonal " +
                           std::to_string(coord.orthodiag));
    }
    return {coord.orthodiag - coord.idx, coord.idx};
}

std::size_t diagonal_count(std::size_t na, std::size_t nb) {
    if (na < 1 || nb < 1) throw InvalidInput("diagonal_count needs at least one sample per series");
    return na + nb + 1;
}

namespace {

void check_pair(const TimeSeries& a, const TimeSeries& b, const TwedParams& params) {
    params.validate();
    if (a.dim() != b.dim()) {
        throw InvalidInput("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

// Reverses the row order of a padded series in place, keeping each sample's
// components in order.
void reverse_rows(PaddedSeries& s) {
    std::reverse(s.values.begin(), s.values.end());
    for (std::size_t k = 0; k <= s.length; ++k) {
        auto row = s.values.begin() + static_cast<std::ptrdiff_t>(k * s.dim);
        std::reverse(row, row + static_cast<std::ptrdiff_t>(s.dim));
    }
    std::reverse(s.times.begin(), s.times.end());
    std::reverse(s.deletion.begin(), s.deletion.end());
}

}  // namespace

BandProblem::BandProblem(const TimeSeries& a, const TimeSeries& b, const TwedParams& params)
    : BandProblem(a, b, params, local_costs(a, b, params.degree)) {}

BandProblem::BandProblem(const TimeSeries& a, const TimeSeries& b, const TwedParams& params,
                         const LocalCosts& costs)
    : na_(a.size()), nb_(b.size()), dim_(a.dim()), params_(params) {
    check_pair(a, b, params);
    PaddedSeries pa(a, costs.a, params);
    PaddedSeries pb(b, costs.b, params);
    reverse_rows(pa);
    a_values_ = std::move(pa.values);
    a_times_ = std::move(pa.times);
    a_deletion_ = std::move(pa.deletion);
    b_values_ = std::move(pb.values);
    b_times_ = std::move(pb.times);
    b_deletion_ = std::move(pb.deletion);
}

double twed_band(const TimeSeries& a, const TimeSeries& b, const TwedParams& params) {
    return twed_band(a, b, params, null_probe());
}

std::size_t lcs_band(std::string_view s, std::string_view t) {
    const std::size_t ns = s.size();
    const std::size_t nt = t.size();
    if (ns == 0 || nt == 0) return 0;

    const std::string s_rev(s.rbegin(), s.rend());  // s_rev[ns - row] == s[row - 1]
    BasicDiagonalBand<std::size_t> band(ns + nt + 2, 0);
    band.mark_written(0);

    for (std::size_t d = 1; d <= ns + nt; ++d) {
        cycle_buffers(band);
        const auto z = band.z();
        const auto lag1 = band.lag1();
        const auto lag2 = band.lag2();
        const DiagonalSpan span = diagonal_span(d, ns, nt);
        for (std::size_t idx = span.first; idx < span.last; ++idx) {
            const std::size_t row = d - idx;
            if (row == 0 || idx == 0) {
                z[idx] = 0;
                continue;
            }
            z[idx] = s_rev[ns - row] == t[idx - 1] ? lag2[idx - 1] + 1 : std::max(lag1[idx], lag1[idx - 1]);
        }
        band.mark_written(d);
    }
    return band.z()[nt];
}

}  // namespace warpband
