#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "warpband/time_series.hpp"

namespace warpband {

/// Full (nA+1) x (nB+1) TWED cost matrix. Row 0 and column 0 are the
/// boundary: entry (0,0) is 0, every other boundary entry is +inf.
class CostMatrix {
public:
    CostMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
    double& operator()(std::size_t row, std::size_t col) { return entries_[row * cols_ + col]; }

    /// The solved distance, entry (nA, nB).
    double result() const { return entries_.back(); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> entries_;
};

/// Quadratic-memory TWED. Same recurrence as the band solver, evaluated row by
/// row over the whole matrix; kept deliberately plain as the baseline.
double twed_reference(const TimeSeries& a, const TimeSeries& b, const TwedParams& params);

/// As twed_reference, but returns the whole solved matrix.
CostMatrix twed_reference_matrix(const TimeSeries& a, const TimeSeries& b, const TwedParams& params);

/// Classic quadratic DP for the length of the longest common subsequence.
std::size_t lcs_reference(std::string_view s, std::string_view t);

}  // namespace warpband
