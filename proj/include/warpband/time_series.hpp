#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace warpband {

/// A timestamped sequence of d-dimensional samples, stored row-major
/// (sample i occupies values[i*d, (i+1)*d)).
///
/// Invariants enforced at construction: at least one sample, every sample has
/// exactly `dim` components, timestamps strictly increasing. Immutable after
/// construction.
///
/// Solvers treat the sample before index 0 as the zero vector at time 0.
class TimeSeries {
public:
    TimeSeries(std::vector<double> values, std::size_t dim, std::vector<double> timestamps);

    /// Timestamps default to 0, 1, ..., n-1.
    static TimeSeries with_unit_times(std::vector<double> values, std::size_t dim);

    /// Convenience for 1-D series.
    static TimeSeries scalar(std::vector<double> values);
    static TimeSeries scalar(std::vector<double> values, std::vector<double> timestamps);

    std::size_t size() const noexcept { return timestamps_.size(); }
    std::size_t dim() const noexcept { return dim_; }

    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> timestamps() const noexcept { return timestamps_; }

    std::span<const double> sample(std::size_t i) const {
        return std::span<const double>(values_).subspan(i * dim_, dim_);
    }
    double time(std::size_t i) const { return timestamps_[i]; }

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    std::vector<double> values_;
    std::size_t dim_;
    std::vector<double> timestamps_;
};

/// Parameters of the time warp edit distance recurrence.
struct TwedParams {
    double nu = 1.0;      // stiffness: cost per unit of timestamp difference
    double lambda = 0.0;  // constant penalty added to every deletion
    int degree = 2;       // exponent of the lp-norm between samples

    /// Throws InvalidInput unless nu >= 0, lambda >= 0 and degree >= 1.
    void validate() const;

    /// TWED is a proper metric for nu > 0, lambda >= 0.
    bool metric() const noexcept { return nu > 0.0 && lambda >= 0.0; }

    friend bool operator==(const TwedParams&, const TwedParams&) = default;
};

}  // namespace warpband
