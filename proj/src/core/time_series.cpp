#include "warpband/time_series.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "warpband/errors.hpp"

namespace warpband {

TimeSeries::TimeSeries(std::vector<double> values, std::size_t dim, std::vector<double> timestamps)
    : values_(std::move(values)), dim_(dim), timestamps_(std::move(timestamps)) {
    if (dim_ == 0) throw InvalidInput("time series dimension must be at least 1");
    if (timestamps_.empty()) throw InvalidInput("time series needs at least one sample");
    if (values_.size() != timestamps_.size() * dim_) {
        throw InvalidInput("time series has " + std::to_string(values_.size()) + " values, expected " +
                           std::to_string(timestamps_.size()) + " samples of dimension " +
                           std::to_string(dim_));
    }
    for (std::size_t i = 1; i < timestamps_.size(); ++i) {
        if (!(timestamps_[i] > timestamps_[i - 1])) {
            throw InvalidInput("timestamps must be strictly increasing (sample " + std::to_string(i) + ")");
        }
    }
}

TimeSeries TimeSeries::with_unit_times(std::vector<double> values, std::size_t dim) {
    if (dim == 0) throw InvalidInput("time series dimension must be at least 1");
    std::vector<double> times(values.size() / dim);
    std::iota(times.begin(), times.end(), 0.0);
    return TimeSeries(std::move(values), dim, std::move(times));
}

TimeSeries TimeSeries::scalar(std::vector<double> values) { return with_unit_times(std::move(values), 1); }

TimeSeries TimeSeries::scalar(std::vector<double> values, std::vector<double> timestamps) {
    return TimeSeries(std::move(values), 1, std::move(timestamps));
}

void TwedParams::validate() const {
    if (!(nu >= 0.0)) throw InvalidInput("nu must be non-negative");
    if (!(lambda >= 0.0)) throw InvalidInput("lambda must be non-negative");
    if (degree < 1) throw InvalidInput("degree must be a positive integer");
}

}  // namespace warpband
