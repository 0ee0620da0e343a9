#include "warpband/costs.hpp"

#include <algorithm>
#include <vector>

#include "warpband/errors.hpp"

namespace warpband {

double lp_distance(std::span<const double> a, std::span<const double> b, int p) {
    if (a.empty()) throw InvalidInput("lp norm of an empty vector");
    if (a.size() != b.size()) throw InvalidInput("lp distance between vectors of different dimension");
    if (p < 1) throw InvalidInput("lp norm degree must be at least 1");
    return with_distance(a.size(), p, [&](const auto& dist) { return dist(a.data(), b.data()); });
}

double lp_norm(std::span<const double> x, int p) {
    const std::vector<double> zero(x.size(), 0.0);
    return lp_distance(x, zero, p);
}

std::vector<double> local_costs(const TimeSeries& series, int p) {
    if (p < 1) throw InvalidInput("lp norm degree must be at least 1");
    const std::size_t n = series.size();
    const std::size_t dim = series.dim();
    const std::vector<double> zero(dim, 0.0);

    std::vector<double> out(n);
    with_distance(dim, p, [&](const auto& dist) {
        const double* values = series.values().data();
        out[0] = dist(values, zero.data());
        for (std::size_t i = 1; i < n; ++i) out[i] = dist(values + i * dim, values + (i - 1) * dim);
    });
    return out;
}

LocalCosts local_costs(const TimeSeries& a, const TimeSeries& b, int p) {
    return LocalCosts{local_costs(a, p), local_costs(b, p)};
}

PaddedSeries::PaddedSeries(const TimeSeries& series, std::span<const double> local, const TwedParams& params)
    : length(series.size()),
      dim(series.dim()),
      values((series.size() + 1) * series.dim(), 0.0),
      times(series.size() + 1, 0.0),
      deletion(series.size() + 1, 0.0) {
    if (local.size() != length) throw InvalidInput("local cost count does not match series length");
    const auto src = series.values();
    std::copy(src.begin(), src.end(), values.begin() + static_cast<std::ptrdiff_t>(dim));
    for (std::size_t i = 1; i <= length; ++i) {
        times[i] = series.time(i - 1);
        deletion[i] = local[i - 1] + params.nu * std::abs(times[i] - times[i - 1]) + params.lambda;
    }
}

}  // namespace warpband
