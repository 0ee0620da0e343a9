#include "warpband/reference.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "warpband/costs.hpp"
#include "warpband/errors.hpp"

namespace warpband {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_pair(const TimeSeries& a, const TimeSeries& b, const TwedParams& params) {
    params.validate();
    if (a.dim() != b.dim()) {
        throw InvalidInput("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, kInf) {
    entries_[0] = 0.0;
}

CostMatrix twed_reference_matrix(const TimeSeries& a, const TimeSeries& b, const TwedParams& params) {
    check_pair(a, b, params);
    const auto costs = local_costs(a, b, params.degree);
    const PaddedSeries pa(a, costs.a, params);
    const PaddedSeries pb(b, costs.b, params);
    const std::size_t na = pa.length;
    const std::size_t nb = pb.length;

    CostMatrix dp(na + 1, nb + 1);
    with_distance(pa.dim, params.degree, [&](const auto& dist) {
        for (std::size_t i = 1; i <= na; ++i) {
            for (std::size_t j = 1; j <= nb; ++j) {
                const double delete_a = dp(i - 1, j) + pa.deletion[i];
                const double delete_b = dp(i, j - 1) + pb.deletion[j];
                const double match =
                    dp(i - 1, j - 1) + match_cost(dist, pa.row(i), pa.row(i - 1), pb.row(j), pb.row(j - 1),
                                                  pa.times[i], pa.times[i - 1], pb.times[j], pb.times[j - 1],
                                                  params.nu);
                dp(i, j) = std::min(std::min(delete_a, delete_b), match);
            }
        }
    });
    return dp;
}

double twed_reference(const TimeSeries& a, const TimeSeries& b, const TwedParams& params) {
    return twed_reference_matrix(a, b, params).result();
}

std::size_t lcs_reference(std::string_view s, std::string_view t) {
    const std::size_t cols = t.size() + 1;
    std::vector<std::size_t> dp((s.size() + 1) * cols, 0);
    for (std::size_t i = 1; i <= s.size(); ++i) {
        for (std::size_t j = 1; j <= t.size(); ++j) {
            dp[i * cols + j] = s[i - 1] == t[j - 1]
                                   ? dp[(i - 1) * cols + j - 1] + 1
                                   : std::max(dp[(i - 1) * cols + j], dp[i * cols + j - 1]);
        }
    }
    return dp.back();
}

}  // namespace warpband
