#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "warpband/time_series.hpp"

namespace warpband {

/// (sum |x_i|^p)^(1/p). Exactly |x_0| for one-component vectors.
/// Throws InvalidInput for an empty vector or p < 1.
double lp_norm(std::span<const double> x, int p);

/// lp_norm(a - b, p) without materializing the difference.
double lp_distance(std::span<const double> a, std::span<const double> b, int p);

/// Norm distance between consecutive samples: out[i] = |S[i] - S[i-1]|_p,
/// with S[-1] taken as the zero vector. One entry per sample.
std::vector<double> local_costs(const TimeSeries& series, int p);

struct LocalCosts {
    std::vector<double> a;
    std::vector<double> b;
};

LocalCosts local_costs(const TimeSeries& a, const TimeSeries& b, int p);

// Distance kernels between two samples of the same dimension. Solvers pick one
// per solve through with_distance(); lp_distance() dispatches identically, so
// every path agrees bit-for-bit on the same pair of samples.
namespace distance {

struct Absolute {
    double operator()(const double* a, const double* b) const { return std::abs(*a - *b); }
};

struct Manhattan {
    std::size_t dim;
    double operator()(const double* a, const double* b) const {
        double sum = 0.0;
        for (std::size_t k = 0; k < dim; ++k) sum += std::abs(a[k] - b[k]);
        return sum;
    }
};

struct Euclidean {
    std::size_t dim;
    double operator()(const double* a, const double* b) const {
        double sum = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const double diff = a[k] - b[k];
            sum += diff * diff;
        }
        return std::sqrt(sum);
    }
};

struct Minkowski {
    std::size_t dim;
    int p;
    double operator()(const double* a, const double* b) const {
        double sum = 0.0;
        for (std::size_t k = 0; k < dim; ++k) sum += std::pow(std::abs(a[k] - b[k]), p);
        return std::pow(sum, 1.0 / p);
    }
};

}  // namespace distance

/// Calls fn with the distance kernel matching (dim, p).
template <class Fn>
decltype(auto) with_distance(std::size_t dim, int p, Fn&& fn) {
    if (dim == 1) return fn(distance::Absolute{});
    if (p == 1) return fn(distance::Manhattan{dim});
    if (p == 2) return fn(distance::Euclidean{dim});
    return fn(distance::Minkowski{dim, p});
}

/// A series laid out for the DP: row 0 is the virtual zero sample at time 0,
/// row i (1-based) is sample i-1. deletion[i] is the cost of deleting sample
/// row i: |s_i - s_{i-1}| + nu * |t_i - t_{i-1}| + lambda (deletion[0] unused).
struct PaddedSeries {
    std::size_t length = 0;  // sample count, excluding the virtual row
    std::size_t dim = 0;
    std::vector<double> values;    // (length + 1) * dim
    std::vector<double> times;     // length + 1
    std::vector<double> deletion;  // length + 1

    PaddedSeries(const TimeSeries& series, std::span<const double> local, const TwedParams& params);

    const double* row(std::size_t i) const { return values.data() + i * dim; }
};

/// Cost of matching a_i with b_j, given the preceding samples of both.
/// Shared by every TWED solver so that their cell updates are identical.
template <class Dist>
inline double match_cost(const Dist& dist, const double* ai, const double* ai_prev, const double* bj,
                         const double* bj_prev, double ta, double ta_prev, double tb, double tb_prev,
                         double nu) {
    return (dist(ai, bj) + dist(ai_prev, bj_prev)) + nu * (std::abs(ta - tb) + std::abs(ta_prev - tb_prev));
}

}  // namespace warpband
