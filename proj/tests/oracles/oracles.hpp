#pragma once

// Test-only oracles. Nothing here calls into the solvers under test: costs are
// recomputed from the definitions with a generic pow-based norm, and answers
// come from exhaustive enumeration.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "warpband/time_series.hpp"

namespace oracle {

/// (sum |a_k - b_k|^p)^(1/p) evaluated literally.
inline double lp(const std::vector<double>& a, const std::vector<double>& b, int p) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) sum += std::pow(std::abs(a[k] - b[k]), p);
    return std::pow(sum, 1.0 / p);
}

/// Sample i of s (1-based); index 0 is the zero vector at time 0.
struct Sample {
    std::vector<double> value;
    double time;
};

inline Sample sample(const warpband::TimeSeries& s, std::size_t i) {
    if (i == 0) return {std::vector<double>(s.dim(), 0.0), 0.0};
    const auto v = s.sample(i - 1);
    return {std::vector<double>(v.begin(), v.end()), s.time(i - 1)};
}

/// Minimum total cost over every monotone sequence of edit operations
/// (delete in A, delete in B, match) aligning A with B. The leading zero
/// samples are matched to each other for free, so the first real operation
/// must be a match. Exponential; meant for series of at most ~6 samples.
inline double twed_by_enumeration(const warpband::TimeSeries& a, const warpband::TimeSeries& b,
                                  const warpband::TwedParams& params) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const int p = params.degree;
    double best = std::numeric_limits<double>::infinity();

    auto delete_cost = [&](const warpband::TimeSeries& s, std::size_t i) {
        const Sample cur = sample(s, i);
        const Sample prev = sample(s, i - 1);
        return lp(cur.value, prev.value, p) + params.nu * std::abs(cur.time - prev.time) + params.lambda;
    };
    auto match_cost = [&](std::size_t i, std::size_t j) {
        const Sample ai = sample(a, i), ap = sample(a, i - 1);
        const Sample bj = sample(b, j), bp = sample(b, j - 1);
        return lp(ai.value, bj.value, p) + lp(ap.value, bp.value, p) +
               params.nu * (std::abs(ai.time - bj.time) + std::abs(ap.time - bp.time));
    };

    auto walk = [&](auto&& self, std::size_t i, std::size_t j, double cost) -> void {
        if (i == na && j == nb) {
            best = std::min(best, cost);
            return;
        }
        // Cells with exactly one zero coordinate are unreachable.
        if (i < na && j >= 1) self(self, i + 1, j, cost + delete_cost(a, i + 1));
        if (j < nb && i >= 1) self(self, i, j + 1, cost + delete_cost(b, j + 1));
        if (i < na && j < nb) self(self, i + 1, j + 1, cost + match_cost(i + 1, j + 1));
    };
    walk(walk, 0, 0, 0.0);
    return best;
}

inline bool is_subsequence(const std::string& sub, const std::string& s) {
    std::size_t k = 0;
    for (const char c : s)
        if (k < sub.size() && sub[k] == c) ++k;
    return k == sub.size();
}

/// LCS length by trying every subsequence of s. |s| should stay below ~20.
inline std::size_t lcs_by_enumeration(const std::string& s, const std::string& t) {
    std::size_t best = 0;
    const std::uint32_t subsets = 1u << s.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        std::string sub;
        for (std::size_t k = 0; k < s.size(); ++k)
            if (mask & (1u << k)) sub += s[k];
        if (sub.size() > best && is_subsequence(sub, t)) best = sub.size();
    }
    return best;
}

/// Random series with values in [-2, 2) and strictly increasing, irregular
/// timestamps.
inline warpband::TimeSeries random_series(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
    std::uniform_real_distribution<double> value(-2.0, 2.0);
    std::uniform_real_distribution<double> step(0.1, 2.0);
    std::vector<double> values(n * dim);
    for (auto& v : values) v = value(rng);
    std::vector<double> times(n);
    double t = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    for (auto& x : times) {
        x = t;
        t += step(rng);
    }
    return warpband::TimeSeries(std::move(values), dim, std::move(times));
}

inline std::string random_string(std::mt19937_64& rng, std::size_t n, const std::string& alphabet = "ACGT") {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::string s(n, ' ');
    for (auto& c : s) c = alphabet[pick(rng)];
    return s;
}

inline bool relative_close(double x, double y, double tol) {
    if (x == y) return true;
    return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

}  // namespace oracle
