#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "warpband/errors.hpp"
#include "warpband/reference.hpp"

using namespace warpband;

namespace {

TwedParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> weight(0.0, 2.0);
    std::uniform_int_distribution<int> degree(1, 3);
    return TwedParams{weight(rng), weight(rng), degree(rng)};
}

}  // namespace

TEST_CASE("twed_reference of a series with itself is zero") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = oracle::random_series(rng, 1 + trial, 1 + trial % 3);
        CHECK(twed_reference(a, a, random_params(rng)) == 0.0);
    }
}

TEST_CASE("twed_reference single-sample match") {
    const auto a = TimeSeries::scalar({2.0}, {1.0});
    const auto b = TimeSeries::scalar({5.0}, {1.0});
    CHECK(twed_reference(a, b, TwedParams{1.0, 0.0, 1}) == 3.0);
}

TEST_CASE("twed_reference matches exhaustive path enumeration") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    std::uniform_int_distribution<std::size_t> dims(1, 3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dim = dims(rng);
        const auto a = oracle::random_series(rng, len(rng), dim);
        const auto b = oracle::random_series(rng, len(rng), dim);
        const auto params = random_params(rng);
        const double expected = oracle::twed_by_enumeration(a, b, params);
        CHECK(oracle::relative_close(twed_reference(a, b, params), expected, 1e-12));
    }
}

TEST_CASE("twed_reference_matrix boundary and consistency") {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const auto one = TimeSeries::scalar({4.0});
    const auto m1 = twed_reference_matrix(one, one, TwedParams{});
    CHECK(m1(1, 1) == 0.0);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = oracle::random_series(rng, 1 + trial % 9, 2);
        const auto b = oracle::random_series(rng, 1 + trial % 7, 2);
        const auto params = random_params(rng);
        const auto m = twed_reference_matrix(a, b, params);
        REQUIRE(m.rows() == a.size() + 1);
        REQUIRE(m.cols() == b.size() + 1);
        CHECK(m(0, 0) == 0.0);
        for (std::size_t i = 1; i < m.rows(); ++i) CHECK(m(i, 0) == inf);
        for (std::size_t j = 1; j < m.cols(); ++j) CHECK(m(0, j) == inf);
        for (std::size_t i = 1; i < m.rows(); ++i) {
            for (std::size_t j = 1; j < m.cols(); ++j) {
                CHECK(std::isfinite(m(i, j)));
                CHECK(m(i, j) >= 0.0);
            }
        }
        CHECK(m.result() == twed_reference(a, b, params));
    }
}

TEST_CASE("twed_reference rejects mismatched dimensions and bad params") {
    const auto a = TimeSeries::with_unit_times({1, 2}, 2);
    const auto b = TimeSeries::scalar({1, 2});
    CHECK_THROWS_AS(twed_reference(a, b, TwedParams{}), InvalidInput);
    CHECK_THROWS_AS(twed_reference(b, b, TwedParams{-1.0, 0.0, 2}), InvalidInput);
}

TEST_CASE("twed_reference metric properties") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> len(1, 20);
    std::uniform_real_distribution<double> positive(0.01, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 1 + trial % 3;
        const auto a = oracle::random_series(rng, len(rng), dim);
        const auto b = oracle::random_series(rng, len(rng), dim);
        const auto c = oracle::random_series(rng, len(rng), dim);
        TwedParams params{positive(rng), positive(rng) - 0.01, 1 + trial % 2};

        const double ab = twed_reference(a, b, params);
        CHECK(ab == twed_reference(b, a, params));
        CHECK(ab <= twed_reference(a, c, params) + twed_reference(c, b, params) + 1e-9);

        TwedParams heavier = params;
        heavier.lambda += 0.5;
        CHECK(twed_reference(a, b, heavier) >= ab);
    }
}

TEST_CASE("lcs_reference examples") {
    CHECK(lcs_reference("", "XYZ") == 0);
    CHECK(lcs_reference("XYZ", "") == 0);
    CHECK(lcs_reference("ABAB", "ABAB") == 4);

    const std::size_t textbook = oracle::lcs_by_enumeration("ABCBDAB", "BDCABA");
    CHECK(textbook == 4);
    CHECK(lcs_reference("ABCBDAB", "BDCABA") == textbook);
}

TEST_CASE("lcs_reference agrees with enumeration and its bounds") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> len(0, 10);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = oracle::random_string(rng, len(rng));
        const auto t = oracle::random_string(rng, len(rng));
        const auto got = lcs_reference(s, t);
        CHECK(got == oracle::lcs_by_enumeration(s, t));
        CHECK(got <= std::min(s.size(), t.size()));
    }
    CHECK(lcs_reference("ACE", "ABCDE") == 3);
}
