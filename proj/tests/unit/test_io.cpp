#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "warpband/errors.hpp"
#include "warpband/io.hpp"

using namespace warpband;
namespace fs = std::filesystem;

TEST_CASE("parse_series_csv examples") {
    const auto s = io::parse_series_csv("t,v0\n0,1\n1,3\n");
    CHECK(s.size() == 2);
    CHECK(s.dim() == 1);
    CHECK(std::vector<double>(s.values().begin(), s.values().end()) == std::vector<double>{1, 3});
    CHECK(std::vector<double>(s.timestamps().begin(), s.timestamps().end()) == std::vector<double>{0, 1});

    const auto two = io::parse_series_csv("t,v0,v1\n0,1,2\n");
    CHECK(two.size() == 1);
    CHECK(two.dim() == 2);
    CHECK(std::vector<double>(two.values().begin(), two.values().end()) == std::vector<double>{1, 2});

    // CRLF line endings and a missing trailing newline are accepted.
    const auto crlf = io::parse_series_csv("t,v0\r\n0.5,-1e-3\r\n2,4");
    CHECK(crlf.size() == 2);
    CHECK(std::vector<double>(crlf.values().begin(), crlf.values().end()) == std::vector<double>{-1e-3, 4});
}

TEST_CASE("parse_series_csv reports the offending row for non-monotone timestamps") {
    try {
        io::parse_series_csv("t,v0\n1,1\n0,2\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.row() == 2);
    }
    try {
        io::parse_series_csv("t,v0\n0,1\n1,1\n2,1\n2,1\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.row() == 4);
    }
}

TEST_CASE("parse_series_csv format errors") {
    CHECK_THROWS_AS(io::parse_series_csv(""), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t,v0\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("0,1\n1,2\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t,v1\n0,1\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t,x\n0,1\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t\n0\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t,v0,v1\n0,1,2\n1,3\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t,v0\n0,1,2\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t,v0\n0,abc\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t,v0\n0,1x\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t,v0\n0,nan\n"), FormatError);
    CHECK_THROWS_AS(io::parse_series_csv("t,v0\n0,\n"), FormatError);
}

TEST_CASE("write_series_csv round-trips exactly") {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = oracle::random_series(rng, 1 + trial, 1 + trial % 4);
        CHECK(io::parse_series_csv(io::write_series_csv(s)) == s);
    }
}

TEST_CASE("format_double is shortest round-trip") {
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(3.0) == "3");
    CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("write_matrix_csv layout") {
    DistanceMatrix m(2, 3, false);
    m.at(0, 0) = 0;
    m.at(0, 1) = 1.5;
    m.at(0, 2) = 2;
    m.at(1, 0) = 0.25;
    m.at(1, 1) = 3;
    m.at(1, 2) = 4;
    const std::vector<std::string> rows{"a.csv", "b.csv"};
    const std::vector<std::string> cols{"x.csv", "y.csv", "z.csv"};
    CHECK(io::write_matrix_csv(m, rows, cols) == ",x.csv,y.csv,z.csv\na.csv,0,1.5,2\nb.csv,0.25,3,4\n");
}

TEST_CASE("file helpers") {
    const fs::path dir = fs::temp_directory_path() / "warpband_test_io";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const char* name : {"c.csv", "a.csv", "b.txt", "b.csv"}) io::write_text_file(dir / name, "t,v0\n0,1\n");
    fs::create_directories(dir / "sub.csv");

    const auto files = io::list_series_files(dir);
    REQUIRE(files.size() == 3);
    CHECK(files[0].filename() == "a.csv");
    CHECK(files[1].filename() == "b.csv");
    CHECK(files[2].filename() == "c.csv");

    const auto loaded = io::read_series_file(dir / "a.csv");
    CHECK(loaded.header == std::vector<std::string>{"t", "v0"});
    CHECK(loaded.series.size() == 1);

    io::write_text_file(dir / "bad.csv", "t,v0\n1,1\n0,1\n");
    try {
        io::read_series_file(dir / "bad.csv");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("bad.csv") != std::string::npos);
        CHECK(e.row() == 2);
    }

    CHECK_THROWS_AS(io::read_text_file(dir / "missing.csv"), IoError);
    CHECK_THROWS_AS(io::list_series_files(dir / "missing"), IoError);
    fs::remove_all(dir);
}
