#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "warpband/engine.hpp"
#include "warpband/time_series.hpp"

namespace warpband::io {

/// Parses a series CSV: header "t,v0,v1,...,v{d-1}", then one sample per row.
///
/// Throws FormatError for a missing or malformed header, ragged rows and
/// unparsable numbers; ValidationError (with the 1-based data row) when
/// timestamps are not strictly increasing.
TimeSeries parse_series_csv(std::string_view text);

/// Inverse of parse_series_csv. Numbers use the shortest representation that
/// reads back to the same double.
std::string write_series_csv(const TimeSeries& series);

struct SeriesFile {
    std::filesystem::path path;
    std::vector<std::string> header;
    TimeSeries series;
};

/// Reads and parses a series file. Errors carry the file name.
SeriesFile read_series_file(const std::filesystem::path& path);

/// Whole-file read; throws IoError if the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

/// Matrix CSV: a header row of column names (first cell empty), then one row
/// per series led by its name.
std::string write_matrix_csv(const DistanceMatrix& matrix, std::span<const std::string> row_names,
                             std::span<const std::string> col_names);

/// Regular files ending in ".csv" directly inside dir, sorted by file name.
std::vector<std::filesystem::path> list_series_files(const std::filesystem::path& dir);

}  // namespace warpband::io
