#include "warpband/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "warpband/errors.hpp"

namespace warpband::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && blank(s.front())) s.remove_prefix(1);
    while (!s.empty() && blank(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    // Trailing blank lines are not rows.
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    return lines;
}

double parse_number(std::string_view field, std::size_t row) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw FormatError("row " + std::to_string(row) + ": cannot parse number '" + std::string(field) + "'");
    }
    if (!std::isfinite(value)) {
        throw FormatError("row " + std::to_string(row) + ": non-finite number '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

TimeSeries parse_series_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw FormatError("missing header: empty input");

    const auto header = split_fields(lines.front());
    if (header.front() != "t") throw FormatError("missing header: expected first column 't'");
    if (header.size() < 2) throw FormatError("header has no value columns");
    for (std::size_t k = 1; k < header.size(); ++k) {
        if (header[k] != "v" + std::to_string(k - 1)) {
            throw FormatError("header column " + std::to_string(k + 1) + " should be 'v" + std::to_string(k - 1) +
                              "', found '" + std::string(header[k]) + "'");
        }
    }
    const std::size_t dim = header.size() - 1;
    if (lines.size() < 2) throw FormatError("no data rows");

    std::vector<double> values;
    std::vector<double> times;
    values.reserve((lines.size() - 1) * dim);
    times.reserve(lines.size() - 1);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto fields = split_fields(lines[r]);
        if (fields.size() != header.size()) {
            throw FormatError("row " + std::to_string(r) + " has " + std::to_string(fields.size()) +
                              " columns, header has " + std::to_string(header.size()));
        }
        const double t = parse_number(fields[0], r);
        if (!times.empty() && !(t > times.back())) {
            throw ValidationError("row " + std::to_string(r) + ": timestamp " + std::string(fields[0]) +
                                      " is not greater than the previous one",
                                  r);
        }
        times.push_back(t);
        for (std::size_t k = 1; k < fields.size(); ++k) values.push_back(parse_number(fields[k], r));
    }
    return TimeSeries(std::move(values), dim, std::move(times));
}

std::string format_double(double x) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

std::string write_series_csv(const TimeSeries& series) {
    std::string out = "t";
    for (std::size_t k = 0; k < series.dim(); ++k) out += ",v" + std::to_string(k);
    out += '\n';
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += format_double(series.time(i));
        for (const double v : series.sample(i)) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) throw IoError("is a directory: " + path.string());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("error while reading " + path.string());
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("error while writing " + path.string());
}

SeriesFile read_series_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        const auto first_line = text.substr(0, text.find('\n'));
        std::vector<std::string> header;
        for (const auto field : split_fields(first_line)) header.emplace_back(field);
        return SeriesFile{path, std::move(header), parse_series_csv(text)};
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what(), e.row());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    } catch (const InvalidInput& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

std::string write_matrix_csv(const DistanceMatrix& matrix, std::span<const std::string> row_names,
                             std::span<const std::string> col_names) {
    if (row_names.size() != matrix.rows() || col_names.size() != matrix.cols()) {
        throw InvalidInput("matrix labels do not match its shape");
    }
    std::string out;
    for (const auto& name : col_names) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        out += row_names[i];
        for (std::size_t j = 0; j < matrix.cols(); ++j) {
            out += ',';
            out += format_double(matrix.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::vector<std::filesystem::path> list_series_files(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) throw IoError("not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") files.push_back(entry.path());
    }
    if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
    std::sort(files.begin(), files.end(),
              [](const auto& x, const auto& y) { return x.filename().string() < y.filename().string(); });
    return files;
}

}  // namespace warpband::io
