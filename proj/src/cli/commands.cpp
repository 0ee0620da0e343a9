#include "warpband/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "warpband/band.hpp"
#include "warpband/errors.hpp"
#include "warpband/io.hpp"
#include "warpband/reference.hpp"

namespace warpband::cli {

namespace fs = std::filesystem;

namespace {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct SeriesList {
    std::vector<std::string> names;
    std::vector<TimeSeries> series;
};

// Loads every .csv in dir; all series must have dimension `dim` (or the first
// file's dimension when dim is 0).
SeriesList load_directory(const fs::path& dir, std::size_t dim) {
    const auto files = io::list_series_files(dir);
    if (files.empty()) throw InvalidInput("no .csv series files in " + dir.string());
    SeriesList list;
    for (const auto& file : files) {
        auto loaded = io::read_series_file(file);
        if (dim == 0) dim = loaded.series.dim();
        if (loaded.series.dim() != dim) {
            throw InvalidInput(file.string() + ": dimension " + std::to_string(loaded.series.dim()) +
                               " does not match " + std::to_string(dim));
        }
        list.names.push_back(file.filename().string());
        list.series.push_back(std::move(loaded.series));
    }
    return list;
}

std::string first_line(const fs::path& path) {
    std::string text = io::read_text_file(path);
    text = text.substr(0, text.find('\n'));
    if (!text.empty() && text.back() == '\r') text.pop_back();
    return text;
}

std::string random_symbols(std::size_t n, std::mt19937_64& rng) {
    static constexpr char kAlphabet[] = "ACGT";
    std::uniform_int_distribution<int> pick(0, 3);
    std::string s(n, 'A');
    for (auto& c : s) c = kAlphabet[pick(rng)];
    return s;
}

bool close(double x, double y) {
    return x == y || std::abs(x - y) <= 1e-12 * std::max(std::abs(x), std::abs(y));
}

}  // namespace

RunReport cmd_twed(const fs::path& file_a, const fs::path& file_b, const TwedParams& params, std::size_t workers) {
    const Stopwatch clock;
    const auto a = io::read_series_file(file_a);
    const auto b = io::read_series_file(file_b);
    if (a.series.dim() != b.series.dim()) {
        throw InvalidInput("dimension mismatch: " + file_a.string() + " has " + std::to_string(a.series.dim()) +
                           ", " + file_b.string() + " has " + std::to_string(b.series.dim()));
    }
    const double distance = twed_parallel(a.series, b.series, params, workers);
    return RunReport{"twed", {file_a.string(), file_b.string()}, params, workers, DistanceResult{distance},
                     clock.elapsed_ms()};
}

RunReport cmd_batch(const BatchCommand& command) {
    const Stopwatch clock;
    if (command.self && command.dir_b) throw UsageError("--self cannot be combined with a second directory");
    if (!command.self && !command.dir_b) throw UsageError("batch needs a second directory or --self");
    if (command.symmetric && !command.self) throw UsageError("--symmetric requires --self");
    if (command.out.empty()) throw UsageError("batch needs --out");

    const SeriesList list_a = load_directory(command.dir_a, 0);
    std::optional<SeriesList> list_b;
    if (command.dir_b) list_b = load_directory(*command.dir_b, list_a.series.front().dim());

    BatchSpec spec;
    spec.list_a = list_a.series;
    if (list_b) spec.list_b = list_b->series;
    spec.params = command.params;
    spec.symmetric = command.symmetric;
    spec.workers = command.workers;

    BatchStats stats;
    const DistanceMatrix matrix = twed_batch(spec, &stats);
    const auto& col_names = list_b ? list_b->names : list_a.names;
    io::write_text_file(command.out, io::write_matrix_csv(matrix, list_a.names, col_names));

    std::vector<std::string> inputs{command.dir_a.string()};
    if (command.dir_b) inputs.push_back(command.dir_b->string());
    return RunReport{"batch",
                     inputs,
                     command.params,
                     command.workers,
                     MatrixResult{command.out.string(), matrix.rows(), matrix.cols(), matrix.symmetric(),
                                  stats.solver_invocations},
                     clock.elapsed_ms()};
}

RunReport cmd_lcs(const fs::path& file_a, const fs::path& file_b) {
    const Stopwatch clock;
    const std::string s = first_line(file_a);
    const std::string t = first_line(file_b);
    return RunReport{"lcs", {file_a.string(), file_b.string()}, std::nullopt, 1, LcsResult{lcs_band(s, t)},
                     clock.elapsed_ms()};
}

RunReport cmd_bench(const BenchOptions& options) {
    const Stopwatch clock;
    auto records = bench(options);
    std::vector<std::string> inputs;
    for (const auto n : options.sizes) inputs.push_back(std::to_string(n));
    return RunReport{"bench", inputs, options.params, options.workers, BenchResult{std::move(records)},
                     clock.elapsed_ms()};
}

RunReport cmd_selftest(std::uint64_t seed, std::size_t workers) {
    const Stopwatch clock;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> length(1, 96);
    std::uniform_int_distribution<std::size_t> dims(1, 3);
    std::uniform_int_distribution<int> degree(1, 3);
    std::uniform_real_distribution<double> weight(0.0, 1.0);

    SelfTestCheck band_vs_reference{"band matches reference", 0, 0};
    SelfTestCheck parallel_vs_band{"parallel matches band", 0, 0};
    SelfTestCheck lcs{"lcs band matches reference", 0, 0};
    for (int k = 0; k < 64; ++k) {
        const std::size_t dim = dims(rng);
        const TimeSeries a = random_series(length(rng), dim, rng);
        const TimeSeries b = random_series(length(rng), dim, rng);
        const TwedParams params{weight(rng), weight(rng), degree(rng)};
        const double banded = twed_band(a, b, params);

        ++band_vs_reference.cases;
        if (!close(banded, twed_reference(a, b, params))) ++band_vs_reference.failures;
        ++parallel_vs_band.cases;
        if (twed_parallel(a, b, params, workers) != banded) ++parallel_vs_band.failures;

        const std::string s = random_symbols(length(rng), rng);
        const std::string t = random_symbols(length(rng), rng);
        ++lcs.cases;
        if (lcs_band(s, t) != lcs_reference(s, t)) ++lcs.failures;
    }
    return RunReport{"selftest",
                     {"seed=" + std::to_string(seed)},
                     std::nullopt,
                     workers,
                     SelfTestResult{{band_vs_reference, parallel_vs_band, lcs}},
                     clock.elapsed_ms()};
}

namespace {

struct CommonFlags {
    TwedParams params;
    std::string workers;
    bool json = false;
};

void add_param_flags(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--nu", flags.params.nu, "Stiffness: cost per unit of time difference")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--lambda", flags.params.lambda, "Penalty added to every deletion")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--degree", flags.params.degree, "Exponent of the lp-norm between samples")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_run_flags(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--workers", flags.workers,
                    "Worker threads: a positive integer or 'auto' (default: $WARPBAND_WORKERS, else auto)");
    sub->add_flag("--json", flags.json, "Print a JSON run report instead of text");
}

std::size_t parse_workers(std::string text) {
    if (text.empty()) {
        const char* env = std::getenv("WARPBAND_WORKERS");
        text = env ? env : "auto";
    }
    if (text == "auto") return hardware_workers();
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || value == 0 || text.front() == '-') {
        throw UsageError("worker count must be a positive integer or 'auto', got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Time warp edit distance and LCS with linear-memory diagonal bands", "warpband"};
    app.require_subcommand(1);

    CommonFlags flags;

    std::string twed_a, twed_b;
    auto* twed = app.add_subcommand("twed", "Distance between two series CSV files");
    twed->add_option("file_a", twed_a, "First series CSV")->required();
    twed->add_option("file_b", twed_b, "Second series CSV")->required();
    add_param_flags(twed, flags);
    add_run_flags(twed, flags);

    BatchCommand batch_cmd;
    std::string batch_a, batch_b, batch_out;
    auto* batch = app.add_subcommand("batch", "All-pairs distance matrix between directories of series");
    batch->add_option("dir_a", batch_a, "Directory of series CSV files")->required();
    batch->add_option("dir_b", batch_b, "Second directory (omit with --self)");
    batch->add_flag("--self", batch_cmd.self, "Compare dir_a against itself");
    batch->add_flag("--symmetric", batch_cmd.symmetric, "Solve the upper triangle only and mirror (needs --self)");
    batch->add_option("--out", batch_out, "Output matrix CSV")->required();
    add_param_flags(batch, flags);
    add_run_flags(batch, flags);

    std::string lcs_a, lcs_b;
    auto* lcs = app.add_subcommand("lcs", "Longest common subsequence length of two text files (first line)");
    lcs->add_option("file_a", lcs_a, "First sequence file")->required();
    lcs->add_option("file_b", lcs_b, "Second sequence file")->required();
    lcs->add_flag("--json", flags.json, "Print a JSON run report instead of text");

    BenchOptions bench_opts;
    auto* bench_sub = app.add_subcommand("bench", "Time band against reference on seeded random pairs");
    bench_sub->add_option("--sizes", bench_opts.sizes, "Comma separated series lengths")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench_sub->add_option("--trials", bench_opts.trials, "Pairs per size; the best time is reported")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench_sub->add_option("--seed", bench_opts.seed, "Random seed")->capture_default_str();
    bench_sub->add_option("--cutoff", bench_opts.cutoff, "Skip the reference above this length")
        ->capture_default_str();
    add_param_flags(bench_sub, flags);
    add_run_flags(bench_sub, flags);

    std::uint64_t selftest_seed = 42;
    auto* selftest = app.add_subcommand("selftest", "Randomized parity check of every solver against its oracle");
    selftest->add_option("--seed", selftest_seed, "Random seed")->capture_default_str();
    add_run_flags(selftest, flags);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "warpband: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        RunReport report;
        if (twed->parsed()) {
            report = cmd_twed(twed_a, twed_b, flags.params, parse_workers(flags.workers));
        } else if (batch->parsed()) {
            batch_cmd.dir_a = batch_a;
            if (!batch_b.empty()) batch_cmd.dir_b = batch_b;
            batch_cmd.out = batch_out;
            batch_cmd.params = flags.params;
            batch_cmd.workers = parse_workers(flags.workers);
            report = cmd_batch(batch_cmd);
        } else if (lcs->parsed()) {
            report = cmd_lcs(lcs_a, lcs_b);
        } else if (bench_sub->parsed()) {
            bench_opts.params = flags.params;
            bench_opts.workers = parse_workers(flags.workers);
            report = cmd_bench(bench_opts);
        } else {
            report = cmd_selftest(selftest_seed, parse_workers(flags.workers));
        }

        if (flags.json) {
            out << to_json(report).dump(2) << "\n";
        } else {
            out << render_text(report);
        }
        if (const auto* st = std::get_if<SelfTestResult>(&report.result); st && !st->passed()) {
            return kInternalError;
        }
        return kSuccess;
    } catch (const InvalidInput& e) {
        err << "warpband: error: " << e.what() << "\n";
        return kUsageError;
    } catch (const IoError& e) {
        err << "warpband: error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "warpband: internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace warpband::cli
