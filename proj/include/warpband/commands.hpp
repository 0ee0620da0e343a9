#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "warpband/engine.hpp"
#include "warpband/report.hpp"

namespace warpband::cli {

/// Process exit codes; stable for scripting.
enum ExitCode : int { kSuccess = 0, kInternalError = 1, kUsageError = 2 };

RunReport cmd_twed(const std::filesystem::path& file_a, const std::filesystem::path& file_b,
                   const TwedParams& params, std::size_t workers);

struct BatchCommand {
    std::filesystem::path dir_a;
    std::optional<std::filesystem::path> dir_b;
    bool self = false;
    bool symmetric = false;
    std::filesystem::path out;
    TwedParams params;
    std::size_t workers = 1;
};

RunReport cmd_batch(const BatchCommand& command);

/// First line of each file is the sequence; an empty file is the empty sequence.
RunReport cmd_lcs(const std::filesystem::path& file_a, const std::filesystem::path& file_b);

RunReport cmd_bench(const BenchOptions& options);

/// Quick randomized parity sweep of every fast path against its oracle.
RunReport cmd_selftest(std::uint64_t seed, std::size_t workers);

/// Full command line (without the program name). Writes results to `out`,
/// diagnostics to `err`, and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace warpband::cli
