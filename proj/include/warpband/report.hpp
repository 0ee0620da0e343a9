#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "warpband/engine.hpp"
#include "warpband/time_series.hpp"

namespace warpband {

struct DistanceResult {
    double distance = 0.0;
};

struct MatrixResult {
    std::string path;
    std::size_t rows = 0;
    std::size_t cols = 0;
    bool symmetric = false;
    std::size_t solver_invocations = 0;
};

struct LcsResult {
    std::size_t length = 0;
};

struct BenchResult {
    std::vector<BenchRecord> records;
};

struct SelfTestCheck {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
};

struct SelfTestResult {
    std::vector<SelfTestCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (c.failures != 0) return false;
        return true;
    }
};

using ReportPayload = std::variant<DistanceResult, MatrixResult, LcsResult, BenchResult, SelfTestResult>;

/// Outcome of one CLI command. Serialized with to_json(); the document layout
/// is described in docs/run_report.schema.json.
struct RunReport {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<TwedParams> params;
    std::size_t workers = 1;
    ReportPayload result;
    double elapsed_ms = 0.0;
};

inline constexpr const char* kReportVersion = "1.0.0";

nlohmann::json to_json(const RunReport& report);

/// Human-readable rendering, as printed without --json.
std::string render_text(const RunReport& report);

/// Aligned table with columns N, band, reference, speedup.
std::string bench_table(const std::vector<BenchRecord>& records);

}  // namespace warpband
