#include "warpband/report.hpp"

#include <iomanip>
#include <sstream>

#include "warpband/io.hpp"

namespace warpband {

namespace {

using nlohmann::json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

json bench_json(const BenchRecord& r) {
    return {{"size", r.size},
            {"band_seconds", r.band_seconds},
            {"reference_seconds", optional_number(r.reference_seconds)},
            {"speedup", optional_number(r.speedup)},
            {"parity", r.parity},
            {"workers", r.workers}};
}

std::string seconds_cell(const std::optional<double>& s) {
    if (!s) return "-";
    std::ostringstream out;
    out << std::setprecision(4) << std::defaultfloat << *s << "s";
    return out.str();
}

}  // namespace

json to_json(const RunReport& report) {
    json doc;
    doc["version"] = kReportVersion;
    doc["command"] = report.command;
    doc["inputs"] = report.inputs;
    if (report.params) {
        doc["params"] = {{"nu", report.params->nu},
                         {"lambda", report.params->lambda},
                         {"degree", report.params->degree}};
    } else {
        doc["params"] = nullptr;
    }
    doc["workers"] = report.workers;
    doc["elapsed_ms"] = report.elapsed_ms;
    doc["result"] = std::visit(
        overloaded{
            [](const DistanceResult& r) { return json{{"kind", "distance"}, {"distance", r.distance}}; },
            [](const MatrixResult& r) {
                return json{{"kind", "matrix"},           {"path", r.path},
                            {"rows", r.rows},             {"cols", r.cols},
                            {"symmetric", r.symmetric},   {"solver_invocations", r.solver_invocations}};
            },
            [](const LcsResult& r) { return json{{"kind", "lcs"}, {"length", r.length}}; },
            [](const BenchResult& r) {
                json rows = json::array();
                for (const auto& rec : r.records) rows.push_back(bench_json(rec));
                return json{{"kind", "bench"}, {"records", rows}};
            },
            [](const SelfTestResult& r) {
                json checks = json::array();
                for (const auto& c : r.checks) {
                    checks.push_back({{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}});
                }
                return json{{"kind", "selftest"}, {"passed", r.passed()}, {"checks", checks}};
            },
        },
        report.result);
    return doc;
}

std::string bench_table(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << std::right << std::setw(10) << "N" << std::setw(14) << "band" << std::setw(14) << "reference"
        << std::setw(10) << "speedup" << std::setw(8) << "parity" << '\n';
    for (const auto& r : records) {
        std::string speedup = "-";
        if (r.speedup) {
            std::ostringstream s;
            s << std::fixed << std::setprecision(1) << *r.speedup << "x";
            speedup = s.str();
        }
        out << std::setw(10) << r.size << std::setw(14) << seconds_cell(r.band_seconds) << std::setw(14)
            << seconds_cell(r.reference_seconds) << std::setw(10) << speedup << std::setw(8)
            << (r.parity ? "ok" : "FAIL") << '\n';
    }
    return out.str();
}

std::string render_text(const RunReport& report) {
    return std::visit(
        overloaded{
            [](const DistanceResult& r) { return io::format_double(r.distance) + "\n"; },
            [](const MatrixResult& r) {
                return "wrote " + std::to_string(r.rows) + "x" + std::to_string(r.cols) + " matrix to " + r.path +
                       " (" + std::to_string(r.solver_invocations) + " solves)\n";
            },
            [](const LcsResult& r) { return std::to_string(r.length) + "\n"; },
            [](const BenchResult& r) { return bench_table(r.records); },
            [](const SelfTestResult& r) {
                std::string out;
                for (const auto& c : r.checks) {
                    out += (c.failures == 0 ? "[PASS] " : "[FAIL] ") + c.name + " (" + std::to_string(c.cases) +
                           " cases, " + std::to_string(c.failures) + " failures)\n";
                }
                return out;
            },
        },
        report.result);
}

}  // namespace warpband
