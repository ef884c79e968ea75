#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "vperiod/report_io.hpp"

namespace vperiod {

// Exit codes: 0 success, 2 usage/parse error, 3 feasibility (caps),
// 4 internal invariant violation.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitFeasibility = 3,
    kExitInternal = 4,
};

struct CliOptions {
    std::string output = "json";  // "json" or "csv"
    unsigned threads = 1;
    std::optional<std::uint64_t> seed;  // reserved for test generation
    bool unsafe_caps = false;
};

struct CliResult {
    int exit_code = kExitOk;
    Json report;         // full RunReport (set on success)
    std::string message; // human-readable, set on failure
};

CliResult cmd_bound(std::uint64_t m, std::uint64_t n, const CliOptions& opts);
CliResult cmd_lrs(const std::string& input_path, std::optional<std::uint64_t> kmax,
                  std::optional<std::uint64_t> ell, const CliOptions& opts);
CliResult cmd_expsum(std::uint64_t p, unsigned f, const std::string& poly, unsigned c,
                     std::optional<std::uint64_t> kmax, const CliOptions& opts);
CliResult cmd_gauss(std::uint64_t p, unsigned f, std::uint64_t d, std::uint64_t a,
                    std::uint64_t kmax, const CliOptions& opts);
CliResult cmd_kloosterman(std::uint64_t p, unsigned f, unsigned n, std::uint64_t a,
                          std::uint64_t kmax, const CliOptions& opts);

// Render per opts.output: JSON dump or flattened CSV of the report.
std::string render_report(const Json& report, const CliOptions& opts);

// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace vperiod
