#pragma once

// Subcommand implementations. Each writes its result to `out`, diagnostics to
// `err`, and returns the process exit code.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "report.hpp"

namespace tkhf::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failure = 1;
inline constexpr int exit_usage = 2;

struct ComputeOptions {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::string format = "json";  // json | text
    std::optional<std::int64_t> max_product;
};

struct TableOptions {
    std::int64_t p_max = 0;
    std::int64_t q_max = 0;
    std::vector<std::string> columns;  // empty selects the defaults
    std::string format = "csv";        // csv | json
    std::optional<std::int64_t> max_product;
};

struct VerifyOptions {
    std::int64_t p_max = 0;
    std::int64_t q_max = 0;
    std::vector<std::string> suites;  // empty selects all
    std::string format = "text";      // text | json
    std::optional<std::int64_t> max_product;
};

struct DiagramOptions {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::string which = "both";  // plus | minus | both
    std::string format = "csv";  // csv | dot
    std::optional<std::int64_t> max_product;
};

int run_compute(const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err);
int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int run_diagram(const DiagramOptions& opts, std::ostream& out, std::ostream& err);

/// Writes a report in the given format and returns exit_verification_failure
/// if cross_check finds any disagreement.
int emit_report(const InvariantReport& report, const std::string& format, std::ostream& out, std::ostream& err);

std::vector<std::string> table_columns();
std::vector<std::string> default_table_columns();
std::vector<std::string> verify_suites();

/// RFC 4180 field quoting.
std::string csv_field(const std::string& value);

inline constexpr std::int64_t default_compute_max_product = 1'000'000;
inline constexpr std::int64_t default_table_max_product = 10'000;
inline constexpr std::int64_t default_verify_max_product = 1'600;
/// Default for verify runs that include the tau-oracle suite, whose cost grows
/// like (pq)^3 per pair.
inline constexpr std::int64_t default_tau_oracle_max_product = 144;

}  // namespace tkhf::cli
