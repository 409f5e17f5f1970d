#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace crepant::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "crepant-kit-report/1";

using Json = nlohmann::ordered_json;

/// Full per-instance verification report for the scalar Z/d action on C^n:
/// Gorenstein test, discrepancy, canonical bundle, descent data, tilting
/// shadows, SOD structure and the pushforward-vanishing sweep. The output
/// is deterministic (stable key order); elapsed_ms is a separate top-level
/// field outside the determinism contract.
Json analyze(int n, int d, int max_degree);

/// Covariant Hilbert series for every character of the given diagonal
/// action, the Molien-oracle agreement status, and the Gorenstein
/// certificate.
Json molien_report(int d, const std::vector<int>& weights, int max_degree);

/// 0 pass, 1 any failure (including hypothesis-violated). Usage errors are
/// the CLI front end's job (exit 2).
int exit_code_for(const Json& report);

/// Fixed-width PASS/FAIL/SKIP table, no color.
std::string render_text(const Json& report);

}  // namespace crepant::cli
