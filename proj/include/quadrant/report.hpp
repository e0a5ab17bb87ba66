#pragma once

#include "quadrant/invariants.hpp"
#include "quadrant/oracle.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quadrant {

enum class ReportFormat { human, json, csv };

ReportFormat parse_format(std::string_view text);

inline constexpr int kSchemaVersion = 1;

/// {"exact": "p/q", "float": p/q}
nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const InvariantReport& report);
InvariantReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OracleReport& report);
OracleReport oracle_report_from_json(const nlohmann::json& j);

std::string csv_header();
std::string csv_row(const InvariantReport& report);

/// `route` adds the matrix-model column to the human table.
std::string emit_report(const InvariantReport& report, ReportFormat format,
                        const std::optional<MatrixRoute>& route = std::nullopt);

std::string emit_oracle_reports(const std::vector<OracleReport>& reports, ReportFormat format);

}  // namespace quadrant
