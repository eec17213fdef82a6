#pragma once

#include "am4rre/pipeline.hpp"

#include <json.hpp>

#include <vector>

namespace am4rre {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kReportSchema = "am4rre-report/1";

struct ReportOptions {
    bool include_timestamp = false;
};

nlohmann::json span_json(const SourceSpan& span);
nlohmann::json diagnostics_json(const std::vector<Diagnostic>& diagnostics);
nlohmann::json applicability_json(const ApplicabilityResult& result);
nlohmann::json trace_json(const TraceReport& trace);
nlohmann::json milestones_json(const MilestoneStatus& status);

// Per-file entry: source, diagnostics, applicability/trace/milestones or null.
nlohmann::json file_report_json(const AnalysisResult& result);

// The aggregate report document ("am4rre-report/1"). Key order is canonical
// (alphabetical) and the output carries no timestamps unless requested, so
// identical inputs produce byte-identical documents.
nlohmann::json build_report(const std::vector<AnalysisResult>& results,
                            const ReportOptions& opts = {});

} // namespace am4rre
