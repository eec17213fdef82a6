#include "am4rre/report.hpp"

#include <chrono>
#include <ctime>

namespace am4rre {

using nlohmann::json;

json span_json(const SourceSpan& span) {
    return json{{"file", span.file},
                {"start_line", span.start_line},
                {"start_col", span.start_col},
                {"end_line", span.end_line},
                {"end_col", span.end_col}};
}

json diagnostics_json(const std::vector<Diagnostic>& diagnostics) {
    json arr = json::array();
    for (const Diagnostic& d : diagnostics) {
        json related = json::array();
        for (const SourceSpan& s : d.related_spans)
            related.push_back(span_json(s));
        arr.push_back(json{{"severity", severity_name(d.severity)},
                           {"code", d.code},
                           {"message", d.message},
                           {"span", span_json(d.span)},
                           {"related_spans", related}});
    }
    return arr;
}

namespace {

json evidence_json(const std::vector<EvidenceItem>& evidence) {
    json arr = json::array();
    for (const EvidenceItem& e : evidence)
        arr.push_back(json{{"criterion", e.criterion_id},
                           {"tag", e.tag},
                           {"instance", e.context_id}});
    return arr;
}

} // namespace

json applicability_json(const ApplicabilityResult& result) {
    json acts = json::array();
    for (const ActApplicability& a : result.acts)
        acts.push_back(json{{"id", a.act_id},
                            {"applicable", a.applicable},
                            {"jurisdiction_evidence", evidence_json(a.jurisdiction_evidence)},
                            {"field_evidence", evidence_json(a.field_evidence)}});
    return json{{"acts", acts}, {"priority", result.priority}};
}

json trace_json(const TraceReport& trace) {
    json derived = json::array();
    for (const Relationship& rel : trace.derived_relationships)
        derived.push_back(json{{"kind", relationship_keyword(rel.kind)},
                               {"source", rel.source_id},
                               {"target", rel.target_id}});
    json suggestions = json::array();
    for (const MappingSuggestion& s : trace.mapping_suggestions)
        suggestions.push_back(json{{"subject", s.subject_id}, {"stakeholder", s.stakeholder_id}});
    return json{{"derived_relationships", derived},
                {"mapping_suggestions", suggestions},
                {"unmapped_subjects", trace.unmapped_subjects},
                {"demand_coverage", trace.demand_coverage},
                {"uncovered_demands", trace.uncovered_demands},
                {"delegation_closure_depth", trace.delegation_closure_depth}};
}

json milestones_json(const MilestoneStatus& status) {
    json out = json::object();
    for (MilestoneId m : kMilestones) {
        const MilestoneEntry& entry = status.for_milestone(m);
        json reasons = json::array();
        for (const BlockingReason& reason : entry.blocking_reasons) {
            json r{{"text", reason.text}};
            r["span"] = reason.span ? span_json(*reason.span) : json(nullptr);
            reasons.push_back(std::move(r));
        }
        out[std::string(milestone_name(m))] =
            json{{"state", milestone_state_name(entry.state)},
                 {"blocking_reasons", reasons}};
    }
    return out;
}

json file_report_json(const AnalysisResult& result) {
    json entry{{"source", result.model.source_name},
               {"diagnostics", diagnostics_json(result.diagnostics)}};
    entry["applicability"] =
        result.applicability ? applicability_json(*result.applicability) : json(nullptr);
    entry["trace"] = result.trace ? trace_json(*result.trace) : json(nullptr);
    entry["milestones"] =
        result.milestones ? milestones_json(*result.milestones) : json(nullptr);
    return entry;
}

json build_report(const std::vector<AnalysisResult>& results, const ReportOptions& opts) {
    json files = json::array();
    for (const AnalysisResult& r : results)
        files.push_back(file_report_json(r));
    json doc{{"schema", kReportSchema},
             {"tool_version", kToolVersion},
             {"files", files}};
    if (opts.include_timestamp) {
        std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        doc["generated_at"] = buf;
    }
    return doc;
}

} // namespace am4rre
