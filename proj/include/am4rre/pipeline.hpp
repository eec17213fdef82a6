#pragma once

#include "am4rre/applicability.hpp"
#include "am4rre/interpretation.hpp"
#include "am4rre/metamodel.hpp"
#include "am4rre/milestones.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace am4rre {

enum class AnalysisStage {
    Parse,         // fmt
    Check,         // parse + resolve + validate
    Applicability, // check + applicability (enables E-VAL-007 warnings)
    Trace,         // check + interpretation
    Full,          // everything incl. milestones
};

struct AnalyzeOptions {
    AnalysisStage stage = AnalysisStage::Full;
    bool derive_delegations = true;
    bool strict = false; // escalate warnings to errors
};

struct AnalysisResult {
    ArtifactModel model;
    std::vector<Diagnostic> diagnostics; // all stages, in stage order
    std::optional<ApplicabilityResult> applicability;
    std::optional<TraceReport> trace;
    std::optional<MilestoneStatus> milestones;
    bool parse_ok = false;
    bool resolve_ok = false;

    bool ok() const; // no error-severity diagnostics
};

// One pipeline for every entry point: parse -> resolve -> validate -> infer.
// Later stages run only on clean input: resolver needs a parse without
// errors, the validator a clean resolution, applicability a validator run
// without errors, delegation expansion a model without E-VAL-002.
AnalysisResult analyze(std::string_view text, std::string source_name,
                       const AnalyzeOptions& opts = {});

// Same pipeline, starting from an already-parsed (unresolved) model.
AnalysisResult analyze_model(ArtifactModel parsed, const AnalyzeOptions& opts = {});

} // namespace am4rre
