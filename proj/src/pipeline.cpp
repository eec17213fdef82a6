#include "am4rre/pipeline.hpp"

#include "am4rre/parser.hpp"
#include "am4rre/resolver.hpp"
#include "am4rre/validator.hpp"

#include <algorithm>

namespace am4rre {

bool AnalysisResult::ok() const {
    return !has_errors(diagnostics);
}

namespace {

void append(std::vector<Diagnostic>& into, std::vector<Diagnostic> from) {
    into.insert(into.end(), std::make_move_iterator(from.begin()),
                std::make_move_iterator(from.end()));
}

bool wants_applicability(AnalysisStage stage) {
    return stage == AnalysisStage::Applicability || stage == AnalysisStage::Full;
}

bool wants_trace(AnalysisStage stage) {
    return stage == AnalysisStage::Trace || stage == AnalysisStage::Full;
}

} // namespace

AnalysisResult analyze_model(ArtifactModel parsed, const AnalyzeOptions& opts) {
    AnalysisResult result;
    result.parse_ok = true;
    result.model = std::move(parsed);

    if (opts.stage == AnalysisStage::Parse) {
        if (opts.strict)
            for (Diagnostic& d : result.diagnostics)
                if (d.severity == Severity::Warning)
                    d.severity = Severity::Error;
        return result;
    }

    ResolveResult resolved = resolve(std::move(result.model));
    result.model = std::move(resolved.model);
    append(result.diagnostics, std::move(resolved.diagnostics));
    result.resolve_ok = result.model.resolution_complete;

    std::vector<Diagnostic> validator_diags;
    if (result.resolve_ok) {
        validator_diags = check(result.model);
        bool validator_clean = !has_errors(validator_diags);

        if (validator_clean && wants_applicability(opts.stage)) {
            result.applicability = compute_applicability(result.model);
            // Applicability verdicts enable the inapplicable-source warnings.
            validator_diags = check(result.model, &*result.applicability);
        }
        append(result.diagnostics, std::vector<Diagnostic>(validator_diags));
        if (result.applicability)
            append(result.diagnostics,
                   std::vector<Diagnostic>(result.applicability->diagnostics));

        if (wants_trace(opts.stage)) {
            bool triad_clean = std::none_of(
                validator_diags.begin(), validator_diags.end(), [](const Diagnostic& d) {
                    return d.code == "E-VAL-002" && d.severity == Severity::Error;
                });
            result.trace = coverage(result.model, opts.derive_delegations && triad_clean);
            append(result.diagnostics, std::vector<Diagnostic>(result.trace->diagnostics));
        }

        if (opts.stage == AnalysisStage::Full) {
            result.milestones = milestone_status(
                result.model,
                result.applicability ? &*result.applicability : nullptr,
                result.trace ? &*result.trace : nullptr, validator_diags);
        }
    }

    if (opts.strict)
        for (Diagnostic& d : result.diagnostics)
            if (d.severity == Severity::Warning)
                d.severity = Severity::Error;
    return result;
}

AnalysisResult analyze(std::string_view text, std::string source_name,
                       const AnalyzeOptions& opts) {
    ParseResult parsed = parse(text, std::move(source_name));
    if (parsed.partial || opts.stage == AnalysisStage::Parse) {
        // A partial model must not feed the later stages.
        AnalysisResult result;
        result.model = std::move(parsed.model);
        result.diagnostics = std::move(parsed.diagnostics);
        result.parse_ok = !parsed.partial;
        if (opts.strict)
            for (Diagnostic& d : result.diagnostics)
                if (d.severity == Severity::Warning)
                    d.severity = Severity::Error;
        return result;
    }
    AnalysisResult result = analyze_model(std::move(parsed.model), opts);
    // Parse warnings (none today, but keep the contract) precede the rest.
    result.diagnostics.insert(result.diagnostics.begin(),
                              std::make_move_iterator(parsed.diagnostics.begin()),
                              std::make_move_iterator(parsed.diagnostics.end()));
    return result;
}

} // namespace am4rre
