#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace am4rre {

enum class LayerId : unsigned char;

enum class Severity { Error, Warning, Info };

const char* severity_name(Severity s);

// 1-based, inclusive source range.
struct SourceSpan {
    std::string file;
    int start_line = 1;
    int start_col = 1;
    int end_line = 1;
    int end_col = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourceSpan span;
    std::vector<SourceSpan> related_spans;
    // Layer the finding is attributed to, when the rule is layer-specific.
    std::optional<LayerId> layer;
};

bool has_errors(const std::vector<Diagnostic>& diagnostics);
std::size_t count_errors(const std::vector<Diagnostic>& diagnostics);

// file:line:col: severity[code]: message
std::string render_diagnostic(const Diagnostic& d, bool color = false);

// Canonical (code, span, message) order.
void canonicalize(std::vector<Diagnostic>& diagnostics);

} // namespace am4rre
