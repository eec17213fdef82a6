#include "am4rre/diagnostics.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace am4rre {

const char* severity_name(Severity s) {
    switch (s) {
    case Severity::Error: return "error";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
    }
    return "error";
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return count_errors(diagnostics) > 0;
}

std::size_t count_errors(const std::vector<Diagnostic>& diagnostics) {
    std::size_t n = 0;
    for (const Diagnostic& d : diagnostics)
        if (d.severity == Severity::Error)
            ++n;
    return n;
}

namespace {

const char* severity_color(Severity s) {
    switch (s) {
    case Severity::Error: return "\x1b[31m";   // red
    case Severity::Warning: return "\x1b[33m"; // yellow
    case Severity::Info: return "\x1b[36m";    // cyan
    }
    return "";
}

std::tuple<const std::string&, int, int, int, int> span_key(const SourceSpan& s) {
    return {s.file, s.start_line, s.start_col, s.end_line, s.end_col};
}

} // namespace

std::string render_diagnostic(const Diagnostic& d, bool color) {
    std::ostringstream out;
    out << d.span.file << ':' << d.span.start_line << ':' << d.span.start_col << ": ";
    if (color)
        out << severity_color(d.severity) << severity_name(d.severity) << "\x1b[0m";
    else
        out << severity_name(d.severity);
    out << '[' << d.code << "]: " << d.message;
    return out.str();
}

void canonicalize(std::vector<Diagnostic>& diagnostics) {
    std::stable_sort(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& a, const Diagnostic& b) {
                         if (a.code != b.code)
                             return a.code < b.code;
                         if (span_key(a.span) != span_key(b.span))
                             return span_key(a.span) < span_key(b.span);
                         return a.message < b.message;
                     });
}

} // namespace am4rre
