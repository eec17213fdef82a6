#pragma once

#include "am4rre/metamodel.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace am4rre {

struct ParseResult {
    ArtifactModel model;
    std::vector<Diagnostic> diagnostics;
    // True when any error was produced; a partial model must not be fed to
    // applicability or milestone computation.
    bool partial = false;
};

// Parses `.amr` source text. Never throws on malformed input: errors are
// reported as diagnostics and parsing recovers at the next declaration.
ParseResult parse(std::string_view text, std::string source_name = "<input>");

} // namespace am4rre
