#pragma once

#include "am4rre/metamodel.hpp"

#include <vector>

namespace am4rre {

struct ResolveResult {
    ArtifactModel model;
    std::vector<Diagnostic> diagnostics;
};

// Binds every relationship endpoint and reference-valued property to an
// instance and enforces the per-kind endpoint class constraints.
// E-RES-001: unknown identifier. E-RES-002: constraint violation.
// model.resolution_complete is set when no errors were found. Idempotent.
ResolveResult resolve(ArtifactModel model);

} // namespace am4rre
