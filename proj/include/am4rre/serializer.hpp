#pragma once

#include "am4rre/metamodel.hpp"

#include <string>

namespace am4rre {

// Canonical textual form. Reparsing the output yields a model equal to the
// input modulo spans. Derived relationships are never serialized.
std::string serialize(const ArtifactModel& model);

} // namespace am4rre
