#pragma once

#include "am4rre/metamodel.hpp"

#include <string>
#include <vector>

namespace am4rre {

struct DelegationExpansion {
    std::vector<Relationship> derived; // owes_duty_to, derived = true
    std::vector<Diagnostic> diagnostics;
    int closure_depth = 0; // longest delegation chain a duty was pushed along
    std::vector<std::string> cycle_members;
};

// Propagates duties along delegation chains: whenever D owes a duty to O and
// D delegates (transitively) to E, E owes the same duty to O unless that link
// is already declared. Subjects on a delegates_to cycle are reported with
// E-INT-001 and excluded from derivation entirely.
DelegationExpansion expand_delegations(const ArtifactModel& model);

struct MappingSuggestion {
    std::string subject_id;
    std::string stakeholder_id;

    friend bool operator==(const MappingSuggestion&, const MappingSuggestion&) = default;
};

// For every legal subject without a declared maps_to link: all stakeholders
// whose person type satisfies the subject's person constraint.
std::vector<MappingSuggestion> suggest_mappings(const ArtifactModel& model);

struct TraceReport {
    std::vector<Relationship> derived_relationships;
    std::vector<MappingSuggestion> mapping_suggestions;
    std::vector<std::string> unmapped_subjects;
    double demand_coverage = 1.0; // covered / total, 1.0 when no demands
    std::vector<std::string> uncovered_demands;
    int delegation_closure_depth = 0;
    std::vector<Diagnostic> diagnostics;
};

// Full legal-to-requirements trace: delegation consequences, mapping
// suggestions, and demand coverage (a demand is covered when at least one
// requirement is derived_from it).
TraceReport coverage(const ArtifactModel& model, bool derive_delegations = true);

} // namespace am4rre
