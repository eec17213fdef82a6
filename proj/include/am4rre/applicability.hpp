#pragma once

#include "am4rre/metamodel.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace am4rre {

// One matched (criterion instance, tag, context instance) triple.
struct EvidenceItem {
    std::string criterion_id; // jurisdiction or field-of-law id
    std::string tag;
    std::string context_id; // stakeholder, domain model, or intent instance

    friend auto operator<=>(const EvidenceItem&, const EvidenceItem&) = default;
};

struct ActApplicability {
    std::string act_id;
    bool applicable = false;
    std::vector<EvidenceItem> jurisdiction_evidence;
    std::vector<EvidenceItem> field_evidence;
};

struct ApplicabilityResult {
    std::vector<ActApplicability> acts; // declaration order
    std::vector<std::string> priority;  // applicable acts, highest force first
    std::vector<Diagnostic> diagnostics;

    const ActApplicability* for_act(std::string_view act_id) const;
    bool is_applicable(std::string_view act_id) const;
};

// An act applies when at least one linked jurisdiction's criteria share a tag
// with the project's locations (stakeholders, domain models) AND at least one
// linked field of law's criteria share a tag with the declared intents.
// Acts without an applies_within link get E-APP-001 (warning); without a
// belongs_to_field link, E-APP-002 (warning). Either way they are marked not
// applicable rather than assumed to apply everywhere.
ApplicabilityResult compute_applicability(const ArtifactModel& model);

// Applicable acts ordered by force_rank ascending; within a rank, acts that
// support another applicable act (ensures_consistent_application_of) come
// right after it as far as rank grouping allows; remaining ties keep
// declaration order.
std::vector<std::string> priority_order(const ApplicabilityResult& result,
                                        const ArtifactModel& model);

} // namespace am4rre
