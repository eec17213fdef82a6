#pragma once

#include "am4rre/applicability.hpp"
#include "am4rre/interpretation.hpp"
#include "am4rre/metamodel.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace am4rre {

enum class MilestoneState { NotStarted, ContentComplete, Accepted };

std::string_view milestone_state_name(MilestoneState s);

struct BlockingReason {
    std::string text;
    std::optional<SourceSpan> span;
};

struct MilestoneEntry {
    MilestoneState state = MilestoneState::NotStarted;
    std::vector<BlockingReason> blocking_reasons;
};

struct MilestoneStatus {
    std::array<MilestoneEntry, 4> entries; // indexed by MilestoneId

    MilestoneEntry& for_milestone(MilestoneId m);
    const MilestoneEntry& for_milestone(MilestoneId m) const;
};

// Milestone semantics:
//   M1 content: a project scope with a non-empty description.
//   M2 content: every act linked to >=1 jurisdiction and >=1 field of law, no
//      validator errors in the regulatory-context layer, applicability
//      computed without E-APP-001.
//   M3 content: every applicable act contains >=1 demands-layer instance,
//      no delegation/person-type errors (E-VAL-002/003), every legal subject
//      mapped to a stakeholder or flagged `unmapped: true`.
//   M4 content: full demand coverage and zero validator errors model-wide.
// Acceptance needs the milestone's sign-offs (M1: requirements engineer,
// M2: legal AND domain expert, M3: legal expert, M4: requirements engineer)
// and the predecessor to be Accepted. A milestone can only be
// ContentComplete when its predecessor is at least ContentComplete.
//
// Pass nullptr for applicability/trace when those analyses were not run
// (e.g. blocked by validator errors); affected milestones report that.
MilestoneStatus milestone_status(const ArtifactModel& model,
                                 const ApplicabilityResult* applicability,
                                 const TraceReport* trace,
                                 const std::vector<Diagnostic>& validator_diagnostics);

} // namespace am4rre
