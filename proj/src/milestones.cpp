#include "am4rre/milestones.hpp"

#include <cstdio>
#include <string>

namespace am4rre {

std::string_view milestone_state_name(MilestoneState s) {
    switch (s) {
    case MilestoneState::NotStarted: return "NotStarted";
    case MilestoneState::ContentComplete: return "ContentComplete";
    case MilestoneState::Accepted: return "Accepted";
    }
    return "?";
}

MilestoneEntry& MilestoneStatus::for_milestone(MilestoneId m) {
    return entries[static_cast<std::size_t>(m)];
}

const MilestoneEntry& MilestoneStatus::for_milestone(MilestoneId m) const {
    return entries[static_cast<std::size_t>(m)];
}

namespace {

struct Computer {
    const ArtifactModel& model;
    const ApplicabilityResult* applicability;
    const TraceReport* trace;
    const std::vector<Diagnostic>& validator_diags;

    void block(MilestoneEntry& entry, std::string text,
               std::optional<SourceSpan> span = std::nullopt) {
        entry.blocking_reasons.push_back({std::move(text), std::move(span)});
    }

    bool has_signoff(MilestoneId m, RoleId r) const {
        for (const SignOff& s : model.signoffs)
            if (s.milestone == m && s.role == r)
                return true;
        return false;
    }

    std::size_t validator_errors(std::optional<LayerId> layer) const {
        std::size_t n = 0;
        for (const Diagnostic& d : validator_diags)
            if (d.severity == Severity::Error && (!layer || d.layer == *layer))
                ++n;
        return n;
    }

    bool act_has_link(std::size_t act_index, RelationshipKind kind) const {
        for (const Relationship& rel : model.relationships)
            if (!rel.derived && rel.kind == kind && rel.source_index &&
                *rel.source_index == act_index)
                return true;
        return false;
    }

    bool m1_content(MilestoneEntry& entry) {
        for (const ConceptInstance& inst : model.instances) {
            if (inst.cls != ConceptClass::ProjectScope)
                continue;
            const std::string* description = inst.text_property("description");
            if (description && !description->empty())
                return true;
        }
        block(entry, "no project scope with a non-empty description");
        return false;
    }

    bool m2_content(MilestoneEntry& entry) {
        bool ok = true;
        for (std::size_t i = 0; i < model.instances.size(); ++i) {
            const ConceptInstance& act = model.instances[i];
            if (act.cls != ConceptClass::RegulatoryAct)
                continue;
            if (!act_has_link(i, RelationshipKind::AppliesWithin)) {
                block(entry, "act '" + act.id + "' has no applies_within link", act.span);
                ok = false;
            }
            if (!act_has_link(i, RelationshipKind::BelongsToField)) {
                block(entry, "act '" + act.id + "' has no belongs_to_field link", act.span);
                ok = false;
            }
        }
        if (std::size_t n = validator_errors(LayerId::RegulatoryContext)) {
            block(entry, std::to_string(n) + " validator error(s) in the regulatory-context layer");
            ok = false;
        }
        if (!applicability) {
            block(entry, "applicability has not been computed");
            ok = false;
        } else {
            for (const Diagnostic& d : applicability->diagnostics)
                if (d.code == "E-APP-001") {
                    block(entry, "applicability incomplete: " + d.message, d.span);
                    ok = false;
                }
        }
        return ok;
    }

    bool m3_content(MilestoneEntry& entry) {
        bool ok = true;
        if (!applicability) {
            block(entry, "applicability has not been computed");
            ok = false;
        } else {
            for (std::size_t i = 0; i < model.instances.size(); ++i) {
                const ConceptInstance& act = model.instances[i];
                if (act.cls != ConceptClass::RegulatoryAct ||
                    !applicability->is_applicable(act.id))
                    continue;
                bool has_demand_content = false;
                for (const Relationship& rel : model.relationships) {
                    if (rel.derived || rel.kind != RelationshipKind::Contains ||
                        !rel.source_index || *rel.source_index != i || !rel.target_index)
                        continue;
                    if (layer_of(model.instances[*rel.target_index].cls) ==
                        LayerId::RegulatoryDemands)
                        has_demand_content = true;
                }
                if (!has_demand_content) {
                    block(entry,
                          "applicable act '" + act.id +
                              "' contains no demands-layer instance",
                          act.span);
                    ok = false;
                }
            }
        }
        std::size_t triad_errors = 0;
        for (const Diagnostic& d : validator_diags)
            if (d.severity == Severity::Error &&
                (d.code == "E-VAL-002" || d.code == "E-VAL-003"))
                ++triad_errors;
        if (triad_errors) {
            block(entry, std::to_string(triad_errors) +
                             " delegation/person-type error(s) (E-VAL-002/E-VAL-003)");
            ok = false;
        }
        for (std::size_t i = 0; i < model.instances.size(); ++i) {
            const ConceptInstance& subject = model.instances[i];
            if (subject.cls != ConceptClass::LegalSubject)
                continue;
            bool mapped = false;
            for (const Relationship& rel : model.relationships)
                if (!rel.derived && rel.kind == RelationshipKind::MapsTo && rel.source_index &&
                    *rel.source_index == i)
                    mapped = true;
            if (!mapped && !subject.flagged_unmapped()) {
                block(entry,
                      "legal subject '" + subject.id +
                          "' is neither mapped to a stakeholder nor marked 'unmapped: true'",
                      subject.span);
                ok = false;
            }
        }
        return ok;
    }

    bool m4_content(MilestoneEntry& entry) {
        bool ok = true;
        if (!trace) {
            block(entry, "traceability has not been computed");
            ok = false;
        } else if (trace->demand_coverage < 1.0) {
            std::size_t uncovered = trace->uncovered_demands.size();
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "demand coverage is %.1f%% (%zu demand(s) uncovered)",
                          trace->demand_coverage * 100.0, uncovered);
            block(entry, buf);
            ok = false;
        }
        if (std::size_t n = validator_errors(std::nullopt)) {
            block(entry, std::to_string(n) + " validator error(s) model-wide");
            ok = false;
        }
        return ok;
    }

    bool signoffs_ok(MilestoneId m, MilestoneEntry& entry) {
        bool ok = true;
        for (RoleId r : accepting_roles(m)) {
            if (!has_signoff(m, r)) {
                block(entry, "missing sign-off: " + std::string(milestone_name(m)) + " by " +
                                 std::string(role_keyword(r)));
                ok = false;
            }
        }
        return ok;
    }
};

} // namespace

MilestoneStatus milestone_status(const ArtifactModel& model,
                                 const ApplicabilityResult* applicability,
                                 const TraceReport* trace,
                                 const std::vector<Diagnostic>& validator_diagnostics) {
    Computer computer{model, applicability, trace, validator_diagnostics};
    MilestoneStatus status;

    MilestoneState previous = MilestoneState::Accepted; // virtual predecessor of M1
    std::optional<MilestoneId> previous_id;
    for (MilestoneId m : kMilestones) {
        MilestoneEntry& entry = status.for_milestone(m);

        bool content = false;
        switch (m) {
        case MilestoneId::M1: content = computer.m1_content(entry); break;
        case MilestoneId::M2: content = computer.m2_content(entry); break;
        case MilestoneId::M3: content = computer.m3_content(entry); break;
        case MilestoneId::M4: content = computer.m4_content(entry); break;
        }

        // A milestone only counts as content-complete once its predecessor
        // is; it is only accepted with its sign-offs after the predecessor
        // is accepted.
        bool predecessor_complete = previous >= MilestoneState::ContentComplete;
        if (content && !predecessor_complete && previous_id)
            computer.block(entry, std::string(milestone_name(*previous_id)) +
                                      " is not content-complete");

        if (content && predecessor_complete) {
            bool signed_off = computer.signoffs_ok(m, entry);
            if (signed_off && previous == MilestoneState::Accepted) {
                entry.state = MilestoneState::Accepted;
            } else {
                entry.state = MilestoneState::ContentComplete;
                if (signed_off && previous != MilestoneState::Accepted && previous_id)
                    computer.block(entry, std::string(milestone_name(*previous_id)) +
                                              " not accepted");
            }
        } else {
            entry.state = MilestoneState::NotStarted;
        }

        previous = entry.state;
        previous_id = m;
    }
    return status;
}

} // namespace am4rre
