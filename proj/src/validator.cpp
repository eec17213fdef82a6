#include "am4rre/validator.hpp"

#include "am4rre/applicability.hpp"

#include <map>
#include <string>

namespace am4rre {
namespace {

struct Checker {
    const ArtifactModel& model;
    const ApplicabilityResult* applicability;
    std::vector<Diagnostic> diags;

    void emit(Severity severity, const char* code, std::string message, const SourceSpan& span,
              std::optional<LayerId> layer, std::vector<SourceSpan> related = {}) {
        diags.push_back({severity, code, std::move(message), span, std::move(related), layer});
    }

    const ConceptInstance* bound(const std::optional<std::size_t>& index) const {
        return index ? &model.instances[*index] : nullptr;
    }

    // V1: every instance sits on the layer its class prescribes. The layer is
    // derived from the class, so this cannot fire for parser-built models;
    // kept as a guard against hand-assembled ones.
    void check_layers() {
        for (const ConceptInstance& inst : model.instances) {
            bool known = false;
            for (ConceptClass c : kConceptClasses)
                known |= c == inst.cls;
            if (!known)
                emit(Severity::Error, "E-VAL-001",
                     "instance '" + inst.id + "' has no known class/layer assignment", inst.span,
                     std::nullopt);
        }
    }

    // E-VAL-008: required properties must be present.
    void check_required_properties() {
        for (const ConceptInstance& inst : model.instances) {
            for (const PropertySpec& spec : properties_of(inst.cls)) {
                if (spec.required && !inst.property(spec.name))
                    emit(Severity::Error, "E-VAL-008",
                         std::string(class_keyword(inst.cls)) + " '" + inst.id +
                             "' is missing required property '" + std::string(spec.name) + "'",
                         inst.span, layer_of(inst.cls));
            }
        }
    }

    // V2: delegation triad. Delegators need a delegates_to link to a
    // delegatee and an owes_duty_to link to an obligee; the endpoints of
    // those relationship kinds must carry matching delegatory roles.
    // Delegatees may appear as sources too (delegation chains).
    void check_delegation() {
        for (const Relationship& rel : model.relationships) {
            if (rel.kind != RelationshipKind::DelegatesTo &&
                rel.kind != RelationshipKind::OwesDutyTo)
                continue;
            const ConceptInstance* source = bound(rel.source_index);
            const ConceptInstance* target = bound(rel.target_index);
            if (!source || !target || source->cls != ConceptClass::LegalSubject ||
                target->cls != ConceptClass::LegalSubject)
                continue; // resolver territory
            auto source_role = source->delegatory_role();
            auto target_role = target->delegatory_role();
            if (source_role && *source_role != DelegatoryRole::Delegator &&
                *source_role != DelegatoryRole::Delegatee)
                emit(Severity::Error, "E-VAL-002",
                     std::string(relationship_keyword(rel.kind)) + " source '" + source->id +
                         "' must have delegatory_role delegator (or delegatee in a chain), got " +
                         std::string(delegatory_role_keyword(*source_role)),
                     rel.span, LayerId::RegulatoryDemands, {source->span});
            if (rel.kind == RelationshipKind::DelegatesTo && target_role &&
                *target_role != DelegatoryRole::Delegatee)
                emit(Severity::Error, "E-VAL-002",
                     "delegates_to target '" + target->id +
                         "' must have delegatory_role delegatee, got " +
                         std::string(delegatory_role_keyword(*target_role)),
                     rel.span, LayerId::RegulatoryDemands, {target->span});
            if (rel.kind == RelationshipKind::OwesDutyTo && target_role &&
                *target_role != DelegatoryRole::Obligee)
                emit(Severity::Error, "E-VAL-002",
                     "owes_duty_to target '" + target->id +
                         "' must have delegatory_role obligee, got " +
                         std::string(delegatory_role_keyword(*target_role)),
                     rel.span, LayerId::RegulatoryDemands, {target->span});
        }

        for (std::size_t i = 0; i < model.instances.size(); ++i) {
            const ConceptInstance& subject = model.instances[i];
            if (subject.cls != ConceptClass::LegalSubject ||
                subject.delegatory_role() != DelegatoryRole::Delegator)
                continue;
            bool has_delegatee = false;
            bool has_obligee = false;
            for (const Relationship& rel : model.relationships) {
                if (!rel.source_index || *rel.source_index != i || !rel.target_index)
                    continue;
                const ConceptInstance& target = model.instances[*rel.target_index];
                if (rel.kind == RelationshipKind::DelegatesTo &&
                    target.delegatory_role() == DelegatoryRole::Delegatee)
                    has_delegatee = true;
                if (rel.kind == RelationshipKind::OwesDutyTo &&
                    target.delegatory_role() == DelegatoryRole::Obligee)
                    has_obligee = true;
            }
            if (!has_delegatee)
                emit(Severity::Error, "E-VAL-002",
                     "delegator '" + subject.id + "' has no delegates_to link to a delegatee",
                     subject.span, LayerId::RegulatoryDemands);
            if (!has_obligee)
                emit(Severity::Error, "E-VAL-002",
                     "delegator '" + subject.id + "' has no owes_duty_to link to an obligee",
                     subject.span, LayerId::RegulatoryDemands);
        }
    }

    // V3: a stakeholder can stand in for a legal subject only when its person
    // type satisfies the subject's person constraint.
    void check_person_types() {
        for (const Relationship& rel : model.relationships) {
            if (rel.kind != RelationshipKind::MapsTo)
                continue;
            const ConceptInstance* subject = bound(rel.source_index);
            const ConceptInstance* stakeholder = bound(rel.target_index);
            if (!subject || !stakeholder || subject->cls != ConceptClass::LegalSubject ||
                stakeholder->cls != ConceptClass::Stakeholder)
                continue;
            auto subject_person = subject->person();
            auto stakeholder_person = stakeholder->person();
            if (!subject_person || !stakeholder_person)
                continue; // missing property reported separately
            if (*subject_person != PersonType::Any && *subject_person != *stakeholder_person)
                emit(Severity::Error, "E-VAL-003",
                     "'" + subject->id + "' requires a " +
                         std::string(person_keyword(*subject_person)) +
                         " person, but stakeholder '" + stakeholder->id + "' is " +
                         std::string(person_keyword(*stakeholder_person)),
                     rel.span, LayerId::RegulatoryDemands,
                     {subject->span, stakeholder->span});
        }
    }

    // V4: ensures_consistent_application_of must point from the lower-force
    // act to the higher-force act it supports.
    void check_force_direction() {
        for (const Relationship& rel : model.relationships) {
            if (rel.kind != RelationshipKind::EnsuresConsistentApplicationOf)
                continue;
            const ConceptInstance* source = bound(rel.source_index);
            const ConceptInstance* target = bound(rel.target_index);
            if (!source || !target || source->cls != ConceptClass::RegulatoryAct ||
                target->cls != ConceptClass::RegulatoryAct)
                continue;
            auto source_kind = source->act_kind();
            auto target_kind = target->act_kind();
            if (!source_kind || !target_kind)
                continue;
            if (force_rank(*source_kind) <= force_rank(*target_kind))
                emit(Severity::Error, "E-VAL-004",
                     "'" + source->id + "' (" + std::string(act_kind_keyword(*source_kind)) +
                         ") cannot ensure consistent application of '" + target->id + "' (" +
                         std::string(act_kind_keyword(*target_kind)) +
                         "): the source must have lower force than the target",
                     rel.span, LayerId::RegulatoryContext, {source->span, target->span});
        }
    }

    // V5: only the roles entitled to accept a milestone may sign it off.
    // Warning: an ill-roled sign-off never blocks analysis, it just cannot
    // count towards acceptance.
    void check_signoff_roles() {
        for (const SignOff& s : model.signoffs) {
            bool allowed = false;
            for (RoleId r : accepting_roles(s.milestone))
                allowed |= r == s.role;
            if (!allowed) {
                std::string expected;
                for (RoleId r : accepting_roles(s.milestone)) {
                    if (!expected.empty())
                        expected += " and ";
                    expected += role_keyword(r);
                }
                emit(Severity::Warning, "E-VAL-005",
                     std::string(milestone_name(s.milestone)) + " is accepted by " + expected +
                         ", not by " + std::string(role_keyword(s.role)),
                     s.span, std::nullopt);
            }
        }
    }

    // V6: criteria of jurisdictions/fields referenced by an act must be
    // non-empty, otherwise applicability can never match them.
    void check_referenced_criteria() {
        std::map<std::size_t, std::vector<SourceSpan>> referenced;
        for (const Relationship& rel : model.relationships) {
            if (rel.kind != RelationshipKind::AppliesWithin &&
                rel.kind != RelationshipKind::BelongsToField)
                continue;
            if (!rel.target_index)
                continue;
            const ConceptInstance& target = model.instances[*rel.target_index];
            if (target.cls == ConceptClass::Jurisdiction || target.cls == ConceptClass::FieldOfLaw)
                referenced[*rel.target_index].push_back(rel.span);
        }
        for (const auto& [index, spans] : referenced) {
            const ConceptInstance& inst = model.instances[index];
            const TagSet* criteria = inst.tag_property("criteria");
            if (criteria && criteria->empty())
                emit(Severity::Error, "E-VAL-006",
                     std::string(class_keyword(inst.cls)) + " '" + inst.id +
                         "' is referenced by an act but has empty criteria",
                     inst.span, LayerId::RegulatoryContext, spans);
        }
    }

    // V7: a demand's source_act must name a regulatory act; when the
    // applicability verdicts are already known, demands sourced from an
    // inapplicable act are flagged (warning: applicability may legitimately
    // change as the project context evolves).
    void check_demand_provenance() {
        for (const ConceptInstance& inst : model.instances) {
            if (inst.cls != ConceptClass::RegulatoryDemand)
                continue;
            const InstanceRef* ref = inst.ref_property("source_act");
            if (!ref)
                continue; // missing property reported separately
            const ConceptInstance* source = model.find(ref->id);
            if (!source)
                continue; // unresolved reference is resolver territory
            if (source->cls != ConceptClass::RegulatoryAct) {
                emit(Severity::Error, "E-VAL-007",
                     "demand '" + inst.id + "' has source_act '" + ref->id + "', which is a " +
                         std::string(class_keyword(source->cls)) + ", not an act",
                     inst.span, LayerId::RegulatoryDemands, {source->span});
                continue;
            }
            if (applicability && !applicability->is_applicable(ref->id))
                emit(Severity::Warning, "E-VAL-007",
                     "demand '" + inst.id + "' is sourced from '" + ref->id +
                         "', which is not applicable to this project",
                     inst.span, LayerId::RegulatoryDemands, {source->span});
        }
    }
};

} // namespace

std::vector<Diagnostic> check(const ArtifactModel& model,
                              const ApplicabilityResult* applicability) {
    Checker checker{model, applicability, {}};
    checker.check_layers();
    checker.check_required_properties();
    checker.check_delegation();
    checker.check_person_types();
    checker.check_force_direction();
    checker.check_signoff_roles();
    checker.check_referenced_criteria();
    checker.check_demand_provenance();
    canonicalize(checker.diags);
    return std::move(checker.diags);
}

} // namespace am4rre
