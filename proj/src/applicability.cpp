#include "am4rre/applicability.hpp"

#include <algorithm>
#include <limits>

namespace am4rre {

const ActApplicability* ApplicabilityResult::for_act(std::string_view act_id) const {
    for (const ActApplicability& a : acts)
        if (a.act_id == act_id)
            return &a;
    return nullptr;
}

bool ApplicabilityResult::is_applicable(std::string_view act_id) const {
    const ActApplicability* a = for_act(act_id);
    return a && a->applicable;
}

namespace {

struct TaggedInstance {
    const ConceptInstance* instance;
    const TagSet* tags;
};

void match_criteria(const ConceptInstance& criterion, const TagSet& criteria,
                    const std::vector<TaggedInstance>& context,
                    std::vector<EvidenceItem>& evidence) {
    for (const std::string& tag : criteria.tags)
        for (const TaggedInstance& ctx : context)
            if (ctx.tags->contains(tag))
                evidence.push_back({criterion.id, tag, ctx.instance->id});
}

void finish_evidence(std::vector<EvidenceItem>& evidence) {
    std::sort(evidence.begin(), evidence.end());
    evidence.erase(std::unique(evidence.begin(), evidence.end()), evidence.end());
}

} // namespace

ApplicabilityResult compute_applicability(const ArtifactModel& model) {
    ApplicabilityResult result;

    // Project context the criteria are matched against: where processing
    // happens (stakeholder locations, processor locations) and what the
    // project intends to do.
    std::vector<TaggedInstance> locations;
    std::vector<TaggedInstance> intents;
    for (const ConceptInstance& inst : model.instances) {
        if (inst.cls == ConceptClass::Stakeholder) {
            if (const TagSet* tags = inst.tag_property("location"))
                locations.push_back({&inst, tags});
        } else if (inst.cls == ConceptClass::DomainModel) {
            if (const TagSet* tags = inst.tag_property("processor_location"))
                locations.push_back({&inst, tags});
        } else if (inst.cls == ConceptClass::StatementOfIntent) {
            if (const TagSet* tags = inst.tag_property("intents"))
                intents.push_back({&inst, tags});
        }
    }

    for (std::size_t i = 0; i < model.instances.size(); ++i) {
        const ConceptInstance& act = model.instances[i];
        if (act.cls != ConceptClass::RegulatoryAct)
            continue;

        ActApplicability aa;
        aa.act_id = act.id;
        bool has_jurisdiction_link = false;
        bool has_field_link = false;

        for (const Relationship& rel : model.relationships) {
            if (!rel.source_index || *rel.source_index != i || !rel.target_index)
                continue;
            const ConceptInstance& target = model.instances[*rel.target_index];
            if (rel.kind == RelationshipKind::AppliesWithin &&
                target.cls == ConceptClass::Jurisdiction) {
                has_jurisdiction_link = true;
                if (const TagSet* criteria = target.tag_property("criteria"))
                    match_criteria(target, *criteria, locations, aa.jurisdiction_evidence);
            } else if (rel.kind == RelationshipKind::BelongsToField &&
                       target.cls == ConceptClass::FieldOfLaw) {
                has_field_link = true;
                if (const TagSet* criteria = target.tag_property("criteria"))
                    match_criteria(target, *criteria, intents, aa.field_evidence);
            }
        }

        if (!has_jurisdiction_link)
            result.diagnostics.push_back(
                {Severity::Warning, "E-APP-001",
                 "act '" + act.id + "' has no applies_within link; applicability "
                 "cannot be evaluated, marking it not applicable",
                 act.span, {}, LayerId::RegulatoryContext});
        if (!has_field_link)
            result.diagnostics.push_back(
                {Severity::Warning, "E-APP-002",
                 "act '" + act.id + "' has no belongs_to_field link; applicability "
                 "cannot be evaluated, marking it not applicable",
                 act.span, {}, LayerId::RegulatoryContext});

        finish_evidence(aa.jurisdiction_evidence);
        finish_evidence(aa.field_evidence);
        aa.applicable = !aa.jurisdiction_evidence.empty() && !aa.field_evidence.empty();
        result.acts.push_back(std::move(aa));
    }

    result.priority = priority_order(result, model);
    return result;
}

std::vector<std::string> priority_order(const ApplicabilityResult& result,
                                        const ArtifactModel& model) {
    struct Entry {
        std::string id;
        std::size_t declaration = 0;
        int rank = std::numeric_limits<int>::max();
        std::size_t supported_position = std::numeric_limits<std::size_t>::max();
    };

    std::vector<Entry> entries;
    for (std::size_t i = 0; i < model.instances.size(); ++i) {
        const ConceptInstance& act = model.instances[i];
        if (act.cls != ConceptClass::RegulatoryAct || !result.is_applicable(act.id))
            continue;
        Entry e;
        e.id = act.id;
        e.declaration = i;
        if (auto kind = act.act_kind())
            e.rank = force_rank(*kind);
        entries.push_back(std::move(e));
    }

    // Base order: force rank, then declaration order.
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.declaration < b.declaration;
    });

    // A supporting act follows the act it supports. Support cannot cross rank
    // groups (the supporter always has strictly lower force), so the pull
    // applies within each rank group: supporters of earlier-priority acts
    // first, unrelated acts last, declaration order breaking remaining ties.
    auto position_of = [&](const std::string& id) {
        for (std::size_t p = 0; p < entries.size(); ++p)
            if (entries[p].id == id)
                return p;
        return std::numeric_limits<std::size_t>::max();
    };
    for (Entry& e : entries) {
        for (const Relationship& rel : model.relationships) {
            if (rel.kind != RelationshipKind::EnsuresConsistentApplicationOf ||
                rel.source_id != e.id)
                continue;
            if (!result.is_applicable(rel.target_id))
                continue;
            e.supported_position = position_of(rel.target_id);
            break; // first declared support link decides
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.rank != b.rank)
            return a.rank < b.rank;
        if (a.supported_position != b.supported_position)
            return a.supported_position < b.supported_position;
        return a.declaration < b.declaration;
    });

    std::vector<std::string> order;
    order.reserve(entries.size());
    for (Entry& e : entries)
        order.push_back(std::move(e.id));
    return order;
}

} // namespace am4rre
