#include "am4rre/interpretation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace am4rre {
namespace {

bool is_subject(const ArtifactModel& model, const std::optional<std::size_t>& index) {
    return index && model.instances[*index].cls == ConceptClass::LegalSubject;
}

bool is_requirement(const ArtifactModel& model, const std::optional<std::size_t>& index) {
    return index && model.instances[*index].cls == ConceptClass::Requirement;
}

bool person_satisfies(PersonType required, PersonType actual) {
    return required == PersonType::Any || required == actual;
}

} // namespace

DelegationExpansion expand_delegations(const ArtifactModel& model) {
    DelegationExpansion out;

    // Delegation graph over legal subjects (declared delegates_to links with
    // both endpoints bound to subjects).
    std::vector<std::size_t> subjects;
    for (std::size_t i = 0; i < model.instances.size(); ++i)
        if (model.instances[i].cls == ConceptClass::LegalSubject)
            subjects.push_back(i);

    std::map<std::size_t, std::vector<std::size_t>> edges; // instance idx -> successors
    std::map<std::size_t, SourceSpan> first_edge_span;
    for (const Relationship& rel : model.relationships) {
        if (rel.derived || rel.kind != RelationshipKind::DelegatesTo)
            continue;
        if (!is_subject(model, rel.source_index) || !is_subject(model, rel.target_index))
            continue;
        if (*rel.source_index == *rel.target_index)
            continue; // self-delegation is rejected by the resolver
        auto& succ = edges[*rel.source_index];
        if (std::find(succ.begin(), succ.end(), *rel.target_index) == succ.end())
            succ.push_back(*rel.target_index);
        if (!first_edge_span.count(*rel.source_index))
            first_edge_span.emplace(*rel.source_index, rel.span);
    }

    // A subject is on a cycle iff it can reach itself through one or more
    // delegates_to hops. Cycle members are excluded from derivation: no duty
    // is pushed from them, through them, or onto them.
    auto reaches = [&](std::size_t from, std::size_t to) {
        std::set<std::size_t> seen;
        std::deque<std::size_t> queue{from};
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            auto it = edges.find(cur);
            if (it == edges.end())
                continue;
            for (std::size_t next : it->second) {
                if (next == to)
                    return true;
                if (seen.insert(next).second)
                    queue.push_back(next);
            }
        }
        return false;
    };

    std::set<std::size_t> cycle_members;
    for (std::size_t s : subjects)
        if (reaches(s, s))
            cycle_members.insert(s);

    if (!cycle_members.empty()) {
        // Group mutually-reachable members so each cycle is reported once.
        std::set<std::size_t> reported;
        for (std::size_t s : cycle_members) {
            if (reported.count(s))
                continue;
            std::vector<std::size_t> group;
            for (std::size_t t : cycle_members)
                if (t == s || (reaches(s, t) && reaches(t, s)))
                    group.push_back(t);
            std::string members;
            for (std::size_t m : group) {
                reported.insert(m);
                if (!members.empty())
                    members += " -> ";
                members += model.instances[m].id;
            }
            SourceSpan span = first_edge_span.count(group.front())
                                  ? first_edge_span.at(group.front())
                                  : model.instances[group.front()].span;
            out.diagnostics.push_back(
                {Severity::Error, "E-INT-001",
                 "delegation cycle between " + members +
                     "; duties are not derived for these subjects",
                 span, {}, LayerId::RegulatoryDemands});
            for (std::size_t m : group)
                out.cycle_members.push_back(model.instances[m].id);
        }
    }

    // Declared duties, used both as propagation seeds and to avoid
    // duplicating links the author already wrote down.
    std::set<std::pair<std::size_t, std::size_t>> declared_duties;
    std::vector<std::pair<std::size_t, std::size_t>> duty_list; // declaration order
    std::map<std::size_t, SourceSpan> duty_span; // seed duty span per delegator
    for (const Relationship& rel : model.relationships) {
        if (rel.derived || rel.kind != RelationshipKind::OwesDutyTo)
            continue;
        if (!is_subject(model, rel.source_index) || !is_subject(model, rel.target_index))
            continue;
        auto pair = std::make_pair(*rel.source_index, *rel.target_index);
        if (declared_duties.insert(pair).second)
            duty_list.push_back(pair);
        if (!duty_span.count(*rel.source_index))
            duty_span.emplace(*rel.source_index, rel.span);
    }

    // BFS from each duty holder along delegation edges, avoiding cycle
    // members; every subject reached inherits the duty.
    std::set<std::pair<std::size_t, std::size_t>> derived;
    std::vector<std::tuple<std::size_t, std::size_t, SourceSpan>> derived_list;
    for (const auto& [holder, obligee] : duty_list) {
        if (cycle_members.count(holder))
            continue;
        std::map<std::size_t, int> distance;
        std::deque<std::size_t> queue{holder};
        distance[holder] = 0;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            auto it = edges.find(cur);
            if (it == edges.end())
                continue;
            for (std::size_t next : it->second) {
                if (cycle_members.count(next) || distance.count(next))
                    continue;
                distance[next] = distance[cur] + 1;
                queue.push_back(next);
                if (next == obligee)
                    continue; // a duty to oneself makes no sense
                auto pair = std::make_pair(next, obligee);
                if (!declared_duties.count(pair) && derived.insert(pair).second) {
                    derived_list.emplace_back(next, obligee, duty_span.at(holder));
                    out.closure_depth = std::max(out.closure_depth, distance[next]);
                }
            }
        }
    }

    std::sort(derived_list.begin(), derived_list.end(),
              [](const auto& a, const auto& b) {
                  return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b)
                                                          : std::get<1>(a) < std::get<1>(b);
              });
    int counter = 0;
    for (const auto& [source, target, span] : derived_list) {
        Relationship rel;
        rel.id = "derived:" + std::to_string(++counter);
        rel.kind = RelationshipKind::OwesDutyTo;
        rel.source_id = model.instances[source].id;
        rel.target_id = model.instances[target].id;
        rel.derived = true;
        rel.span = span;
        rel.source_index = source;
        rel.target_index = target;
        out.derived.push_back(std::move(rel));
    }
    std::sort(out.cycle_members.begin(), out.cycle_members.end());
    return out;
}

std::vector<MappingSuggestion> suggest_mappings(const ArtifactModel& model) {
    std::vector<MappingSuggestion> suggestions;
    for (std::size_t i = 0; i < model.instances.size(); ++i) {
        const ConceptInstance& subject = model.instances[i];
        if (subject.cls != ConceptClass::LegalSubject)
            continue;
        bool mapped = false;
        for (const Relationship& rel : model.relationships)
            if (!rel.derived && rel.kind == RelationshipKind::MapsTo && rel.source_index &&
                *rel.source_index == i)
                mapped = true;
        if (mapped)
            continue;
        auto subject_person = subject.person();
        if (!subject_person)
            continue;
        for (const ConceptInstance& stakeholder : model.instances) {
            if (stakeholder.cls != ConceptClass::Stakeholder)
                continue;
            auto stakeholder_person = stakeholder.person();
            if (stakeholder_person && person_satisfies(*subject_person, *stakeholder_person))
                suggestions.push_back({subject.id, stakeholder.id});
        }
    }
    return suggestions;
}

TraceReport coverage(const ArtifactModel& model, bool derive_delegations) {
    TraceReport report;

    if (derive_delegations) {
        DelegationExpansion expansion = expand_delegations(model);
        report.derived_relationships = std::move(expansion.derived);
        report.diagnostics = std::move(expansion.diagnostics);
        report.delegation_closure_depth = expansion.closure_depth;
    }

    report.mapping_suggestions = suggest_mappings(model);

    for (std::size_t i = 0; i < model.instances.size(); ++i) {
        const ConceptInstance& subject = model.instances[i];
        if (subject.cls != ConceptClass::LegalSubject)
            continue;
        bool mapped = false;
        for (const Relationship& rel : model.relationships)
            if (!rel.derived && rel.kind == RelationshipKind::MapsTo && rel.source_index &&
                *rel.source_index == i)
                mapped = true;
        if (!mapped)
            report.unmapped_subjects.push_back(subject.id);
    }

    std::size_t total = 0;
    std::size_t covered = 0;
    for (std::size_t i = 0; i < model.instances.size(); ++i) {
        const ConceptInstance& demand = model.instances[i];
        if (demand.cls != ConceptClass::RegulatoryDemand)
            continue;
        ++total;
        bool has_requirement = false;
        for (const Relationship& rel : model.relationships)
            if (!rel.derived && rel.kind == RelationshipKind::DerivedFrom && rel.target_index &&
                *rel.target_index == i && is_requirement(model, rel.source_index))
                has_requirement = true;
        if (has_requirement)
            ++covered;
        else
            report.uncovered_demands.push_back(demand.id);
    }
    report.demand_coverage = total == 0 ? 1.0 : static_cast<double>(covered) / total;
    return report;
}

} // namespace am4rre
