#include "am4rre/resolver.hpp"

#include <string>
#include <unordered_map>

namespace am4rre {
namespace {

std::string class_list(const std::vector<ConceptClass>& classes) {
    std::string out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i)
            out += i + 1 == classes.size() ? " or " : ", ";
        out += class_name(classes[i]);
    }
    return out;
}

bool class_allowed(ConceptClass c, const std::vector<ConceptClass>& allowed) {
    for (ConceptClass a : allowed)
        if (a == c)
            return true;
    return false;
}

} // namespace

ResolveResult resolve(ArtifactModel model) {
    std::vector<Diagnostic> diags;

    std::unordered_map<std::string_view, std::size_t> index;
    index.reserve(model.instances.size());
    for (std::size_t i = 0; i < model.instances.size(); ++i)
        index.emplace(model.instances[i].id, i);

    auto lookup = [&](const std::string& id) -> std::optional<std::size_t> {
        auto it = index.find(id);
        if (it == index.end())
            return std::nullopt;
        return it->second;
    };

    for (Relationship& rel : model.relationships) {
        rel.source_index = lookup(rel.source_id);
        rel.target_index = lookup(rel.target_id);
        if (!rel.source_index)
            diags.push_back({Severity::Error, "E-RES-001",
                             "unknown identifier '" + rel.source_id + "'", rel.span, {},
                             std::nullopt});
        if (!rel.target_index)
            diags.push_back({Severity::Error, "E-RES-001",
                             "unknown identifier '" + rel.target_id + "'", rel.span, {},
                             std::nullopt});
        if (!rel.source_index || !rel.target_index)
            continue;

        const EndpointConstraint& constraint = endpoint_constraint(rel.kind);
        const ConceptInstance& source = model.instances[*rel.source_index];
        const ConceptInstance& target = model.instances[*rel.target_index];
        bool source_ok = class_allowed(source.cls, constraint.source_classes);
        bool target_ok = class_allowed(target.cls, constraint.target_classes);
        if (!source_ok || !target_ok) {
            std::string message = std::string(relationship_keyword(rel.kind)) + " links " +
                                  class_list(constraint.source_classes) + " to " +
                                  class_list(constraint.target_classes) + ", got " +
                                  std::string(class_name(source.cls)) + " '" + source.id +
                                  "' to " + std::string(class_name(target.cls)) + " '" +
                                  target.id + "'";
            diags.push_back({Severity::Error, "E-RES-002", std::move(message), rel.span,
                             {source.span, target.span}, std::nullopt});
        }
        if (constraint.forbid_self && rel.source_id == rel.target_id) {
            diags.push_back({Severity::Error, "E-RES-002",
                             std::string(relationship_keyword(rel.kind)) +
                                 " must link two distinct instances, got '" + rel.source_id +
                                 "' on both ends",
                             rel.span, {}, std::nullopt});
        }
    }

    // Reference-valued properties resolve against the same flat namespace.
    for (const ConceptInstance& inst : model.instances) {
        for (const PropertySpec& spec : properties_of(inst.cls)) {
            if (spec.type != ValueType::Ref)
                continue;
            const InstanceRef* ref = inst.ref_property(spec.name);
            if (ref && !lookup(ref->id))
                diags.push_back({Severity::Error, "E-RES-001",
                                 "unknown identifier '" + ref->id + "' in property '" +
                                     std::string(spec.name) + "' of '" + inst.id + "'",
                                 inst.span, {}, std::nullopt});
        }
    }

    model.resolution_complete = !has_errors(diags);
    return {std::move(model), std::move(diags)};
}

} // namespace am4rre
