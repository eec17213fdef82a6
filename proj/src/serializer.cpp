#include "am4rre/serializer.hpp"

#include <algorithm>
#include <sstream>

namespace am4rre {
namespace {

std::string quote(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    out.push_back('"');
    for (char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out.push_back(c); break;
        }
    }
    out.push_back('"');
    return out;
}

std::string render_value(const PropertyValue& value) {
    struct Visitor {
        std::string operator()(const std::string& s) const { return quote(s); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const TagSet& tags) const {
            std::string out = "[";
            for (std::size_t i = 0; i < tags.tags.size(); ++i) {
                if (i)
                    out += ", ";
                out += tags.tags[i];
            }
            out += "]";
            return out;
        }
        std::string operator()(const InstanceRef& ref) const { return ref.id; }
        std::string operator()(ActKind k) const { return std::string(act_kind_keyword(k)); }
        std::string operator()(PersonType p) const { return std::string(person_keyword(p)); }
        std::string operator()(DelegatoryRole r) const {
            return std::string(delegatory_role_keyword(r));
        }
        std::string operator()(RequirementKind k) const {
            return std::string(requirement_kind_keyword(k));
        }
    };
    return std::visit(Visitor{}, value);
}

} // namespace

std::string serialize(const ArtifactModel& model) {
    std::vector<std::string> blocks;

    for (const ConceptInstance& inst : model.instances) {
        std::ostringstream b;
        b << class_keyword(inst.cls) << ' ' << inst.id << " {";
        // Canonical property order: the class's declared order, then any
        // extras (none for models built through the parser) alphabetically.
        std::vector<std::string> emitted;
        for (const PropertySpec& spec : properties_of(inst.cls)) {
            if (const PropertyValue* v = inst.property(spec.name)) {
                b << "\n  " << spec.name << ": " << render_value(*v);
                emitted.emplace_back(spec.name);
            }
        }
        for (const auto& [name, value] : inst.properties) {
            if (std::find(emitted.begin(), emitted.end(), name) == emitted.end())
                b << "\n  " << name << ": " << render_value(value);
        }
        b << "\n}";
        blocks.push_back(b.str());
    }

    {
        std::ostringstream b;
        bool any = false;
        for (const Relationship& rel : model.relationships) {
            if (rel.derived)
                continue; // tool-produced links are never part of the source
            if (any)
                b << '\n';
            b << "rel " << rel.source_id << ' ' << relationship_keyword(rel.kind) << ' '
              << rel.target_id;
            any = true;
        }
        if (any)
            blocks.push_back(b.str());
    }

    {
        std::ostringstream b;
        bool any = false;
        for (const SignOff& s : model.signoffs) {
            if (any)
                b << '\n';
            b << "accept " << milestone_name(s.milestone) << " by " << role_keyword(s.role);
            any = true;
        }
        if (any)
            blocks.push_back(b.str());
    }

    if (blocks.empty())
        return "";
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i)
            out += "\n\n";
        out += blocks[i];
    }
    out += "\n";
    return out;
}

} // namespace am4rre
