#include "am4rre/metamodel.hpp"

#include <algorithm>
#include <cassert>

namespace am4rre {

LayerId layer_of(ConceptClass c) {
    switch (c) {
    case ConceptClass::RegulatoryAct:
    case ConceptClass::Jurisdiction:
    case ConceptClass::FieldOfLaw:
    case ConceptClass::Regulator:
        return LayerId::RegulatoryContext;
    case ConceptClass::LegalSubject:
    case ConceptClass::RegulatoryDemand:
        return LayerId::RegulatoryDemands;
    case ConceptClass::ProjectScope:
    case ConceptClass::Stakeholder:
    case ConceptClass::DomainModel:
    case ConceptClass::StatementOfIntent:
        return LayerId::Context;
    case ConceptClass::Requirement:
        return LayerId::Requirements;
    case ConceptClass::SystemElement:
        return LayerId::System;
    }
    assert(false && "unknown concept class");
    return LayerId::System;
}

RoleId responsible_role(ConceptClass c) {
    switch (layer_of(c)) {
    case LayerId::RegulatoryContext:
    case LayerId::RegulatoryDemands:
        return RoleId::LegalExpert;
    case LayerId::Context:
        return RoleId::DomainExpert;
    case LayerId::Requirements:
    case LayerId::System:
        return RoleId::RequirementsEngineer;
    }
    assert(false && "unknown layer");
    return RoleId::RequirementsEngineer;
}

std::vector<RoleId> co_responsible_roles(ConceptClass c) {
    std::vector<RoleId> roles{responsible_role(c)};
    // Matching jurisdictions and fields of law against project context needs
    // domain knowledge as well.
    if (layer_of(c) == LayerId::RegulatoryContext)
        roles.push_back(RoleId::DomainExpert);
    return roles;
}

int force_rank(ActKind k) {
    switch (k) {
    case ActKind::Law: return 0;
    case ActKind::Regulation: return 1;
    case ActKind::Directive: return 2;
    case ActKind::Decision: return 3;
    case ActKind::Guideline: return 4;
    case ActKind::Recommendation: return 5;
    }
    assert(false && "unknown act kind");
    return 5;
}

namespace {

constexpr RoleId kM1Roles[] = {RoleId::RequirementsEngineer};
constexpr RoleId kM2Roles[] = {RoleId::LegalExpert, RoleId::DomainExpert};
constexpr RoleId kM3Roles[] = {RoleId::LegalExpert};
constexpr RoleId kM4Roles[] = {RoleId::RequirementsEngineer};

} // namespace

std::span<const RoleId> accepting_roles(MilestoneId m) {
    switch (m) {
    case MilestoneId::M1: return kM1Roles;
    case MilestoneId::M2: return kM2Roles;
    case MilestoneId::M3: return kM3Roles;
    case MilestoneId::M4: return kM4Roles;
    }
    assert(false && "unknown milestone");
    return kM1Roles;
}

std::string_view layer_name(LayerId l) {
    switch (l) {
    case LayerId::RegulatoryContext: return "regulatory-context";
    case LayerId::RegulatoryDemands: return "regulatory-demands";
    case LayerId::Context: return "context";
    case LayerId::Requirements: return "requirements";
    case LayerId::System: return "system";
    }
    return "?";
}

std::string_view role_keyword(RoleId r) {
    switch (r) {
    case RoleId::RequirementsEngineer: return "requirements_engineer";
    case RoleId::LegalExpert: return "legal_expert";
    case RoleId::DomainExpert: return "domain_expert";
    }
    return "?";
}

std::string_view milestone_name(MilestoneId m) {
    switch (m) {
    case MilestoneId::M1: return "M1";
    case MilestoneId::M2: return "M2";
    case MilestoneId::M3: return "M3";
    case MilestoneId::M4: return "M4";
    }
    return "?";
}

std::string_view class_keyword(ConceptClass c) {
    switch (c) {
    case ConceptClass::RegulatoryAct: return "act";
    case ConceptClass::Jurisdiction: return "jurisdiction";
    case ConceptClass::FieldOfLaw: return "field";
    case ConceptClass::Regulator: return "regulator";
    case ConceptClass::LegalSubject: return "subject";
    case ConceptClass::RegulatoryDemand: return "demand";
    case ConceptClass::ProjectScope: return "scope";
    case ConceptClass::Stakeholder: return "stakeholder";
    case ConceptClass::DomainModel: return "domain_model";
    case ConceptClass::StatementOfIntent: return "intent";
    case ConceptClass::Requirement: return "requirement";
    case ConceptClass::SystemElement: return "system";
    }
    return "?";
}

std::string_view class_name(ConceptClass c) {
    switch (c) {
    case ConceptClass::RegulatoryAct: return "RegulatoryAct";
    case ConceptClass::Jurisdiction: return "Jurisdiction";
    case ConceptClass::FieldOfLaw: return "FieldOfLaw";
    case ConceptClass::Regulator: return "Regulator";
    case ConceptClass::LegalSubject: return "LegalSubject";
    case ConceptClass::RegulatoryDemand: return "RegulatoryDemand";
    case ConceptClass::ProjectScope: return "ProjectScope";
    case ConceptClass::Stakeholder: return "Stakeholder";
    case ConceptClass::DomainModel: return "DomainModel";
    case ConceptClass::StatementOfIntent: return "StatementOfIntent";
    case ConceptClass::Requirement: return "Requirement";
    case ConceptClass::SystemElement: return "SystemElement";
    }
    return "?";
}

std::string_view relationship_keyword(RelationshipKind k) {
    switch (k) {
    case RelationshipKind::EnsuresConsistentApplicationOf:
        return "ensures_consistent_application_of";
    case RelationshipKind::AppliesWithin: return "applies_within";
    case RelationshipKind::BelongsToField: return "belongs_to_field";
    case RelationshipKind::IssuedBy: return "issued_by";
    case RelationshipKind::OwesDutyTo: return "owes_duty_to";
    case RelationshipKind::DelegatesTo: return "delegates_to";
    case RelationshipKind::MapsTo: return "maps_to";
    case RelationshipKind::DerivedFrom: return "derived_from";
    case RelationshipKind::Contains: return "contains";
    }
    return "?";
}

std::string_view act_kind_keyword(ActKind k) {
    switch (k) {
    case ActKind::Law: return "law";
    case ActKind::Regulation: return "regulation";
    case ActKind::Directive: return "directive";
    case ActKind::Decision: return "decision";
    case ActKind::Guideline: return "guideline";
    case ActKind::Recommendation: return "recommendation";
    }
    return "?";
}

std::string_view person_keyword(PersonType p) {
    switch (p) {
    case PersonType::Natural: return "natural";
    case PersonType::Legal: return "legal";
    case PersonType::Any: return "any";
    }
    return "?";
}

std::string_view delegatory_role_keyword(DelegatoryRole r) {
    switch (r) {
    case DelegatoryRole::Delegator: return "delegator";
    case DelegatoryRole::Delegatee: return "delegatee";
    case DelegatoryRole::Obligee: return "obligee";
    case DelegatoryRole::None: return "none";
    }
    return "?";
}

std::string_view requirement_kind_keyword(RequirementKind k) {
    switch (k) {
    case RequirementKind::Functional: return "functional";
    case RequirementKind::Nonfunctional: return "nonfunctional";
    }
    return "?";
}

std::optional<ConceptClass> class_from_keyword(std::string_view word) {
    for (ConceptClass c : kConceptClasses)
        if (class_keyword(c) == word)
            return c;
    return std::nullopt;
}

std::optional<RelationshipKind> relationship_from_keyword(std::string_view word) {
    for (RelationshipKind k : kRelationshipKinds)
        if (relationship_keyword(k) == word)
            return k;
    return std::nullopt;
}

std::optional<RoleId> role_from_keyword(std::string_view word) {
    for (RoleId r : {RoleId::RequirementsEngineer, RoleId::LegalExpert, RoleId::DomainExpert})
        if (role_keyword(r) == word)
            return r;
    return std::nullopt;
}

std::optional<MilestoneId> milestone_from_name(std::string_view word) {
    for (MilestoneId m : kMilestones)
        if (milestone_name(m) == word)
            return m;
    return std::nullopt;
}

std::optional<ActKind> act_kind_from_keyword(std::string_view word) {
    for (ActKind k : kActKinds)
        if (act_kind_keyword(k) == word)
            return k;
    return std::nullopt;
}

std::optional<PersonType> person_from_keyword(std::string_view word) {
    for (PersonType p : {PersonType::Natural, PersonType::Legal, PersonType::Any})
        if (person_keyword(p) == word)
            return p;
    return std::nullopt;
}

std::optional<DelegatoryRole> delegatory_role_from_keyword(std::string_view word) {
    for (DelegatoryRole r : {DelegatoryRole::Delegator, DelegatoryRole::Delegatee,
                             DelegatoryRole::Obligee, DelegatoryRole::None})
        if (delegatory_role_keyword(r) == word)
            return r;
    return std::nullopt;
}

std::optional<RequirementKind> requirement_kind_from_keyword(std::string_view word) {
    for (RequirementKind k : {RequirementKind::Functional, RequirementKind::Nonfunctional})
        if (requirement_kind_keyword(k) == word)
            return k;
    return std::nullopt;
}

void TagSet::insert(std::string tag) {
    auto it = std::lower_bound(tags.begin(), tags.end(), tag);
    if (it == tags.end() || *it != tag)
        tags.insert(it, std::move(tag));
}

bool TagSet::contains(std::string_view tag) const {
    return std::binary_search(tags.begin(), tags.end(), tag);
}

bool TagSet::intersects(const TagSet& other) const {
    for (const std::string& t : tags)
        if (other.contains(t))
            return true;
    return false;
}

bool valid_tag(std::string_view tag) {
    auto colon = tag.find(':');
    if (colon == std::string_view::npos)
        return false;
    std::string_view ns = tag.substr(0, colon);
    std::string_view name = tag.substr(colon + 1);
    if (ns != "loc" && ns != "intent" && ns != "data")
        return false;
    if (name.empty())
        return false;
    for (char ch : name)
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ':')
            return false;
    return true;
}

namespace {

constexpr PropertySpec kActProps[] = {
    {"kind", ValueType::ActKind, true, {}},
    {"title", ValueType::Text, true, {}},
};
constexpr PropertySpec kJurisdictionProps[] = {
    {"criteria", ValueType::Tags, true, "loc"},
};
constexpr PropertySpec kFieldProps[] = {
    {"criteria", ValueType::Tags, true, "intent"},
};
constexpr PropertySpec kRegulatorProps[] = {
    {"name", ValueType::Text, true, {}},
};
constexpr PropertySpec kSubjectProps[] = {
    {"person", ValueType::Person, true, {}},
    {"delegatory_role", ValueType::DelegatoryRole, true, {}},
    {"unmapped", ValueType::Bool, false, {}},
};
constexpr PropertySpec kDemandProps[] = {
    {"text", ValueType::Text, true, {}},
    {"source_act", ValueType::Ref, true, {}},
};
constexpr PropertySpec kScopeProps[] = {
    {"description", ValueType::Text, true, {}},
};
constexpr PropertySpec kStakeholderProps[] = {
    {"person", ValueType::PersonStrict, true, {}},
    {"location", ValueType::Tags, true, "loc"},
};
constexpr PropertySpec kDomainModelProps[] = {
    {"processor_location", ValueType::Tags, true, "loc"},
    {"data_categories", ValueType::Tags, true, "data"},
};
constexpr PropertySpec kIntentProps[] = {
    {"intents", ValueType::Tags, true, "intent"},
};
constexpr PropertySpec kRequirementProps[] = {
    {"text", ValueType::Text, true, {}},
    {"kind", ValueType::RequirementKind, true, {}},
};
constexpr PropertySpec kSystemProps[] = {
    {"text", ValueType::Text, true, {}},
};

} // namespace

std::span<const PropertySpec> properties_of(ConceptClass c) {
    switch (c) {
    case ConceptClass::RegulatoryAct: return kActProps;
    case ConceptClass::Jurisdiction: return kJurisdictionProps;
    case ConceptClass::FieldOfLaw: return kFieldProps;
    case ConceptClass::Regulator: return kRegulatorProps;
    case ConceptClass::LegalSubject: return kSubjectProps;
    case ConceptClass::RegulatoryDemand: return kDemandProps;
    case ConceptClass::ProjectScope: return kScopeProps;
    case ConceptClass::Stakeholder: return kStakeholderProps;
    case ConceptClass::DomainModel: return kDomainModelProps;
    case ConceptClass::StatementOfIntent: return kIntentProps;
    case ConceptClass::Requirement: return kRequirementProps;
    case ConceptClass::SystemElement: return kSystemProps;
    }
    return {};
}

const PropertySpec* property_spec(ConceptClass c, std::string_view name) {
    for (const PropertySpec& spec : properties_of(c))
        if (spec.name == name)
            return &spec;
    return nullptr;
}

const PropertyValue* ConceptInstance::property(std::string_view name) const {
    auto it = properties.find(std::string(name));
    return it == properties.end() ? nullptr : &it->second;
}

const std::string* ConceptInstance::text_property(std::string_view name) const {
    const PropertyValue* v = property(name);
    return v ? std::get_if<std::string>(v) : nullptr;
}

const TagSet* ConceptInstance::tag_property(std::string_view name) const {
    const PropertyValue* v = property(name);
    return v ? std::get_if<TagSet>(v) : nullptr;
}

const InstanceRef* ConceptInstance::ref_property(std::string_view name) const {
    const PropertyValue* v = property(name);
    return v ? std::get_if<InstanceRef>(v) : nullptr;
}

std::optional<ActKind> ConceptInstance::act_kind() const {
    const PropertyValue* v = property("kind");
    if (const ActKind* k = v ? std::get_if<ActKind>(v) : nullptr)
        return *k;
    return std::nullopt;
}

std::optional<PersonType> ConceptInstance::person() const {
    const PropertyValue* v = property("person");
    if (const PersonType* p = v ? std::get_if<PersonType>(v) : nullptr)
        return *p;
    return std::nullopt;
}

std::optional<DelegatoryRole> ConceptInstance::delegatory_role() const {
    const PropertyValue* v = property("delegatory_role");
    if (const DelegatoryRole* r = v ? std::get_if<DelegatoryRole>(v) : nullptr)
        return *r;
    return std::nullopt;
}

bool ConceptInstance::flagged_unmapped() const {
    const PropertyValue* v = property("unmapped");
    if (const bool* b = v ? std::get_if<bool>(v) : nullptr)
        return *b;
    return false;
}

const ConceptInstance* ArtifactModel::find(std::string_view id) const {
    for (const ConceptInstance& inst : instances)
        if (inst.id == id)
            return &inst;
    return nullptr;
}

std::optional<std::size_t> ArtifactModel::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < instances.size(); ++i)
        if (instances[i].id == id)
            return i;
    return std::nullopt;
}

bool equal_modulo_spans(const ArtifactModel& a, const ArtifactModel& b) {
    if (a.instances.size() != b.instances.size() ||
        a.relationships.size() != b.relationships.size() ||
        a.signoffs.size() != b.signoffs.size())
        return false;
    for (std::size_t i = 0; i < a.instances.size(); ++i) {
        const ConceptInstance& x = a.instances[i];
        const ConceptInstance& y = b.instances[i];
        if (x.id != y.id || x.cls != y.cls || x.display_name != y.display_name ||
            x.properties != y.properties)
            return false;
    }
    for (std::size_t i = 0; i < a.relationships.size(); ++i) {
        const Relationship& x = a.relationships[i];
        const Relationship& y = b.relationships[i];
        if (x.kind != y.kind || x.source_id != y.source_id || x.target_id != y.target_id ||
            x.derived != y.derived)
            return false;
    }
    for (std::size_t i = 0; i < a.signoffs.size(); ++i) {
        const SignOff& x = a.signoffs[i];
        const SignOff& y = b.signoffs[i];
        if (x.milestone != y.milestone || x.role != y.role || x.sequence != y.sequence)
            return false;
    }
    return true;
}

namespace {

const EndpointConstraint kEnsuresConsistent{{ConceptClass::RegulatoryAct},
                                            {ConceptClass::RegulatoryAct},
                                            false};
const EndpointConstraint kAppliesWithin{{ConceptClass::RegulatoryAct},
                                        {ConceptClass::Jurisdiction},
                                        false};
const EndpointConstraint kBelongsToField{{ConceptClass::RegulatoryAct},
                                         {ConceptClass::FieldOfLaw},
                                         false};
const EndpointConstraint kIssuedBy{{ConceptClass::RegulatoryAct},
                                   {ConceptClass::Regulator},
                                   false};
const EndpointConstraint kOwesDutyTo{{ConceptClass::LegalSubject},
                                     {ConceptClass::LegalSubject},
                                     true};
const EndpointConstraint kDelegatesTo{{ConceptClass::LegalSubject},
                                      {ConceptClass::LegalSubject},
                                      true};
const EndpointConstraint kMapsTo{{ConceptClass::LegalSubject},
                                 {ConceptClass::Stakeholder},
                                 false};
const EndpointConstraint kDerivedFrom{{ConceptClass::Requirement},
                                      {ConceptClass::RegulatoryDemand},
                                      false};
const EndpointConstraint kContains{{ConceptClass::RegulatoryAct},
                                   {ConceptClass::LegalSubject, ConceptClass::RegulatoryDemand},
                                   false};

} // namespace

const EndpointConstraint& endpoint_constraint(RelationshipKind k) {
    switch (k) {
    case RelationshipKind::EnsuresConsistentApplicationOf: return kEnsuresConsistent;
    case RelationshipKind::AppliesWithin: return kAppliesWithin;
    case RelationshipKind::BelongsToField: return kBelongsToField;
    case RelationshipKind::IssuedBy: return kIssuedBy;
    case RelationshipKind::OwesDutyTo: return kOwesDutyTo;
    case RelationshipKind::DelegatesTo: return kDelegatesTo;
    case RelationshipKind::MapsTo: return kMapsTo;
    case RelationshipKind::DerivedFrom: return kDerivedFrom;
    case RelationshipKind::Contains: return kContains;
    }
    assert(false && "unknown relationship kind");
    return kContains;
}

} // namespace am4rre
