#pragma once

#include "am4rre/diagnostics.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace am4rre {

enum class LayerId : unsigned char {
    RegulatoryContext,
    RegulatoryDemands,
    Context,
    Requirements,
    System,
};

enum class RoleId {
    RequirementsEngineer,
    LegalExpert,
    DomainExpert,
};

enum class MilestoneId { M1, M2, M3, M4 };

inline constexpr std::array<MilestoneId, 4> kMilestones = {
    MilestoneId::M1, MilestoneId::M2, MilestoneId::M3, MilestoneId::M4};

enum class ConceptClass {
    RegulatoryAct,
    Jurisdiction,
    FieldOfLaw,
    Regulator,
    LegalSubject,
    RegulatoryDemand,
    ProjectScope,
    Stakeholder,
    DomainModel,
    StatementOfIntent,
    Requirement,
    SystemElement,
};

inline constexpr std::array<ConceptClass, 12> kConceptClasses = {
    ConceptClass::RegulatoryAct,   ConceptClass::Jurisdiction,
    ConceptClass::FieldOfLaw,      ConceptClass::Regulator,
    ConceptClass::LegalSubject,    ConceptClass::RegulatoryDemand,
    ConceptClass::ProjectScope,    ConceptClass::Stakeholder,
    ConceptClass::DomainModel,     ConceptClass::StatementOfIntent,
    ConceptClass::Requirement,     ConceptClass::SystemElement,
};

enum class ActKind { Law, Regulation, Directive, Decision, Guideline, Recommendation };

inline constexpr std::array<ActKind, 6> kActKinds = {
    ActKind::Law,      ActKind::Regulation, ActKind::Directive,
    ActKind::Decision, ActKind::Guideline,  ActKind::Recommendation,
};

enum class PersonType { Natural, Legal, Any };
enum class DelegatoryRole { Delegator, Delegatee, Obligee, None };
enum class RequirementKind { Functional, Nonfunctional };

enum class RelationshipKind {
    EnsuresConsistentApplicationOf,
    AppliesWithin,
    BelongsToField,
    IssuedBy,
    OwesDutyTo,
    DelegatesTo,
    MapsTo,
    DerivedFrom,
    Contains,
};

inline constexpr std::array<RelationshipKind, 9> kRelationshipKinds = {
    RelationshipKind::EnsuresConsistentApplicationOf,
    RelationshipKind::AppliesWithin,
    RelationshipKind::BelongsToField,
    RelationshipKind::IssuedBy,
    RelationshipKind::OwesDutyTo,
    RelationshipKind::DelegatesTo,
    RelationshipKind::MapsTo,
    RelationshipKind::DerivedFrom,
    RelationshipKind::Contains,
};

LayerId layer_of(ConceptClass c);
RoleId responsible_role(ConceptClass c);
// Primary role plus co-responsible roles (regulatory-context classes also
// involve the domain expert for matching against project context).
std::vector<RoleId> co_responsible_roles(ConceptClass c);

// Normative force of an act kind; lower rank = higher force.
// law=0, regulation=1, directive=2, decision=3, guideline=4, recommendation=5.
int force_rank(ActKind k);

// Roles whose sign-off accepts a milestone (M2 requires all of them).
std::span<const RoleId> accepting_roles(MilestoneId m);

std::string_view layer_name(LayerId l);
std::string_view role_keyword(RoleId r);
std::string_view milestone_name(MilestoneId m);
std::string_view class_keyword(ConceptClass c);
std::string_view class_name(ConceptClass c);
std::string_view relationship_keyword(RelationshipKind k);
std::string_view act_kind_keyword(ActKind k);
std::string_view person_keyword(PersonType p);
std::string_view delegatory_role_keyword(DelegatoryRole r);
std::string_view requirement_kind_keyword(RequirementKind k);

std::optional<ConceptClass> class_from_keyword(std::string_view word);
std::optional<RelationshipKind> relationship_from_keyword(std::string_view word);
std::optional<RoleId> role_from_keyword(std::string_view word);
std::optional<MilestoneId> milestone_from_name(std::string_view word);
std::optional<ActKind> act_kind_from_keyword(std::string_view word);
std::optional<PersonType> person_from_keyword(std::string_view word);
std::optional<DelegatoryRole> delegatory_role_from_keyword(std::string_view word);
std::optional<RequirementKind> requirement_kind_from_keyword(std::string_view word);

// Namespaced tags of the form "<ns>:<name>", ns in {loc, intent, data}.
// Kept sorted and unique so that serialization is deterministic.
struct TagSet {
    std::vector<std::string> tags;

    void insert(std::string tag);
    bool contains(std::string_view tag) const;
    bool empty() const { return tags.empty(); }
    bool intersects(const TagSet& other) const;

    friend bool operator==(const TagSet&, const TagSet&) = default;
};

bool valid_tag(std::string_view tag);

// Reference-valued property (an identifier naming another instance).
struct InstanceRef {
    std::string id;

    friend bool operator==(const InstanceRef&, const InstanceRef&) = default;
};

using PropertyValue = std::variant<std::string, bool, TagSet, InstanceRef, ActKind,
                                   PersonType, DelegatoryRole, RequirementKind>;

enum class ValueType {
    Text,
    Bool,
    Tags,
    Ref,
    ActKind,
    Person,       // natural | legal | any
    PersonStrict, // natural | legal
    DelegatoryRole,
    RequirementKind,
};

struct PropertySpec {
    std::string_view name;
    ValueType type;
    bool required;
    std::string_view tag_namespace; // only for ValueType::Tags
};

std::span<const PropertySpec> properties_of(ConceptClass c);
const PropertySpec* property_spec(ConceptClass c, std::string_view name);

struct ConceptInstance {
    std::string id;
    ConceptClass cls = ConceptClass::RegulatoryAct;
    std::string display_name;
    std::map<std::string, PropertyValue> properties;
    SourceSpan span;

    const PropertyValue* property(std::string_view name) const;
    const std::string* text_property(std::string_view name) const;
    const TagSet* tag_property(std::string_view name) const;
    const InstanceRef* ref_property(std::string_view name) const;
    std::optional<ActKind> act_kind() const;
    std::optional<PersonType> person() const;
    std::optional<DelegatoryRole> delegatory_role() const;
    bool flagged_unmapped() const;
};

struct Relationship {
    std::string id; // synthesized: "rel:<n>" declared, "derived:<n>" derived
    RelationshipKind kind = RelationshipKind::Contains;
    std::string source_id;
    std::string target_id;
    bool derived = false;
    SourceSpan span;
    // Bound by the resolver.
    std::optional<std::size_t> source_index;
    std::optional<std::size_t> target_index;
};

struct SignOff {
    MilestoneId milestone = MilestoneId::M1;
    RoleId role = RoleId::RequirementsEngineer;
    int sequence = 0; // declaration order within the file
    SourceSpan span;
};

struct ArtifactModel {
    std::string source_name;
    std::vector<ConceptInstance> instances;
    std::vector<Relationship> relationships;
    std::vector<SignOff> signoffs;
    bool resolution_complete = false;

    const ConceptInstance* find(std::string_view id) const;
    std::optional<std::size_t> index_of(std::string_view id) const;
};

// Structural equality ignoring spans, synthesized relationship ids,
// resolution state, and the source name.
bool equal_modulo_spans(const ArtifactModel& a, const ArtifactModel& b);

struct EndpointConstraint {
    std::vector<ConceptClass> source_classes;
    std::vector<ConceptClass> target_classes;
    bool forbid_self = false;
};

const EndpointConstraint& endpoint_constraint(RelationshipKind k);

} // namespace am4rre
