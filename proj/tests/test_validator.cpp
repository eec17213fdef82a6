#include "am4rre/validator.hpp"

#include "am4rre/applicability.hpp"
#include "am4rre/parser.hpp"
#include "am4rre/resolver.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace am4rre;
using namespace am4rre::testing;

namespace {

ArtifactModel resolved(std::string text) {
    ParseResult parsed = parse(text, "t");
    REQUIRE(parsed.diagnostics.empty());
    ResolveResult r = resolve(std::move(parsed.model));
    REQUIRE(r.diagnostics.empty());
    return std::move(r.model);
}

void drop_relationship(ArtifactModel& m, RelationshipKind kind) {
    for (std::size_t i = 0; i < m.relationships.size(); ++i)
        if (m.relationships[i].kind == kind) {
            m.relationships.erase(m.relationships.begin() + i);
            return;
        }
    FAIL("relationship kind not found");
}

} // namespace

TEST_CASE("the fixture is well-formed") {
    ArtifactModel m = load_fixture_resolved();
    std::vector<Diagnostic> diags = check(m);
    CHECK(diags.empty());
}

TEST_CASE("person-type conformance on maps_to") {
    ArtifactModel m = resolved(
        "subject data_subject { person: natural delegatory_role: none }\n"
        "stakeholder acme { person: legal location: [] }\n"
        "rel data_subject maps_to acme\n");
    std::vector<Diagnostic> diags = check(m);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "E-VAL-003");
    CHECK(diags[0].severity == Severity::Error);

    // 'any' accepts either person type.
    ArtifactModel ok = resolved(
        "subject controller { person: any delegatory_role: none }\n"
        "stakeholder acme { person: legal location: [] }\n"
        "rel controller maps_to acme\n");
    CHECK(check(ok).empty());
}

TEST_CASE("delegation rule is vacuous without delegators") {
    ArtifactModel m = resolved(
        "subject a { person: any delegatory_role: none }\n"
        "subject b { person: any delegatory_role: obligee }\n");
    CHECK(check(m).empty());
}

TEST_CASE("each triad link deletion produces exactly one delegation error") {
    SUBCASE("missing delegates_to") {
        ArtifactModel m = load_fixture_resolved();
        drop_relationship(m, RelationshipKind::DelegatesTo);
        std::vector<Diagnostic> diags = check(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == "E-VAL-002");
        CHECK(diags[0].message.find("delegates_to") != std::string::npos);
    }
    SUBCASE("missing owes_duty_to") {
        ArtifactModel m = load_fixture_resolved();
        drop_relationship(m, RelationshipKind::OwesDutyTo);
        std::vector<Diagnostic> diags = check(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == "E-VAL-002");
        CHECK(diags[0].message.find("owes_duty_to") != std::string::npos);
    }
}

TEST_CASE("delegation chains with delegatee sources are legal") {
    ArtifactModel m = resolved(
        "subject a { person: any delegatory_role: delegator }\n"
        "subject b { person: any delegatory_role: delegatee }\n"
        "subject c { person: any delegatory_role: delegatee }\n"
        "subject s { person: any delegatory_role: obligee }\n"
        "rel a delegates_to b\n"
        "rel b delegates_to c\n"
        "rel a owes_duty_to s\n");
    CHECK(check(m).empty());
}

TEST_CASE("support direction must go from lower to higher force") {
    ArtifactModel reversed_direction = resolved(
        "act GDPR { kind: regulation title: \"g\" }\n"
        "act EDPB { kind: guideline title: \"e\" }\n"
        "rel GDPR ensures_consistent_application_of EDPB\n");
    std::vector<Diagnostic> diags = check(reversed_direction);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "E-VAL-004");

    // Equal force is rejected too: the order must be strict.
    ArtifactModel equal_force = resolved(
        "act A { kind: guideline title: \"a\" }\n"
        "act B { kind: guideline title: \"b\" }\n"
        "rel A ensures_consistent_application_of B\n");
    REQUIRE(check(equal_force).size() == 1);
    CHECK(check(equal_force)[0].code == "E-VAL-004");
}

TEST_CASE("sign-off role consistency is a warning") {
    ArtifactModel m = resolved("accept M2 by requirements_engineer\n");
    std::vector<Diagnostic> diags = check(m);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "E-VAL-005");
    CHECK(diags[0].severity == Severity::Warning);

    // Either of the two M2 acceptors is fine.
    CHECK(check(resolved("accept M2 by domain_expert\n")).empty());
    CHECK(check(resolved("accept M2 by legal_expert\n")).empty());
    CHECK(check(resolved("accept M3 by legal_expert\n")).empty());
    CHECK(check(resolved("accept M3 by domain_expert\n")).size() == 1);
}

TEST_CASE("referenced criteria must be non-empty") {
    ArtifactModel m = resolved(
        "act A { kind: regulation title: \"a\" }\n"
        "jurisdiction empty_j { criteria: [] }\n"
        "jurisdiction unreferenced { criteria: [] }\n"
        "rel A applies_within empty_j\n");
    std::vector<Diagnostic> diags = check(m);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "E-VAL-006");
    CHECK(diags[0].message.find("empty_j") != std::string::npos);
}

TEST_CASE("a jurisdiction referenced by several acts yields one criteria error") {
    ArtifactModel m = resolved(
        "act A { kind: regulation title: \"a\" }\n"
        "act B { kind: law title: \"b\" }\n"
        "jurisdiction j { criteria: [] }\n"
        "rel A applies_within j\n"
        "rel B applies_within j\n");
    std::vector<Diagnostic> diags = check(m);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "E-VAL-006");
    CHECK(diags[0].related_spans.size() == 2);
}

TEST_CASE("demand provenance") {
    SUBCASE("source_act naming a non-act is an error") {
        ArtifactModel m = resolved(
            "jurisdiction j { criteria: [loc:EU] }\n"
            "demand d { text: \"t\" source_act: j }\n");
        std::vector<Diagnostic> diags = check(m);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == "E-VAL-007");
        CHECK(diags[0].severity == Severity::Error);
    }
    SUBCASE("demand from an inapplicable act warns once applicability is known") {
        ArtifactModel m = resolved(
            "act A { kind: regulation title: \"a\" }\n"
            "jurisdiction j { criteria: [loc:EU] }\n"
            "field f { criteria: [intent:marketing] }\n"
            "rel A applies_within j\n"
            "rel A belongs_to_field f\n"
            "demand d { text: \"t\" source_act: A }\n");
        CHECK(check(m).empty()); // no verdicts yet: no warning
        ApplicabilityResult app = compute_applicability(m);
        REQUIRE(!app.is_applicable("A")); // empty context matches nothing
        std::vector<Diagnostic> diags = check(m, &app);
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].code == "E-VAL-007");
        CHECK(diags[0].severity == Severity::Warning);
    }
}

TEST_CASE("missing required properties are reported per property") {
    ArtifactModel m = resolved("act A { title: \"a\" }\n");
    std::vector<Diagnostic> diags = check(m);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "E-VAL-008");
    CHECK(diags[0].message.find("kind") != std::string::npos);

    // A missing kind must not cascade into force-direction errors.
    ArtifactModel with_support = resolved(
        "act A { title: \"a\" }\n"
        "act B { kind: guideline title: \"b\" }\n"
        "rel B ensures_consistent_application_of A\n");
    std::vector<Diagnostic> cascades = check(with_support);
    REQUIRE(cascades.size() == 1);
    CHECK(cascades[0].code == "E-VAL-008");
}

TEST_CASE("diagnostics are order-independent") {
    ArtifactModel base = load_fixture_resolved();
    // Break two independent rules.
    for (Relationship& rel : base.relationships)
        if (rel.kind == RelationshipKind::EnsuresConsistentApplicationOf)
            std::swap(rel.source_id, rel.target_id);
    drop_relationship(base, RelationshipKind::DelegatesTo);

    std::mt19937 rng(7);
    std::vector<std::string> reference;
    for (int round = 0; round < 10; ++round) {
        ArtifactModel shuffled = base;
        std::shuffle(shuffled.instances.begin(), shuffled.instances.end(), rng);
        std::shuffle(shuffled.relationships.begin(), shuffled.relationships.end(), rng);
        ResolveResult r = resolve(std::move(shuffled));
        REQUIRE(r.diagnostics.empty());
        std::vector<std::string> codes = diag_codes(check(r.model));
        if (round == 0)
            reference = codes;
        else
            CHECK(codes == reference);
    }
    CHECK(reference == std::vector<std::string>{"E-VAL-002", "E-VAL-004"});
}

TEST_CASE("adding an unrelated instance never removes a diagnostic") {
    ArtifactModel m = resolved(
        "subject s { person: natural delegatory_role: none }\n"
        "stakeholder k { person: legal location: [] }\n"
        "rel s maps_to k\n");
    std::vector<std::string> before = diag_codes(check(m));
    REQUIRE(before == std::vector<std::string>{"E-VAL-003"});

    m.instances.push_back(make_instance(
        "lone", ConceptClass::Stakeholder,
        {{"person", PersonType::Natural}, {"location", tags({"loc:EU"})}}));
    ResolveResult r = resolve(std::move(m));
    std::vector<std::string> after = diag_codes(check(r.model));
    for (const std::string& code : before)
        CHECK(std::count(after.begin(), after.end(), code) >= 1);
}

TEST_CASE("validator output is canonicalized by code then span") {
    ArtifactModel m = resolved(
        "act Z { title: \"z\" }\n"       // E-VAL-008 (line 1)
        "act A { kind: regulation title: \"a\" }\n"
        "jurisdiction j { criteria: [] }\n"
        "rel A applies_within j\n");     // E-VAL-006 (line 3 instance)
    std::vector<Diagnostic> diags = check(m);
    REQUIRE(diags.size() == 2);
    CHECK(diags[0].code == "E-VAL-006");
    CHECK(diags[1].code == "E-VAL-008");
}
