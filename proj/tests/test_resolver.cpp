#include "am4rre/resolver.hpp"

#include "am4rre/parser.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace am4rre;
using namespace am4rre::testing;

TEST_CASE("declared support relationships resolve cleanly") {
    ParseResult parsed = parse(
        "act GDPR { kind: regulation title: \"g\" }\n"
        "act EDPB_07_2020 { kind: guideline title: \"e\" }\n"
        "rel EDPB_07_2020 ensures_consistent_application_of GDPR\n");
    REQUIRE(parsed.diagnostics.empty());
    ResolveResult r = resolve(std::move(parsed.model));
    CHECK(r.diagnostics.empty());
    CHECK(r.model.resolution_complete);
    REQUIRE(r.model.relationships.size() == 1);
    CHECK(r.model.relationships[0].source_index == 1);
    CHECK(r.model.relationships[0].target_index == 0);
}

TEST_CASE("dangling reference produces exactly one unknown-identifier error") {
    ParseResult parsed = parse("subject A { person: any delegatory_role: none }\n"
                               "rel A maps_to B\n");
    REQUIRE(parsed.diagnostics.empty());
    ResolveResult r = resolve(std::move(parsed.model));
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].code == "E-RES-001");
    CHECK(r.diagnostics[0].message.find("'B'") != std::string::npos);
    CHECK(!r.model.resolution_complete);
}

TEST_CASE("self-duty on an act violates both the class and self constraints") {
    ParseResult parsed = parse("act GDPR { kind: regulation title: \"g\" }\n"
                               "rel GDPR owes_duty_to GDPR\n");
    REQUIRE(parsed.diagnostics.empty());
    ResolveResult r = resolve(std::move(parsed.model));
    REQUIRE(r.diagnostics.size() == 2);
    CHECK(r.diagnostics[0].code == "E-RES-002");
    CHECK(r.diagnostics[1].code == "E-RES-002");
    CHECK(r.diagnostics[0].message != r.diagnostics[1].message);
}

TEST_CASE("reversed maps_to endpoints are rejected") {
    ParseResult parsed = parse("subject S { person: any delegatory_role: none }\n"
                               "stakeholder K { person: legal location: [] }\n"
                               "rel K maps_to S\n");
    REQUIRE(parsed.diagnostics.empty());
    ResolveResult r = resolve(std::move(parsed.model));
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].code == "E-RES-002");
}

TEST_CASE("unknown source_act reference") {
    ParseResult parsed = parse("demand D { text: \"t\" source_act: ghost }\n");
    REQUIRE(parsed.diagnostics.empty());
    ResolveResult r = resolve(std::move(parsed.model));
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].code == "E-RES-001");
    CHECK(r.diagnostics[0].message.find("ghost") != std::string::npos);
}

TEST_CASE("resolution is idempotent") {
    ParseResult parsed = parse(read_file(fixture_path()), "f");
    REQUIRE(parsed.diagnostics.empty());
    ResolveResult once = resolve(std::move(parsed.model));
    CHECK(once.diagnostics.empty());
    ArtifactModel copy = once.model;
    ResolveResult twice = resolve(std::move(copy));
    CHECK(twice.diagnostics.empty());
    CHECK(equal_modulo_spans(once.model, twice.model));
    REQUIRE(once.model.relationships.size() == twice.model.relationships.size());
    for (std::size_t i = 0; i < once.model.relationships.size(); ++i) {
        CHECK(once.model.relationships[i].source_index ==
              twice.model.relationships[i].source_index);
        CHECK(once.model.relationships[i].target_index ==
              twice.model.relationships[i].target_index);
    }
}

TEST_CASE("zero diagnostics iff every endpoint is bound and class-conformant") {
    ParseResult parsed = parse(read_file(fixture_path()), "f");
    ResolveResult r = resolve(std::move(parsed.model));
    CHECK(r.diagnostics.empty());
    for (const Relationship& rel : r.model.relationships) {
        REQUIRE(rel.source_index.has_value());
        REQUIRE(rel.target_index.has_value());
        const EndpointConstraint& c = endpoint_constraint(rel.kind);
        const ConceptInstance& source = r.model.instances[*rel.source_index];
        const ConceptInstance& target = r.model.instances[*rel.target_index];
        CHECK(std::find(c.source_classes.begin(), c.source_classes.end(), source.cls) !=
              c.source_classes.end());
        CHECK(std::find(c.target_classes.begin(), c.target_classes.end(), target.cls) !=
              c.target_classes.end());
    }
}
