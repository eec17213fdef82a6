#include "am4rre/applicability.hpp"

#include "am4rre/parser.hpp"
#include "am4rre/resolver.hpp"
#include "am4rre/validator.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace am4rre;
using namespace am4rre::testing;

namespace {

ArtifactModel resolved_model(ArtifactModel m) {
    ResolveResult r = resolve(std::move(m));
    REQUIRE(r.diagnostics.empty());
    return std::move(r.model);
}

} // namespace

TEST_CASE("fixture: both acts applicable, with the expected evidence") {
    ArtifactModel m = load_fixture_resolved();
    ApplicabilityResult result = compute_applicability(m);

    REQUIRE(result.acts.size() == 2);
    const ActApplicability* gdpr = result.for_act("GDPR");
    REQUIRE(gdpr);
    CHECK(gdpr->applicable);
    std::vector<EvidenceItem> expected_jurisdiction = {
        {"EU_domestic", "loc:EU", "acme_hosting"},
        {"EU_domestic", "loc:EU", "alice"},
        {"EU_domestic", "loc:EU", "portal_processing"},
    };
    CHECK(gdpr->jurisdiction_evidence == expected_jurisdiction);
    std::vector<EvidenceItem> expected_field = {
        {"personal_data_protection", "intent:process-personal-data", "portal_intents"},
    };
    CHECK(gdpr->field_evidence == expected_field);

    CHECK(result.is_applicable("EDPB_07_2020"));
    CHECK(result.priority == std::vector<std::string>{"GDPR", "EDPB_07_2020"});
    CHECK(result.diagnostics.empty());
}

TEST_CASE("acts with no context to match are not applicable") {
    ArtifactModel m;
    m.instances.push_back(make_act("A", ActKind::Regulation));
    m.instances.push_back(make_instance("j", ConceptClass::Jurisdiction,
                                        {{"criteria", tags({"loc:EU"})}}));
    m.instances.push_back(make_instance("f", ConceptClass::FieldOfLaw,
                                        {{"criteria", tags({"intent:marketing"})}}));
    add_rel(m, RelationshipKind::AppliesWithin, "A", "j");
    add_rel(m, RelationshipKind::BelongsToField, "A", "f");
    ApplicabilityResult result = compute_applicability(resolved_model(std::move(m)));
    REQUIRE(result.acts.size() == 1);
    CHECK(!result.acts[0].applicable);
    CHECK(result.acts[0].jurisdiction_evidence.empty());
    CHECK(result.acts[0].field_evidence.empty());
    CHECK(result.priority.empty());
    CHECK(result.diagnostics.empty());
}

TEST_CASE("missing links are reported as incompleteness warnings") {
    ArtifactModel m;
    m.instances.push_back(make_act("A", ActKind::Regulation));
    ApplicabilityResult result = compute_applicability(resolved_model(std::move(m)));
    CHECK(!result.acts.at(0).applicable);
    std::vector<std::string> codes = diag_codes(result.diagnostics);
    CHECK(codes == std::vector<std::string>{"E-APP-001", "E-APP-002"});
    for (const Diagnostic& d : result.diagnostics)
        CHECK(d.severity == Severity::Warning);
}

TEST_CASE("priority of a single applicable act") {
    ArtifactModel m;
    m.instances.push_back(make_act("A", ActKind::Guideline));
    m.instances.push_back(make_instance("j", ConceptClass::Jurisdiction,
                                        {{"criteria", tags({"loc:EU"})}}));
    m.instances.push_back(make_instance("f", ConceptClass::FieldOfLaw,
                                        {{"criteria", tags({"intent:marketing"})}}));
    m.instances.push_back(make_instance(
        "s", ConceptClass::Stakeholder,
        {{"person", PersonType::Natural}, {"location", tags({"loc:EU"})}}));
    m.instances.push_back(make_instance("i", ConceptClass::StatementOfIntent,
                                        {{"intents", tags({"intent:marketing"})}}));
    add_rel(m, RelationshipKind::AppliesWithin, "A", "j");
    add_rel(m, RelationshipKind::BelongsToField, "A", "f");
    ApplicabilityResult result = compute_applicability(resolved_model(std::move(m)));
    CHECK(result.priority == std::vector<std::string>{"A"});
}

namespace {

// Three acts (one regulation, two supporting guidelines), declared in the
// given order; everything applicable.
ArtifactModel three_act_model(const std::vector<std::string>& declaration_order) {
    ArtifactModel m;
    for (const std::string& id : declaration_order)
        m.instances.push_back(
            make_act(id, id == "R" ? ActKind::Regulation : ActKind::Guideline));
    m.instances.push_back(make_instance("j", ConceptClass::Jurisdiction,
                                        {{"criteria", tags({"loc:EU"})}}));
    m.instances.push_back(make_instance("f", ConceptClass::FieldOfLaw,
                                        {{"criteria", tags({"intent:marketing"})}}));
    m.instances.push_back(make_instance(
        "s", ConceptClass::Stakeholder,
        {{"person", PersonType::Natural}, {"location", tags({"loc:EU"})}}));
    m.instances.push_back(make_instance("i", ConceptClass::StatementOfIntent,
                                        {{"intents", tags({"intent:marketing"})}}));
    for (const std::string& id : declaration_order) {
        add_rel(m, RelationshipKind::AppliesWithin, id, "j");
        add_rel(m, RelationshipKind::BelongsToField, id, "f");
        if (id != "R")
            add_rel(m, RelationshipKind::EnsuresConsistentApplicationOf, id, "R");
    }
    return m;
}

} // namespace

TEST_CASE("two guidelines supporting one regulation keep declaration order") {
    for (const auto& order :
         std::vector<std::vector<std::string>>{{"R", "G1", "G2"},
                                               {"G1", "R", "G2"},
                                               {"G1", "G2", "R"},
                                               {"R", "G2", "G1"},
                                               {"G2", "R", "G1"},
                                               {"G2", "G1", "R"}}) {
        ArtifactModel m = resolved_model(three_act_model(order));
        REQUIRE(check(m).empty());
        ApplicabilityResult result = compute_applicability(m);
        REQUIRE(result.priority.size() == 3);
        CHECK(result.priority[0] == "R");
        // The guidelines follow in their declaration order.
        bool g1_first = false;
        for (const std::string& id : order) {
            if (id == "G1") { g1_first = true; break; }
            if (id == "G2") break;
        }
        if (g1_first)
            CHECK(result.priority == std::vector<std::string>{"R", "G1", "G2"});
        else
            CHECK(result.priority == std::vector<std::string>{"R", "G2", "G1"});
    }
}

TEST_CASE("a supporter is pulled ahead of unrelated acts of the same force") {
    // G_plain is declared before G_support, but G_support backs R.
    ArtifactModel m;
    m.instances.push_back(make_act("R", ActKind::Regulation));
    m.instances.push_back(make_act("G_plain", ActKind::Guideline));
    m.instances.push_back(make_act("G_support", ActKind::Guideline));
    m.instances.push_back(make_instance("j", ConceptClass::Jurisdiction,
                                        {{"criteria", tags({"loc:EU"})}}));
    m.instances.push_back(make_instance("f", ConceptClass::FieldOfLaw,
                                        {{"criteria", tags({"intent:marketing"})}}));
    m.instances.push_back(make_instance(
        "s", ConceptClass::Stakeholder,
        {{"person", PersonType::Natural}, {"location", tags({"loc:EU"})}}));
    m.instances.push_back(make_instance("i", ConceptClass::StatementOfIntent,
                                        {{"intents", tags({"intent:marketing"})}}));
    for (const char* id : {"R", "G_plain", "G_support"}) {
        add_rel(m, RelationshipKind::AppliesWithin, id, "j");
        add_rel(m, RelationshipKind::BelongsToField, id, "f");
    }
    add_rel(m, RelationshipKind::EnsuresConsistentApplicationOf, "G_support", "R");
    ApplicabilityResult result = compute_applicability(resolved_model(std::move(m)));
    CHECK(result.priority == std::vector<std::string>{"R", "G_support", "G_plain"});
}

TEST_CASE("engine matches the brute-force oracle on random models") {
    std::mt19937 rng(424242);
    for (int i = 0; i < 150; ++i) {
        ArtifactModel m = resolved_model(random_applicability_model(rng));
        REQUIRE(check(m).empty()); // the generator keeps the precondition
        ApplicabilityResult engine = compute_applicability(m);
        ApplicabilityResult oracle = oracle_applicability(m);
        REQUIRE(applicability_equal(engine, oracle));
    }
}

TEST_CASE("adding context never turns an applicable act inapplicable") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        ArtifactModel m = resolved_model(random_applicability_model(rng));
        ApplicabilityResult before = compute_applicability(m);

        ArtifactModel grown = m;
        grown.instances.push_back(make_instance(
            "extra_stk", ConceptClass::Stakeholder,
            {{"person", PersonType::Natural},
             {"location", random_tags(rng, loc_pool(), 1, 3)}}));
        grown.instances.push_back(make_instance(
            "extra_int", ConceptClass::StatementOfIntent,
            {{"intents", random_tags(rng, intent_pool(), 1, 3)}}));
        ApplicabilityResult after = compute_applicability(resolved_model(std::move(grown)));

        for (const ActApplicability& a : before.acts)
            if (a.applicable)
                CHECK(after.is_applicable(a.act_id));
    }
}

TEST_CASE("priority is a rank-sorted permutation of the applicable set") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        ArtifactModel m = resolved_model(random_applicability_model(rng));
        ApplicabilityResult result = compute_applicability(m);
        std::set<std::string> applicable;
        for (const ActApplicability& a : result.acts)
            if (a.applicable)
                applicable.insert(a.act_id);
        CHECK(result.priority.size() == applicable.size());
        int last_rank = -1;
        for (const std::string& id : result.priority) {
            CHECK(applicable.count(id) == 1);
            applicable.erase(id);
            int rank = force_rank(*m.find(id)->act_kind());
            CHECK(rank >= last_rank);
            last_rank = rank;
        }
    }
}
