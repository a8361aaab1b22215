#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagdirac/construct.hpp"
#include "flagdirac/rules.hpp"

using namespace flagdirac;

namespace {

int tag_real_index(CaseTag tag) {
    return (tag == CaseTag::c3 || tag == CaseTag::c42) ? 0 : 2;
}

std::vector<PerRootCase> reduced_menu() {
    return {Case1{},          Case2{},           Case3{1},
            Case3{-1},        Case41{Scalar(1)}, Case41{Scalar(-1)},
            Case42{Scalar(1), Scalar(0)}, Case42{Scalar(2), Scalar(-1)}};
}

}  // namespace

TEST_CASE("rule table is coherent") {
    const auto& rules = involutivity_rules();
    CHECK(rules.size() == 27);
    std::set<std::string> ids;
    for (const InvolutivityRule& rule : rules) {
        CHECK(ids.insert(rule.id()).second);
        int ri = 0;
        for (CaseTag tag : rule.shape) {
            ri += tag_real_index(tag);
        }
        CHECK((ri == 0 || ri == 2 || ri == 4 || ri == 6));
        CHECK_FALSE(rule.condition_text.empty());
        CHECK(rule.holds != nullptr);
        // id is the comma-joined shape label.
        const std::string expected = case_label(rule.shape[0]) + "," +
                                     case_label(rule.shape[1]) + "," +
                                     case_label(rule.shape[2]);
        CHECK(rule.id() == expected);
    }
}

TEST_CASE("predicate is symmetric in the first two slots") {
    const std::vector<PerRootCase> menu = reduced_menu();
    for (const PerRootCase& a : menu) {
        for (const PerRootCase& b : menu) {
            for (const PerRootCase& s : menu) {
                INFO(case_description(a) << " | " << case_description(b) << " | "
                                         << case_description(s));
                CHECK(triple_predicate(a, b, s) == triple_predicate(b, a, s));
            }
        }
    }
}

TEST_CASE("table and oracle verdicts agree across a reduced grid") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    CaseGrid grid;
    grid.menu = reduced_menu();
    EnumerationOptions options;
    options.cap = 1000;
    int seen = 0;
    int involutive_count = 0;
    enumerate_assignments(rs, form, grid, options, [&](const EnumeratedItem& item) {
        ++seen;
        if (item.oracle_involutive) {
            ++involutive_count;
        }
        INFO(case_description(item.structure.assignment[0])
             << " | " << case_description(item.structure.assignment[1]) << " | "
             << case_description(item.structure.assignment[2]));
        CHECK(item.oracle_involutive == item.table_involutive);
    });
    CHECK(seen == 512);
    CHECK(involutive_count > 0);
    CHECK(involutive_count < seen);
}

TEST_CASE("three complex pairs fail on exactly two sign patterns") {
    int involutive_count = 0;
    for (int ea : {1, -1}) {
        for (int eb : {1, -1}) {
            for (int es : {1, -1}) {
                const bool ok = triple_predicate(Case3{ea}, Case3{eb}, Case3{es});
                const bool expected_failure =
                    (ea == 1 && eb == 1 && es == -1) || (ea == -1 && eb == -1 && es == 1);
                CHECK(ok == !expected_failure);
                if (ok) {
                    ++involutive_count;
                }
            }
        }
    }
    CHECK(involutive_count == 6);
}

TEST_CASE("documented spot verdicts") {
    CHECK(triple_predicate(Case3{1}, Case3{-1}, Case1{}));
    CHECK_FALSE(triple_predicate(Case42{Scalar(1), Scalar(0)}, Case42{Scalar(1), Scalar(0)},
                                 Case1{}));
    CHECK(triple_predicate(Case41{Scalar(1)}, Case41{Scalar(2)}, Case41{Scalar(3)}));
    CHECK_FALSE(triple_predicate(Case41{Scalar(1)}, Case41{Scalar(2)}, Case41{Scalar(4)}));
    CHECK(triple_predicate(Case1{}, Case41{Scalar(2)}, Case41{Scalar(2)}));
    CHECK(triple_predicate(Case41{Scalar(1)}, Case41{Scalar(-1)}, Case1{}));
    CHECK_FALSE(triple_predicate(Case41{Scalar(1)}, Case41{Scalar(2)}, Case1{}));
}

TEST_CASE("mixed tangent and complex slots never close over a real sum") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    for (const PerRootCase& first : {PerRootCase{Case1{}}, PerRootCase{Case2{}}}) {
        for (int eps : {1, -1}) {
            for (int r : {-2, -1, 1, 2}) {
                const PerRootCase second = Case3{eps};
                const PerRootCase third = Case41{Scalar(r)};
                CHECK_FALSE(triple_predicate(first, second, third));
                CHECK_FALSE(triple_predicate(second, first, third));
                const DiracStructure structure = make_structure(rs, {first, second, third});
                CHECK_FALSE(is_involutive_oracle(structure, form).involutive);
                CHECK_FALSE(is_involutive_table(structure, form).involutive);
            }
        }
    }
}

TEST_CASE("table result carries rule ids and witnesses") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const DiracStructure structure = make_structure(rs, {Case3{1}, Case3{1}, Case1{}});
    const TableResult result = is_involutive_table(structure, form);
    CHECK_FALSE(result.involutive);
    REQUIRE(result.verdicts.size() == 1);
    CHECK_FALSE(result.verdicts[0].involutive);
    CHECK(result.verdicts[0].condition_id == "3,3,1");
    REQUIRE(result.verdicts[0].witness.has_value());
    CHECK(std::abs(result.verdicts[0].witness->value) > 1e-9);

    const DiracStructure good = make_structure(rs, {Case3{1}, Case3{-1}, Case1{}});
    const TableResult ok = is_involutive_table(good, form);
    CHECK(ok.involutive);
    REQUIRE(ok.verdicts.size() == 1);
    CHECK(ok.verdicts[0].involutive);
    CHECK_FALSE(ok.verdicts[0].witness.has_value());
}

TEST_CASE("unknown shapes report no matching row") {
    const PredicateOutcome outcome =
        triple_predicate_detail(Case1{}, Case3{1}, Case41{Scalar(1)});
    CHECK_FALSE(outcome.involutive);
    CHECK(outcome.condition_id == "no matching row");
}

TEST_CASE("structure and form must share the root system") {
    const RootSystem a2 = build_root_system({'A', 2});
    const RootSystem b2 = build_root_system({'B', 2});
    const StructureConstants sc = structure_constants(b2);
    const NijenhuisForm form(b2, sc);
    const DiracStructure structure = make_structure(a2, {Case1{}, Case1{}, Case1{}});
    CHECK_THROWS_AS(is_involutive_table(structure, form), std::invalid_argument);
}
