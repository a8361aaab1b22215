#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagdirac/io.hpp"
#include "flagdirac/rules.hpp"
#include "flagdirac/tables.hpp"

using namespace flagdirac;

namespace {

std::string golden(const std::string& name) {
    return read_text_file(std::string(GOLDEN_DIR) + "/" + name);
}

CaseTag tag_from_label(const std::string& label) {
    static const std::map<std::string, CaseTag> lookup = {{"1", CaseTag::c1},
                                                          {"2", CaseTag::c2},
                                                          {"3", CaseTag::c3},
                                                          {"4.1", CaseTag::c41},
                                                          {"4.2", CaseTag::c42}};
    const auto it = lookup.find(label);
    REQUIRE(it != lookup.end());
    return it->second;
}

using Shape = std::array<CaseTag, 3>;

Shape canonical(const Shape& s) {
    const Shape swapped = {s[1], s[0], s[2]};
    return std::min(s, swapped);
}

}  // namespace

TEST_CASE("stored tables match their committed renders") {
    CHECK(render_table(involutivity_table()) == golden("involutivity.txt"));
    CHECK(render_table(integrability_table()) == golden("integrability.txt"));
    CHECK(render_table(real_index_table(0)) == golden("real_index_0.txt"));
    CHECK(render_table(real_index_table(2)) == golden("real_index_2.txt"));
    CHECK(render_table(real_index_table(4)) == golden("real_index_4.txt"));
    CHECK(render_table(real_index_table(6)) == golden("real_index_6.txt"));
}

TEST_CASE("rank listings match their committed renders") {
    CHECK(sl2_listing() == golden("sl2.txt"));
    CHECK(sl3_listing() == golden("sl3.txt"));
}

TEST_CASE("the combined listing stacks the four tables") {
    const std::string combined = sl3_listing();
    CHECK(combined == render_table(sl3_table(0)) + "\n" + render_table(sl3_table(2)) + "\n" +
                          render_table(sl3_table(4)) + "\n" + render_table(sl3_table(6)));
}

TEST_CASE("generated rank-two rows have the documented shape") {
    const CaseTable zero = sl3_table(0);
    CHECK(zero.rows.empty());
    CHECK(zero.notes.size() == 2);

    const CaseTable two = sl3_table(2);
    REQUIRE(two.rows.size() == 3);
    CHECK(two.rows[0].alpha == std::vector<std::string>{"1", "2", "4.1"});
    CHECK(two.rows[0].beta == std::vector<std::string>{"3"});
    CHECK(two.rows[0].sum == std::vector<std::string>{"3"});
    CHECK(two.rows[1].alpha == std::vector<std::string>{"1"});
    CHECK(two.rows[1].beta == std::vector<std::string>{"4.2"});
    CHECK(two.rows[1].sum == std::vector<std::string>{"4.2"});
    CHECK(two.rows[2].alpha == std::vector<std::string>{"4.1"});
    REQUIRE(two.notes.size() == 6);
    CHECK(two.notes[0] == "row 1: e_b = e_sum");
    CHECK(two.notes[3] == "also involutive: (3, 3, 1 v 2 v 4.1) when e_a = -e_b");

    const CaseTable four = sl3_table(4);
    REQUIRE(four.rows.size() == 2);
    CHECK(four.rows[0].sum == std::vector<std::string>{"3", "4.2"});
    CHECK(four.rows[1].beta == std::vector<std::string>{"3", "4.2"});
    CHECK(four.notes == std::vector<std::string>{"every row holds without parameter conditions"});

    const CaseTable six = sl3_table(6);
    REQUIRE(six.rows.size() == 7);
    CHECK(six.rows[0].alpha == std::vector<std::string>{"1"});
    CHECK(six.rows[6].alpha == std::vector<std::string>{"4.1"});
    CHECK(six.rows[6].beta == std::vector<std::string>{"4.1"});
    CHECK(six.rows[6].sum == std::vector<std::string>{"4.1"});
    REQUIRE(six.notes.size() == 3);
    CHECK(six.notes[0] == "row 7: r_sum = r_a + r_b");
    CHECK(six.notes[1] == "also involutive: (4.1, 4.1, 1) when r_a = -r_b");
    CHECK(six.notes[2] == "also involutive: (1, 4.1, 4.1) when r_b = r_sum");
}

TEST_CASE("listed rows and notes all describe involutive shapes") {
    // The rows mentioned only in notes still stand for live rules.
    CHECK(triple_predicate(Case41{Scalar(1)}, Case41{Scalar(-1)}, Case1{}));
    CHECK_FALSE(triple_predicate(Case41{Scalar(1)}, Case41{Scalar(2)}, Case1{}));
    CHECK(triple_predicate(Case1{}, Case41{Scalar(2)}, Case41{Scalar(2)}));
    CHECK_FALSE(triple_predicate(Case1{}, Case41{Scalar(2)}, Case41{Scalar(3)}));
    CHECK(triple_predicate(Case3{1}, Case3{-1}, Case41{Scalar(7)}));
    CHECK(triple_predicate(Case42{Scalar(2), Scalar(3)}, Case42{Scalar(-2), Scalar(3)}, Case1{}));
    // Representative instances for the printed rows.
    CHECK(triple_predicate(Case3{1}, Case2{}, Case3{1}));
    CHECK_FALSE(triple_predicate(Case3{1}, Case2{}, Case3{-1}));
    CHECK(triple_predicate(Case2{}, Case2{}, Case42{Scalar(5), Scalar(5)}));
    CHECK(triple_predicate(Case2{}, Case41{Scalar(9)}, Case2{}));
}

TEST_CASE("the per-index tables cover the whole rule set") {
    std::set<Shape> from_tables;
    for (int ri : {0, 2, 4, 6}) {
        const CaseTable table = real_index_table(ri);
        for (const TableRow& row : table.rows) {
            for (const std::string& a : row.alpha) {
                for (const std::string& b : row.beta) {
                    for (const std::string& s : row.sum) {
                        from_tables.insert(
                            canonical({tag_from_label(a), tag_from_label(b), tag_from_label(s)}));
                    }
                }
            }
        }
    }
    std::set<Shape> from_rules;
    for (const InvolutivityRule& rule : involutivity_rules()) {
        from_rules.insert(canonical(rule.shape));
    }
    CHECK(from_rules.size() == 27);
    CHECK(from_tables == from_rules);
}

TEST_CASE("odd or oversized real indices are rejected") {
    CHECK_THROWS_AS(real_index_table(3), std::invalid_argument);
    CHECK_THROWS_AS(real_index_table(8), std::invalid_argument);
    CHECK_THROWS_AS(sl3_table(5), std::invalid_argument);
    CHECK_THROWS_AS(sl3_table(-2), std::invalid_argument);
}
