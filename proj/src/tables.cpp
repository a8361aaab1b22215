#include "flagdirac/tables.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "flagdirac/construct.hpp"
#include "flagdirac/rules.hpp"

namespace flagdirac {

namespace {

using Shape = std::array<CaseTag, 3>;

constexpr std::array<CaseTag, 5> kAllTags = {CaseTag::c1, CaseTag::c2, CaseTag::c3,
                                             CaseTag::c41, CaseTag::c42};

int tag_real_index(CaseTag t) {
    return (t == CaseTag::c3 || t == CaseTag::c42) ? 0 : 2;
}

Shape swap_outer(const Shape& s) {
    return {s[1], s[0], s[2]};
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
    std::size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string::npos) {
        text.replace(pos, from.size(), to);
        pos += to.size();
    }
    return text;
}

// Conditions read through the swapped row still name the slots of the row as
// printed, so the _a and _b suffixes trade places.
std::string swap_slot_labels(std::string text) {
    const std::string marker = "\x01";
    text = replace_all(std::move(text), "_a", marker);
    text = replace_all(std::move(text), "_b", "_a");
    return replace_all(std::move(text), marker, "_b");
}

const std::map<Shape, const InvolutivityRule*>& shape_index() {
    static const std::map<Shape, const InvolutivityRule*> index = [] {
        std::map<Shape, const InvolutivityRule*> out;
        for (const InvolutivityRule& rule : involutivity_rules()) {
            out.emplace(rule.shape, &rule);
        }
        return out;
    }();
    return index;
}

struct ShapeEntry {
    Shape shape;
    std::string condition;
    bool direct;
};

std::optional<ShapeEntry> lookup_shape(const Shape& s) {
    const auto& index = shape_index();
    if (const auto it = index.find(s); it != index.end()) {
        return ShapeEntry{s, it->second->condition_text, true};
    }
    if (const auto it = index.find(swap_outer(s)); it != index.end()) {
        return ShapeEntry{s, swap_slot_labels(it->second->condition_text), false};
    }
    return std::nullopt;
}

std::string shape_text(const Shape& s) {
    return case_label(s[0]) + "," + case_label(s[1]) + "," + case_label(s[2]);
}

std::vector<std::string> labels_of(const std::vector<CaseTag>& tags) {
    std::vector<std::string> out;
    out.reserve(tags.size());
    for (CaseTag t : tags) {
        out.push_back(case_label(t));
    }
    return out;
}

// Builds a row whose slots may admit several cases, checking that every
// admitted combination carries the same rule condition.
TableRow composite_row(const std::vector<CaseTag>& alphas, const std::vector<CaseTag>& betas,
                       const std::vector<CaseTag>& sums) {
    std::optional<std::string> condition;
    for (CaseTag a : alphas) {
        for (CaseTag b : betas) {
            for (CaseTag s : sums) {
                const auto entry = lookup_shape({a, b, s});
                if (!entry) {
                    throw std::logic_error("no involutivity rule covers shape " +
                                           shape_text({a, b, s}));
                }
                if (condition && *condition != entry->condition) {
                    throw std::logic_error("composite row mixes conditions at shape " +
                                           shape_text({a, b, s}));
                }
                condition = entry->condition;
            }
        }
    }
    return {labels_of(alphas), labels_of(betas), labels_of(sums), *condition};
}

struct WorkRow {
    std::array<std::vector<CaseTag>, 3> slots;
    std::string condition;
};

TableRow to_table_row(const WorkRow& w) {
    return {labels_of(w.slots[0]), labels_of(w.slots[1]), labels_of(w.slots[2]), w.condition};
}

std::string work_row_text(const WorkRow& w) {
    auto slot_text = [](const std::vector<CaseTag>& tags) {
        std::string text;
        for (std::size_t i = 0; i < tags.size(); ++i) {
            if (i > 0) {
                text += " v ";
            }
            text += case_label(tags[i]);
        }
        return text;
    };
    return "(" + slot_text(w.slots[0]) + ", " + slot_text(w.slots[1]) + ", " +
           slot_text(w.slots[2]) + ")";
}

// Collapses rows that agree in condition and in every slot but one.
void merge_slot(std::vector<WorkRow>& rows, std::size_t slot) {
    std::vector<WorkRow> merged;
    for (WorkRow& r : rows) {
        const auto match = std::find_if(merged.begin(), merged.end(), [&](const WorkRow& m) {
            if (m.condition != r.condition) {
                return false;
            }
            for (std::size_t k = 0; k < 3; ++k) {
                if (k != slot && m.slots[k] != r.slots[k]) {
                    return false;
                }
            }
            return true;
        });
        if (match == merged.end()) {
            merged.push_back(std::move(r));
            continue;
        }
        auto& tags = match->slots[slot];
        tags.insert(tags.end(), r.slots[slot].begin(), r.slots[slot].end());
        std::sort(tags.begin(), tags.end());
        tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    }
    rows = std::move(merged);
}

void merge_all_slots(std::vector<WorkRow>& rows) {
    for (std::size_t slot = 0; slot < 3; ++slot) {
        merge_slot(rows, slot);
    }
    std::sort(rows.begin(), rows.end(), [](const WorkRow& x, const WorkRow& y) {
        return std::tie(x.slots[1], x.slots[2], x.slots[0]) <
               std::tie(y.slots[1], y.slots[2], y.slots[0]);
    });
}

std::vector<WorkRow> to_work_rows(const std::vector<ShapeEntry>& entries) {
    std::vector<WorkRow> rows;
    rows.reserve(entries.size());
    for (const ShapeEntry& e : entries) {
        rows.push_back({{std::vector<CaseTag>{e.shape[0]},
                         std::vector<CaseTag>{e.shape[1]},
                         std::vector<CaseTag>{e.shape[2]}},
                        e.condition});
    }
    return rows;
}

std::vector<ShapeEntry> involutive_shapes(int real_index) {
    std::vector<ShapeEntry> out;
    for (CaseTag a : kAllTags) {
        for (CaseTag b : kAllTags) {
            for (CaseTag s : kAllTags) {
                if (tag_real_index(a) + tag_real_index(b) + tag_real_index(s) != real_index) {
                    continue;
                }
                if (const auto entry = lookup_shape({a, b, s})) {
                    out.push_back(*entry);
                }
            }
        }
    }
    return out;
}

// One shape per alpha-beta swap class. The listing leads each row with a
// real-index-two case in the alpha slot whenever the class has such a member;
// ties (and classes without one) fall back to the member that matches a rule
// row directly.
std::vector<ShapeEntry> swap_class_representatives(const std::vector<ShapeEntry>& shapes) {
    std::map<Shape, std::vector<ShapeEntry>> classes;
    for (const ShapeEntry& e : shapes) {
        classes[std::min(e.shape, swap_outer(e.shape))].push_back(e);
    }
    std::vector<ShapeEntry> reps;
    for (auto& [key, members] : classes) {
        std::vector<ShapeEntry> leading;
        for (const ShapeEntry& e : members) {
            if (tag_real_index(e.shape[0]) == 2) {
                leading.push_back(e);
            }
        }
        const std::vector<ShapeEntry>& pool = leading.empty() ? members : leading;
        const auto it = std::find_if(pool.begin(), pool.end(),
                                     [](const ShapeEntry& e) { return e.direct; });
        reps.push_back(it != pool.end() ? *it : pool.front());
    }
    return reps;
}

std::vector<std::string> condition_notes(const std::vector<TableRow>& rows) {
    std::vector<std::string> notes;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].condition != "none") {
            notes.push_back("row " + std::to_string(i + 1) + ": " + rows[i].condition);
        }
    }
    if (notes.empty()) {
        notes.push_back("every row holds without parameter conditions");
    }
    return notes;
}

TableRow literal_row(std::vector<std::string> alpha, std::vector<std::string> beta,
                     std::vector<std::string> sum, std::string condition) {
    return {std::move(alpha), std::move(beta), std::move(sum), std::move(condition)};
}

// Splits the swap-class representatives into the rows of the compact listing
// and the leftover classes the listing mentions in its notes. The compact
// listing keeps the sum slot free of index-two cases and, at index six, a
// fixed row order; both choices are display conventions, so the leftovers
// stay part of the classification and are reported alongside the rows.
struct CompactListing {
    std::vector<WorkRow> rows;
    std::vector<WorkRow> extras;
};

CompactListing compact_sl3_listing(int real_index) {
    constexpr CaseTag c1 = CaseTag::c1;
    constexpr CaseTag c2 = CaseTag::c2;
    constexpr CaseTag c41 = CaseTag::c41;
    const std::vector<ShapeEntry> reps = swap_class_representatives(involutive_shapes(real_index));
    CompactListing listing;
    if (real_index == 6) {
        const std::vector<Shape> row_order = {
            {c1, c1, c1},  {c2, c1, c2},  {c2, c2, c1},    {c2, c2, c2},
            {c2, c41, c2}, {c2, c2, c41}, {c41, c41, c41},
        };
        std::vector<ShapeEntry> remaining = reps;
        for (const Shape& s : row_order) {
            const auto it = std::find_if(remaining.begin(), remaining.end(),
                                         [&](const ShapeEntry& e) { return e.shape == s; });
            if (it == remaining.end()) {
                throw std::logic_error("rule table lost listing shape " + shape_text(s));
            }
            listing.rows.push_back(to_work_rows({*it}).front());
            remaining.erase(it);
        }
        listing.extras = to_work_rows(remaining);
    } else {
        std::vector<ShapeEntry> kept;
        std::vector<ShapeEntry> extras;
        for (const ShapeEntry& e : reps) {
            const bool sum_slot_only = tag_real_index(e.shape[2]) == 2 &&
                                       tag_real_index(e.shape[0]) == 0 &&
                                       tag_real_index(e.shape[1]) == 0;
            (sum_slot_only ? extras : kept).push_back(e);
        }
        listing.rows = to_work_rows(kept);
        merge_all_slots(listing.rows);
        listing.extras = to_work_rows(extras);
    }
    merge_all_slots(listing.extras);
    return listing;
}

}  // namespace

CaseTable involutivity_table() {
    CaseTable table;
    table.title = "Involutivity conditions";
    table.header = {"L_alpha", "L_beta", "L_alpha+beta", "Nij = 0"};
    table.rows = {
        literal_row({"1"}, {"3"}, {"4"}, "e_b = e_sum"),
        literal_row({"1"}, {"4"}, {"4"}, "a1/b1 = a2/b2"),
        literal_row({"2"}, {"3"}, {"4"}, "e_b = e_sum"),
        literal_row({"3"}, {"3"}, {"1"}, "e_a = -e_b"),
        literal_row({"3"}, {"3"}, {"2"}, "e_a = -e_b"),
        literal_row({"3"}, {"3"}, {"3"}, "e_sum - e_a - e_b + e_a e_b e_sum = 0"),
        literal_row({"3"}, {"3"}, {"4"}, "e_a = -e_b"),
        literal_row({"3"}, {"4"}, {"3"}, "e_a = e_sum"),
        literal_row({"4"}, {"4"}, {"1"}, "a1/b1 = -a2/b2"),
        literal_row({"4"}, {"4"}, {"4"}, "a1 a2 b3 - a1 b2 a3 - b1 a2 a3 = 0"),
    };
    table.notes = {
        "case 4 covers both parameter regimes, refined later into 4.1 and 4.2",
        "subscripts 1, 2, 3 index the alpha, beta, alpha+beta slots",
    };
    return table;
}

CaseTable integrability_table() {
    CaseTable table;
    table.title = "Integrability conditions";
    table.header = {"J_alpha", "J_beta", "J_alpha+beta"};
    table.rows = {
        literal_row({"complex"}, {"complex"}, {"complex"}, ""),
        literal_row({"symplectic"}, {"complex (+/-J0)"}, {"complex (+/-J0)"}, ""),
        literal_row({"complex (+/-J0)"}, {"symplectic"}, {"complex (+/-J0)"}, ""),
        literal_row({"complex (+/-J0)"}, {"complex (-/+J0)"}, {"symplectic"}, ""),
        literal_row({"symplectic"}, {"symplectic"}, {"symplectic"}, ""),
    };
    table.notes = {
        "sign combinations for the first row: (+/-J0, +/-J0, +/-J0), (+/-J0, -/+J0, +/-J0), "
        "(+/-J0, -/+J0, -/+J0)",
        "extra condition for the last row: a_sum x_a x_b - a_b x_a x_sum - a_a x_b x_sum = 0 "
        "and x_a x_b - x_a x_sum - x_b x_sum = 0",
    };
    return table;
}

CaseTable real_index_table(int real_index) {
    constexpr CaseTag c1 = CaseTag::c1;
    constexpr CaseTag c2 = CaseTag::c2;
    constexpr CaseTag c3 = CaseTag::c3;
    constexpr CaseTag c41 = CaseTag::c41;
    constexpr CaseTag c42 = CaseTag::c42;
    CaseTable table;
    table.title = "Involutive triples of real index " + std::to_string(real_index);
    table.header = {"L_alpha", "L_beta", "L_alpha+beta", "Nij = 0"};
    switch (real_index) {
        case 0:
            table.rows = {
                composite_row({c3}, {c3}, {c3}),
                composite_row({c3}, {c3}, {c42}),
                composite_row({c3}, {c42}, {c3}),
                composite_row({c42}, {c42}, {c42}),
            };
            break;
        case 2:
            table.rows = {
                composite_row({c3}, {c3}, {c1, c2, c41}),
                composite_row({c1, c2, c41}, {c3}, {c3}),
                composite_row({c1}, {c42}, {c42}),
                composite_row({c42}, {c42}, {c1}),
                composite_row({c41}, {c42}, {c42}),
                composite_row({c42}, {c42}, {c41}),
            };
            break;
        case 4:
            table.rows = {
                composite_row({c2}, {c2}, {c3, c42}),
                composite_row({c2}, {c3, c42}, {c2}),
            };
            break;
        case 6:
            table.rows = {
                composite_row({c1}, {c1}, {c1}),
                composite_row({c2}, {c1}, {c2}),
                composite_row({c2}, {c2}, {c1, c2, c41}),
                composite_row({c2}, {c41}, {c2}),
                composite_row({c1}, {c41}, {c41}),
                composite_row({c41}, {c41}, {c1}),
                composite_row({c41}, {c41}, {c41}),
            };
            break;
        default:
            throw std::invalid_argument("real index must be 0, 2, 4 or 6");
    }
    table.notes = {"rows are listed up to swapping the alpha and beta slots"};
    return table;
}

CaseTable sl3_table(int real_index) {
    if (real_index != 0 && real_index != 2 && real_index != 4 && real_index != 6) {
        throw std::invalid_argument("real index must be 0, 2, 4 or 6");
    }
    CaseTable table;
    table.title = "sl(3) involutive triples of real index " + std::to_string(real_index);
    if (real_index == 0) {
        table.notes = {
            "these are the structures coming from invariant generalized complex structures",
            "their triples appear in the real index 0 table",
        };
        return table;
    }
    table.header = {"L_alpha", "L_beta", "L_alpha+beta"};
    const CompactListing listing = compact_sl3_listing(real_index);
    for (const WorkRow& w : listing.rows) {
        table.rows.push_back(to_table_row(w));
    }
    table.notes = condition_notes(table.rows);
    for (const WorkRow& extra : listing.extras) {
        std::string note = "also involutive: " + work_row_text(extra);
        if (extra.condition != "none") {
            note += " when " + extra.condition;
        }
        table.notes.push_back(std::move(note));
    }
    return table;
}

std::string sl3_listing() {
    std::ostringstream out;
    out << render_table(sl3_table(0)) << "\n"
        << render_table(sl3_table(2)) << "\n"
        << render_table(sl3_table(4)) << "\n"
        << render_table(sl3_table(6));
    return out.str();
}

std::string sl2_listing() {
    struct Candidate {
        PerRootCase sample;
        std::string family;
        std::string instance;
    };
    const std::vector<Candidate> candidates = {
        {Case1{}, "case 1", "case 1"},
        {Case2{}, "case 2", "case 2"},
        {Case3{1}, "case 3 (epsilon = +1)", "case 3 (epsilon = +1)"},
        {Case3{-1}, "case 3 (epsilon = -1)", "case 3 (epsilon = -1)"},
        {Case41{Scalar(1)}, "case 4.1", "case 4.1 (r = 1)"},
        {Case42{Scalar(1), Scalar(0)}, "case 4.2", "case 4.2 (x = 1, a = 0)"},
    };
    std::map<int, std::vector<std::string>> by_index;
    std::vector<std::string> reductions;
    for (const Candidate& cand : candidates) {
        by_index[per_root_real_index(cand.sample)].push_back(cand.family);
        reductions.push_back(cand.instance + " -> " +
                             normal_form_label(b_normal_form(cand.sample)));
    }
    std::ostringstream out;
    out << "sl(2) structures on the single root space\n";
    for (const auto& [index, families] : by_index) {
        out << "real index " << index << ":";
        for (std::size_t i = 0; i < families.size(); ++i) {
            out << (i == 0 ? " " : ", ") << families[i];
        }
        out << "\n";
    }
    out << "no root triples, so involutivity holds for every assignment\n";
    out << "up to B-transformation:\n";
    for (const std::string& line : reductions) {
        out << "  " << line << "\n";
    }
    return out.str();
}

std::string render_table(const CaseTable& table) {
    std::ostringstream out;
    out << table.title << "\n";
    const std::size_t columns = table.header.size();
    if (columns > 0) {
        auto slot_text = [](const std::vector<std::string>& labels) {
            std::string text;
            for (std::size_t i = 0; i < labels.size(); ++i) {
                if (i > 0) {
                    text += " v ";
                }
                text += labels[i];
            }
            return text;
        };
        std::vector<std::vector<std::string>> grid;
        grid.push_back(table.header);
        for (const TableRow& r : table.rows) {
            std::vector<std::string> cells = {slot_text(r.alpha), slot_text(r.beta),
                                              slot_text(r.sum)};
            if (columns == 4) {
                cells.push_back(r.condition);
            }
            grid.push_back(std::move(cells));
        }
        std::vector<std::size_t> width(columns, 0);
        for (const auto& cells : grid) {
            for (std::size_t i = 0; i < columns; ++i) {
                width[i] = std::max(width[i], cells[i].size());
            }
        }
        for (std::size_t g = 0; g < grid.size(); ++g) {
            std::string line;
            for (std::size_t i = 0; i < columns; ++i) {
                if (i > 0) {
                    line += " | ";
                }
                line += grid[g][i];
                if (i + 1 < columns) {
                    line.append(width[i] - grid[g][i].size(), ' ');
                }
            }
            out << line << "\n";
            if (g == 0) {
                std::string rule;
                for (std::size_t i = 0; i < columns; ++i) {
                    if (i > 0) {
                        rule += "-+-";
                    }
                    rule.append(width[i], '-');
                }
                out << rule << "\n";
            }
        }
    }
    for (const std::string& note : table.notes) {
        out << "note: " << note << "\n";
    }
    return out.str();
}

}  // namespace flagdirac
