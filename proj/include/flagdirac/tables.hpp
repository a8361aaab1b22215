#pragma once

#include <string>
#include <vector>

namespace flagdirac {

// One printed row of a case table. A slot lists every case label it admits;
// slots with several labels render as "1 v 2 v 4.1". An empty condition
// means the table has no condition column.
struct TableRow {
    std::vector<std::string> alpha;
    std::vector<std::string> beta;
    std::vector<std::string> sum;
    std::string condition;
};

struct CaseTable {
    std::string title;
    std::vector<std::string> header;
    std::vector<TableRow> rows;
    std::vector<std::string> notes;
};

// Stored reference tables. Conditions on the per-index tables are taken from
// the involutivity rule set, so the two stay consistent by construction.
CaseTable involutivity_table();
CaseTable integrability_table();
CaseTable real_index_table(int real_index);

// Listings for the rank-one and rank-two algebras. Rows and conditions are
// regenerated from the rule set; only the printed ordering is fixed.
std::string sl2_listing();
CaseTable sl3_table(int real_index);
std::string sl3_listing();

std::string render_table(const CaseTable& table);

}  // namespace flagdirac
