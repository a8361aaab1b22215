#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagdirac/construct.hpp"
#include "flagdirac/dirac.hpp"
#include "flagdirac/io.hpp"
#include "flagdirac/nijenhuis.hpp"
#include "flagdirac/roots.hpp"
#include "flagdirac/rules.hpp"
#include "flagdirac/tables.hpp"
#include "flagdirac/weyl.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace flagdirac;

constexpr int kExitInvolutive = 0;
constexpr int kExitNotInvolutive = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDisagreement = 3;

std::string triple_text(const RootSystem& rs, const SumTriple& t) {
    return rs.root_name(t.alpha) + " + " + rs.root_name(t.beta) + " = " + rs.root_name(t.sum);
}

struct LoadedStructure {
    RootSystem rs;
};

// The returned DiracStructure points into holder.rs, so the holder must stay
// alive as long as the structure.
DiracStructure load_structure(const std::string& path, LoadedStructure& holder) {
    const StructureDocument doc = parse_structure_document(read_text_file(path));
    holder.rs = build_root_system(doc.algebra);
    return bind_structure(doc, holder.rs);
}

std::string algebra_name(const RootSystem& rs) {
    return std::string(1, rs.spec.family) + std::to_string(rs.spec.rank);
}

int run_roots(const std::string& spec_text, bool as_json) {
    const RootSystem rs = build_root_system(parse_cartan_spec(spec_text));
    const std::vector<int> histogram = rs.height_histogram();
    if (as_json) {
        Json out;
        out["algebra"] = algebra_name(rs);
        out["rank"] = rs.rank();
        Json roots = Json::array();
        for (int i = 0; i < rs.size(); ++i) {
            roots.push_back({{"name", rs.root_name(i)}, {"height", rs.height(i)}});
        }
        out["positive_roots"] = std::move(roots);
        Json triples = Json::array();
        for (const SumTriple& t : rs.sum_triples()) {
            triples.push_back({{"alpha", rs.root_name(t.alpha)},
                               {"beta", rs.root_name(t.beta)},
                               {"sum", rs.root_name(t.sum)}});
        }
        out["sum_triples"] = std::move(triples);
        out["height_histogram"] = histogram;
        std::cout << out.dump(2) << "\n";
        return kExitInvolutive;
    }
    std::cout << "algebra " << algebra_name(rs) << ", rank " << rs.rank() << "\n";
    std::cout << "positive roots: " << rs.size() << "\n";
    for (int i = 0; i < rs.size(); ++i) {
        std::cout << "  " << rs.root_name(i) << "  height " << rs.height(i) << "\n";
    }
    std::cout << "sum triples: " << rs.sum_triples().size() << "\n";
    for (const SumTriple& t : rs.sum_triples()) {
        std::cout << "  " << triple_text(rs, t) << "\n";
    }
    std::cout << "height histogram:";
    for (int count : histogram) {
        std::cout << " " << count;
    }
    std::cout << "\n";
    return kExitInvolutive;
}

struct TripleReport {
    SumTriple triple;
    std::optional<bool> table_involutive;
    std::string condition_id;
    std::optional<bool> oracle_involutive;
    std::optional<OracleWitness> witness;
};

int run_verify(const std::string& path, const std::string& method, double tol, bool as_json) {
    LoadedStructure holder;
    const DiracStructure structure = load_structure(path, holder);
    const RootSystem& rs = holder.rs;
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);

    const bool use_table = method != "oracle";
    const bool use_oracle = method != "table";

    std::vector<TripleReport> reports;
    for (const SumTriple& t : rs.sum_triples()) {
        reports.push_back({t, std::nullopt, "", std::nullopt, std::nullopt});
    }
    std::optional<bool> table_involutive;
    std::optional<bool> oracle_involutive;
    if (use_table) {
        const TableResult result = is_involutive_table(structure, form, tol);
        table_involutive = result.involutive;
        for (std::size_t i = 0; i < result.verdicts.size(); ++i) {
            reports[i].table_involutive = result.verdicts[i].involutive;
            reports[i].condition_id = result.verdicts[i].condition_id;
            if (result.verdicts[i].witness) {
                reports[i].witness = result.verdicts[i].witness;
            }
        }
    }
    if (use_oracle) {
        bool all = true;
        for (TripleReport& report : reports) {
            const auto witness = find_triple_witness(form, structure, report.triple, tol);
            report.oracle_involutive = !witness.has_value();
            if (witness && !report.witness) {
                report.witness = witness;
            }
            all = all && !witness.has_value();
        }
        oracle_involutive = all;
    }

    bool agree = true;
    if (use_table && use_oracle) {
        for (const TripleReport& report : reports) {
            agree = agree && (*report.table_involutive == *report.oracle_involutive);
        }
    }
    const bool involutive = use_table ? *table_involutive : *oracle_involutive;
    const SubspaceReport subspaces = subspace_report(structure, tol);

    if (as_json) {
        Json out;
        out["algebra"] = algebra_name(rs);
        out["method"] = method;
        Json assignment = Json::object();
        for (int i = 0; i < rs.size(); ++i) {
            assignment[rs.root_name(i)] = case_description(structure.assignment[i]);
        }
        out["assignment"] = std::move(assignment);
        Json triples = Json::array();
        for (const TripleReport& report : reports) {
            Json entry;
            entry["triple"] = triple_text(rs, report.triple);
            if (report.table_involutive) {
                entry["table_involutive"] = *report.table_involutive;
                entry["rule"] = report.condition_id;
            }
            if (report.oracle_involutive) {
                entry["oracle_involutive"] = *report.oracle_involutive;
            }
            entry["witness"] =
                report.witness ? Json(complex_to_string(report.witness->value)) : Json(nullptr);
            triples.push_back(std::move(entry));
        }
        out["triples"] = std::move(triples);
        out["real_index"] = subspaces.real_index;
        out["order"] = subspaces.order;
        out["type"] = subspaces.type;
        if (table_involutive) {
            out["table_involutive"] = *table_involutive;
        }
        if (oracle_involutive) {
            out["oracle_involutive"] = *oracle_involutive;
        }
        if (use_table && use_oracle) {
            out["deciders_agree"] = agree;
        }
        out["involutive"] = involutive;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "algebra " << algebra_name(rs) << ", rank " << rs.rank() << "\n";
        std::cout << "assignment:\n";
        for (int i = 0; i < rs.size(); ++i) {
            std::cout << "  " << rs.root_name(i) << ": case "
                      << case_description(structure.assignment[i]) << "\n";
        }
        std::cout << "triples: " << reports.size() << "\n";
        for (const TripleReport& report : reports) {
            std::cout << "  " << triple_text(rs, report.triple) << ":";
            if (report.table_involutive) {
                std::cout << (*report.table_involutive ? " involutive" : " not involutive")
                          << " [rule " << report.condition_id << "]";
            }
            if (report.oracle_involutive) {
                std::cout << (*report.oracle_involutive ? " involutive" : " not involutive")
                          << " [oracle]";
            }
            std::cout << "\n";
            if (report.witness) {
                std::cout << "    witness: Nij = " << complex_to_string(report.witness->value)
                          << " on (" << vector_to_string(report.witness->args[0], rs) << "; "
                          << vector_to_string(report.witness->args[1], rs) << "; "
                          << vector_to_string(report.witness->args[2], rs) << ")\n";
            }
        }
        std::cout << "real index " << subspaces.real_index << ", order " << subspaces.order
                  << ", type " << subspaces.type << "\n";
        if (table_involutive) {
            std::cout << "table verdict: " << (*table_involutive ? "involutive" : "not involutive")
                      << "\n";
        }
        if (oracle_involutive) {
            std::cout << "oracle verdict: "
                      << (*oracle_involutive ? "involutive" : "not involutive") << "\n";
        }
        if (use_table && use_oracle) {
            std::cout << (agree ? "deciders agree" : "deciders disagree") << "\n";
        }
        std::cout << "overall: " << (involutive ? "involutive" : "not involutive") << "\n";
    }
    if (use_table && use_oracle && !agree) {
        return kExitDisagreement;
    }
    return involutive ? kExitInvolutive : kExitNotInvolutive;
}

int run_construct(const std::string& spec_text, int real_index_target,
                  const std::string& out_path, bool as_json) {
    const RootSystem rs = build_root_system(parse_cartan_spec(spec_text));
    if (real_index_target < 0 || real_index_target % 2 != 0 ||
        real_index_target > 2 * rs.size()) {
        throw StructureFileError("real index must be an even number between 0 and " +
                                 std::to_string(2 * rs.size()));
    }
    const DiracStructure structure = construct_with_real_index(rs, real_index_target / 2);
    const std::string text = serialize_structure(structure);
    if (out_path.empty()) {
        std::cout << text;
        return kExitInvolutive;
    }
    write_text_file(out_path, text);
    if (as_json) {
        Json out;
        out["path"] = out_path;
        out["algebra"] = algebra_name(rs);
        out["real_index"] = real_index_target;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "wrote " << algebra_name(rs) << " structure with real index "
                  << real_index_target << " to " << out_path << "\n";
    }
    return kExitInvolutive;
}

int run_classify(const std::string& path, double tol, bool as_json) {
    LoadedStructure holder;
    const DiracStructure structure = load_structure(path, holder);
    const RootSystem& rs = holder.rs;
    const SubspaceReport subspaces = subspace_report(structure, tol);
    if (as_json) {
        Json out;
        out["algebra"] = algebra_name(rs);
        Json roots = Json::array();
        for (int i = 0; i < rs.size(); ++i) {
            const PerRootCase& c = structure.assignment[i];
            roots.push_back({{"name", rs.root_name(i)},
                             {"case", case_description(c)},
                             {"normal_form", normal_form_label(b_normal_form(c))},
                             {"real_index", per_root_real_index(c)}});
        }
        out["roots"] = std::move(roots);
        out["real_index"] = subspaces.real_index;
        out["order"] = subspaces.order;
        out["type"] = subspaces.type;
        out["dim_e"] = subspaces.dim_e;
        out["dim_e_cap_conj"] = subspaces.dim_e_cap_conj;
        out["dim_e_plus_conj"] = subspaces.dim_e_plus_conj;
        out["dim_k"] = subspaces.dim_k;
        std::cout << out.dump(2) << "\n";
        return kExitInvolutive;
    }
    std::cout << "algebra " << algebra_name(rs) << ", rank " << rs.rank() << "\n";
    for (int i = 0; i < rs.size(); ++i) {
        const PerRootCase& c = structure.assignment[i];
        std::cout << "  " << rs.root_name(i) << ": case " << case_description(c)
                  << " -> normal form " << normal_form_label(b_normal_form(c)) << ", real index "
                  << per_root_real_index(c) << "\n";
    }
    std::cout << "real index " << subspaces.real_index << ", order " << subspaces.order
              << ", type " << subspaces.type << "\n";
    std::cout << "subspace dimensions: dim E = " << subspaces.dim_e
              << ", dim(E cap conj E) = " << subspaces.dim_e_cap_conj
              << ", dim(E + conj E) = " << subspaces.dim_e_plus_conj
              << ", dim K = " << subspaces.dim_k << "\n";
    return kExitInvolutive;
}

Json table_json(const CaseTable& table) {
    Json out;
    out["title"] = table.title;
    out["header"] = table.header;
    Json rows = Json::array();
    for (const TableRow& row : table.rows) {
        Json entry;
        entry["alpha"] = row.alpha;
        entry["beta"] = row.beta;
        entry["sum"] = row.sum;
        if (!row.condition.empty()) {
            entry["condition"] = row.condition;
        }
        rows.push_back(std::move(entry));
    }
    out["rows"] = std::move(rows);
    out["notes"] = table.notes;
    return out;
}

int run_tables(const std::string& which, std::optional<int> real_index_flag, bool as_json) {
    if (real_index_flag && which != "sl3") {
        throw StructureFileError("--real-index applies only to the sl3 tables");
    }
    if (which == "sl2") {
        const std::string listing = sl2_listing();
        if (as_json) {
            Json out;
            out["lines"] = Json::array();
            std::istringstream in(listing);
            std::string line;
            while (std::getline(in, line)) {
                out["lines"].push_back(line);
            }
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << listing;
        }
        return kExitInvolutive;
    }
    if (which == "sl3" && !real_index_flag) {
        if (as_json) {
            Json out;
            out["tables"] = Json::array();
            for (int k : {0, 2, 4, 6}) {
                out["tables"].push_back(table_json(sl3_table(k)));
            }
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << sl3_listing();
        }
        return kExitInvolutive;
    }
    CaseTable table;
    if (which == "sl3") {
        table = sl3_table(*real_index_flag);
    } else if (which == "involutivity") {
        table = involutivity_table();
    } else if (which == "integrability") {
        table = integrability_table();
    } else if (which == "real-index-0") {
        table = real_index_table(0);
    } else if (which == "real-index-2") {
        table = real_index_table(2);
    } else if (which == "real-index-4") {
        table = real_index_table(4);
    } else if (which == "real-index-6") {
        table = real_index_table(6);
    } else {
        throw StructureFileError("unknown table: " + which);
    }
    if (as_json) {
        std::cout << table_json(table).dump(2) << "\n";
    } else {
        std::cout << render_table(table);
    }
    return kExitInvolutive;
}

int run_sweep(const std::string& spec_text, bool check_agreement, std::optional<int> ri_filter,
              std::uint64_t cap, double tol, bool as_json) {
    const RootSystem rs = build_root_system(parse_cartan_spec(spec_text));
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const CaseGrid grid = CaseGrid::default_grid();

    EnumerationOptions options;
    options.real_index_filter = ri_filter;
    options.cap = cap;
    options.tol = tol;

    std::uint64_t checked = 0;
    std::uint64_t table_count = 0;
    std::uint64_t oracle_count = 0;
    std::map<int, std::uint64_t> by_real_index;
    std::map<int, std::uint64_t> involutive_by_real_index;
    std::vector<std::string> disagreeing;
    std::uint64_t disagreements = 0;

    enumerate_assignments(rs, form, grid, options, [&](const EnumeratedItem& item) {
        ++checked;
        const int ri = real_index(item.structure);
        ++by_real_index[ri];
        if (item.table_involutive) {
            ++table_count;
            ++involutive_by_real_index[ri];
        }
        if (item.oracle_involutive) {
            ++oracle_count;
        }
        if (item.table_involutive != item.oracle_involutive) {
            ++disagreements;
            if (disagreeing.size() < 5) {
                std::string cases;
                for (std::size_t i = 0; i < item.structure.assignment.size(); ++i) {
                    cases += (i ? "; " : "") + case_description(item.structure.assignment[i]);
                }
                disagreeing.push_back(cases);
            }
        }
    });

    const double agreement =
        checked == 0 ? 1.0 : static_cast<double>(checked - disagreements) / checked;
    if (as_json) {
        Json out;
        out["algebra"] = algebra_name(rs);
        out["roots"] = rs.size();
        out["menu_size"] = grid.menu.size();
        out["grid_total"] = grid.assignment_count(rs.size());
        out["checked"] = checked;
        Json ri_counts = Json::object();
        for (const auto& [ri, count] : by_real_index) {
            ri_counts[std::to_string(ri)] = count;
        }
        out["real_index_counts"] = std::move(ri_counts);
        out["table_involutive"] = table_count;
        out["oracle_involutive"] = oracle_count;
        Json inv_counts = Json::object();
        for (const auto& [ri, count] : involutive_by_real_index) {
            inv_counts[std::to_string(ri)] = count;
        }
        out["involutive_real_index_counts"] = std::move(inv_counts);
        out["disagreements"] = disagreements;
        out["agreement"] = agreement;
        out["disagreeing_samples"] = disagreeing;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "algebra " << algebra_name(rs) << ", " << rs.size()
                  << (rs.size() == 1 ? " root, " : " roots, ") << grid.menu.size()
                  << " cases per root, " << grid.assignment_count(rs.size()) << " assignments\n";
        std::cout << "checked: " << checked << "\n";
        std::cout << "real index counts:";
        for (const auto& [ri, count] : by_real_index) {
            std::cout << " " << ri << " -> " << count;
        }
        std::cout << "\n";
        std::cout << "involutive (table): " << table_count << "\n";
        std::cout << "involutive (oracle): " << oracle_count << "\n";
        std::cout << "involutive by real index:";
        for (const auto& [ri, count] : involutive_by_real_index) {
            std::cout << " " << ri << " -> " << count;
        }
        std::cout << "\n";
        std::cout << "disagreements: " << disagreements << "\n";
        std::cout << "agreement: " << std::fixed << std::setprecision(3) << agreement * 100.0
                  << "%\n";
        for (const std::string& sample : disagreeing) {
            std::cout << "  disagrees: " << sample << "\n";
        }
    }
    if (check_agreement && disagreements > 0) {
        return kExitDisagreement;
    }
    return kExitInvolutive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant complex Dirac structures on maximal flag manifolds"};
    app.require_subcommand(1);

    auto* roots_cmd = app.add_subcommand("roots", "positive roots, sum triples and heights");
    std::string roots_spec;
    bool roots_json = false;
    roots_cmd->add_option("algebra", roots_spec, "Cartan type, e.g. A2 or B3")->required();
    roots_cmd->add_flag("--json", roots_json, "emit JSON");

    auto* verify_cmd = app.add_subcommand("verify", "decide involutivity of a structure file");
    std::string verify_path;
    std::string verify_method = "both";
    double verify_tol = kDefaultTol;
    bool verify_json = false;
    verify_cmd->add_option("file", verify_path, "structure file")->required();
    verify_cmd->add_option("--method", verify_method, "decider: table, oracle or both")
        ->check(CLI::IsMember({"table", "oracle", "both"}));
    verify_cmd->add_option("--tol", verify_tol, "tolerance for floating point comparisons");
    verify_cmd->add_flag("--json", verify_json, "emit JSON");

    auto* construct_cmd =
        app.add_subcommand("construct", "build a structure with a prescribed real index");
    std::string construct_spec;
    int construct_ri = 0;
    std::string construct_out;
    bool construct_json = false;
    construct_cmd->add_option("algebra", construct_spec, "Cartan type")->required();
    construct_cmd->add_option("--real-index", construct_ri, "target real index (even)")
        ->required();
    construct_cmd->add_option("--out", construct_out, "output path (stdout when omitted)");
    construct_cmd->add_flag("--json", construct_json, "emit JSON");

    auto* classify_cmd =
        app.add_subcommand("classify", "per-root normal forms and subspace dimensions");
    std::string classify_path;
    double classify_tol = kDefaultTol;
    bool classify_json = false;
    classify_cmd->add_option("file", classify_path, "structure file")->required();
    classify_cmd->add_option("--tol", classify_tol, "tolerance for floating point comparisons");
    classify_cmd->add_flag("--json", classify_json, "emit JSON");

    auto* tables_cmd = app.add_subcommand("tables", "print the classification tables");
    std::string tables_which;
    int tables_ri = -1;
    bool tables_json = false;
    tables_cmd
        ->add_option("which", tables_which,
                     "integrability, involutivity, real-index-0, real-index-2, real-index-4, "
                     "real-index-6, sl2 or sl3")
        ->required()
        ->check(CLI::IsMember({"integrability", "involutivity", "real-index-0", "real-index-2",
                               "real-index-4", "real-index-6", "sl2", "sl3"}));
    auto* tables_ri_opt =
        tables_cmd->add_option("--real-index", tables_ri, "restrict sl3 to one real index");
    tables_cmd->add_flag("--json", tables_json, "emit JSON");

    auto* sweep_cmd =
        app.add_subcommand("sweep", "enumerate the default case grid with both deciders");
    std::string sweep_spec;
    bool sweep_check = false;
    int sweep_ri = -1;
    std::uint64_t sweep_cap = 1000000;
    double sweep_tol = kDefaultTol;
    bool sweep_json = false;
    sweep_cmd->add_option("algebra", sweep_spec, "Cartan type")->required();
    sweep_cmd->add_flag("--check-agreement", sweep_check,
                        "exit 3 when the deciders disagree anywhere");
    auto* sweep_ri_opt =
        sweep_cmd->add_option("--real-index", sweep_ri, "only assignments with this real index");
    sweep_cmd->add_option("--cap", sweep_cap, "largest grid size to enumerate");
    sweep_cmd->add_option("--tol", sweep_tol, "tolerance for floating point comparisons");
    sweep_cmd->add_flag("--json", sweep_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (roots_cmd->parsed()) {
            return run_roots(roots_spec, roots_json);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_path, verify_method, verify_tol, verify_json);
        }
        if (construct_cmd->parsed()) {
            return run_construct(construct_spec, construct_ri, construct_out, construct_json);
        }
        if (classify_cmd->parsed()) {
            return run_classify(classify_path, classify_tol, classify_json);
        }
        if (tables_cmd->parsed()) {
            const std::optional<int> ri =
                tables_ri_opt->count() > 0 ? std::optional<int>(tables_ri) : std::nullopt;
            return run_tables(tables_which, ri, tables_json);
        }
        if (sweep_cmd->parsed()) {
            const std::optional<int> ri =
                sweep_ri_opt->count() > 0 ? std::optional<int>(sweep_ri) : std::nullopt;
            return run_sweep(sweep_spec, sweep_check, ri, sweep_cap, sweep_tol, sweep_json);
        }
    } catch (const StructureFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
