#include "flagdirac/construct.hpp"

#include <limits>
#include <stdexcept>

#include "flagdirac/nijenhuis.hpp"

namespace flagdirac {

DiracStructure construct_with_real_index(const RootSystem& rs, int k) {
    if (k < 0 || k > rs.size()) {
        throw std::invalid_argument("real index 2k needs 0 <= k <= " + std::to_string(rs.size()) +
                                    " for this algebra, got k = " + std::to_string(k));
    }
    std::vector<PerRootCase> assignment;
    assignment.reserve(static_cast<std::size_t>(rs.size()));
    for (int i = 0; i < rs.size(); ++i) {
        if (i < k) {
            assignment.emplace_back(Case2{});
        } else {
            assignment.emplace_back(Case3{1});
        }
    }
    return make_structure(rs, std::move(assignment));
}

GeneralizedVector apply_b_field(const GeneralizedVector& v, const BField& field) {
    GeneralizedVector out;
    for (const auto& [idx, coords] : v.blocks) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= field.coeffs.size()) {
            throw std::invalid_argument("field has no coefficient for root block " +
                                        std::to_string(idx));
        }
        const double r = field.coeffs[static_cast<std::size_t>(idx)].value;
        out.blocks[idx] = {coords[0], coords[1], coords[2] - r * coords[1],
                           coords[3] + r * coords[0]};
    }
    return out;
}

std::vector<Plane> apply_b_field(const DiracStructure& structure, const BField& field) {
    if (field.coeffs.size() != structure.assignment.size()) {
        throw std::invalid_argument("field needs exactly one coefficient per positive root");
    }
    std::vector<Plane> planes;
    planes.reserve(structure.assignment.size());
    for (const Plane& plane : structure_planes(structure)) {
        planes.push_back({apply_b_field(plane.first, field), apply_b_field(plane.second, field)});
    }
    return planes;
}

std::optional<PerRootCase> reclassify_plane(const Plane& plane, double tol) {
    const auto pc = classify_plane(plane.first, plane.second, tol);
    if (!pc) {
        return std::nullopt;
    }
    return invariant_case_of(*pc, tol);
}

std::string normal_form_label(const NormalForm& nf) {
    switch (nf.tag) {
        case NormalForm::Tag::tangent:
            return "(a)";
        case NormalForm::Tag::cotangent:
            return "(b)";
        case NormalForm::Tag::complex_type:
            return nf.epsilon > 0 ? "(c) eps=+1" : "(c) eps=-1";
        case NormalForm::Tag::symplectic_type:
            return "(d) x=" + scalar_to_string(nf.x);
    }
    return "?";
}

NormalForm b_normal_form(const PerRootCase& c) {
    struct Visitor {
        NormalForm operator()(const Case1&) const { return {NormalForm::Tag::tangent, 0, {}}; }
        NormalForm operator()(const Case2&) const { return {NormalForm::Tag::cotangent, 0, {}}; }
        NormalForm operator()(const Case3& k) const {
            return {NormalForm::Tag::complex_type, k.epsilon, {}};
        }
        NormalForm operator()(const Case41&) const { return {NormalForm::Tag::tangent, 0, {}}; }
        NormalForm operator()(const Case42& k) const {
            return {NormalForm::Tag::symplectic_type, 0, k.x};
        }
    };
    return std::visit(Visitor{}, c);
}

CaseGrid CaseGrid::default_grid() {
    CaseGrid grid;
    grid.menu.emplace_back(Case1{});
    grid.menu.emplace_back(Case2{});
    grid.menu.emplace_back(Case3{1});
    grid.menu.emplace_back(Case3{-1});
    for (int r : {-2, -1, 1, 2}) {
        grid.menu.emplace_back(Case41{Scalar(r)});
    }
    for (int x : {-1, 1, 2}) {
        for (int a : {-1, 0, 1}) {
            grid.menu.emplace_back(Case42{Scalar(x), Scalar(a)});
        }
    }
    return grid;
}

std::uint64_t CaseGrid::assignment_count(int root_count) const {
    const std::uint64_t base = menu.size();
    std::uint64_t total = 1;
    for (int i = 0; i < root_count; ++i) {
        if (base != 0 && total > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= base;
    }
    return total;
}

void enumerate_assignments(const RootSystem& rs, const NijenhuisForm& form, const CaseGrid& grid,
                           const EnumerationOptions& options,
                           const std::function<void(const EnumeratedItem&)>& sink) {
    if (&form.root_system() != &rs) {
        throw std::logic_error("enumeration form was built for a different root system");
    }
    if (grid.menu.empty()) {
        throw std::invalid_argument("case menu is empty");
    }
    const int l = rs.size();
    const std::uint64_t count = grid.assignment_count(l);
    if (count > options.cap) {
        throw std::length_error("grid spans " + std::to_string(count) + " assignments, above the cap of " +
                                std::to_string(options.cap));
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(l), 0);
    while (true) {
        std::vector<PerRootCase> assignment;
        assignment.reserve(pick.size());
        for (std::size_t choice : pick) {
            assignment.push_back(grid.menu[choice]);
        }
        DiracStructure structure = make_structure(rs, std::move(assignment));
        if (!options.real_index_filter || real_index(structure) == *options.real_index_filter) {
            EnumeratedItem item;
            item.oracle_involutive = is_involutive_oracle(structure, form, options.tol).involutive;
            TableResult table = is_involutive_table(structure, form, options.tol);
            item.table_involutive = table.involutive;
            item.verdicts = std::move(table.verdicts);
            item.structure = std::move(structure);
            sink(item);
        }
        // odometer increment, last root fastest
        std::size_t pos = pick.size();
        while (pos > 0) {
            --pos;
            if (++pick[pos] < grid.menu.size()) {
                break;
            }
            pick[pos] = 0;
            if (pos == 0) {
                return;
            }
        }
        if (pick.empty()) {
            return;
        }
    }
}

}  // namespace flagdirac
