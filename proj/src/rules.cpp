#include "flagdirac/rules.hpp"

#include <map>
#include <stdexcept>

namespace flagdirac {

namespace {

int eps_of(const PerRootCase& c) {
    return std::get<Case3>(c).epsilon;
}

Scalar ratio_of(const PerRootCase& c) {
    return std::get<Case41>(c).ratio;
}

Scalar x_of(const PerRootCase& c) {
    return std::get<Case42>(c).x;
}

Scalar a_of(const PerRootCase& c) {
    return std::get<Case42>(c).a;
}

bool always(const PerRootCase&, const PerRootCase&, const PerRootCase&, double) {
    return true;
}

// (3,3,3): e3 - e1 - e2 + e1 e2 e3 = 0.
bool three_three_three(const PerRootCase& a, const PerRootCase& b, const PerRootCase& c, double) {
    const int e1 = eps_of(a);
    const int e2 = eps_of(b);
    const int e3 = eps_of(c);
    return e3 - e1 - e2 + e1 * e2 * e3 == 0;
}

// (3,3,D): opposite signs on alpha and beta.
bool opposite_pair_signs(const PerRootCase& a, const PerRootCase& b, const PerRootCase&, double) {
    return eps_of(a) == -eps_of(b);
}

// (3,D,3): alpha's sign propagates to alpha+beta.
bool matching_outer_signs(const PerRootCase& a, const PerRootCase&, const PerRootCase& c, double) {
    return eps_of(a) == eps_of(c);
}

bool ratio_beta_equals_sum(const PerRootCase&, const PerRootCase& b, const PerRootCase& c,
                           double tol) {
    return scalar_equal(ratio_of(b), ratio_of(c), tol);
}

bool ratios_opposite(const PerRootCase& a, const PerRootCase& b, const PerRootCase&, double tol) {
    return scalar_equal(ratio_of(a), -ratio_of(b), tol);
}

bool ratios_add_up(const PerRootCase& a, const PerRootCase& b, const PerRootCase& c, double tol) {
    return scalar_equal(ratio_of(c), ratio_of(a) + ratio_of(b), tol);
}

bool symplectic_beta_equals_sum(const PerRootCase&, const PerRootCase& b, const PerRootCase& c,
                                double tol) {
    return scalar_equal(x_of(b), x_of(c), tol) && scalar_equal(a_of(b), a_of(c), tol);
}

bool symplectic_pair_cancels(const PerRootCase& a, const PerRootCase& b, const PerRootCase&,
                             double tol) {
    return scalar_equal(x_of(a), -x_of(b), tol) && scalar_equal(a_of(a), a_of(b), tol);
}

// (4.1,4.2,4.2): x_beta = x_sum and r_alpha = a_sum/x_sum - a_beta/x_beta.
bool graph_of_symplectic_difference(const PerRootCase& a, const PerRootCase& b,
                                    const PerRootCase& c, double tol) {
    if (!scalar_equal(x_of(b), x_of(c), tol)) {
        return false;
    }
    return scalar_equal(ratio_of(a), a_of(c) / x_of(c) - a_of(b) / x_of(b), tol);
}

// (4.2,4.2,4.1): x_alpha = -x_beta and r_sum = a_alpha/x_alpha + a_beta/x_beta.
bool graph_from_symplectic_sum(const PerRootCase& a, const PerRootCase& b, const PerRootCase& c,
                               double tol) {
    if (!scalar_equal(x_of(a), -x_of(b), tol)) {
        return false;
    }
    return scalar_equal(ratio_of(c), a_of(a) / x_of(a) + a_of(b) / x_of(b), tol);
}

// (4.2,4.2,4.2): x1 x2 a3 - a2 x1 x3 - a1 x2 x3 = 0 and x1 x2 - x1 x3 - x2 x3 = 0.
bool symplectic_triple(const PerRootCase& a, const PerRootCase& b, const PerRootCase& c,
                       double tol) {
    const Scalar x1 = x_of(a);
    const Scalar x2 = x_of(b);
    const Scalar x3 = x_of(c);
    const Scalar a1 = a_of(a);
    const Scalar a2 = a_of(b);
    const Scalar a3 = a_of(c);
    return scalar_is_zero(x1 * x2 * a3 - a2 * x1 * x3 - a1 * x2 * x3, tol) &&
           scalar_is_zero(x1 * x2 - x1 * x3 - x2 * x3, tol);
}

using Shape = std::array<CaseTag, 3>;

std::vector<InvolutivityRule> build_rules() {
    constexpr CaseTag c1 = CaseTag::c1;
    constexpr CaseTag c2 = CaseTag::c2;
    constexpr CaseTag c3 = CaseTag::c3;
    constexpr CaseTag c41 = CaseTag::c41;
    constexpr CaseTag c42 = CaseTag::c42;
    std::vector<InvolutivityRule> rules;
    rules.push_back({{c1, c1, c1}, "none", &always});
    // Two cotangent slots vanish against everything.
    for (CaseTag third : {c1, c2, c3, c41, c42}) {
        rules.push_back({{c2, c2, third}, "none", &always});
    }
    for (CaseTag middle : {c1, c3, c41, c42}) {
        rules.push_back({{c2, middle, c2}, "none", &always});
    }
    rules.push_back({{c3, c3, c3}, "e_sum - e_a - e_b + e_a e_b e_sum = 0", &three_three_three});
    for (CaseTag third : {c1, c2, c41, c42}) {
        rules.push_back({{c3, c3, third}, "e_a = -e_b", &opposite_pair_signs});
    }
    for (CaseTag middle : {c1, c2, c41, c42}) {
        rules.push_back({{c3, middle, c3}, "e_a = e_sum", &matching_outer_signs});
    }
    rules.push_back({{c1, c41, c41}, "r_b = r_sum", &ratio_beta_equals_sum});
    rules.push_back({{c41, c41, c1}, "r_a = -r_b", &ratios_opposite});
    rules.push_back({{c41, c41, c41}, "r_sum = r_a + r_b", &ratios_add_up});
    rules.push_back(
        {{c1, c42, c42}, "x_b = x_sum and a_b = a_sum", &symplectic_beta_equals_sum});
    rules.push_back({{c42, c42, c1}, "x_a = -x_b and a_a = a_b", &symplectic_pair_cancels});
    rules.push_back({{c41, c42, c42},
                     "x_b = x_sum and r_a = a_sum/x_sum - a_b/x_b",
                     &graph_of_symplectic_difference});
    rules.push_back({{c42, c42, c41},
                     "x_a = -x_b and r_sum = a_a/x_a + a_b/x_b",
                     &graph_from_symplectic_sum});
    rules.push_back({{c42, c42, c42},
                     "x_a x_b a_sum - a_b x_a x_sum - a_a x_b x_sum = 0 and "
                     "x_a x_b - x_a x_sum - x_b x_sum = 0",
                     &symplectic_triple});
    return rules;
}

const std::map<Shape, const InvolutivityRule*>& rule_index() {
    static const std::map<Shape, const InvolutivityRule*> index = [] {
        std::map<Shape, const InvolutivityRule*> out;
        for (const InvolutivityRule& rule : involutivity_rules()) {
            out.emplace(rule.shape, &rule);
        }
        return out;
    }();
    return index;
}

}  // namespace

std::string InvolutivityRule::id() const {
    return case_label(shape[0]) + "," + case_label(shape[1]) + "," + case_label(shape[2]);
}

const std::vector<InvolutivityRule>& involutivity_rules() {
    static const std::vector<InvolutivityRule> rules = build_rules();
    return rules;
}

PredicateOutcome triple_predicate_detail(const PerRootCase& ca, const PerRootCase& cb,
                                         const PerRootCase& csum, double tol) {
    const auto& index = rule_index();
    const Shape direct = {case_tag(ca), case_tag(cb), case_tag(csum)};
    if (const auto it = index.find(direct); it != index.end()) {
        const InvolutivityRule& rule = *it->second;
        return {rule.holds(ca, cb, csum, tol), rule.id()};
    }
    const Shape swapped = {direct[1], direct[0], direct[2]};
    if (const auto it = index.find(swapped); it != index.end()) {
        const InvolutivityRule& rule = *it->second;
        return {rule.holds(cb, ca, csum, tol), rule.id()};
    }
    return {false, "no matching row"};
}

bool triple_predicate(const PerRootCase& ca, const PerRootCase& cb, const PerRootCase& csum,
                      double tol) {
    return triple_predicate_detail(ca, cb, csum, tol).involutive;
}

TableResult is_involutive_table(const DiracStructure& structure, const NijenhuisForm& form,
                                double tol) {
    const RootSystem& rs = form.root_system();
    if (structure.assignment.size() != static_cast<std::size_t>(rs.size())) {
        throw std::invalid_argument("structure and form use different root systems");
    }
    TableResult result;
    for (const SumTriple& t : rs.sum_triples()) {
        const PerRootCase& ca = structure.assignment[t.alpha];
        const PerRootCase& cb = structure.assignment[t.beta];
        const PerRootCase& csum = structure.assignment[t.sum];
        const PredicateOutcome outcome = triple_predicate_detail(ca, cb, csum, tol);
        TripleVerdict verdict;
        verdict.triple = t;
        verdict.cases = {ca, cb, csum};
        verdict.involutive = outcome.involutive;
        verdict.condition_id = outcome.condition_id;
        if (!outcome.involutive) {
            result.involutive = false;
            verdict.witness = find_triple_witness(form, structure, t, tol);
        }
        result.verdicts.push_back(std::move(verdict));
    }
    return result;
}

}  // namespace flagdirac
