#include "flagdirac/nijenhuis.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/rational.hpp>

namespace flagdirac {

namespace {

// Coordinates of a block reindexed by kind (A, S, S*, A*); the stored third
// coordinate sits on -S*, so the S*-coefficient flips sign.
std::array<Complex, 4> kind_coords(const GeneralizedVector& g, int root_index) {
    const auto it = g.blocks.find(root_index);
    if (it == g.blocks.end()) {
        return {Complex{}, Complex{}, Complex{}, Complex{}};
    }
    const auto& c = it->second;
    return {c[0], c[1], -c[2], c[3]};
}

bool touches_triple(const GeneralizedVector& g, const SumTriple& t) {
    return g.blocks.count(t.alpha) != 0 || g.blocks.count(t.beta) != 0 ||
           g.blocks.count(t.sum) != 0;
}

struct ArgOrder {
    std::array<int, 3> slot;
    int sign;
};

constexpr std::array<ArgOrder, 6> kArgOrders = {{
    {{0, 1, 2}, 1},
    {{1, 2, 0}, 1},
    {{2, 0, 1}, 1},
    {{1, 0, 2}, -1},
    {{0, 2, 1}, -1},
    {{2, 1, 0}, -1},
}};

}  // namespace

NijenhuisForm::NijenhuisForm(const RootSystem& rs, const StructureConstants& sc)
    : rs_(&rs), sc_(&sc) {
    patterns_ = {
        {0, 1, 3, 1},   // (A, S, A*)
        {0, 0, 2, -1},  // (A, A, S*)
        {1, 1, 2, 1},   // (S, S, S*)
        {1, 0, 3, 1},   // (S, A, A*)
        {0, 2, 0, -1},  // (A, S*, A)
        {0, 3, 1, 1},   // (A, A*, S)
        {1, 2, 1, -1},  // (S, S*, S)
        {1, 3, 0, -1},  // (S, A*, A)
        {3, 1, 0, -1},  // (A*, S, A)
        {3, 0, 1, 1},   // (A*, A, S)
        {2, 1, 1, -1},  // (S*, S, S)
        {2, 0, 0, -1},  // (S*, A, A)
    };
}

Complex NijenhuisForm::value(const GeneralizedVector& u, const GeneralizedVector& v,
                             const GeneralizedVector& w) const {
    const GeneralizedVector* args[3] = {&u, &v, &w};
    Complex total{};
    for (const SumTriple& t : rs_->sum_triples()) {
        if (!touches_triple(u, t) || !touches_triple(v, t) || !touches_triple(w, t)) {
            continue;
        }
        const double m = boost::rational_cast<double>(sc_->m(t.alpha, t.beta));
        for (const ArgOrder& order : kArgOrders) {
            const auto at_alpha = kind_coords(*args[order.slot[0]], t.alpha);
            const auto at_beta = kind_coords(*args[order.slot[1]], t.beta);
            const auto at_sum = kind_coords(*args[order.slot[2]], t.sum);
            Complex part{};
            for (const Pattern& p : patterns_) {
                part += static_cast<double>(p.sign) * at_alpha[p.kind_alpha] *
                        at_beta[p.kind_beta] * at_sum[p.kind_sum];
            }
            total += static_cast<double>(order.sign) * m * part;
        }
    }
    return total;
}

Complex nijenhuis(const NijenhuisForm& form, const GeneralizedVector& u,
                  const GeneralizedVector& v, const GeneralizedVector& w) {
    return form.value(u, v, w);
}

std::optional<OracleWitness> find_triple_witness(const NijenhuisForm& form,
                                                 const DiracStructure& structure,
                                                 const SumTriple& triple, double tol) {
    const Plane plane_alpha = generators(structure.assignment[triple.alpha], triple.alpha);
    const Plane plane_beta = generators(structure.assignment[triple.beta], triple.beta);
    const Plane plane_sum = generators(structure.assignment[triple.sum], triple.sum);
    const GeneralizedVector* choices[3][2] = {
        {&plane_alpha.first, &plane_alpha.second},
        {&plane_beta.first, &plane_beta.second},
        {&plane_sum.first, &plane_sum.second},
    };
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                const GeneralizedVector* picked[3] = {choices[0][i], choices[1][j],
                                                      choices[2][k]};
                for (const auto& order : kArgOrders) {
                    const GeneralizedVector& a = *picked[order.slot[0]];
                    const GeneralizedVector& b = *picked[order.slot[1]];
                    const GeneralizedVector& c = *picked[order.slot[2]];
                    const Complex val = form.value(a, b, c);
                    if (std::abs(val) > tol) {
                        return OracleWitness{triple, {a, b, c}, val};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

OracleResult is_involutive_oracle(const DiracStructure& structure, const NijenhuisForm& form,
                                  double tol) {
    if (structure.assignment.size() != static_cast<std::size_t>(form.root_system().size())) {
        throw std::invalid_argument("structure and form use different root systems");
    }
    for (const SumTriple& t : form.root_system().sum_triples()) {
        if (auto witness = find_triple_witness(form, structure, t, tol)) {
            return OracleResult{false, std::move(witness)};
        }
    }
    return OracleResult{true, std::nullopt};
}

}  // namespace flagdirac
