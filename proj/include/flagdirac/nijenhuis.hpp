#pragma once

#include <array>
#include <optional>
#include <vector>

#include "flagdirac/dirac.hpp"
#include "flagdirac/weyl.hpp"

namespace flagdirac {

// Trilinear, totally antisymmetric form on generalized vectors. It vanishes
// on every basis triple whose root blocks do not form, in some order, a sum
// triple (alpha, beta, alpha+beta); on those triples the value is a fixed
// sign pattern times m_{alpha,beta}.
class NijenhuisForm {
public:
    NijenhuisForm(const RootSystem& rs, const StructureConstants& sc);

    Complex value(const GeneralizedVector& u, const GeneralizedVector& v,
                  const GeneralizedVector& w) const;

    const RootSystem& root_system() const { return *rs_; }

private:
    struct Pattern {
        int kind_alpha;
        int kind_beta;
        int kind_sum;
        int sign;
    };

    const RootSystem* rs_ = nullptr;
    const StructureConstants* sc_ = nullptr;
    // Nonzero entries of the base table; kinds are 0 A, 1 S, 2 S*, 3 A*.
    std::vector<Pattern> patterns_;
};

Complex nijenhuis(const NijenhuisForm& form, const GeneralizedVector& u,
                  const GeneralizedVector& v, const GeneralizedVector& w);

// A concrete generator combination with a nonzero form value.
struct OracleWitness {
    SumTriple triple;
    std::array<GeneralizedVector, 3> args;
    Complex value;
};

struct OracleResult {
    bool involutive = true;
    std::optional<OracleWitness> witness;
};

// First nonzero generator combination on one sum triple, trying all eight
// generator choices in all six argument orders; nullopt when everything
// vanishes within tol.
std::optional<OracleWitness> find_triple_witness(const NijenhuisForm& form,
                                                 const DiracStructure& structure,
                                                 const SumTriple& triple,
                                                 double tol = kDefaultTol);

// Involutivity decided purely by evaluating the form on generators, one sum
// triple at a time.
OracleResult is_involutive_oracle(const DiracStructure& structure, const NijenhuisForm& form,
                                  double tol = kDefaultTol);

}  // namespace flagdirac
