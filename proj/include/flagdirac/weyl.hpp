#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flagdirac/roots.hpp"

namespace flagdirac {

// A signed root is +(index+1) or -(index+1), index into positive_roots.
using SignedRoot = int;

inline SignedRoot positive_id(int index) { return index + 1; }
inline SignedRoot negative_id(int index) { return -(index + 1); }
inline int root_index(SignedRoot s) { return (s > 0 ? s : -s) - 1; }
inline bool is_positive(SignedRoot s) { return s > 0; }

// Overall sign choice of the generating convention. Flipping it must not
// change any involutivity verdict (tested); it exists to prove exactly that.
enum class SignConvention { plus, minus };

// Structure constants m_{a,b} of a Weyl-type basis, [X_a, X_b] = m_{a,b} X_{a+b},
// stored for every signed pair whose sum is again a root. Magnitudes are the
// Chevalley integers p+1; signs are fixed by an extraspecial-pair convention.
// All arithmetic is exact.
class StructureConstants {
public:
    // m_{alpha,beta} for positive roots by index; 0 when alpha+beta is not a root.
    Rational m(int alpha_index, int beta_index) const;

    // m for arbitrary signed roots; 0 when the sum is not a root (or is 0).
    Rational signed_m(SignedRoot a, SignedRoot b) const;

    // Largest k >= 0 such that b - k a is a root (signed arithmetic).
    int string_p(SignedRoot a, SignedRoot b) const;

    // Every stored (a, b) -> m pair, for identity sweeps.
    const std::map<std::pair<SignedRoot, SignedRoot>, Rational>& table() const { return table_; }

    const RootSystem& root_system() const { return *rs_; }

private:
    friend StructureConstants structure_constants(const RootSystem& rs, SignConvention sign);

    const RootSystem* rs_ = nullptr;
    std::map<std::pair<SignedRoot, SignedRoot>, Rational> table_;
};

StructureConstants structure_constants(const RootSystem& rs,
                                       SignConvention sign = SignConvention::plus);

struct IdentityReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks antisymmetry m_{b,a} = -m_{a,b}, the negation rule
// m_{-a,-b} = -m_{a,b}, and the Jacobi cocycle
// m_{a,b} m_{a+b,c} + m_{b,c} m_{b+c,a} + m_{c,a} m_{c+a,b} = 0
// over all signed triples with nonzero pairwise sums and nonzero total.
IdentityReport check_structure_identities(const StructureConstants& sc, const RootSystem& rs);

// Same checks against a raw table (lets callers probe corrupted copies).
IdentityReport check_structure_identities(
    const std::map<std::pair<SignedRoot, SignedRoot>, Rational>& table, const RootSystem& rs);

}  // namespace flagdirac
