#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flagdirac/dirac.hpp"
#include "flagdirac/rules.hpp"

namespace flagdirac {

// Dirac structure with real index exactly 2k: the k lowest positive roots
// in (height, lex) order get Case2, every other root gets Case3 with
// epsilon +1. A sum root never sorts below its summands, so only involutive
// triple shapes can occur.
DiracStructure construct_with_real_index(const RootSystem& rs, int k);

// Invariant two-form, one real coefficient per positive root block.
struct BField {
    std::vector<Scalar> coeffs;  // indexed by positive-root index
};

// Image of v under X + xi -> X + xi + i_X B: with block coefficient r the
// coordinates move by (a, b, c, d) -> (a, b, c - r b, d + r a).
GeneralizedVector apply_b_field(const GeneralizedVector& v, const BField& field);
std::vector<Plane> apply_b_field(const DiracStructure& structure, const BField& field);

// classify_plane followed by the invariant-case reading; nullopt when the
// plane is not one of the five invariant cases.
std::optional<PerRootCase> reclassify_plane(const Plane& plane, double tol = kDefaultTol);

// Class of a per-root plane modulo B-transformations.
struct NormalForm {
    enum class Tag { tangent, cotangent, complex_type, symplectic_type };
    Tag tag = Tag::tangent;
    int epsilon = 0;  // complex_type only
    Scalar x;         // symplectic_type only
};

// "(a)", "(b)", "(c) eps=+1", "(d) x=2" style labels.
std::string normal_form_label(const NormalForm& nf);

// Case1 and Case41 collapse to (a), Case2 is (b), Case3 keeps its epsilon
// in (c), Case42 keeps x (and sheds a) in (d).
NormalForm b_normal_form(const PerRootCase& c);

struct CaseGrid {
    std::vector<PerRootCase> menu;

    // Case1; Case2; Case3 with both signs; Case41 with ratio in
    // {-2,-1,1,2}; Case42 with x in {-1,1,2} and a in {-1,0,1}.
    static CaseGrid default_grid();
    // menu size to the power of the root count, saturating at uint64 max.
    std::uint64_t assignment_count(int root_count) const;
};

struct EnumerationOptions {
    std::optional<int> real_index_filter;
    std::uint64_t cap = 1000000;
    double tol = kDefaultTol;
};

struct EnumeratedItem {
    DiracStructure structure;
    bool oracle_involutive = false;
    bool table_involutive = false;
    std::vector<TripleVerdict> verdicts;
};

// Walks the full grid menu^roots in odometer order (last root fastest),
// invoking sink on every assignment that passes the real-index filter.
// Throws std::length_error naming the count when it exceeds options.cap.
void enumerate_assignments(const RootSystem& rs, const NijenhuisForm& form, const CaseGrid& grid,
                           const EnumerationOptions& options,
                           const std::function<void(const EnumeratedItem&)>& sink);

}  // namespace flagdirac
