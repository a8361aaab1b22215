#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flagdirac/dirac.hpp"
#include "flagdirac/nijenhuis.hpp"

namespace flagdirac {

// One classified involutivity rule for a case-tag shape (alpha, beta,
// alpha+beta). Shapes carry their defining parameter condition; a shape
// matching no rule, directly or with the first two slots swapped, is not
// involutive.
struct InvolutivityRule {
    std::array<CaseTag, 3> shape;
    std::string condition_text;  // "none" when unconditional
    bool (*holds)(const PerRootCase& a, const PerRootCase& b, const PerRootCase& c, double tol);

    std::string id() const;  // "2,2,3" style shape label
};

const std::vector<InvolutivityRule>& involutivity_rules();

struct PredicateOutcome {
    bool involutive = false;
    std::string condition_id;  // matched rule id, or "no matching row"
};

PredicateOutcome triple_predicate_detail(const PerRootCase& ca, const PerRootCase& cb,
                                         const PerRootCase& csum, double tol = kDefaultTol);

// Classified verdict for one case triple; symmetric in the first two slots.
bool triple_predicate(const PerRootCase& ca, const PerRootCase& cb, const PerRootCase& csum,
                      double tol = kDefaultTol);

struct TripleVerdict {
    SumTriple triple;
    std::array<PerRootCase, 3> cases;
    bool involutive = false;
    std::string condition_id;
    // Concrete nonzero evaluation attached to failed verdicts.
    std::optional<OracleWitness> witness;
};

struct TableResult {
    bool involutive = true;
    std::vector<TripleVerdict> verdicts;
};

// Involutivity decided by rule lookup per sum triple. The form is consulted
// only to attach witnesses to failed verdicts, never for the verdict itself.
TableResult is_involutive_table(const DiracStructure& structure, const NijenhuisForm& form,
                                double tol = kDefaultTol);

}  // namespace flagdirac
