#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "flagdirac/linalg.hpp"
#include "flagdirac/roots.hpp"

namespace flagdirac {

// Real parameter that remembers an exact rational value when it has one.
// Comparisons are exact when both sides are exact, tolerance-based otherwise.
struct Scalar {
    double value = 0.0;
    std::optional<Rational> exact;

    Scalar() = default;
    Scalar(double v) : value(v) {}
    Scalar(int n) : Scalar(Rational(n)) {}
    Scalar(const Rational& r);
};

Scalar operator+(const Scalar& lhs, const Scalar& rhs);
Scalar operator-(const Scalar& lhs, const Scalar& rhs);
Scalar operator-(const Scalar& s);
Scalar operator*(const Scalar& lhs, const Scalar& rhs);
Scalar operator/(const Scalar& lhs, const Scalar& rhs);
bool scalar_equal(const Scalar& lhs, const Scalar& rhs, double tol = kDefaultTol);
bool scalar_is_zero(const Scalar& s, double tol = kDefaultTol);
std::string scalar_to_string(const Scalar& s);

// The five invariant per-root planes, in the normalizations used throughout:
//   Case1  span{A, S}
//   Case2  span{-S*, A*}
//   Case3  span{A + i e S, A* + i e S*}, e in {+1, -1}
//   Case41 span{A + r A*, S + r S*}, r real and nonzero
//   Case42 span{x A + (a - i) A*, x S + (a - i) S*}, x real nonzero, a real
struct Case1 {};
struct Case2 {};
struct Case3 {
    int epsilon = 1;
};
struct Case41 {
    Scalar ratio;
};
struct Case42 {
    Scalar x;
    Scalar a;
};

using PerRootCase = std::variant<Case1, Case2, Case3, Case41, Case42>;

enum class CaseTag { c1, c2, c3, c41, c42 };

CaseTag case_tag(const PerRootCase& c);
// "1", "2", "3", "4.1", "4.2"
std::string case_label(CaseTag tag);
// Label plus parameters, e.g. "3 (eps=+1)" or "4.2 (x=1, a=0)".
std::string case_description(const PerRootCase& c);

// Element of the complexified double (m + m*) with finitely many nonzero
// per-root coordinate blocks. The four coordinates of a block are taken in
// the ordered basis {A, S, -S*, A*}; the S*-coefficient of a vector is the
// negative of its third coordinate.
struct GeneralizedVector {
    std::map<int, std::array<Complex, 4>> blocks;
};

// Basis vectors supported on a single root block.
GeneralizedVector basis_a(int root_index);
GeneralizedVector basis_s(int root_index);
GeneralizedVector basis_s_star(int root_index);
GeneralizedVector basis_a_star(int root_index);
GeneralizedVector block_vector(int root_index, const std::array<Complex, 4>& coords);

GeneralizedVector operator+(const GeneralizedVector& lhs, const GeneralizedVector& rhs);
GeneralizedVector operator*(Complex scale, const GeneralizedVector& v);
Complex coordinate(const GeneralizedVector& v, int root_index, int slot);
GeneralizedVector conjugated(const GeneralizedVector& v);
// Action of the rotation generator J: (a, b, c, d) -> (-b, a, -d, c) blockwise.
GeneralizedVector infinitesimal_rotation(const GeneralizedVector& v);
// Rows are the vectors' coordinate blocks over the sorted union of supports.
ComplexMatrix stacked_blocks(const std::vector<GeneralizedVector>& vs);
std::string vector_to_string(const GeneralizedVector& v, const RootSystem& rs);
std::string complex_to_string(Complex z);

// Two-generator plane inside one root block.
struct Plane {
    GeneralizedVector first;
    GeneralizedVector second;
};

struct DiracStructure {
    const RootSystem* rs = nullptr;
    std::vector<PerRootCase> assignment;  // indexed by positive-root index
};

DiracStructure make_structure(const RootSystem& rs, std::vector<PerRootCase> assignment);

Plane generators(const PerRootCase& c, int root_index);
std::vector<Plane> structure_planes(const DiracStructure& structure);

// Natural symmetric pairing; per block <u,v> = -(u0 v2 + u2 v0) - (u1 v3 + u3 v1),
// distinct blocks pair to zero.
Complex pairing(const GeneralizedVector& u, const GeneralizedVector& v);
bool is_isotropic(const std::vector<GeneralizedVector>& vs, double tol = kDefaultTol);
bool is_isotropic(const Plane& plane, double tol = kDefaultTol);

// The six families of maximal isotropic planes in one root block:
//   vector_block    (a) span{A, S}
//   covector_block  (b) span{-S*, A*}
//   a_line_pair     (c) span{A, A*}
//   s_line_pair     (d) span{S, S*}
//   line_pair       (e) span{p A + q S, q S* + p A*}, p and q both nonzero
//   graph           (f) span{A + q A*, S + q S*}, q nonzero
enum class PlaneFamily { vector_block, covector_block, a_line_pair, s_line_pair, line_pair, graph };

std::string family_label(PlaneFamily family);

struct PlaneClass {
    PlaneFamily family = PlaneFamily::vector_block;
    // line_pair: coefficients of A and S in the vector-line generator.
    Complex line_coeff_a;
    Complex line_coeff_s;
    // graph: common A*-over-A (equally S*-over-S) coefficient ratio.
    Complex graph_ratio;
};

// nullopt when the span is not a maximal isotropic plane (dependent
// generators or a nonzero pairing).
std::optional<PlaneClass> classify_plane(const GeneralizedVector& g1, const GeneralizedVector& g2,
                                         double tol = kDefaultTol);

// True iff J g stays in span{g1, g2} for both generators.
bool is_invariant(const GeneralizedVector& g1, const GeneralizedVector& g2, double tol = kDefaultTol);

// The invariant families map back to cases: (a) -> Case1, (b) -> Case2,
// line_pair with q/p = +-i -> Case3, graph with real ratio -> Case41,
// graph with Im ratio != 0 -> Case42. Others return nullopt.
std::optional<PerRootCase> invariant_case_of(const PlaneClass& pc, double tol = kDefaultTol);

// dim(L cap conj L) per block, via 4 - rank of generators stacked with
// their conjugates.
int per_root_real_index(const PerRootCase& c);
int plane_real_index(const Plane& plane, double tol = kDefaultTol);
int real_index(const DiracStructure& structure);

struct SubspaceReport {
    int dim_e = 0;            // complex dimension of E, the vector-part image
    int dim_e_cap_conj = 0;   // dim of E intersected with conj E
    int dim_e_plus_conj = 0;  // dim of E + conj E
    int dim_k = 0;            // dim of L cap conj L
    int order = 0;
    int type = 0;
    int real_index = 0;
};

SubspaceReport subspace_report(const DiracStructure& structure, double tol = kDefaultTol);
// planes[i] must live in root block i; used for images of B-field actions
// that need not come from a case assignment.
SubspaceReport report_from_planes(const RootSystem& rs, const std::vector<Plane>& planes,
                                                                    double tol = kDefaultTol);

}  // namespace flagdirac
