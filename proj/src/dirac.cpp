#include "flagdirac/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/rational.hpp>

namespace flagdirac {

namespace {

std::string fmt_double(double x) {
    if (x == 0.0) {
        return "0";
    }
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

constexpr Complex kImaginary{0.0, 1.0};

}  // namespace

Scalar::Scalar(const Rational& r) : value(boost::rational_cast<double>(r)), exact(r) {}

Scalar operator+(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.exact && rhs.exact) {
        return Scalar(*lhs.exact + *rhs.exact);
    }
    return Scalar(lhs.value + rhs.value);
}

Scalar operator-(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.exact && rhs.exact) {
        return Scalar(*lhs.exact - *rhs.exact);
    }
    return Scalar(lhs.value - rhs.value);
}

Scalar operator-(const Scalar& s) {
    if (s.exact) {
        return Scalar(-*s.exact);
    }
    return Scalar(-s.value);
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.exact && rhs.exact) {
        return Scalar(*lhs.exact * *rhs.exact);
    }
    return Scalar(lhs.value * rhs.value);
}

Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.exact && rhs.exact && *rhs.exact != Rational(0)) {
        return Scalar(*lhs.exact / *rhs.exact);
    }
    return Scalar(lhs.value / rhs.value);
}

bool scalar_equal(const Scalar& lhs, const Scalar& rhs, double tol) {
    if (lhs.exact && rhs.exact) {
        return *lhs.exact == *rhs.exact;
    }
    return std::abs(lhs.value - rhs.value) <= tol;
}

bool scalar_is_zero(const Scalar& s, double tol) {
    if (s.exact) {
        return *s.exact == Rational(0);
    }
    return std::abs(s.value) <= tol;
}

std::string scalar_to_string(const Scalar& s) {
    if (s.exact) {
        std::ostringstream os;
        os << s.exact->numerator();
        if (s.exact->denominator() != 1) {
            os << '/' << s.exact->denominator();
        }
        return os.str();
    }
    return fmt_double(s.value);
}

CaseTag case_tag(const PerRootCase& c) {
    struct Visitor {
        CaseTag operator()(const Case1&) const { return CaseTag::c1; }
        CaseTag operator()(const Case2&) const { return CaseTag::c2; }
        CaseTag operator()(const Case3&) const { return CaseTag::c3; }
        CaseTag operator()(const Case41&) const { return CaseTag::c41; }
        CaseTag operator()(const Case42&) const { return CaseTag::c42; }
    };
    return std::visit(Visitor{}, c);
}

std::string case_label(CaseTag tag) {
    switch (tag) {
        case CaseTag::c1:
            return "1";
        case CaseTag::c2:
            return "2";
        case CaseTag::c3:
            return "3";
        case CaseTag::c41:
            return "4.1";
        case CaseTag::c42:
            return "4.2";
    }
    return "?";
}

std::string case_description(const PerRootCase& c) {
    struct Visitor {
        std::string operator()(const Case1&) const { return "1"; }
        std::string operator()(const Case2&) const { return "2"; }
        std::string operator()(const Case3& k) const {
            return k.epsilon > 0 ? "3 (eps=+1)" : "3 (eps=-1)";
        }
        std::string operator()(const Case41& k) const { return "4.1 (r=" + scalar_to_string(k.ratio) + ")"; }
        std::string operator()(const Case42& k) const {
            return "4.2 (x=" + scalar_to_string(k.x) + ", a=" + scalar_to_string(k.a) + ")";
        }
    };
    return std::visit(Visitor{}, c);
}

GeneralizedVector block_vector(int root_index, const std::array<Complex, 4>& coords) {
    GeneralizedVector v;
    v.blocks[root_index] = coords;
    return v;
}

GeneralizedVector basis_a(int root_index) { return block_vector(root_index, {1.0, 0.0, 0.0, 0.0}); }
GeneralizedVector basis_s(int root_index) { return block_vector(root_index, {0.0, 1.0, 0.0, 0.0}); }
GeneralizedVector basis_s_star(int root_index) {
    return block_vector(root_index, {0.0, 0.0, -1.0, 0.0});
}
GeneralizedVector basis_a_star(int root_index) {
    return block_vector(root_index, {0.0, 0.0, 0.0, 1.0});
}

GeneralizedVector operator+(const GeneralizedVector& lhs, const GeneralizedVector& rhs) {
    GeneralizedVector out = lhs;
    for (const auto& [idx, coords] : rhs.blocks) {
        auto [it, inserted] = out.blocks.try_emplace(idx, coords);
        if (!inserted) {
            for (int k = 0; k < 4; ++k) {
                it->second[k] += coords[k];
            }
        }
    }
    return out;
}

GeneralizedVector operator*(Complex scale, const GeneralizedVector& v) {
    GeneralizedVector out = v;
    for (auto& [idx, coords] : out.blocks) {
        for (auto& c : coords) {
            c *= scale;
        }
    }
    return out;
}

Complex coordinate(const GeneralizedVector& v, int root_index, int slot) {
    const auto it = v.blocks.find(root_index);
    if (it == v.blocks.end()) {
        return Complex{0.0, 0.0};
    }
    return it->second[static_cast<std::size_t>(slot)];
}

GeneralizedVector conjugated(const GeneralizedVector& v) {
    GeneralizedVector out = v;
    for (auto& [idx, coords] : out.blocks) {
        for (auto& c : coords) {
            c = std::conj(c);
        }
    }
    return out;
}

GeneralizedVector infinitesimal_rotation(const GeneralizedVector& v) {
    GeneralizedVector out;
    for (const auto& [idx, coords] : v.blocks) {
        out.blocks[idx] = {-coords[1], coords[0], -coords[3], coords[2]};
    }
    return out;
}

ComplexMatrix stacked_blocks(const std::vector<GeneralizedVector>& vs) {
    std::set<int> support;
    for (const auto& v : vs) {
        for (const auto& [idx, coords] : v.blocks) {
            support.insert(idx);
        }
    }
    ComplexMatrix rows;
    rows.reserve(vs.size());
    for (const auto& v : vs) {
        std::vector<Complex> row;
        row.reserve(4 * support.size());
        for (int idx : support) {
            for (int k = 0; k < 4; ++k) {
                row.push_back(coordinate(v, idx, k));
            }
        }
        if (row.empty()) {
            row.assign(4, Complex{0.0, 0.0});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string complex_to_string(Complex z) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0) {
        return fmt_double(re);
    }
    std::string imag_part = std::abs(im) == 1.0 ? "i" : fmt_double(std::abs(im)) + "i";
    if (re == 0.0) {
        return (im < 0.0 ? "-" : "") + imag_part;
    }
    return fmt_double(re) + (im < 0.0 ? "-" : "+") + imag_part;
}

std::string vector_to_string(const GeneralizedVector& v, const RootSystem& rs) {
    std::string out;
    for (const auto& [idx, coords] : v.blocks) {
        if (!out.empty()) {
            out += "; ";
        }
        out += rs.root_name(idx) + ":(" + complex_to_string(coords[0]) + ", " +
                      complex_to_string(coords[1]) + ", " + complex_to_string(coords[2]) + ", " +
                      complex_to_string(coords[3]) + ")";
    }
    return out.empty() ? "0" : out;
}

DiracStructure make_structure(const RootSystem& rs, std::vector<PerRootCase> assignment) {
    if (assignment.size() != static_cast<std::size_t>(rs.size())) {
        throw std::invalid_argument("assignment must cover every positive root exactly once");
    }
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        const PerRootCase& c = assignment[i];
        if (const auto* k3 = std::get_if<Case3>(&c)) {
            if (k3->epsilon != 1 && k3->epsilon != -1) {
                throw std::invalid_argument("case 3 at " + rs.root_name(static_cast<int>(i)) +
                                                                        " needs epsilon +1 or -1");
            }
        } else if (const auto* k41 = std::get_if<Case41>(&c)) {
            if (scalar_is_zero(k41->ratio)) {
                throw std::invalid_argument("case 4.1 at " + rs.root_name(static_cast<int>(i)) +
                                                                        " needs a nonzero ratio");
            }
        } else if (const auto* k42 = std::get_if<Case42>(&c)) {
            if (scalar_is_zero(k42->x)) {
                throw std::invalid_argument("case 4.2 at " + rs.root_name(static_cast<int>(i)) +
                                                                        " needs nonzero x");
            }
        }
    }
    return DiracStructure{&rs, std::move(assignment)};
}

Plane generators(const PerRootCase& c, int root_index) {
    struct Visitor {
        int idx;
        Plane operator()(const Case1&) const {
            return {block_vector(idx, {1.0, 0.0, 0.0, 0.0}), block_vector(idx, {0.0, 1.0, 0.0, 0.0})};
        }
        Plane operator()(const Case2&) const {
            return {block_vector(idx, {0.0, 0.0, 1.0, 0.0}), block_vector(idx, {0.0, 0.0, 0.0, 1.0})};
        }
        Plane operator()(const Case3& k) const {
            const Complex ie = kImaginary * static_cast<double>(k.epsilon);
            return {block_vector(idx, {1.0, ie, 0.0, 0.0}), block_vector(idx, {0.0, 0.0, -ie, 1.0})};
        }
        Plane operator()(const Case41& k) const {
            const Complex r = k.ratio.value;
            return {block_vector(idx, {1.0, 0.0, 0.0, r}), block_vector(idx, {0.0, 1.0, -r, 0.0})};
        }
        Plane operator()(const Case42& k) const {
            const Complex x = k.x.value;
            const Complex w = Complex{k.a.value, -1.0};
            return {block_vector(idx, {x, 0.0, 0.0, w}), block_vector(idx, {0.0, x, -w, 0.0})};
        }
    };
    return std::visit(Visitor{root_index}, c);
}

std::vector<Plane> structure_planes(const DiracStructure& structure) {
    std::vector<Plane> planes;
    planes.reserve(structure.assignment.size());
    for (std::size_t i = 0; i < structure.assignment.size(); ++i) {
        planes.push_back(generators(structure.assignment[i], static_cast<int>(i)));
    }
    return planes;
}

Complex pairing(const GeneralizedVector& u, const GeneralizedVector& v) {
    Complex total{0.0, 0.0};
    for (const auto& [idx, a] : u.blocks) {
        const auto it = v.blocks.find(idx);
        if (it == v.blocks.end()) {
            continue;
        }
        const auto& b = it->second;
        total += -(a[0] * b[2] + a[2] * b[0]) - (a[1] * b[3] + a[3] * b[1]);
    }
    return total;
}

bool is_isotropic(const std::vector<GeneralizedVector>& vs, double tol) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i; j < vs.size(); ++j) {
            if (std::abs(pairing(vs[i], vs[j])) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_isotropic(const Plane& plane, double tol) {
    return is_isotropic(std::vector<GeneralizedVector>{plane.first, plane.second}, tol);
}

std::string family_label(PlaneFamily family) {
    switch (family) {
        case PlaneFamily::vector_block:
            return "(a)";
        case PlaneFamily::covector_block:
            return "(b)";
        case PlaneFamily::a_line_pair:
            return "(c)";
        case PlaneFamily::s_line_pair:
            return "(d)";
        case PlaneFamily::line_pair:
            return "(e)";
        case PlaneFamily::graph:
            return "(f)";
    }
    return "?";
}

std::optional<PlaneClass> classify_plane(const GeneralizedVector& g1, const GeneralizedVector& g2,
                                                                                  double tol) {
    std::set<int> support;
    for (const auto* g : {&g1, &g2}) {
        for (const auto& [idx, coords] : g->blocks) {
            for (const auto& c : coords) {
                if (std::abs(c) > tol) {
                    support.insert(idx);
                    break;
                }
            }
        }
    }
    if (support.empty()) {
        return std::nullopt;
    }
    if (support.size() > 1) {
        throw std::invalid_argument("plane generators must live in a single root block");
    }
    const int idx = *support.begin();
    const std::array<Complex, 4> a = {coordinate(g1, idx, 0), coordinate(g1, idx, 1),
                                      coordinate(g1, idx, 2), coordinate(g1, idx, 3)};
    const std::array<Complex, 4> b = {coordinate(g2, idx, 0), coordinate(g2, idx, 1),
                                      coordinate(g2, idx, 2), coordinate(g2, idx, 3)};
    if (matrix_rank({{a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]}}, tol) < 2) {
        return std::nullopt;
    }
    if (!is_isotropic(Plane{g1, g2}, tol)) {
        return std::nullopt;
    }

    const int vector_rank = matrix_rank({{a[0], a[1]}, {b[0], b[1]}}, tol);
    PlaneClass out;
    if (vector_rank == 2) {
        // Reduce to generators with vector parts exactly A and S; isotropy then
        // forces the covector parts to share a single graph coefficient.
        const Complex det = a[0] * b[1] - b[0] * a[1];
        const Complex x = b[1] / det;
        const Complex y = -a[1] / det;
        const Complex q = x * a[3] + y * b[3];
        if (std::abs(q) <= tol) {
            out.family = PlaneFamily::vector_block;
        } else {
            out.family = PlaneFamily::graph;
            out.graph_ratio = q;
        }
        return out;
    }
    if (vector_rank == 0) {
        out.family = PlaneFamily::covector_block;
        return out;
    }

    // One vector direction: split into a vector-line generator and the forced
    // pure covector; only the vector line's two coefficients matter.
    Complex p{0.0, 0.0};
    Complex q{0.0, 0.0};
    const double mag_a = std::max(std::abs(a[0]), std::abs(a[1]));
    const double mag_b = std::max(std::abs(b[0]), std::abs(b[1]));
    if (mag_a >= mag_b) {
        p = a[0];
        q = a[1];
    } else {
        p = b[0];
        q = b[1];
    }
    const double scale = std::max(std::abs(p), std::abs(q));
    if (std::abs(q) <= tol * std::max(1.0, scale)) {
        out.family = PlaneFamily::a_line_pair;
    } else if (std::abs(p) <= tol * std::max(1.0, scale)) {
        out.family = PlaneFamily::s_line_pair;
    } else {
        out.family = PlaneFamily::line_pair;
        out.line_coeff_a = p;
        out.line_coeff_s = q;
    }
    return out;
}

bool is_invariant(const GeneralizedVector& g1, const GeneralizedVector& g2, double tol) {
    const int span_rank = matrix_rank(stacked_blocks({g1, g2}), tol);
    const int extended_rank = matrix_rank(
            stacked_blocks({g1, g2, infinitesimal_rotation(g1), infinitesimal_rotation(g2)}), tol);
    return extended_rank == span_rank;
}

std::optional<PerRootCase> invariant_case_of(const PlaneClass& pc, double tol) {
    switch (pc.family) {
        case PlaneFamily::vector_block:
            return PerRootCase{Case1{}};
        case PlaneFamily::covector_block:
            return PerRootCase{Case2{}};
        case PlaneFamily::a_line_pair:
        case PlaneFamily::s_line_pair:
            return std::nullopt;
        case PlaneFamily::line_pair: {
            const Complex ratio = pc.line_coeff_s / pc.line_coeff_a;
            if (std::abs(ratio.real()) <= tol && std::abs(std::abs(ratio.imag()) - 1.0) <= tol) {
                return PerRootCase{Case3{ratio.imag() > 0.0 ? 1 : -1}};
            }
            return std::nullopt;
        }
        case PlaneFamily::graph: {
            const Complex q = pc.graph_ratio;
            if (std::abs(q.imag()) <= tol) {
                return PerRootCase{Case41{Scalar(q.real())}};
            }
            const double x = -1.0 / q.imag();
            return PerRootCase{Case42{Scalar(x), Scalar(x * q.real())}};
        }
    }
    return std::nullopt;
}

int plane_real_index(const Plane& plane, double tol) {
    const int dim = matrix_rank(stacked_blocks({plane.first, plane.second}), tol);
    const int joint = matrix_rank(
        stacked_blocks({plane.first, plane.second, conjugated(plane.first),
                        conjugated(plane.second)}),
        tol);
    return 2 * dim - joint;
}

int per_root_real_index(const PerRootCase& c) {
    return plane_real_index(generators(c, 0));
}

int real_index(const DiracStructure& structure) {
    int total = 0;
    for (const auto& c : structure.assignment) {
        total += per_root_real_index(c);
    }
    return total;
}

SubspaceReport report_from_planes(const RootSystem& rs, const std::vector<Plane>& planes,
                                  double tol) {
    if (planes.size() != static_cast<std::size_t>(rs.size())) {
        throw std::invalid_argument("need exactly one plane per positive root");
    }
    SubspaceReport report;
    for (std::size_t i = 0; i < planes.size(); ++i) {
        const int idx = static_cast<int>(i);
        const Plane& plane = planes[i];
        const std::array<Complex, 2> u = {coordinate(plane.first, idx, 0),
                                          coordinate(plane.first, idx, 1)};
        const std::array<Complex, 2> v = {coordinate(plane.second, idx, 0),
                                          coordinate(plane.second, idx, 1)};
        const int dim_e = matrix_rank({{u[0], u[1]}, {v[0], v[1]}}, tol);
        const int dim_sum = matrix_rank({{u[0], u[1]},
                                         {v[0], v[1]},
                                         {std::conj(u[0]), std::conj(u[1])},
                                         {std::conj(v[0]), std::conj(v[1])}},
                                        tol);
        report.dim_e += dim_e;
        report.dim_e_plus_conj += dim_sum;
        report.dim_e_cap_conj += 2 * dim_e - dim_sum;
        report.dim_k += plane_real_index(plane, tol);
    }
    report.real_index = report.dim_k;
    report.order = 2 * rs.size() - report.dim_e_plus_conj;
    report.type = report.dim_e_plus_conj - report.dim_e;
    return report;
}

SubspaceReport subspace_report(const DiracStructure& structure, double tol) {
    return report_from_planes(*structure.rs, structure_planes(structure), tol);
}

}  // namespace flagdirac
