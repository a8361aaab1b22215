#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "flagdirac/dirac.hpp"
#include "test_support.hpp"

using namespace flagdirac;
using flagdirac::testsupport::mixed;
using flagdirac::testsupport::random_isotropic_plane;

namespace {

bool near(Complex lhs, Complex rhs, double tol = 1e-12) {
    return std::abs(lhs - rhs) <= tol;
}

}  // namespace

TEST_CASE("pairing matches the Gram matrix of the block basis") {
    CHECK(near(pairing(basis_a(0), basis_s_star(0)), 1.0));
    CHECK(near(pairing(basis_s_star(0), basis_a(0)), 1.0));
    CHECK(near(pairing(basis_s(0), basis_a_star(0)), -1.0));
    CHECK(near(pairing(basis_a_star(0), basis_s(0)), -1.0));
    CHECK(near(pairing(basis_a(0), basis_a(0)), 0.0));
    CHECK(near(pairing(basis_a(0), basis_s(0)), 0.0));
    CHECK(near(pairing(basis_a(0), basis_a_star(0)), 0.0));
    CHECK(near(pairing(basis_s(0), basis_s_star(0)), 0.0));
    CHECK(near(pairing(basis_s_star(0), basis_s_star(0)), 0.0));
    CHECK(near(pairing(basis_a_star(0), basis_a_star(0)), 0.0));
}

TEST_CASE("distinct root blocks pair to zero") {
    CHECK(near(pairing(basis_a(0), basis_s_star(1)), 0.0));
    CHECK(near(pairing(basis_s(2), basis_a_star(0)), 0.0));
}

TEST_CASE("pairing of mixed sums") {
    const GeneralizedVector u = basis_a(0) + basis_a_star(0);
    const GeneralizedVector v = basis_s(0) + basis_s_star(0);
    CHECK(near(pairing(u, v), 0.0));
    CHECK(near(pairing(u, u), 0.0));
    CHECK(near(pairing(v, v), 0.0));
    const GeneralizedVector w = basis_a(0) + Complex(-1.0) * basis_s_star(0);
    CHECK(near(pairing(basis_a(0), Complex(-1.0) * basis_s_star(0)), -1.0));
    CHECK(near(pairing(w, w), -2.0));
}

TEST_CASE("span of A and minus S-star is not isotropic") {
    const Plane plane{basis_a(0), Complex(-1.0) * basis_s_star(0)};
    CHECK_FALSE(is_isotropic(plane));
}

TEST_CASE("the five invariant cases are isotropic and invariant") {
    const PerRootCase cases[] = {Case1{}, Case2{}, Case3{1}, Case3{-1}, Case41{Scalar(2)},
                                 Case42{Scalar(1), Scalar(0)}, Case42{Scalar(-2), Scalar(3)}};
    for (const PerRootCase& c : cases) {
        const Plane plane = generators(c, 0);
        CHECK(is_isotropic(plane));
        CHECK(is_invariant(plane.first, plane.second));
    }
}

TEST_CASE("classification recovers each named family") {
    std::mt19937 rng(7);

    SUBCASE("vector block") {
        const Plane plane = mixed(Plane{basis_a(0), basis_s(0)}, rng);
        const auto pc = classify_plane(plane.first, plane.second);
        REQUIRE(pc.has_value());
        CHECK(pc->family == PlaneFamily::vector_block);
    }
    SUBCASE("covector block") {
        const Plane plane = mixed(Plane{basis_s_star(0), basis_a_star(0)}, rng);
        const auto pc = classify_plane(plane.first, plane.second);
        REQUIRE(pc.has_value());
        CHECK(pc->family == PlaneFamily::covector_block);
    }
    SUBCASE("a line pair") {
        const Plane plane = mixed(Plane{basis_a(0), basis_a_star(0)}, rng);
        const auto pc = classify_plane(plane.first, plane.second);
        REQUIRE(pc.has_value());
        CHECK(pc->family == PlaneFamily::a_line_pair);
    }
    SUBCASE("s line pair") {
        const Plane plane = mixed(Plane{basis_s(0), basis_s_star(0)}, rng);
        const auto pc = classify_plane(plane.first, plane.second);
        REQUIRE(pc.has_value());
        CHECK(pc->family == PlaneFamily::s_line_pair);
    }
    SUBCASE("line pair with both coefficients") {
        const Complex p(1.0, 0.5);
        const Complex q(2.0, -1.0);
        const Plane base{block_vector(0, {p, q, 0.0, 0.0}), block_vector(0, {0.0, 0.0, -q, p})};
        const Plane plane = mixed(base, rng);
        const auto pc = classify_plane(plane.first, plane.second);
        REQUIRE(pc.has_value());
        CHECK(pc->family == PlaneFamily::line_pair);
        CHECK(near(pc->line_coeff_s / pc->line_coeff_a, q / p, 1e-9));
    }
    SUBCASE("graph") {
        const Complex ratio(0.75, -1.25);
        const Plane base{block_vector(0, {1.0, 0.0, 0.0, ratio}),
                         block_vector(0, {0.0, 1.0, -ratio, 0.0})};
        const Plane plane = mixed(base, rng);
        const auto pc = classify_plane(plane.first, plane.second);
        REQUIRE(pc.has_value());
        CHECK(pc->family == PlaneFamily::graph);
        CHECK(near(pc->graph_ratio, ratio, 1e-9));
    }
}

TEST_CASE("classification rejects non-planes") {
    CHECK_FALSE(classify_plane(basis_a(0), Complex(2.0) * basis_a(0)).has_value());
    CHECK_FALSE(classify_plane(basis_a(0), Complex(-1.0) * basis_s_star(0)).has_value());
    const GeneralizedVector zero;
    CHECK_FALSE(classify_plane(zero, basis_a(0)).has_value());
}

TEST_CASE("invariance holds exactly for the rotation-stable families") {
    std::mt19937 rng(11);

    SUBCASE("paired lines are not invariant") {
        CHECK_FALSE(is_invariant(basis_a(0), basis_a_star(0)));
        CHECK_FALSE(is_invariant(basis_s(0), basis_s_star(0)));
    }
    SUBCASE("line pairs need ratio plus or minus i") {
        const Plane generic{block_vector(0, {1.0, 2.0, 0.0, 0.0}),
                            block_vector(0, {0.0, 0.0, -2.0, 1.0})};
        CHECK_FALSE(is_invariant(generic.first, generic.second));
        const Complex q(0.0, 1.0);
        const Plane rotation{block_vector(0, {1.0, q, 0.0, 0.0}),
                             block_vector(0, {0.0, 0.0, -q, 1.0})};
        CHECK(is_invariant(rotation.first, rotation.second));
    }
    SUBCASE("all graphs are invariant") {
        for (int i = 0; i < 20; ++i) {
            const Complex ratio = flagdirac::testsupport::random_nonzero(rng);
            const Plane plane = mixed(Plane{block_vector(0, {1.0, 0.0, 0.0, ratio}),
                                            block_vector(0, {0.0, 1.0, -ratio, 0.0})},
                                      rng);
            CHECK(is_invariant(plane.first, plane.second));
        }
    }
}

TEST_CASE("invariant planes map back to their cases") {
    std::mt19937 rng(13);
    const PerRootCase cases[] = {Case1{}, Case2{}, Case3{1}, Case3{-1}, Case41{Scalar(-3)},
                                 Case42{Scalar(2), Scalar(1)}};
    for (const PerRootCase& c : cases) {
        const Plane plane = mixed(generators(c, 0), rng);
        const auto pc = classify_plane(plane.first, plane.second);
        REQUIRE(pc.has_value());
        const auto recovered = invariant_case_of(*pc);
        REQUIRE(recovered.has_value());
        CHECK(case_tag(*recovered) == case_tag(c));
        if (const auto* k = std::get_if<Case3>(&c)) {
            CHECK(std::get<Case3>(*recovered).epsilon == k->epsilon);
        }
        if (const auto* k = std::get_if<Case41>(&c)) {
            CHECK(scalar_equal(std::get<Case41>(*recovered).ratio, k->ratio));
        }
        if (const auto* k = std::get_if<Case42>(&c)) {
            CHECK(scalar_equal(std::get<Case42>(*recovered).x, k->x));
            CHECK(scalar_equal(std::get<Case42>(*recovered).a, k->a));
        }
    }
}

TEST_CASE("non-invariant families yield no case") {
    const auto a_line = classify_plane(basis_a(0), basis_a_star(0));
    REQUIRE(a_line.has_value());
    CHECK_FALSE(invariant_case_of(*a_line).has_value());
    const auto s_line = classify_plane(basis_s(0), basis_s_star(0));
    REQUIRE(s_line.has_value());
    CHECK_FALSE(invariant_case_of(*s_line).has_value());
    const auto generic_line = classify_plane(block_vector(0, {1.0, 2.0, 0.0, 0.0}),
                                             block_vector(0, {0.0, 0.0, -2.0, 1.0}));
    REQUIRE(generic_line.has_value());
    CHECK(generic_line->family == PlaneFamily::line_pair);
    CHECK_FALSE(invariant_case_of(*generic_line).has_value());
}

TEST_CASE("random isotropic planes always classify") {
    std::mt19937 rng(20260819);
    int count = 0;
    for (int i = 0; i < 500; ++i) {
        const Plane plane = random_isotropic_plane(rng, 0);
        REQUIRE(is_isotropic(plane));
        const auto pc = classify_plane(plane.first, plane.second);
        REQUIRE(pc.has_value());
        ++count;
    }
    CHECK(count == 500);
}

TEST_CASE("per-case real index, order and type") {
    const RootSystem rs = build_root_system({'A', 1});
    struct Expected {
        PerRootCase per_case;
        int real_index;
        int order;
        int type;
    };
    const Expected table[] = {
        {Case1{}, 2, 0, 0},
        {Case2{}, 2, 2, 0},
        {Case3{1}, 0, 0, 1},
        {Case3{-1}, 0, 0, 1},
        {Case41{Scalar(Rational(5, 2))}, 2, 0, 0},
        {Case42{Scalar(3), Scalar(-1)}, 0, 0, 0},
    };
    for (const Expected& row : table) {
        CHECK(per_root_real_index(row.per_case) == row.real_index);
        CHECK(plane_real_index(generators(row.per_case, 0)) == row.real_index);
        const DiracStructure structure = make_structure(rs, {row.per_case});
        const SubspaceReport report = subspace_report(structure);
        CHECK(report.real_index == row.real_index);
        CHECK(report.order == row.order);
        CHECK(report.type == row.type);
        CHECK(report.dim_k == row.real_index);
        CHECK(report.order <= report.real_index);
    }
}

TEST_CASE("real index adds over root blocks") {
    const RootSystem rs = build_root_system({'A', 2});
    const DiracStructure structure =
        make_structure(rs, {Case2{}, Case3{1}, Case42{Scalar(1), Scalar(0)}});
    CHECK(real_index(structure) == 2);
    const SubspaceReport report = subspace_report(structure);
    CHECK(report.real_index == 2);
    CHECK(report.order <= report.real_index);
}

TEST_CASE("reports from raw planes match reports from assignments") {
    const RootSystem rs = build_root_system({'A', 2});
    const DiracStructure structure =
        make_structure(rs, {Case1{}, Case3{-1}, Case41{Scalar(2)}});
    const SubspaceReport direct = subspace_report(structure);
    const SubspaceReport via_planes = report_from_planes(rs, structure_planes(structure));
    CHECK(direct.real_index == via_planes.real_index);
    CHECK(direct.order == via_planes.order);
    CHECK(direct.type == via_planes.type);
    CHECK(direct.dim_e == via_planes.dim_e);
}
