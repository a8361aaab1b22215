#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include <boost/rational.hpp>

#include "flagdirac/nijenhuis.hpp"
#include "test_support.hpp"

using namespace flagdirac;

namespace {

GeneralizedVector kind_vector(int kind, int root_index) {
    switch (kind) {
        case 0:
            return basis_a(root_index);
        case 1:
            return basis_s(root_index);
        case 2:
            return basis_s_star(root_index);
        default:
            return basis_a_star(root_index);
    }
}

bool near(Complex lhs, Complex rhs, double tol = 1e-12) {
    return std::abs(lhs - rhs) <= tol;
}

struct BasePattern {
    int kind_alpha;
    int kind_beta;
    int kind_sum;
    int sign;
};

// The nonzero values on basis triples over a sum triple; kinds are
// 0 A, 1 S, 2 S*, 3 A*. Every other kind combination vanishes.
constexpr std::array<BasePattern, 12> kBasePatterns = {{
    {0, 1, 3, 1},
    {0, 0, 2, -1},
    {1, 1, 2, 1},
    {1, 0, 3, 1},
    {0, 2, 0, -1},
    {0, 3, 1, 1},
    {1, 2, 1, -1},
    {1, 3, 0, -1},
    {3, 1, 0, -1},
    {3, 0, 1, 1},
    {2, 1, 1, -1},
    {2, 0, 0, -1},
}};

}  // namespace

TEST_CASE("all 64 basis kind combinations match the base table") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const SumTriple t = rs.sum_triples().front();
    const double m = boost::rational_cast<double>(sc.m(t.alpha, t.beta));
    REQUIRE(m != 0.0);

    for (int ka = 0; ka < 4; ++ka) {
        for (int kb = 0; kb < 4; ++kb) {
            for (int ks = 0; ks < 4; ++ks) {
                const Complex value = form.value(kind_vector(ka, t.alpha),
                                                 kind_vector(kb, t.beta),
                                                 kind_vector(ks, t.sum));
                int expected_sign = 0;
                for (const BasePattern& p : kBasePatterns) {
                    if (p.kind_alpha == ka && p.kind_beta == kb && p.kind_sum == ks) {
                        expected_sign = p.sign;
                    }
                }
                INFO("kinds " << ka << " " << kb << " " << ks);
                CHECK(near(value, Complex(expected_sign * m, 0.0)));
            }
        }
    }
}

TEST_CASE("the twelve listed patterns share one nonzero magnitude") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const SumTriple t = rs.sum_triples().front();
    const double m = std::abs(boost::rational_cast<double>(sc.m(t.alpha, t.beta)));
    for (const BasePattern& p : kBasePatterns) {
        const Complex value = form.value(kind_vector(p.kind_alpha, t.alpha),
                                         kind_vector(p.kind_beta, t.beta),
                                         kind_vector(p.kind_sum, t.sum));
        CHECK(near(std::abs(value), m));
    }
}

TEST_CASE("total antisymmetry on random vectors") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const SumTriple t = rs.sum_triples().front();
    std::mt19937 rng(5);
    for (int i = 0; i < 25; ++i) {
        GeneralizedVector u;
        GeneralizedVector v;
        GeneralizedVector w;
        for (int block : {t.alpha, t.beta, t.sum}) {
            u = u + flagdirac::testsupport::random_complex(rng) * basis_a(block) +
                flagdirac::testsupport::random_complex(rng) * basis_s_star(block);
            v = v + flagdirac::testsupport::random_complex(rng) * basis_s(block) +
                flagdirac::testsupport::random_complex(rng) * basis_a_star(block);
            w = w + flagdirac::testsupport::random_complex(rng) * basis_a(block) +
                flagdirac::testsupport::random_complex(rng) * basis_s(block);
        }
        const Complex base = form.value(u, v, w);
        CHECK(near(form.value(v, u, w), -base));
        CHECK(near(form.value(u, w, v), -base));
        CHECK(near(form.value(w, v, u), -base));
        CHECK(near(form.value(v, w, u), base));
        CHECK(near(form.value(w, u, v), base));
    }
}

TEST_CASE("trilinearity in each slot") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const SumTriple t = rs.sum_triples().front();
    const GeneralizedVector u = basis_a(t.alpha);
    const GeneralizedVector v = basis_s(t.beta);
    const GeneralizedVector w = basis_a_star(t.sum);
    const Complex scale(2.0, -1.5);
    CHECK(near(form.value(scale * u, v, w), scale * form.value(u, v, w)));
    CHECK(near(form.value(u + basis_s(t.alpha), v, w),
               form.value(u, v, w) + form.value(basis_s(t.alpha), v, w)));
}

TEST_CASE("blocks that do not form a sum triple give zero") {
    const RootSystem rs = build_root_system({'B', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const int short_simple = *rs.index_of(Root{{0, 1}});
    const int long_simple = *rs.index_of(Root{{1, 0}});
    const int highest = *rs.index_of(Root{{1, 2}});
    CHECK(near(form.value(basis_a(short_simple), basis_s(long_simple), basis_a_star(highest)),
               0.0));
    CHECK(near(form.value(basis_a(short_simple), basis_s(short_simple),
                          basis_a_star(short_simple)),
               0.0));
    CHECK(near(form.value(basis_a(long_simple), basis_s(long_simple), basis_a_star(highest)),
               0.0));
}

TEST_CASE("B2 magnitudes follow the root strings") {
    const RootSystem rs = build_root_system({'B', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    REQUIRE(rs.sum_triples().size() == 2);
    const SumTriple first = rs.sum_triples()[0];
    const SumTriple second = rs.sum_triples()[1];
    CHECK(near(std::abs(form.value(basis_a(first.alpha), basis_s(first.beta),
                                   basis_a_star(first.sum))),
               1.0));
    CHECK(near(std::abs(form.value(basis_a(second.alpha), basis_s(second.beta),
                                   basis_a_star(second.sum))),
               2.0));
}

TEST_CASE("oracle accepts the all-tangent structure") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const DiracStructure structure = make_structure(rs, {Case1{}, Case1{}, Case1{}});
    const OracleResult result = is_involutive_oracle(structure, form);
    CHECK(result.involutive);
    CHECK_FALSE(result.witness.has_value());
}

TEST_CASE("oracle rejects same-sign complex pair over a tangent sum") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const DiracStructure structure = make_structure(rs, {Case3{1}, Case3{1}, Case1{}});
    const OracleResult result = is_involutive_oracle(structure, form);
    CHECK_FALSE(result.involutive);
    REQUIRE(result.witness.has_value());
    CHECK(std::abs(result.witness->value) > 1e-9);
    const auto direct = find_triple_witness(form, structure, rs.sum_triples().front());
    CHECK(direct.has_value());
}

TEST_CASE("oracle rejects a cotangent root under two tangent roots") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const DiracStructure structure = make_structure(rs, {Case2{}, Case1{}, Case1{}});
    CHECK_FALSE(is_involutive_oracle(structure, form).involutive);
}

TEST_CASE("oracle accepts symplectic regime under a complex pair") {
    const RootSystem rs = build_root_system({'A', 2});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    const DiracStructure structure =
        make_structure(rs, {Case42{Scalar(1), Scalar(0)}, Case3{1}, Case3{1}});
    const OracleResult result = is_involutive_oracle(structure, form);
    CHECK(result.involutive);
}

TEST_CASE("no triples means vacuously involutive") {
    const RootSystem rs = build_root_system({'A', 1});
    const StructureConstants sc = structure_constants(rs);
    const NijenhuisForm form(rs, sc);
    for (const PerRootCase c : {PerRootCase{Case1{}}, PerRootCase{Case2{}},
                                PerRootCase{Case3{-1}},
                                PerRootCase{Case42{Scalar(2), Scalar(1)}}}) {
        const DiracStructure structure = make_structure(rs, {c});
        CHECK(is_involutive_oracle(structure, form).involutive);
    }
}

TEST_CASE("flipping the sign convention changes no oracle verdict") {
    const RootSystem rs = build_root_system({'B', 2});
    const StructureConstants plus = structure_constants(rs, SignConvention::plus);
    const StructureConstants minus = structure_constants(rs, SignConvention::minus);
    const NijenhuisForm form_plus(rs, plus);
    const NijenhuisForm form_minus(rs, minus);
    const std::vector<PerRootCase> menu = {Case1{}, Case2{}, Case3{1}, Case3{-1},
                                           Case41{Scalar(1)}, Case42{Scalar(1), Scalar(0)}};
    std::mt19937 rng(17);
    for (int i = 0; i < 200; ++i) {
        std::vector<PerRootCase> assignment;
        for (int r = 0; r < rs.size(); ++r) {
            assignment.push_back(menu[rng() % menu.size()]);
        }
        const DiracStructure structure = make_structure(rs, assignment);
        CHECK(is_involutive_oracle(structure, form_plus).involutive ==
              is_involutive_oracle(structure, form_minus).involutive);
    }
}
