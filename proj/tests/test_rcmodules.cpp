#include <doctest.h>

#include "coalg/random.hpp"
#include "coalg/rcmodules.hpp"

using namespace coalg;

namespace {
const Field Q = Field::rationals();

Subspace coords(std::size_t n, std::initializer_list<std::size_t> indices) {
    std::vector<Vec> vectors;
    for (const auto i : indices) vectors.push_back(unit_vec(Q, n, i));
    return Subspace::span(Q, n, vectors);
}
}  // namespace

TEST_SUITE("rcmodules") {

TEST_CASE("the whole dual gives the module back") {
    const Algebra a = upper_triangular(Q, 2);
    const LeftModule m = regular_module(a);
    const RCModuleView v(m);
    const ModuleSection s = module_section_on_algebraic(v, Subspace::full(Q, a.dim()));
    CHECK(s.module.dim == m.dim);
    CHECK(s.module.action == m.action);
    CHECK(gamma_roundtrip(ModuleMorphism{m, m, Matrix::identity(Q, m.dim)}).ok());
}

TEST_CASE("M / IM for the point of k[x]/(x^3)") {
    const Algebra t3 = truncated_poly(Q, 3);
    const RCModuleView v(regular_module(t3));
    const Subspace c = coords(3, {0});
    CHECK(annihilated_part(v, c) == coords(3, {1, 2}));
    const ModuleSection s = module_section_on_algebraic(v, c);
    CHECK(s.module.dim == 1);
    CHECK(s.module.algebra == matrix_algebra(Q, 1));
    CHECK(s.projection * s.lift == Matrix::identity(Q, 1));
}

TEST_CASE("the zero module") {
    const Algebra t3 = truncated_poly(Q, 3);
    const RCModuleView v(zero_module(t3));
    for (const auto& c : {coords(3, {0}), coords(3, {0, 1}), Subspace::full(Q, 3)})
        CHECK(module_section_on_algebraic(v, c).module.dim == 0);
}

TEST_CASE("membership of section images") {
    const Algebra t3 = truncated_poly(Q, 3);
    const RCModuleView v(direct_sum(regular_module(t3), regular_module(t3)));
    const Subspace c = coords(3, {0, 1});
    const Matrix m_c = module_section_map(v, c);
    Rng rng(6);
    for (int i = 0; i < 10; ++i) CHECK(module_section_membership(v, c, m_c.apply(random_vec(rng, Q, 6))));
}

TEST_CASE("restriction maps") {
    const Algebra t3 = truncated_poly(Q, 3);
    const RCModuleView v(regular_module(t3));
    const ModuleSection s1 = module_section_on_algebraic(v, coords(3, {0}));
    const ModuleSection s2 = module_section_on_algebraic(v, coords(3, {0, 1}));
    CHECK(module_restriction(s2, s2) == Matrix::identity(Q, 2));
    // k[x]/(x^2) -> k drops the x coordinate.
    CHECK(module_restriction(s1, s2) == Matrix::from_ints(Q, 1, 2, {1, 0}));
    CHECK(check_restriction_square(v, coords(3, {0}), coords(3, {0, 1})).ok());
}

TEST_CASE("scaling commutes with the hat construction") {
    const Algebra a = upper_triangular(Q, 2);
    const LeftModule m = direct_sum(regular_module(a), regular_module(a));
    const ModuleMorphism twice{m, m, Scalar(Q, 2) * Matrix::identity(Q, m.dim)};
    CHECK(gamma_roundtrip(twice).ok());
    const auto hats = hat_functor_on_morphism(twice, {Subspace::full(Q, a.dim())});
    REQUIRE(hats.size() == 1);
    CHECK(hats[0] == Scalar(Q, 2) * Matrix::identity(Q, m.dim));
}

TEST_CASE("cotensor against the annihilated part") {
    Rng rng(12);
    for (int i = 0; i < 30; ++i) {
        const Algebra a = random_algebra(rng, Q, 4);
        const RCModuleView v(regular_module(a));
        const Subspace c = vanishing_space(a, random_ideal(rng, a));
        CHECK(cotensor(c, v.comodule()) == orthogonal(annihilated_part(v, c)));
    }
}

}  // TEST_SUITE
