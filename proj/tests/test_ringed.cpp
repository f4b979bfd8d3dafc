#include <doctest.h>

#include <set>

#include "coalg/errors.hpp"
#include "coalg/polydual.hpp"
#include "coalg/random.hpp"
#include "coalg/ringed.hpp"
#include "oracles.hpp"

using namespace coalg;

namespace {
const Field Q = Field::rationals();

Subspace coords(Field f, std::size_t n, std::initializer_list<std::size_t> indices) {
    std::vector<Vec> vectors;
    for (const auto i : indices) vectors.push_back(unit_vec(f, n, i));
    return Subspace::span(f, n, vectors);
}

Subspace principal(const Algebra& a, const Vec& x, Side side) {
    return ideal_generated(a, Subspace::span(a.field(), a.dim(), {x}), side);
}
}  // namespace

TEST_SUITE("ringed") {

TEST_CASE("vanishing spaces") {
    const Algebra t3 = truncated_poly(Q, 3);
    CHECK(vanishing_space(t3, Subspace::zero(Q, 3)).is_full());
    CHECK(vanishing_space(t3, Subspace::full(Q, 3)).is_zero());
    CHECK(vanishing_space(t3, coords(Q, 3, {1, 2})) == coords(Q, 3, {0}));
}

TEST_CASE("closure is the identity in finite dimension") {
    const Algebra t3 = truncated_poly(Q, 3);
    CHECK(closure(t3, coords(Q, 3, {1})) == coords(Q, 3, {1}));
    CHECK(closure(t3, Subspace::zero(Q, 3)).is_zero());
    const Field f7 = Field::prime(7);
    const Algebra a = direct_product(truncated_poly(f7, 2), upper_triangular(f7, 2));
    REQUIRE(a.dim() == 5);
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const Subspace s = random_subspace(rng, f7, 5);
        CHECK(closure(a, s) == s);
    }
}

TEST_CASE("topology membership") {
    const RingedCoalgebraView m2(matrix_algebra(Q, 2));
    CHECK(is_in_topology(m2, Subspace::zero(Q, 4)));
    CHECK(is_in_topology(m2, Subspace::full(Q, 4)));
    Rng rng(2);
    for (int i = 0; i < 30; ++i) {
        const Subspace d = random_subspace(rng, Q, 4, 1 + rng.below(3));
        CHECK(is_in_topology(m2, d) == d.is_zero());
    }
}

TEST_CASE("the topology of k[x]/(x^3) is a chain") {
    // Over F_2 every subspace of the 3-dimensional dual can be enumerated.
    const Field f2 = Field::prime(2);
    const RingedCoalgebraView rc(truncated_poly(f2, 3));
    const auto vectors = oracle::all_vectors(f2, 3);
    std::set<std::size_t> dims;
    std::vector<Subspace> members;
    for (std::size_t mask = 0; mask < (1u << vectors.size()); ++mask) {
        std::vector<Vec> chosen;
        for (std::size_t i = 0; i < vectors.size(); ++i)
            if (mask & (1u << i)) chosen.push_back(vectors[i]);
        const Subspace d = Subspace::span(f2, 3, chosen);
        if (!is_in_topology(rc, d)) continue;
        if (std::find(members.begin(), members.end(), d) == members.end()) members.push_back(d);
    }
    CHECK(members.size() == 4);
    for (const auto& d : members) dims.insert(d.dim());
    CHECK(dims == std::set<std::size_t>{0, 1, 2, 3});
    CHECK(std::find(members.begin(), members.end(), coords(f2, 3, {0})) != members.end());
    CHECK(std::find(members.begin(), members.end(), coords(f2, 3, {0, 1})) != members.end());
}

TEST_CASE("filter membership") {
    const RingedCoalgebraView t3(truncated_poly(Q, 3));
    const Subspace c = vanishing_space(t3.base_algebra(), coords(Q, 3, {1, 2}));
    CHECK(filter_contains(t3, c, Subspace::full(Q, 3)));
    CHECK_FALSE(filter_contains(t3, c, coords(Q, 3, {1, 2})));

    const Algebra idem = quotient_polynomial(Poly::parse(Q, "x^2 - x"));
    const RingedCoalgebraView rc(idem);
    const Vec x = unit_vec(Q, 2, 1);
    const Subspace ix = principal(idem, x, Side::Left);
    const Subspace at1 = vanishing_space(idem, principal(idem, sub(x, idem.unit()), Side::TwoSided));
    const Subspace at0 = vanishing_space(idem, ix);
    CHECK(filter_contains(rc, at1, ix));
    CHECK_FALSE(filter_contains(rc, at0, ix));
    CHECK_THROWS_AS(filter_contains(rc, at1, Subspace::span(Q, 2, {vec_from_ints(Q, {1, 1})})), InvalidArgument);
}

TEST_CASE("section membership") {
    const RingedCoalgebraView t3(truncated_poly(Q, 3));
    const Subspace c = vanishing_space(t3.base_algebra(), coords(Q, 3, {1, 2}));
    const Matrix a_c = section_map(t3, c);
    Rng rng(8);
    for (int i = 0; i < 10; ++i) CHECK(section_membership(t3, c, a_c.apply(random_vec(rng, Q, 3))));
}

TEST_CASE("section membership agrees with a search over small left ideals") {
    const Field f3 = Field::prime(3);
    Rng rng(31);
    for (int round = 0; round < 12; ++round) {
        const RingedCoalgebraView rc(random_algebra(rng, f3, 3));
        const Algebra& a = rc.base_algebra();
        const Subspace c = random_subcoalgebra(rng, rc.coalg());
        if (c.is_zero()) continue;
        const Matrix a_c = section_map(rc, c);
        const Algebra dual = dual_algebra(restrict_to(rc.coalg(), c));
        const Subspace image_a = image(a_c);

        std::vector<Subspace> ideals;
        const auto elements = oracle::all_vectors(f3, a.dim());
        for (const auto& u : elements)
            for (const auto& v : elements) {
                const Subspace i = ideal_generated(a, Subspace::span(f3, a.dim(), {u, v}), Side::Left);
                if (std::find(ideals.begin(), ideals.end(), i) == ideals.end()) ideals.push_back(i);
            }
        for (const auto& x : oracle::all_vectors(f3, c.dim())) {
            bool witness = false;
            for (const auto& i : ideals) {
                if (!intersect(vanishing_space(a, i), c).is_zero()) continue;
                bool inside = true;
                for (const auto& g : i.basis_vectors()) inside = inside && image_a.contains(dual.multiply(a_c.apply(g), x));
                if (inside) {
                    witness = true;
                    break;
                }
            }
            CHECK(section_membership(rc, c, x) == witness);
        }
    }
}

TEST_CASE("sections on algebraic subcoalgebras") {
    const Algebra t3 = truncated_poly(Q, 3);
    const RingedCoalgebraView rc(t3);
    CHECK(section_on_algebraic(rc, Subspace::full(Q, 3)).algebra == t3);
    const SectionAlgebra s = section_on_algebraic(rc, vanishing_space(t3, coords(Q, 3, {1, 2})));
    CHECK(s.algebra == matrix_algebra(Q, 1));
    CHECK_THROWS_AS(section_on_algebraic(rc, Subspace::zero(Q, 3)), InvalidArgument);
    CHECK_THROWS_AS(section_on_algebraic(rc, coords(Q, 3, {1})), InvalidArgument);
}

TEST_CASE("restriction between sections") {
    const Algebra t3 = truncated_poly(Q, 3);
    const RingedCoalgebraView rc(t3);
    const SectionAlgebra s1 = section_on_algebraic(rc, coords(Q, 3, {0}));
    const SectionAlgebra s2 = section_on_algebraic(rc, coords(Q, 3, {0, 1}));
    const Matrix r = section_restriction(s1, s2);
    CHECK(r.rows() == 1);
    CHECK(r.cols() == 2);
    CHECK(check_morphism({s2.algebra, s1.algebra, r}).ok());
}

TEST_CASE("ringed morphisms") {
    CHECK(check_rc_morphism(identity_morphism(truncated_poly(Q, 3)), {coords(Q, 3, {0}), Subspace::full(Q, 3)}).ok());
    // x -> e01 from k[x]/(x^2) into M_2.
    const PolyHom h = hom_to(matrix_algebra(Q, 2), unit_vec(Q, 4, 1));
    const Coalgebra source = dual_coalgebra(h.phi_bar.source);
    CHECK(check_rc_morphism(h.phi_bar, {coords(Q, 2, {0}), Subspace::full(Q, 2), Subspace::zero(Q, 2)}).ok());
    CHECK(source.dim() == 2);
}

TEST_CASE("global sections roundtrip") {
    CHECK(global_section_roundtrip(identity_morphism(truncated_poly(Q, 3))).ok());
    const AlgebraMorphism truncation{truncated_poly(Q, 3), truncated_poly(Q, 2), Matrix::from_ints(Q, 2, 3, {1, 0, 0, 0, 1, 0})};
    CHECK(global_section_roundtrip(truncation).ok());
    const AlgebraMorphism at1{quotient_polynomial(Poly::parse(Q, "x^2 - x")), matrix_algebra(Q, 1), Matrix::from_ints(Q, 1, 2, {1, 1})};
    CHECK(check_morphism(at1).ok());
    CHECK(global_section_roundtrip(at1).ok());
}

}  // TEST_SUITE
