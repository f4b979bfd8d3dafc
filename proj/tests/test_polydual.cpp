#include <doctest.h>

#include "coalg/errors.hpp"
#include "coalg/polydual.hpp"

using namespace coalg;

namespace {
const Field Q = Field::rationals();
Poly P(const char* text) { return Poly::parse(Q, text); }
}  // namespace

TEST_SUITE("polydual") {

TEST_CASE("tower pieces") {
    CHECK(quotient_of(P("x^2")) == truncated_poly(Q, 2));
    CHECK(quotient_of(P("x^2 - x")) == quotient_polynomial(P("x^2 - x")));
    CHECK(quotient_of(P("2x^2 - 2x")) == quotient_polynomial(P("x^2 - x")));
    const Algebra cubic = quotient_of(P("x^3 - 1"));
    CHECK(cubic.dim() == 3);
    CHECK(cubic.basis_product(1, 2) == unit_vec(Q, 3, 0));
    CHECK_THROWS_AS(quotient_of(Poly(Q)), InvalidArgument);
}

TEST_CASE("inclusion along divisibility") {
    const FinDualElement own(P("x^2"), vec_from_ints(Q, {3, 5}));
    CHECK(include(own, P("x^2")).functional() == own.functional());

    const FinDualElement at0(P("x"), vec_from_ints(Q, {1}));
    const FinDualElement up = include(at0, P("x^2"));
    CHECK(up.evaluate(P("x^2 + 3x + 7")) == Scalar(Q, 7));
    CHECK(up.evaluate(P("x + 2")) == Scalar(Q, 2));

    const FinDualElement e1(P("x^2"), vec_from_ints(Q, {0, 1}));
    CHECK(include(e1, P("x^3")).functional() == vec_from_ints(Q, {0, 1, 0}));
    CHECK(include(e1, P("x^3")) == e1);
    CHECK_THROWS_AS(include(e1, P("x^3 - 1")), InvalidArgument);
}

TEST_CASE("evaluation at 1 survives inclusion") {
    const FinDualElement at1(P("x - 1"), vec_from_ints(Q, {1}));
    const FinDualElement up = include(at1, P("x^2 - 1"));
    CHECK(up.evaluate(P("x^3 + x")) == Scalar(Q, 2));
}

TEST_CASE("wedge law examples") {
    const WedgeLawReport same = wedge_law(P("x"), P("x"));
    CHECK(same.report.ok());
    CHECK(same.ambient_dim == 2);
    CHECK(same.dim_wedge == 2);
    CHECK(same.dim_zf == 1);

    const WedgeLawReport apart = wedge_law(P("x"), P("x - 1"));
    CHECK(apart.report.ok());
    CHECK(apart.dim_wedge == 2);
    CHECK(apart.dim_sum == 2);
    const Subspace z0 = vanishing_in_tower(P("x"), P("x^2 - x"));
    const Subspace z1 = vanishing_in_tower(P("x - 1"), P("x^2 - x"));
    CHECK(sum(z0, z1).is_full());

    const WedgeLawReport unit = wedge_law(P("1"), P("x^2 + 1"));
    CHECK(unit.report.ok());
    CHECK(unit.dim_zf == 0);
}

TEST_CASE("homomorphisms out of k[x]") {
    CHECK(hom_to(matrix_algebra(Q, 2), unit_vec(Q, 4, 1)).q == P("x^2"));
    CHECK(hom_to(matrix_algebra(Q, 1), vec_from_ints(Q, {5})).q == P("x - 5"));
    const Algebra idem = quotient_polynomial(P("x^2 - x"));
    const PolyHom h = hom_to(idem, unit_vec(Q, 2, 1));
    CHECK(h.q == P("x^2 - x"));
    CHECK(check_morphism(h.phi_bar).ok());
}

TEST_CASE("counterexample dimensions against a hand computation") {
    // phi(x) = e01 is unital, so Im(phi) = span{1, e01} and ker f = Im(phi)^perp
    // has dimension 4 - 2.
    for (const Field f : {Q, Field::prime(7)}) {
        const CounterexampleReport r = counterexample(f);
        CHECK(r.q == Poly::parse(f, "x^2"));
        CHECK(r.dagger_d == 0);
        CHECK(r.dagger_d_wedge == 4);
        CHECK(r.wedge_of_daggers == 0);
        CHECK(r.image_phi == 2);
        CHECK(r.ker_f == 2);
        CHECK_FALSE(r.ker_f_subcoalgebra);
        CHECK(r.preimage_d == 3);
        CHECK_FALSE(r.preimage_d_subcoalgebra);
    }
}

TEST_CASE("counterexample report marks the kernel claim") {
    const CounterexampleReport r = counterexample();
    CHECK_FALSE(r.ok());
    std::size_t failed = 0;
    for (const auto& c : r.checks)
        if (!c.pass) {
            ++failed;
            CHECK(c.name == "dim ker f");
            CHECK(c.expected == "3");
            CHECK(c.computed == "2");
        }
    CHECK(failed == 1);
}

}  // TEST_SUITE
