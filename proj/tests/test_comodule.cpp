#include <doctest.h>

#include "coalg/comodule.hpp"
#include "coalg/errors.hpp"
#include "coalg/random.hpp"

using namespace coalg;

namespace {
const Field Q = Field::rationals();

Subspace coords(std::size_t n, std::initializer_list<std::size_t> indices) {
    std::vector<Vec> vectors;
    for (const auto i : indices) vectors.push_back(unit_vec(Q, n, i));
    return Subspace::span(Q, n, vectors);
}
}  // namespace

TEST_SUITE("comodule") {

TEST_CASE("regular, zero and identity") {
    const Coalgebra c = dual_coalgebra(upper_triangular(Q, 2));
    const Comodule reg = regular_comodule(c);
    CHECK(check_axioms(reg).ok());
    CHECK(check_axioms(zero_comodule(c)).ok());
    CHECK(check_morphism(identity_morphism(reg)).ok());
}

TEST_CASE("a broken coaction is reported") {
    const Coalgebra c = set_coalgebra(Q, 2);
    Comodule m = regular_comodule(c);
    m.coaction(0, 1) = Scalar(Q, 1);
    CHECK_FALSE(check_axioms(m).ok());
}

TEST_CASE("cotensor examples") {
    const Coalgebra t2 = dual_coalgebra(truncated_poly(Q, 2));
    const Comodule reg = regular_comodule(t2);
    CHECK(cotensor(Subspace::full(Q, 2), reg).is_full());
    CHECK(cotensor(Subspace::zero(Q, 2), reg).is_zero());
    CHECK(cotensor(coords(2, {0}), reg) == coords(2, {0}));
    CHECK_THROWS_AS(cotensor(coords(2, {1}), reg), InvalidArgument);
}

TEST_CASE("modules become comodules") {
    const Algebra a = upper_triangular(Q, 2);
    const Comodule m = module_to_comodule(regular_module(a));
    CHECK(m.over == dual_coalgebra(a));
    CHECK(check_axioms(m).ok());
    // The coaction is the transposed multiplication table.
    for (std::size_t c = 0; c < a.dim(); ++c)
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) CHECK(m.coaction(c * a.dim() + j, i) == a.structure(c, j, i));

    const Comodule trivial = module_to_comodule(regular_module(matrix_algebra(Q, 1)));
    CHECK(trivial.coaction == Matrix::identity(Q, 1));

    const Algebra kk = direct_product(matrix_algebra(Q, 1), matrix_algebra(Q, 1));
    const Comodule split = module_to_comodule(regular_module(kk));
    CHECK(split.over == set_coalgebra(Q, 2));
    const auto blocks = block_decompose(split, {unit_vec(Q, 2, 0), unit_vec(Q, 2, 1)});
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].block.dim() == 1);
    CHECK(blocks[1].block.dim() == 1);
}

TEST_CASE("dual module roundtrip") {
    Rng rng(9);
    for (int i = 0; i < 30; ++i) {
        const Algebra a = random_algebra(rng, Q, 4);
        const LeftModule n = regular_module(a);
        const Comodule m = module_to_comodule(n);
        const LeftModule back = dual_module(m);
        CHECK(back.action == n.action);
        CHECK(module_to_comodule(back).coaction == m.coaction);
    }
}

TEST_CASE("block decomposition") {
    const Algebra idem = quotient_polynomial(Poly::parse(Q, "x^2 - x"));
    const Comodule m = module_to_comodule(regular_module(idem));
    const auto whole = block_decompose(m, {idem.unit()});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].support.is_full());

    const Vec x = unit_vec(Q, 2, 1);
    const Vec one_minus_x = sub(idem.unit(), x);
    const auto blocks = block_decompose(m, {x, one_minus_x});
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].support.dim() == 1);
    CHECK(blocks[1].support.dim() == 1);
    CHECK(sum(blocks[0].support, blocks[1].support).is_full());
    for (const auto& b : blocks) CHECK(check_axioms(b.block).ok());

    CHECK_THROWS_AS(block_decompose(m, {x}), InvalidArgument);                       // incomplete
    CHECK_THROWS_AS(block_decompose(m, {x, x, sub(one_minus_x, x)}), InvalidArgument);  // not orthogonal
}

TEST_CASE("central idempotents are required") {
    const Algebra m2 = matrix_algebra(Q, 2);
    const Comodule m = module_to_comodule(regular_module(m2));
    const Vec e00 = unit_vec(Q, 4, 0), e11 = unit_vec(Q, 4, 3);
    CHECK_THROWS_AS(block_decompose(m, {e00, e11}), InvalidArgument);
}

TEST_CASE("module helpers") {
    const Algebra t3 = truncated_poly(Q, 3);
    const LeftModule reg = regular_module(t3);
    CHECK(check_axioms(reg).ok());
    const Subspace n = submodule_generated(reg, coords(3, {1}));
    CHECK(n == coords(3, {1, 2}));
    const LeftModule q = quotient_module(reg, n);
    CHECK(q.dim == 1);
    CHECK(check_axioms(q).ok());
    CHECK(check_axioms(direct_sum(reg, q)).ok());
    CHECK(zero_module(t3).dim == 0);
}

}  // TEST_SUITE
