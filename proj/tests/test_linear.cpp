#include <doctest.h>

#include <algorithm>

#include "coalg/errors.hpp"
#include "coalg/random.hpp"
#include "coalg/tensor.hpp"

using namespace coalg;

namespace {
const Field Q = Field::rationals();
const Field F7 = Field::prime(7);

Subspace span_ints(Field f, std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vec> vectors;
    for (const auto& r : rows) vectors.push_back(vec_from_ints(f, r));
    return Subspace::span(f, n, vectors);
}
}  // namespace

TEST_SUITE("linear") {

TEST_CASE("rational scalars stay in lowest terms") {
    CHECK(Scalar(Q, 3, 6).to_string() == "1/2");
    CHECK(Scalar(Q, 2, -4).to_string() == "-1/2");
    CHECK(Scalar::parse(Q, "6/4") == Scalar(Q, 3, 2));
    CHECK((Scalar(Q, 1, 3) + Scalar(Q, 1, 6)) == Scalar(Q, 1, 2));
}

TEST_CASE("residues reduce modulo p") {
    CHECK(Scalar(F7, -1).residue() == 6);
    CHECK((Scalar(F7, 3) * Scalar(F7, 5)).residue() == 1);
    CHECK(Scalar(F7, 3).inverse() == Scalar(F7, 5));
    CHECK_THROWS_AS(Scalar(F7, 0).inverse(), Error);
    CHECK_THROWS_AS(Scalar(Q, 1) + Scalar(F7, 1), FieldMismatch);
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix::identity(Q, 3)).is_zero());
    CHECK(kernel(Matrix(Q, 2, 3)).is_full());
    CHECK(kernel(Matrix::from_ints(Q, 2, 2, {1, 1, 2, 2})) == span_ints(Q, 2, {{1, -1}}));
}

TEST_CASE("sum, intersection and quotient examples") {
    CHECK(intersect(span_ints(Q, 2, {{1, 0}}), span_ints(Q, 2, {{0, 1}})).is_zero());
    CHECK(sum(span_ints(Q, 2, {{1, 0}}), span_ints(Q, 2, {{1, 1}})).is_full());
    const QuotientMap q = quotient_with_lift(3, span_ints(Q, 3, {{0, 0, 1}}));
    CHECK(q.projection == Matrix::from_ints(Q, 2, 3, {1, 0, 0, 0, 1, 0}));
    CHECK(q.projection * q.lift == Matrix::identity(Q, 2));
}

TEST_CASE("tensor examples") {
    CHECK(tensor_map(Matrix::identity(Q, 2), Matrix::identity(Q, 3)) == Matrix::identity(Q, 6));
    CHECK(mixed_tensor_sum(Subspace::zero(Q, 3), Subspace::zero(Q, 3)).is_zero());
    const TensorIndex t(2, 3);
    CHECK(t(1, 2) == 5);
    CHECK(t.left(5) == 1);
    CHECK(t.right(5) == 2);
}

TEST_CASE("mixed tensor sum dimension") {
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        const std::size_t c = 1 + rng.below(4);
        const Subspace v = random_subspace(rng, F7, c), w = random_subspace(rng, F7, c);
        const std::size_t expected = v.dim() * c + c * w.dim() - v.dim() * w.dim();
        CHECK(mixed_tensor_sum(v, w).dim() == expected);
    }
}

TEST_CASE("orthogonal examples") {
    CHECK(orthogonal(Subspace::full(Q, 3)).is_zero());
    CHECK(orthogonal(Subspace::zero(Q, 3)).is_full());
    CHECK(orthogonal(span_ints(Q, 2, {{1, 1}})) == span_ints(Q, 2, {{1, -1}}));
}

TEST_CASE("dimension formula, double orthogonal and canonicity") {
    for (const Field f : {Q, F7}) {
        Rng rng(derive_seed(5, f.name(), 0));
        for (int i = 0; i < 100; ++i) {
            const std::size_t n = 1 + rng.below(8);
            const Subspace a = random_subspace(rng, f, n), b = random_subspace(rng, f, n);
            CHECK(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim());
            CHECK(orthogonal(orthogonal(a)) == a);

            std::vector<Vec> other = a.basis_vectors();
            for (std::size_t k = 1; k < other.size(); ++k) other[k] = add(other[k], other[k - 1]);
            if (!other.empty()) other.push_back(scale(Scalar(f, 3), other.front()));
            std::reverse(other.begin(), other.end());
            CHECK(Subspace::span(f, n, other) == a);
        }
    }
}

TEST_CASE("preimage and image") {
    const Matrix m = Matrix::from_ints(Q, 2, 3, {1, 0, 0, 0, 0, 0});
    CHECK(image(m) == span_ints(Q, 2, {{1, 0}}));
    CHECK(preimage(m, Subspace::zero(Q, 2)) == span_ints(Q, 3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK_THROWS_AS(preimage(m, Subspace::zero(Q, 3)), DimensionMismatch);
}

}  // TEST_SUITE
