#include "coalg/random.hpp"

#include "coalg/polydual.hpp"

namespace coalg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Algebra product_of_fields(Field f, std::size_t n) {
    Algebra a = matrix_algebra(f, 1);
    for (std::size_t i = 1; i < n; ++i) a = direct_product(a, matrix_algebra(f, 1));
    return a;
}

Poly random_monic(Rng& rng, Field f, int degree) {
    std::vector<Scalar> coeffs;
    for (int i = 0; i < degree; ++i) coeffs.push_back(random_scalar(rng, f));
    coeffs.push_back(Scalar::one(f));
    return Poly(f, std::move(coeffs));
}

Algebra base_algebra(Rng& rng, Field f, std::size_t max_dim) {
    while (true) {
        const std::size_t small = std::min<std::size_t>(max_dim, 4);
        switch (rng.below(8)) {
            case 0: return truncated_poly(f, 1 + rng.below(small));
            case 1:
                if (max_dim >= 3) return upper_triangular(f, 2);
                break;
            case 2:
                if (max_dim >= 4) return matrix_algebra(f, 2);
                break;
            case 3: return cyclic_group_algebra(f, 1 + rng.below(small));
            case 4: return quotient_polynomial(random_monic(rng, f, 1 + static_cast<int>(rng.below(std::min<std::size_t>(small, 3)))));
            case 5: return product_of_fields(f, 1 + rng.below(std::min<std::size_t>(small, 3)));
            case 6:
                if (max_dim >= 6) return upper_triangular(f, 3);
                break;
            case 7:
                if (max_dim >= 2) {
                    const std::size_t left = 1 + rng.below(max_dim - 1);
                    const Algebra a = base_algebra(rng, f, left);
                    const Algebra b = base_algebra(rng, f, max_dim - a.dim());
                    return direct_product(a, b);
                }
                break;
        }
    }
}

// A morphism out of `a` into some algebra of dimension <= max_dim.
AlgebraMorphism random_morphism_from(Rng& rng, const Algebra& a, std::size_t max_dim) {
    const Field f = a.field();
    switch (rng.below(3)) {
        case 0: {
            const Subspace ideal = random_ideal(rng, a);
            if (!ideal.is_full()) {
                auto q = quotient_algebra(a, ideal);
                return {a, std::move(q.algebra), std::move(q.projection)};
            }
            break;
        }
        case 1:
            if (2 * a.dim() <= max_dim) {
                const Matrix id = Matrix::identity(f, a.dim());
                return {a, direct_product(a, a), id.vstack(id)};
            }
            break;
        default: break;
    }
    const Matrix t = random_invertible(rng, f, a.dim());
    return {a, change_basis(a, t), inverse(t)};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(splitmix64(seed ^ h) + index);
}

Scalar random_scalar(Rng& rng, Field f, long bound) { return Scalar(f, rng.between(-bound, bound)); }

Vec random_vec(Rng& rng, Field f, std::size_t n, long bound) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, f, bound));
    return v;
}

Subspace random_subspace(Rng& rng, Field f, std::size_t ambient, std::size_t count) {
    std::vector<Vec> vectors;
    for (std::size_t i = 0; i < count; ++i) {
        // Sparse-ish vectors make proper subcoalgebra intersections likelier.
        Vec v = random_vec(rng, f, ambient);
        for (auto& x : v)
            if (rng.chance(40)) x = Scalar(f);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(f, ambient, vectors);
}

Subspace random_subspace(Rng& rng, Field f, std::size_t ambient) {
    return random_subspace(rng, f, ambient, rng.below(ambient + 1));
}

Matrix random_invertible(Rng& rng, Field f, std::size_t n) {
    Matrix u = Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u(i, j) = random_scalar(rng, f, 1);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Matrix p(f, n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = Scalar::one(f);
    return u * p;
}

Algebra random_algebra(Rng& rng, Field f, std::size_t max_dim) {
    Algebra a = base_algebra(rng, f, std::max<std::size_t>(max_dim, 1));
    if (rng.chance(30)) {
        const Subspace ideal = random_ideal(rng, a);
        if (!ideal.is_full()) a = quotient_algebra(a, ideal).algebra;
    }
    if (rng.chance(50)) a = change_basis(a, random_invertible(rng, f, a.dim()));
    return a;
}

Coalgebra random_coalgebra(Rng& rng, Field f, std::size_t max_dim) {
    if (max_dim >= 2 && rng.chance(20)) {
        const Algebra a = random_algebra(rng, f, max_dim - 1);
        const Algebra b = random_algebra(rng, f, max_dim - a.dim());
        return direct_sum(dual_coalgebra(a), dual_coalgebra(b));
    }
    return dual_coalgebra(random_algebra(rng, f, max_dim));
}

AlgebraMorphism random_algebra_morphism(Rng& rng, Field f, std::size_t max_dim) {
    max_dim = std::max<std::size_t>(max_dim, 1);
    switch (rng.below(5)) {
        case 0: {
            const Algebra b = random_algebra(rng, f, max_dim);
            return std::move(hom_to(b, random_vec(rng, f, b.dim())).phi_bar);
        }
        case 1:
            if (max_dim >= 2) {
                const Algebra a = random_algebra(rng, f, max_dim - 1);
                const Algebra b = random_algebra(rng, f, max_dim - a.dim());
                Matrix m(f, a.dim(), a.dim() + b.dim());
                for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) = Scalar::one(f);
                return {direct_product(a, b), a, std::move(m)};
            }
            break;
        case 2: {
            const AlgebraMorphism first = random_morphism_from(rng, random_algebra(rng, f, max_dim), max_dim);
            return compose(random_morphism_from(rng, first.target, max_dim), first);
        }
        default: break;
    }
    return random_morphism_from(rng, random_algebra(rng, f, max_dim), max_dim);
}

Subspace random_ideal(Rng& rng, const Algebra& a) {
    std::vector<Vec> gens;
    const std::size_t count = rng.below(3);
    for (std::size_t i = 0; i < count; ++i) {
        Vec v = random_vec(rng, a.field(), a.dim());
        for (auto& x : v)
            if (rng.chance(50)) x = Scalar(a.field());
        gens.push_back(std::move(v));
    }
    return ideal_generated(a, Subspace::span(a.field(), a.dim(), gens), Side::TwoSided);
}

Subspace random_subcoalgebra(Rng& rng, const Coalgebra& c) { return orthogonal(random_ideal(rng, dual_algebra(c))); }

}  // namespace coalg
