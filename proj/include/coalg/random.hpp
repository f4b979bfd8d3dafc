#pragma once

#include <cstdint>
#include <random>

#include "coalg/coalgebra.hpp"

namespace coalg {

/// Seeded generator. mt19937_64 output is fixed by the standard and the
/// reductions below avoid std distributions, so streams are portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish in [0, n); n > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }
    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::mt19937_64 engine_;
};

/// Mixes a suite seed with a label and a case index into a case seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index);

Scalar random_scalar(Rng& rng, Field f, long bound = 2);
Vec random_vec(Rng& rng, Field f, std::size_t n, long bound = 2);
/// Span of `count` random vectors.
Subspace random_subspace(Rng& rng, Field f, std::size_t ambient, std::size_t count);
/// Span of a random number (0..ambient) of random vectors.
Subspace random_subspace(Rng& rng, Field f, std::size_t ambient);
/// Unitriangular times a permutation: always invertible.
Matrix random_invertible(Rng& rng, Field f, std::size_t n);

/// Random associative unital algebra of dimension 1..max_dim built from the
/// standard constructors, random quotients and random changes of basis.
Algebra random_algebra(Rng& rng, Field f, std::size_t max_dim);
/// Duals of random algebras, occasionally direct sums of two.
Coalgebra random_coalgebra(Rng& rng, Field f, std::size_t max_dim);
/// Algebra morphism between random algebras of dimension <= max_dim (quotient maps,
/// maps out of k[x]/(q), projections, diagonals, isomorphisms and composites).
AlgebraMorphism random_algebra_morphism(Rng& rng, Field f, std::size_t max_dim);
/// A random two-sided ideal generated by up to two random elements.
Subspace random_ideal(Rng& rng, const Algebra& a);
/// (random ideal of C*)^perp.
Subspace random_subcoalgebra(Rng& rng, const Coalgebra& c);

}  // namespace coalg
