#pragma once

#include <cstddef>
#include <vector>

#include "coalg/matrix.hpp"
#include "coalg/poly.hpp"
#include "coalg/report.hpp"
#include "coalg/subspace.hpp"

namespace coalg {

struct StructureTriple {
    std::size_t i, j, k;
    Scalar c;
};

/// Finite-dimensional associative unital algebra on the basis e_0..e_{n-1}:
/// e_i e_j = sum_k m[i][j][k] e_k, with the unit given by its coordinates.
class Algebra {
public:
    Algebra() = default;
    /// mult holds m[i][j][k] at (i * n + j) * n + k. Axioms are not checked here.
    Algebra(Field f, std::size_t dim, std::vector<Scalar> mult, Vec unit);
    static Algebra from_triples(Field f, std::size_t dim, const std::vector<StructureTriple>& triples, Vec unit);

    Field field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return mult_[(i * dim_ + j) * dim_ + k];
    }
    /// Nonzero structure constants in (i, j, k) order.
    std::vector<StructureTriple> triples() const;

    Vec basis_product(std::size_t i, std::size_t j) const;
    Vec multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
    /// Matrix of y -> x y (column j is x e_j).
    Matrix left_multiplication(std::span<const Scalar> x) const;
    /// Matrix of y -> y x.
    Matrix right_multiplication(std::span<const Scalar> x) const;
    Vec basis_vector(std::size_t i) const { return unit_vec(field_, dim_, i); }

    friend bool operator==(const Algebra& a, const Algebra& b) = default;

private:
    Field field_;
    std::size_t dim_ = 0;
    std::vector<Scalar> mult_;
    Vec unit_;
};

/// Lists every failing associativity triple and unit index.
Report check_axioms(const Algebra& a);

/// Matrix units e_ij at index i * n + j.
Algebra matrix_algebra(Field f, std::size_t n);
/// k[x]/(x^n) on 1, x, ..., x^{n-1}.
Algebra truncated_poly(Field f, std::size_t n);
/// k[G] from a Cayley table (table[g][h] = index of gh).
Algebra group_algebra(Field f, const std::vector<std::vector<std::size_t>>& table);
Algebra cyclic_group_algebra(Field f, std::size_t n);
/// Upper triangular n x n matrices on e_ij (i <= j) in lexicographic order.
Algebra upper_triangular(Field f, std::size_t n);
/// a x b with a's basis first.
Algebra direct_product(const Algebra& a, const Algebra& b);
/// k[x]/(f) on 1, x, ..., x^{deg f - 1}; f must have positive degree.
Algebra quotient_polynomial(const Poly& f);
/// The same algebra written in a new basis; column i of t is the i-th new
/// basis vector in old coordinates.
Algebra change_basis(const Algebra& a, const Matrix& t);

/// span{s t : s in S1, t in S2}.
Subspace subspace_product(const Algebra& a, const Subspace& s1, const Subspace& s2);

enum class Side { Left, Right, TwoSided };

/// Smallest subspace containing S closed under the requested multiplications.
Subspace ideal_generated(const Algebra& a, const Subspace& s, Side side);
bool is_ideal(const Algebra& a, const Subspace& s, Side side);

struct QuotientAlgebra {
    Algebra algebra;
    Matrix projection;  // A -> A/I, an algebra morphism
    Matrix lift;        // right inverse onto the complement coordinates
};
/// A/I on the non-pivot coordinates of I. Rejects non-ideals and I = A.
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);

struct AlgebraMorphism {
    Algebra source;
    Algebra target;
    Matrix matrix;  // target.dim x source.dim
};
Report check_morphism(const AlgebraMorphism& phi);
AlgebraMorphism identity_morphism(const Algebra& a);
AlgebraMorphism compose(const AlgebraMorphism& second, const AlgebraMorphism& first);

bool is_commutative(const Algebra& a);
/// Two-sided ideal generated by all commutators.
Subspace commutator_ideal(const Algebra& a);
/// Jacobson radical via the trace form; characteristic zero only.
Subspace radical(const Algebra& a);
/// Monic minimal polynomial of x (smallest linear dependence among powers).
Poly minimal_polynomial(const Algebra& a, std::span<const Scalar> x);
/// 1, x, x^2, ..., x^{count-1}.
std::vector<Vec> powers(const Algebra& a, std::span<const Scalar> x, std::size_t count);

}  // namespace coalg
