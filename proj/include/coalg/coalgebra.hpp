#pragma once

#include <cstddef>
#include <vector>

#include "coalg/algebra.hpp"
#include "coalg/tensor.hpp"

namespace coalg {

/// Finite-dimensional coalgebra on e_0..e_{n-1}:
/// Delta(e_i) = sum_{j,k} d[i][j][k] e_j (x) e_k, counit given by its values.
class Coalgebra {
public:
    Coalgebra() = default;
    /// comult is n^2 x n: column i holds Delta(e_i) in TensorIndex(n, n).
    Coalgebra(Matrix comult, Vec counit);
    static Coalgebra from_triples(Field f, std::size_t dim, const std::vector<StructureTriple>& triples, Vec counit);

    Field field() const { return comult_.field(); }
    std::size_t dim() const { return counit_.size(); }
    const Matrix& comultiplication() const { return comult_; }
    const Vec& counit() const { return counit_; }
    /// Counit as a 1 x n matrix.
    Matrix counit_map() const;
    Vec coproduct(std::span<const Scalar> x) const { return comult_.apply(x); }
    /// Nonzero d[i][j][k] in (i, j, k) order.
    std::vector<StructureTriple> triples() const;

    friend bool operator==(const Coalgebra& a, const Coalgebra& b) = default;

private:
    Matrix comult_;
    Vec counit_;
};

struct CoalgebraMorphism {
    Coalgebra source;
    Coalgebra target;
    Matrix matrix;  // target.dim x source.dim
};

Report check_axioms(const Coalgebra& c);
Report check_morphism(const CoalgebraMorphism& f);
CoalgebraMorphism identity_morphism(const Coalgebra& c);

/// C* with (f g)(x) = (f (x) g)(Delta x) on the dual basis.
Algebra dual_algebra(const Coalgebra& c);
/// A* with Delta dual to the multiplication and counit = evaluation at 1.
Coalgebra dual_coalgebra(const Algebra& a);
/// phi* : B* -> A* for phi : A -> B.
CoalgebraMorphism dual_morphism(const AlgebraMorphism& phi);

Coalgebra set_coalgebra(Field f, std::size_t n);
/// Comatrix coalgebra on e_ij (index i * n + j): Delta(e_ij) = sum_k e_ik (x) e_kj.
Coalgebra comatrix_coalgebra(Field f, std::size_t n);
Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b);
/// Coalgebra structure on a subcoalgebra D in the coordinates of D's stored basis.
Coalgebra restrict_to(const Coalgebra& c, const Subspace& d);
/// n x dim(D) matrix whose columns are D's basis vectors.
Matrix inclusion_matrix(const Subspace& d);

/// Delta^{-1}(V (x) C + C (x) W), computed as ker((pi_V (x) pi_W) o Delta).
Subspace wedge_by_preimage(const Coalgebra& c, const Subspace& v, const Subspace& w);
/// (V^perp W^perp)^perp with the product taken in C*.
Subspace wedge_by_orthogonal_product(const Coalgebra& c, const Subspace& v, const Subspace& w);
/// Computes both routes; throws CrossCheckFailure if they disagree.
Subspace wedge(const Coalgebra& c, const Subspace& v, const Subspace& w);

/// Delta(D) in D (x) D, cross-checked against D^perp being a two-sided ideal of C*.
bool is_subcoalgebra(const Coalgebra& c, const Subspace& d);

/// (ideal of C* generated by V^perp)^perp.
Subspace largest_subcoalgebra_by_ideal(const Coalgebra& c, const Subspace& v);
/// Fixpoint of D_{n+1} = {x in D_n : Delta x in D_n (x) D_n}, D_0 = V.
Subspace largest_subcoalgebra_by_fixpoint(const Coalgebra& c, const Subspace& v);
/// Both routes, cross-checked.
Subspace largest_subcoalgebra_in(const Coalgebra& c, const Subspace& v);

/// Largest subcoalgebra of the source inside f^{-1}(D). D must be a subcoalgebra.
Subspace pullback_dagger(const CoalgebraMorphism& f, const Subspace& d);

/// All group-likes x (Delta x = x (x) x, eps(x) = 1) with coordinates in the
/// base field, sorted canonically.
std::vector<Vec> grouplikes(const Coalgebra& c);

/// (Jacobson radical of C*)^perp; characteristic zero only.
Subspace coradical(const Coalgebra& c);
/// C_0 within C_1 = C_0 wedge C_0, C_{n+1} = C_n wedge C_0, up to the first C_n = C.
std::vector<Subspace> coradical_filtration(const Coalgebra& c);

}  // namespace coalg
