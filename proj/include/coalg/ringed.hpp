#pragma once

#include <vector>

#include "coalg/coalgebra.hpp"

namespace coalg {

/// A finite-dimensional algebra A together with A* = dual_coalgebra(A) and its
/// topology of algebraic subcoalgebras (a membership predicate, never enumerated).
/// A* carries the dual basis of A, so dual_algebra(coalg) == base_algebra.
class RingedCoalgebraView {
public:
    explicit RingedCoalgebraView(Algebra a);

    const Algebra& base_algebra() const { return algebra_; }
    const Coalgebra& coalg() const { return coalg_; }
    Field field() const { return algebra_.field(); }
    std::size_t dim() const { return algebra_.dim(); }

private:
    Algebra algebra_;
    Coalgebra coalg_;
};

/// Z(S) = S^perp inside A*.
Subspace vanishing_space(const Algebra& a, const Subspace& s);
/// S^perp^perp; equals S in finite dimension, computed rather than assumed.
Subspace closure(const Algebra& a, const Subspace& s);

/// D^perp is a two-sided ideal, cross-checked against is_subcoalgebra.
bool is_in_topology(const RingedCoalgebraView& rc, const Subspace& d);

/// a_C : A -> C*, the restriction of evaluation; dim C x dim A in the dual of
/// C's echelon basis. It is an algebra morphism onto dual_algebra(restrict_to(A*, C)).
Matrix section_map(const RingedCoalgebraView& rc, const Subspace& c);

/// Z(I) and C meet in 0. I must be a left ideal and C a subcoalgebra.
bool filter_contains(const RingedCoalgebraView& rc, const Subspace& c, const Subspace& i);

/// J_x = {a : a_C(a) x in a_C(A)}, a left ideal of A. x is in C* coordinates.
Subspace section_witness_ideal(const RingedCoalgebraView& rc, const Subspace& c, std::span<const Scalar> x);
/// x lies in S_C: some left ideal I with Z(I) and C meeting in 0 has a_C(I) x in a_C(A).
/// Any such I lies inside J_x, so it suffices to test J_x.
bool section_membership(const RingedCoalgebraView& rc, const Subspace& c, std::span<const Scalar> x);

struct SectionAlgebra {
    Subspace subcoalgebra;
    /// a_C(A) in the basis a_C(lift(e_j)), j over the complement coordinates of C^perp.
    Algebra algebra;
    /// dim C x dim C, columns are the basis above in C* coordinates.
    Matrix embedding;
    /// A -> algebra.
    Matrix projection;
};

/// Sections on an algebraic C != 0. Throws InvalidArgument otherwise.
SectionAlgebra section_on_algebraic(const RingedCoalgebraView& rc, const Subspace& c);

/// C2* -> C1* dual to the inclusion C1 in C2 (echelon coordinates on both sides).
Matrix restriction_map(const Subspace& c1, const Subspace& c2);
/// The same restriction written between section algebra bases.
Matrix section_restriction(const SectionAlgebra& s1, const SectionAlgebra& s2);

/// For phi : A -> B and each sampled algebraic D of A*: f = phi* satisfies
/// f_dagger(D) = Z(B phi(D^perp) B), f_dagger(D) is algebraic in B*, and the dual
/// map sends sections on D to sections on f_dagger(D).
Report check_rc_morphism(const AlgebraMorphism& phi, const std::vector<Subspace>& sample);

/// Gamma(phi*) == phi as matrices, Gamma(A*) == A, and iota_{A*} is the identity.
Report global_section_roundtrip(const AlgebraMorphism& phi);

}  // namespace coalg
