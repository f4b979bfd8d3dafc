#pragma once

#include <cstddef>
#include <vector>

#include "coalg/coalgebra.hpp"

namespace coalg {

/// Left comodule rho : M -> C (x) M. The coaction is (dim C * dim M) x dim M,
/// column m holding rho(e_m) in TensorIndex(dim C, dim M).
struct Comodule {
    Coalgebra over;
    Matrix coaction;

    std::size_t dim() const { return coaction.cols(); }
    Field field() const { return over.field(); }
};

struct ComoduleMorphism {
    Comodule source;
    Comodule target;
    Matrix matrix;  // target.dim x source.dim
};

Report check_axioms(const Comodule& m);
Report check_morphism(const ComoduleMorphism& f);
ComoduleMorphism identity_morphism(const Comodule& m);

/// C as a comodule over itself via Delta.
Comodule regular_comodule(const Coalgebra& c);
Comodule zero_comodule(const Coalgebra& c);
Comodule direct_sum(const Comodule& a, const Comodule& b);

/// D box M = {x : rho(x) in D (x) M}. D must be a subcoalgebra.
Subspace cotensor(const Subspace& d, const Comodule& m);
/// D box M as a comodule over restrict_to(C, D), in the echelon basis of the cotensor.
Comodule cotensor_comodule(const Subspace& d, const Comodule& m);
/// Subcomodule N of M (rho(N) in C (x) N, checked) in N's echelon basis.
Comodule subcomodule(const Comodule& m, const Subspace& n);

/// Finite-dimensional left module; action[i] is the matrix of e_i.
struct LeftModule {
    Algebra algebra;
    std::size_t dim = 0;
    std::vector<Matrix> action;

    Matrix act(std::span<const Scalar> a) const;
};

struct ModuleMorphism {
    LeftModule source;
    LeftModule target;
    Matrix matrix;  // target.dim x source.dim
};

Report check_axioms(const LeftModule& m);
Report check_morphism(const ModuleMorphism& f);
LeftModule regular_module(const Algebra& a);
LeftModule zero_module(const Algebra& a);
LeftModule direct_sum(const LeftModule& a, const LeftModule& b);
/// M / N on the complement coordinates of N; N must be a submodule.
LeftModule quotient_module(const LeftModule& m, const Subspace& n);
/// Smallest submodule containing S.
Subspace submodule_generated(const LeftModule& m, const Subspace& s);

/// M* as a left module over C*: (f . xi)(x) = (f (x) xi)(rho(x)).
LeftModule dual_module(const Comodule& m);
/// N* as a left comodule over dual_coalgebra(N.algebra); inverse of dual_module.
Comodule module_to_comodule(const LeftModule& n);

struct ComoduleBlock {
    Subspace support;  // image of x -> (e (x) id) rho(x) inside M
    Comodule block;    // the same piece in support's echelon basis
};

/// Splits M along a complete family of orthogonal central idempotents of C*.
/// Throws InvalidArgument if the family is not idempotent, orthogonal,
/// complete or central.
std::vector<ComoduleBlock> block_decompose(const Comodule& m, const std::vector<Vec>& idempotents);

}  // namespace coalg
