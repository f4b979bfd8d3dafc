#pragma once

#include <vector>

#include "coalg/comodule.hpp"
#include "coalg/ringed.hpp"

namespace coalg {

/// A finite-dimensional left A-module M seen over the ringed coalgebra A*,
/// together with the comodule M* over A*.
class RCModuleView {
public:
    explicit RCModuleView(LeftModule m);

    const RingedCoalgebraView& over() const { return over_; }
    const LeftModule& base_module() const { return module_; }
    const Comodule& comodule() const { return comodule_; }

private:
    RingedCoalgebraView over_;
    LeftModule module_;
    Comodule comodule_;
};

/// C^perp M.
Subspace annihilated_part(const RCModuleView& v, const Subspace& c);

/// m_C : M -> (C box M*)*, m -> (xi -> xi(m)), in the dual of the cotensor's echelon basis.
Matrix module_section_map(const RCModuleView& v, const Subspace& c);

struct ModuleSection {
    SectionAlgebra section;
    LeftModule module;  // M / IM over section.algebra
    Matrix projection;  // M -> M / IM
    Matrix lift;        // right inverse of projection
};

/// M / IM with I = C^perp and the induced action of the section algebra. C must be algebraic.
ModuleSection module_section_on_algebraic(const RCModuleView& v, const Subspace& c);

/// J_x = {a : a_C(a) x in m_C(M)}, a left ideal. x is in (C box M*)* coordinates.
Subspace module_section_witness_ideal(const RCModuleView& v, const Subspace& c, std::span<const Scalar> x);
bool module_section_membership(const RCModuleView& v, const Subspace& c, std::span<const Scalar> x);

/// M / I2 M -> M / I1 M for algebraic C1 in C2.
Matrix module_restriction(const ModuleSection& s1, const ModuleSection& s2);

/// The induced map M / IM -> N / IN on each sampled algebraic subcoalgebra.
std::vector<Matrix> hat_functor_on_morphism(const ModuleMorphism& f, const std::vector<Subspace>& sample);

/// Gamma(M^) = M on objects and Gamma(f^) = f on the morphism.
Report gamma_roundtrip(const ModuleMorphism& f);

/// Restriction maps commute with the section actions for the nested pair C1 in C2.
Report check_restriction_square(const RCModuleView& v, const Subspace& c1, const Subspace& c2);

}  // namespace coalg
