#pragma once

#include <string>
#include <vector>

#include "coalg/coalgebra.hpp"

namespace coalg {

/// k[x]/(f) on 1, x, ..., x^{deg f - 1}, with f made monic. Rejects f = 0.
Algebra quotient_of(const Poly& f);

/// A functional on k[x] vanishing on (modulus), stored on the basis 1, ..., x^{deg - 1}.
class FinDualElement {
public:
    /// modulus is normalized to monic; functional must have deg(modulus) entries.
    FinDualElement(Poly modulus, Vec functional);

    const Poly& modulus() const { return modulus_; }
    const Vec& functional() const { return functional_; }
    Scalar evaluate(const Poly& p) const;

    /// Equal iff they agree on k[x]/(lcm of the moduli).
    friend bool operator==(const FinDualElement& a, const FinDualElement& b);

private:
    Poly modulus_;
    Vec functional_;
};

/// The same functional read on k[x]/(g). Requires modulus | g.
FinDualElement include(const FinDualElement& phi, const Poly& g);

/// Z((f)) inside (k[x]/(g))*, built from the included dual basis of (k[x]/(f))*.
Subspace vanishing_in_tower(const Poly& f, const Poly& g);

struct WedgeLawReport {
    std::size_t ambient_dim = 0;
    std::size_t dim_zf = 0;
    std::size_t dim_zg = 0;
    std::size_t dim_wedge = 0;
    std::size_t dim_sum = 0;
    Report report;
};
/// Z((f)) wedge Z((g)) = Z((fg)) inside (k[x]/(fg))*.
WedgeLawReport wedge_law(const Poly& f, const Poly& g);

struct PolyHom {
    Poly q;
    AlgebraMorphism phi_bar;  // k[x]/(q) -> b, x -> image
};
/// q is the minimal polynomial of image_of_x and phi_bar the induced morphism.
PolyHom hom_to(const Algebra& b, std::span<const Scalar> image_of_x);

struct CounterexampleCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct CounterexampleReport {
    Poly q;
    std::size_t dagger_d = 0;             // f_dagger(Z((x)))
    std::size_t dagger_d_wedge = 0;       // f_dagger(Z((x)) wedge Z((x)))
    std::size_t wedge_of_daggers = 0;     // f_dagger(D) wedge f_dagger(D)
    std::size_t image_phi = 0;
    std::size_t ker_f = 0;
    bool ker_f_subcoalgebra = false;
    std::size_t preimage_d = 0;           // f^{-1}(Z((x)))
    bool preimage_d_subcoalgebra = false;
    std::vector<CounterexampleCheck> checks;

    bool ok() const;
    std::string to_string() const;
};

/// phi : k[x] -> M_2(k), x -> e_01, factored through k[x]/(x^2), and f = phi*.
CounterexampleReport counterexample(Field f = Field::rationals());

}  // namespace coalg
