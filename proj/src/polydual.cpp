#include "coalg/polydual.hpp"

#include <sstream>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

Poly normalized(const Poly& f) {
    if (f.degree() < 0) throw InvalidArgument("polynomial modulus must be nonzero");
    return f.monic();
}

// Coordinates of p mod f on 1, ..., x^{deg f - 1}.
Vec reduce_coordinates(const Poly& p, const Poly& f) {
    const Poly r = p % f;
    Vec out;
    for (int i = 0; i < f.degree(); ++i) out.push_back(r.coefficient(static_cast<std::size_t>(i)));
    return out;
}

}  // namespace

Algebra quotient_of(const Poly& f) { return quotient_polynomial(normalized(f)); }

FinDualElement::FinDualElement(Poly modulus, Vec functional)
    : modulus_(normalized(modulus)), functional_(std::move(functional)) {
    if (functional_.size() != static_cast<std::size_t>(modulus_.degree()))
        throw DimensionMismatch("functional must have deg(modulus) coordinates");
}

Scalar FinDualElement::evaluate(const Poly& p) const {
    if (functional_.empty()) return Scalar(p.field());
    return dot(functional_, reduce_coordinates(p, modulus_));
}

bool operator==(const FinDualElement& a, const FinDualElement& b) {
    const Poly m = lcm(a.modulus_, b.modulus_);
    return include(a, m).functional_ == include(b, m).functional_;
}

FinDualElement include(const FinDualElement& phi, const Poly& g) {
    const Poly target = normalized(g);
    if (!divides(phi.modulus(), target)) throw InvalidArgument("include: modulus does not divide the target");
    Vec out;
    for (int i = 0; i < target.degree(); ++i) out.push_back(phi.evaluate(Poly::monomial(target.field(), i)));
    return FinDualElement(target, std::move(out));
}

Subspace vanishing_in_tower(const Poly& f, const Poly& g) {
    const Poly m = normalized(f);
    const Poly ambient = normalized(g);
    std::vector<Vec> vectors;
    for (int i = 0; i < m.degree(); ++i) {
        const FinDualElement e(m, unit_vec(m.field(), static_cast<std::size_t>(m.degree()), static_cast<std::size_t>(i)));
        vectors.push_back(include(e, ambient).functional());
    }
    return Subspace::span(ambient.field(), static_cast<std::size_t>(ambient.degree()), vectors);
}

WedgeLawReport wedge_law(const Poly& f, const Poly& g) {
    const Poly fg = normalized(f) * normalized(g);
    WedgeLawReport out;
    const Algebra a = quotient_of(fg);
    const Coalgebra c = dual_coalgebra(a);
    out.ambient_dim = c.dim();
    const Subspace zf = vanishing_in_tower(f, fg);
    const Subspace zg = vanishing_in_tower(g, fg);
    out.dim_zf = zf.dim();
    out.dim_zg = zg.dim();
    // Independent description: Z((f)) is the orthogonal of the ideal generated by f.
    const Field field = fg.field();
    const auto ideal_of = [&](const Poly& p) {
        return ideal_generated(a, Subspace::span(field, a.dim(), {reduce_coordinates(p, fg)}), Side::TwoSided);
    };
    if (zf != orthogonal(ideal_of(f))) out.report.add("tower inclusion", "Z((f)) differs from (f)^perp");
    if (zg != orthogonal(ideal_of(g))) out.report.add("tower inclusion", "Z((g)) differs from (g)^perp");
    const Subspace w = wedge(c, zf, zg);
    out.dim_wedge = w.dim();
    out.dim_sum = sum(zf, zg).dim();
    if (!w.is_full())
        out.report.add("wedge law", "dim " + std::to_string(w.dim()) + " != " + std::to_string(c.dim()));
    return out;
}

PolyHom hom_to(const Algebra& b, std::span<const Scalar> image_of_x) {
    if (image_of_x.size() != b.dim()) throw DimensionMismatch("hom_to: image has the wrong length");
    Poly q = minimal_polynomial(b, image_of_x);
    Algebra source = quotient_polynomial(q);
    const std::vector<Vec> cols = powers(b, image_of_x, source.dim());
    AlgebraMorphism phi{std::move(source), b, Matrix::from_columns(b.field(), b.dim(), cols)};
    if (const Report r = check_morphism(phi); !r.ok())
        throw CrossCheckFailure("hom_to: induced map is not a morphism: " + r.to_string());
    return {std::move(q), std::move(phi)};
}

bool CounterexampleReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string CounterexampleReport::to_string() const {
    std::ostringstream out;
    out << "phi: k[x] -> M2, x -> e01, minimal polynomial q = " << q.to_string() << "\n";
    out << "dim f_dagger(Z((x)))              = " << dagger_d << "\n";
    out << "dim f_dagger(Z((x^2)))            = " << dagger_d_wedge << "\n";
    out << "dim f_dagger(D) v f_dagger(D)     = " << wedge_of_daggers << "\n";
    out << "dim Im(phi)                       = " << image_phi << "\n";
    out << "dim ker f                         = " << ker_f << (ker_f_subcoalgebra ? " (subcoalgebra)" : " (not a subcoalgebra)") << "\n";
    out << "dim f^{-1}(Z((x)))                = " << preimage_d
        << (preimage_d_subcoalgebra ? " (subcoalgebra)" : " (not a subcoalgebra)") << "\n";
    for (const auto& c : checks)
        out << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected << ", computed " << c.computed << "\n";
    return out.str();
}

CounterexampleReport counterexample(Field field) {
    CounterexampleReport out;
    const auto check = [&](std::string name, const std::string& expected, const std::string& computed) {
        out.checks.push_back({std::move(name), expected, computed, expected == computed});
    };
    const auto dim_str = [](std::size_t d) { return std::to_string(d); };
    const auto bool_str = [](bool b) { return std::string(b ? "true" : "false"); };

    const Algebra m2 = matrix_algebra(field, 2);
    const PolyHom hom = hom_to(m2, unit_vec(field, 4, 1));  // e01
    out.q = hom.q;
    check("minimal polynomial of e01", "x^2", hom.q.to_string());

    const AlgebraMorphism& phi = hom.phi_bar;
    const CoalgebraMorphism f = dual_morphism(phi);  // M2* -> (k[x]/(x^2))*
    const Coalgebra& target = f.target;
    const Subspace ideal_x = Subspace::span(field, 2, {unit_vec(field, 2, 1)});  // (x) mod x^2
    const Subspace d = orthogonal(ideal_x);
    const Subspace d_wedge = wedge(target, d, d);
    check("Z((x)) v Z((x)) = Z((x^2))", bool_str(true), bool_str(d_wedge.is_full()));

    const Subspace dagger_d = pullback_dagger(f, d);
    const Subspace dagger_d_formula = orthogonal(ideal_generated(m2, image(phi.matrix, ideal_x), Side::TwoSided));
    out.dagger_d = dagger_d.dim();
    check("dim f_dagger(Z((x)))", "0", dim_str(dagger_d.dim()));
    check("f_dagger(Z((x))) = Z(B phi(I) B)", bool_str(true), bool_str(dagger_d == dagger_d_formula));

    const Subspace dagger_wedge = pullback_dagger(f, d_wedge);
    const Subspace zero_ideal = Subspace::zero(field, 2);  // (x^2) mod x^2
    const Subspace dagger_wedge_formula =
        orthogonal(ideal_generated(m2, image(phi.matrix, zero_ideal), Side::TwoSided));
    out.dagger_d_wedge = dagger_wedge.dim();
    check("dim f_dagger(Z((x^2)))", "4", dim_str(dagger_wedge.dim()));
    check("f_dagger(Z((x^2))) = Z(B phi(I^2) B)", bool_str(true), bool_str(dagger_wedge == dagger_wedge_formula));

    const Subspace wedge_daggers = wedge(f.source, dagger_d, dagger_d);
    out.wedge_of_daggers = wedge_daggers.dim();
    check("f_dagger(D) v f_dagger(D) != f_dagger(D v D)", bool_str(true),
          bool_str(wedge_daggers != dagger_wedge && dagger_wedge.contains(wedge_daggers)));

    const Subspace ker_f = kernel(f.matrix);
    const Subspace image_phi = image(phi.matrix);
    out.image_phi = image_phi.dim();
    out.ker_f = ker_f.dim();
    out.ker_f_subcoalgebra = is_subcoalgebra(f.source, ker_f);
    check("ker f = Im(phi)^perp", bool_str(true), bool_str(ker_f == orthogonal(image_phi)));
    check("dim ker f", "3", dim_str(ker_f.dim()));
    check("ker f is a subcoalgebra", bool_str(false), bool_str(out.ker_f_subcoalgebra));

    const Subspace pre = preimage(f.matrix, d);
    out.preimage_d = pre.dim();
    out.preimage_d_subcoalgebra = is_subcoalgebra(f.source, pre);
    check("f^{-1}(Z((x))) is a subcoalgebra", bool_str(false), bool_str(out.preimage_d_subcoalgebra));
    return out;
}

}  // namespace coalg
