#include "coalg/ringed.hpp"

#include "coalg/errors.hpp"

namespace coalg {

namespace {

void require_subcoalgebra(const RingedCoalgebraView& rc, const Subspace& c, const char* what) {
    if (c.ambient_dim() != rc.dim()) throw DimensionMismatch(std::string(what) + ": subspace has the wrong ambient dimension");
    if (!is_subcoalgebra(rc.coalg(), c)) throw InvalidArgument(std::string(what) + ": C is not a subcoalgebra");
}

Algebra section_dual(const RingedCoalgebraView& rc, const Subspace& c) {
    return dual_algebra(restrict_to(rc.coalg(), c));
}

}  // namespace

RingedCoalgebraView::RingedCoalgebraView(Algebra a) : algebra_(std::move(a)), coalg_(dual_coalgebra(algebra_)) {}

Subspace vanishing_space(const Algebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim()) throw DimensionMismatch("vanishing_space: subspace of the wrong ambient dimension");
    return orthogonal(s);
}

Subspace closure(const Algebra& a, const Subspace& s) { return orthogonal(vanishing_space(a, s)); }

bool is_in_topology(const RingedCoalgebraView& rc, const Subspace& d) {
    if (d.ambient_dim() != rc.dim()) throw DimensionMismatch("is_in_topology: subspace of the wrong ambient dimension");
    const bool ideal = is_ideal(rc.base_algebra(), orthogonal(d), Side::TwoSided);
    if (ideal != is_subcoalgebra(rc.coalg(), d))
        throw CrossCheckFailure("is_in_topology: ideal and subcoalgebra criteria disagree");
    return ideal;
}

Matrix section_map(const RingedCoalgebraView& rc, const Subspace& c) {
    if (c.ambient_dim() != rc.dim()) throw DimensionMismatch("section_map: subspace of the wrong ambient dimension");
    return c.basis();
}

bool filter_contains(const RingedCoalgebraView& rc, const Subspace& c, const Subspace& i) {
    require_subcoalgebra(rc, c, "filter_contains");
    if (i.ambient_dim() != rc.dim()) throw DimensionMismatch("filter_contains: ideal of the wrong ambient dimension");
    if (!is_ideal(rc.base_algebra(), i, Side::Left)) throw InvalidArgument("filter_contains: I is not a left ideal");
    return intersect(vanishing_space(rc.base_algebra(), i), c).is_zero();
}

Subspace section_witness_ideal(const RingedCoalgebraView& rc, const Subspace& c, std::span<const Scalar> x) {
    require_subcoalgebra(rc, c, "section_membership");
    if (x.size() != c.dim()) throw DimensionMismatch("section_membership: x must have dim C coordinates");
    const Algebra dual = section_dual(rc, c);
    const Matrix a_c = section_map(rc, c);
    const Subspace sections = image(a_c);
    Subspace j = preimage(dual.right_multiplication(x) * a_c, sections);
    if (!is_ideal(rc.base_algebra(), j, Side::Left))
        throw CrossCheckFailure("section_membership: J_x is not a left ideal");
    return j;
}

bool section_membership(const RingedCoalgebraView& rc, const Subspace& c, std::span<const Scalar> x) {
    return filter_contains(rc, c, section_witness_ideal(rc, c, x));
}

SectionAlgebra section_on_algebraic(const RingedCoalgebraView& rc, const Subspace& c) {
    if (c.ambient_dim() != rc.dim()) throw DimensionMismatch("section_on_algebraic: subspace of the wrong ambient dimension");
    if (!is_in_topology(rc, c)) throw InvalidArgument("section_on_algebraic: C is not algebraic");
    if (c.is_zero()) throw InvalidArgument("section_on_algebraic: no section algebra on C = 0");
    const Subspace kernel_ideal = closure(rc.base_algebra(), orthogonal(c));
    const QuotientMap q = quotient_with_lift(rc.dim(), kernel_ideal);
    const Matrix a_c = section_map(rc, c);
    Matrix embedding = a_c * q.lift;
    Algebra algebra = change_basis(section_dual(rc, c), embedding);
    return {c, std::move(algebra), std::move(embedding), q.projection};
}

Matrix restriction_map(const Subspace& c1, const Subspace& c2) {
    if (!c2.contains(c1)) throw InvalidArgument("restriction_map: C1 is not contained in C2");
    Matrix inclusion(c1.field(), c2.dim(), c1.dim());
    for (std::size_t j = 0; j < c1.dim(); ++j) {
        const Vec coords = c2.coordinates(c1.basis().row(j));
        for (std::size_t i = 0; i < c2.dim(); ++i) inclusion(i, j) = coords[i];
    }
    return inclusion.transpose();
}

Matrix section_restriction(const SectionAlgebra& s1, const SectionAlgebra& s2) {
    return inverse(s1.embedding) * restriction_map(s1.subcoalgebra, s2.subcoalgebra) * s2.embedding;
}

Report check_rc_morphism(const AlgebraMorphism& phi, const std::vector<Subspace>& sample) {
    Report report;
    if (const Report r = check_morphism(phi); !r.ok()) {
        report.add("algebra morphism", r.to_string());
        return report;
    }
    const RingedCoalgebraView source(phi.source), target(phi.target);
    const CoalgebraMorphism f = dual_morphism(phi);
    for (std::size_t s = 0; s < sample.size(); ++s) {
        const Subspace& d = sample[s];
        const std::string witness = "sample " + std::to_string(s) + ": D = " + d.to_string();
        if (!is_in_topology(source, d)) {
            report.add("sample algebraic", witness);
            continue;
        }
        const Subspace ideal = orthogonal(d);
        const Subspace by_pullback = pullback_dagger(f, d);
        const Subspace pushed = ideal_generated(phi.target, image(phi.matrix, ideal), Side::TwoSided);
        const Subspace by_ideal = vanishing_space(phi.target, pushed);
        if (by_pullback != by_ideal) report.add("pullback equals Z(B phi(I) B)", witness);
        if (!is_in_topology(target, by_pullback)) report.add("pullback algebraic", witness);
        if (!d.contains(image(f.matrix, by_pullback))) report.add("pullback maps into D", witness);
        if (!orthogonal(by_pullback).contains(image(phi.matrix, ideal)))
            report.add("dual map restricts to sections", witness);
    }
    return report;
}

Report global_section_roundtrip(const AlgebraMorphism& phi) {
    Report report;
    if (const Report r = check_morphism(phi); !r.ok()) {
        report.add("algebra morphism", r.to_string());
        return report;
    }
    const RingedCoalgebraView source(phi.source), target(phi.target);
    const Subspace whole_a = Subspace::full(source.field(), source.dim());
    const Subspace whole_b = Subspace::full(target.field(), target.dim());
    const SectionAlgebra gamma_a = section_on_algebraic(source, whole_a);
    const SectionAlgebra gamma_b = section_on_algebraic(target, whole_b);
    if (gamma_a.algebra != phi.source) report.add("Gamma(A*) = A", "source sections differ from A");
    if (gamma_b.algebra != phi.target) report.add("Gamma(A*) = A", "target sections differ from B");

    // Gamma(f) for f = phi* : B* -> A* is the dual map f* : A** -> B** read in section bases.
    const CoalgebraMorphism f = dual_morphism(phi);
    const Matrix gamma_f = inverse(gamma_b.embedding) * f.matrix.transpose() * gamma_a.embedding;
    if (gamma_f != phi.matrix) report.add("Gamma(f) = phi", "Gamma(phi*) differs from phi");

    // iota_C : C -> Gamma(C)*, c -> (s -> s(c)); on the section basis g_j this is g_j(c).
    const Matrix iota = gamma_a.embedding.transpose();
    if (iota != Matrix::identity(source.field(), source.dim())) report.add("iota is the identity", "iota_{A*} != id");
    const CoalgebraMorphism iota_morphism{source.coalg(), dual_coalgebra(gamma_a.algebra), iota};
    if (const Report r = check_morphism(iota_morphism); !r.ok()) report.add("iota is a coalgebra morphism", r.to_string());
    return report;
}

}  // namespace coalg
