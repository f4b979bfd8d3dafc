#include "coalg/rcmodules.hpp"

#include "coalg/errors.hpp"

namespace coalg {

RCModuleView::RCModuleView(LeftModule m)
    : over_(m.algebra), module_(std::move(m)), comodule_(module_to_comodule(module_)) {}

Subspace annihilated_part(const RCModuleView& v, const Subspace& c) {
    const LeftModule& m = v.base_module();
    std::vector<Vec> vectors;
    for (const Vec& a : orthogonal(c).basis_vectors()) {
        const Matrix act = m.act(a);
        for (std::size_t j = 0; j < m.dim; ++j) vectors.push_back(act.column(j));
    }
    return Subspace::span(m.algebra.field(), m.dim, vectors);
}

Matrix module_section_map(const RCModuleView& v, const Subspace& c) {
    return cotensor(c, v.comodule()).basis();
}

ModuleSection module_section_on_algebraic(const RCModuleView& v, const Subspace& c) {
    SectionAlgebra section = section_on_algebraic(v.over(), c);
    const LeftModule& m = v.base_module();
    const QuotientMap q = quotient_with_lift(m.dim, annihilated_part(v, c));
    const QuotientMap qa = quotient_with_lift(v.over().dim(), orthogonal(c));
    LeftModule quotient{section.algebra, q.projection.rows(), {}};
    for (std::size_t j = 0; j < section.algebra.dim(); ++j)
        quotient.action.push_back(q.projection * m.act(qa.lift.column(j)) * q.lift);
    return {std::move(section), std::move(quotient), q.projection, q.lift};
}

Subspace module_section_witness_ideal(const RCModuleView& v, const Subspace& c, std::span<const Scalar> x) {
    const Comodule box = cotensor_comodule(c, v.comodule());
    if (x.size() != box.dim()) throw DimensionMismatch("module_section_membership: x must have dim(C box M*) coordinates");
    const LeftModule dual = dual_module(box);  // over C*
    const Matrix a_c = section_map(v.over(), c);
    const std::size_t n = v.over().dim();
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(dual.act(a_c.column(i)).apply(x));
    const Matrix action_on_x = Matrix::from_columns(v.over().field(), box.dim(), cols);
    Subspace j = preimage(action_on_x, image(module_section_map(v, c)));
    if (!is_ideal(v.over().base_algebra(), j, Side::Left))
        throw CrossCheckFailure("module_section_membership: J_x is not a left ideal");
    return j;
}

bool module_section_membership(const RCModuleView& v, const Subspace& c, std::span<const Scalar> x) {
    return filter_contains(v.over(), c, module_section_witness_ideal(v, c, x));
}

Matrix module_restriction(const ModuleSection& s1, const ModuleSection& s2) {
    if (!s2.section.subcoalgebra.contains(s1.section.subcoalgebra))
        throw InvalidArgument("module_restriction: C1 is not contained in C2");
    return s1.projection * s2.lift;
}

std::vector<Matrix> hat_functor_on_morphism(const ModuleMorphism& f, const std::vector<Subspace>& sample) {
    if (const Report r = check_morphism(f); !r.ok()) throw InvalidArgument("hat_functor_on_morphism: " + r.to_string());
    const RCModuleView source(f.source), target(f.target);
    std::vector<Matrix> out;
    for (const Subspace& c : sample) {
        const ModuleSection s = module_section_on_algebraic(source, c);
        const ModuleSection t = module_section_on_algebraic(target, c);
        const Matrix induced = t.projection * f.matrix * s.lift;
        if (induced * s.projection != t.projection * f.matrix)
            throw CrossCheckFailure("hat_functor_on_morphism: f does not descend to M / IM");
        out.push_back(induced);
    }
    return out;
}

Report gamma_roundtrip(const ModuleMorphism& f) {
    Report report;
    if (const Report r = check_morphism(f); !r.ok()) {
        report.add("module morphism", r.to_string());
        return report;
    }
    const Field field = f.source.algebra.field();
    const Subspace whole = Subspace::full(field, f.source.algebra.dim());
    for (const LeftModule* m : {&f.source, &f.target}) {
        const ModuleSection s = module_section_on_algebraic(RCModuleView(*m), whole);
        if (s.module.algebra != m->algebra || s.module.dim != m->dim || s.module.action != m->action)
            report.add("Gamma(M^) = M", "sections over the whole coalgebra differ from M");
    }
    const std::vector<Matrix> hat = hat_functor_on_morphism(f, {whole});
    if (hat.front() != f.matrix) report.add("Gamma(f^) = f", "global sections of f^ differ from f");
    return report;
}

Report check_restriction_square(const RCModuleView& v, const Subspace& c1, const Subspace& c2) {
    Report report;
    const ModuleSection s1 = module_section_on_algebraic(v, c1);
    const ModuleSection s2 = module_section_on_algebraic(v, c2);
    const Matrix lambda = module_restriction(s1, s2);
    const Matrix rho = section_restriction(s1.section, s2.section);
    for (std::size_t j = 0; j < s2.section.algebra.dim(); ++j) {
        const Matrix lhs = lambda * s2.module.action[j];
        const Matrix rhs = s1.module.act(rho.column(j)) * lambda;
        if (lhs != rhs) report.add("restriction square", "section basis element " + std::to_string(j));
    }
    if (lambda * s2.projection != s1.projection) report.add("restriction square", "lambda o pi_2 != pi_1");
    return report;
}

}  // namespace coalg
