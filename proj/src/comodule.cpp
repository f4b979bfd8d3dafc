#include "coalg/comodule.hpp"

#include "coalg/errors.hpp"

namespace coalg {

namespace {

// Coordinates of v in V (x) W relative to the products of the echelon bases.
// With echelon bases the coefficient of b_j (x) n_l sits at the pivot pair.
Vec tensor_coordinates(std::span<const Scalar> v, const Subspace& left, const Subspace& right) {
    const TensorIndex big(left.ambient_dim(), right.ambient_dim());
    Vec out;
    out.reserve(left.dim() * right.dim());
    for (std::size_t j = 0; j < left.dim(); ++j)
        for (std::size_t l = 0; l < right.dim(); ++l) out.push_back(v[big(left.pivots()[j], right.pivots()[l])]);
    return out;
}

void require_shape(const Comodule& m) {
    if (m.coaction.rows() != m.over.dim() * m.dim())
        throw DimensionMismatch("coaction must be (dim C * dim M) x dim M");
}

}  // namespace

Report check_axioms(const Comodule& m) {
    Report report;
    require_shape(m);
    const Field f = m.field();
    const Matrix id_m = Matrix::identity(f, m.dim());
    const Matrix id_c = Matrix::identity(f, m.over.dim());
    const Matrix lhs = tensor_map(m.over.comultiplication(), id_m) * m.coaction;
    const Matrix rhs = tensor_map(id_c, m.coaction) * m.coaction;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (lhs.column(i) != rhs.column(i)) report.add("coassociativity", "basis index " + std::to_string(i));
    const Matrix counit = tensor_map(m.over.counit_map(), id_m) * m.coaction;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (counit.column(i) != id_m.column(i)) report.add("counit", "basis index " + std::to_string(i));
    return report;
}

Report check_morphism(const ComoduleMorphism& f) {
    Report report;
    if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim()) {
        report.add("shape", "matrix is " + std::to_string(f.matrix.rows()) + "x" + std::to_string(f.matrix.cols()));
        return report;
    }
    if (f.source.over != f.target.over) {
        report.add("coalgebra", "source and target are comodules over different coalgebras");
        return report;
    }
    const Matrix lhs = f.target.coaction * f.matrix;
    const Matrix rhs = tensor_map(Matrix::identity(f.matrix.field(), f.source.over.dim()), f.matrix) * f.source.coaction;
    for (std::size_t i = 0; i < f.source.dim(); ++i)
        if (lhs.column(i) != rhs.column(i)) report.add("colinear", "basis index " + std::to_string(i));
    return report;
}

ComoduleMorphism identity_morphism(const Comodule& m) { return {m, m, Matrix::identity(m.field(), m.dim())}; }

Comodule regular_comodule(const Coalgebra& c) { return {c, c.comultiplication()}; }

Comodule zero_comodule(const Coalgebra& c) { return {c, Matrix(c.field(), 0, 0)}; }

Comodule direct_sum(const Comodule& a, const Comodule& b) {
    if (a.over != b.over) throw InvalidArgument("direct_sum of comodules over different coalgebras");
    const std::size_t n = a.over.dim(), da = a.dim(), db = b.dim();
    const TensorIndex ta(n, da), tb(n, db), t(n, da + db);
    Matrix rho(a.field(), t.dim(), da + db);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j) rho(t(c, i), j) = a.coaction(ta(c, i), j);
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < db; ++j) rho(t(c, da + i), da + j) = b.coaction(tb(c, i), j);
    }
    return {a.over, std::move(rho)};
}

Subspace cotensor(const Subspace& d, const Comodule& m) {
    require_shape(m);
    if (!is_subcoalgebra(m.over, d)) throw InvalidArgument("cotensor: D is not a subcoalgebra");
    return preimage(m.coaction, tensor_of_subspaces(d, Subspace::full(m.field(), m.dim())));
}

Comodule cotensor_comodule(const Subspace& d, const Comodule& m) {
    const Subspace n = cotensor(d, m);
    const Coalgebra restricted = restrict_to(m.over, d);
    const Subspace target = tensor_of_subspaces(d, n);
    const TensorIndex t(d.dim(), n.dim());
    Matrix rho(m.field(), t.dim(), n.dim());
    for (std::size_t i = 0; i < n.dim(); ++i) {
        const Vec v = m.coaction.apply(n.basis().row(i));
        if (!target.contains(v)) throw CrossCheckFailure("cotensor_comodule: rho(D box M) not in D (x) (D box M)");
        const Vec coords = tensor_coordinates(v, d, n);
        for (std::size_t r = 0; r < coords.size(); ++r) rho(r, i) = coords[r];
    }
    return {restricted, std::move(rho)};
}

Comodule subcomodule(const Comodule& m, const Subspace& n) {
    require_shape(m);
    const Subspace all_c = Subspace::full(m.field(), m.over.dim());
    const Subspace target = tensor_of_subspaces(all_c, n);
    const TensorIndex t(m.over.dim(), n.dim());
    Matrix rho(m.field(), t.dim(), n.dim());
    for (std::size_t i = 0; i < n.dim(); ++i) {
        const Vec v = m.coaction.apply(n.basis().row(i));
        if (!target.contains(v)) throw InvalidArgument("subcomodule: subspace is not rho-stable");
        const Vec coords = tensor_coordinates(v, all_c, n);
        for (std::size_t r = 0; r < coords.size(); ++r) rho(r, i) = coords[r];
    }
    return {m.over, std::move(rho)};
}

Matrix LeftModule::act(std::span<const Scalar> a) const {
    Matrix out(algebra.field(), dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) out = out + a[i] * action[i];
    return out;
}

Report check_axioms(const LeftModule& m) {
    Report report;
    const Algebra& a = m.algebra;
    if (m.action.size() != a.dim()) {
        report.add("shape", "expected one action matrix per basis element");
        return report;
    }
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (m.action[i].rows() != m.dim || m.action[i].cols() != m.dim) {
            report.add("shape", "action matrix " + std::to_string(i) + " is not dim x dim");
            return report;
        }
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.action[i] * m.action[j] != m.act(a.basis_product(i, j)))
                report.add("associativity", "(e" + std::to_string(i) + " e" + std::to_string(j) + ") m");
    if (m.act(a.unit()) != Matrix::identity(a.field(), m.dim)) report.add("unit", "1 does not act as the identity");
    return report;
}

Report check_morphism(const ModuleMorphism& f) {
    Report report;
    if (f.matrix.rows() != f.target.dim || f.matrix.cols() != f.source.dim) {
        report.add("shape", "matrix is " + std::to_string(f.matrix.rows()) + "x" + std::to_string(f.matrix.cols()));
        return report;
    }
    if (f.source.algebra != f.target.algebra) {
        report.add("algebra", "modules over different algebras");
        return report;
    }
    for (std::size_t i = 0; i < f.source.algebra.dim(); ++i)
        if (f.matrix * f.source.action[i] != f.target.action[i] * f.matrix)
            report.add("linear", "f(e" + std::to_string(i) + " m) != e" + std::to_string(i) + " f(m)");
    return report;
}

LeftModule regular_module(const Algebra& a) {
    LeftModule m{a, a.dim(), {}};
    for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left_multiplication(a.basis_vector(i)));
    return m;
}

LeftModule zero_module(const Algebra& a) {
    return {a, 0, std::vector<Matrix>(a.dim(), Matrix(a.field(), 0, 0))};
}

LeftModule direct_sum(const LeftModule& a, const LeftModule& b) {
    if (a.algebra != b.algebra) throw InvalidArgument("direct_sum of modules over different algebras");
    LeftModule out{a.algebra, a.dim + b.dim, {}};
    for (std::size_t i = 0; i < a.action.size(); ++i) {
        Matrix m(a.algebra.field(), out.dim, out.dim);
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c) m(r, c) = a.action[i](r, c);
        for (std::size_t r = 0; r < b.dim; ++r)
            for (std::size_t c = 0; c < b.dim; ++c) m(a.dim + r, a.dim + c) = b.action[i](r, c);
        out.action.push_back(std::move(m));
    }
    return out;
}

Subspace submodule_generated(const LeftModule& m, const Subspace& s) {
    Subspace current = s;
    while (true) {
        std::vector<Vec> vectors = current.basis_vectors();
        for (const auto& act : m.action)
            for (const auto& v : current.basis_vectors()) vectors.push_back(act.apply(v));
        Subspace next = Subspace::span(m.algebra.field(), m.dim, vectors);
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

LeftModule quotient_module(const LeftModule& m, const Subspace& n) {
    if (submodule_generated(m, n) != n) throw InvalidArgument("quotient_module: not a submodule");
    const QuotientMap q = quotient_with_lift(m.dim, n);
    LeftModule out{m.algebra, q.projection.rows(), {}};
    for (const auto& act : m.action) out.action.push_back(q.projection * act * q.lift);
    return out;
}

LeftModule dual_module(const Comodule& m) {
    require_shape(m);
    const std::size_t n = m.over.dim(), d = m.dim();
    const TensorIndex t(n, d);
    LeftModule out{dual_algebra(m.over), d, {}};
    for (std::size_t c = 0; c < n; ++c) {
        Matrix act(m.field(), d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) act(i, j) = m.coaction(t(c, j), i);
        out.action.push_back(std::move(act));
    }
    return out;
}

Comodule module_to_comodule(const LeftModule& n) {
    if (const Report r = check_axioms(n); !r.ok()) throw InvalidArgument("module_to_comodule: " + r.to_string());
    const std::size_t c_dim = n.algebra.dim(), d = n.dim;
    const TensorIndex t(c_dim, d);
    Matrix rho(n.algebra.field(), t.dim(), d);
    for (std::size_t c = 0; c < c_dim; ++c)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) rho(t(c, j), i) = n.action[c](i, j);
    return {dual_coalgebra(n.algebra), std::move(rho)};
}

std::vector<ComoduleBlock> block_decompose(const Comodule& m, const std::vector<Vec>& idempotents) {
    require_shape(m);
    const Algebra b = dual_algebra(m.over);
    const Field f = m.field();
    if (idempotents.empty()) throw InvalidArgument("block_decompose: empty idempotent family");
    Vec total = zero_vec(f, b.dim());
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        const Vec& e = idempotents[i];
        if (e.size() != b.dim()) throw DimensionMismatch("block_decompose: idempotent of wrong length");
        if (b.multiply(e, e) != e) throw InvalidArgument("block_decompose: element " + std::to_string(i) + " is not idempotent");
        for (std::size_t j = 0; j < idempotents.size(); ++j)
            if (i != j && !is_zero(b.multiply(e, idempotents[j])))
                throw InvalidArgument("block_decompose: family is not orthogonal");
        for (std::size_t k = 0; k < b.dim(); ++k)
            if (b.multiply(e, b.basis_vector(k)) != b.multiply(b.basis_vector(k), e))
                throw InvalidArgument("block_decompose: element " + std::to_string(i) + " is not central");
        total = add(total, e);
    }
    if (total != b.unit()) throw InvalidArgument("block_decompose: family does not sum to 1");

    const TensorIndex t(m.over.dim(), m.dim());
    std::vector<ComoduleBlock> out;
    for (const Vec& e : idempotents) {
        // Matrix of x -> (e (x) id) rho(x).
        Matrix cut(f, m.dim(), m.dim());
        for (std::size_t c = 0; c < m.over.dim(); ++c)
            if (!e[c].is_zero())
                for (std::size_t i = 0; i < m.dim(); ++i)
                    for (std::size_t j = 0; j < m.dim(); ++j) cut(i, j) += e[c] * m.coaction(t(c, i), j);
        Subspace support = image(cut);
        Comodule block = subcomodule(m, support);
        out.push_back({std::move(support), std::move(block)});
    }
    return out;
}

}  // namespace coalg
