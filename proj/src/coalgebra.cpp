#include "coalg/coalgebra.hpp"

#include <algorithm>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

void require_ambient(const Coalgebra& c, const Subspace& s, const char* what) {
    if (s.ambient_dim() != c.dim())
        throw DimensionMismatch(std::string(what) + ": subspace of k^" + std::to_string(s.ambient_dim()) +
                                " in a coalgebra of dimension " + std::to_string(c.dim()));
    if (s.field() != c.field()) throw FieldMismatch(std::string(what) + ": field mismatch");
}

bool vec_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

}  // namespace

Coalgebra::Coalgebra(Matrix comult, Vec counit) : comult_(std::move(comult)), counit_(std::move(counit)) {
    const std::size_t n = counit_.size();
    if (comult_.cols() != n || comult_.rows() != TensorIndex(n, n).dim())
        throw DimensionMismatch("comultiplication matrix must be n^2 x n");
    for (const auto& c : counit_)
        if (c.field() != comult_.field()) throw FieldMismatch("counit over a different field");
}

Coalgebra Coalgebra::from_triples(Field f, std::size_t dim, const std::vector<StructureTriple>& triples, Vec counit) {
    const TensorIndex t(dim, dim);
    Matrix m(f, t.dim(), dim);
    for (const auto& x : triples) {
        if (x.i >= dim || x.j >= dim || x.k >= dim) throw DimensionMismatch("comultiplication triple out of range");
        m(t(x.j, x.k), x.i) += x.c;
    }
    return Coalgebra(std::move(m), std::move(counit));
}

Matrix Coalgebra::counit_map() const { return Matrix::from_rows(field(), dim(), {counit_}); }

std::vector<StructureTriple> Coalgebra::triples() const {
    const std::size_t n = dim();
    const TensorIndex t(n, n);
    std::vector<StructureTriple> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!comult_(t(j, k), i).is_zero()) out.push_back({i, j, k, comult_(t(j, k), i)});
    return out;
}

Report check_axioms(const Coalgebra& c) {
    Report report;
    const Field f = c.field();
    const std::size_t n = c.dim();
    const Matrix& d = c.comultiplication();
    const Matrix id = Matrix::identity(f, n);
    const Matrix left = tensor_map(d, id) * d;
    const Matrix right = tensor_map(id, d) * d;
    for (std::size_t i = 0; i < n; ++i)
        if (left.column(i) != right.column(i)) report.add("coassociativity", "basis index " + std::to_string(i));
    const Matrix eps = c.counit_map();
    const Matrix counit_left = tensor_map(eps, id) * d;
    const Matrix counit_right = tensor_map(id, eps) * d;
    for (std::size_t i = 0; i < n; ++i) {
        if (counit_left.column(i) != id.column(i))
            report.add("counit", "(eps (x) id) Delta(e" + std::to_string(i) + ") != e" + std::to_string(i));
        if (counit_right.column(i) != id.column(i))
            report.add("counit", "(id (x) eps) Delta(e" + std::to_string(i) + ") != e" + std::to_string(i));
    }
    return report;
}

Report check_morphism(const CoalgebraMorphism& f) {
    Report report;
    const auto& s = f.source;
    const auto& t = f.target;
    if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim()) {
        report.add("shape", "matrix is " + std::to_string(f.matrix.rows()) + "x" + std::to_string(f.matrix.cols()));
        return report;
    }
    const Matrix lhs = t.comultiplication() * f.matrix;
    const Matrix rhs = tensor_map(f.matrix, f.matrix) * s.comultiplication();
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (lhs.column(i) != rhs.column(i)) report.add("comultiplicative", "basis index " + std::to_string(i));
    if (t.counit_map() * f.matrix != s.counit_map()) report.add("counital", "eps o f != eps");
    return report;
}

CoalgebraMorphism identity_morphism(const Coalgebra& c) { return {c, c, Matrix::identity(c.field(), c.dim())}; }

Algebra dual_algebra(const Coalgebra& c) {
    const std::size_t n = c.dim();
    const TensorIndex t(n, n);
    std::vector<Scalar> mult(n * n * n, Scalar(c.field()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) mult[(i * n + j) * n + k] = c.comultiplication()(t(i, j), k);
    return Algebra(c.field(), n, std::move(mult), c.counit());
}

Coalgebra dual_coalgebra(const Algebra& a) {
    const std::size_t n = a.dim();
    const TensorIndex t(n, n);
    Matrix m(a.field(), t.dim(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(t(i, j), k) = a.structure(i, j, k);
    return Coalgebra(std::move(m), a.unit());
}

CoalgebraMorphism dual_morphism(const AlgebraMorphism& phi) {
    return {dual_coalgebra(phi.target), dual_coalgebra(phi.source), phi.matrix.transpose()};
}

Coalgebra set_coalgebra(Field f, std::size_t n) {
    std::vector<StructureTriple> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, i, Scalar::one(f)});
    return Coalgebra::from_triples(f, n, t, Vec(n, Scalar::one(f)));
}

Coalgebra comatrix_coalgebra(Field f, std::size_t n) {
    std::vector<StructureTriple> t;
    Vec counit = zero_vec(f, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        counit[i * n + i] = Scalar::one(f);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t.push_back({i * n + j, i * n + k, k * n + j, Scalar::one(f)});
    }
    return Coalgebra::from_triples(f, n * n, t, std::move(counit));
}

Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b) {
    if (a.field() != b.field()) throw FieldMismatch("direct_sum over different fields");
    const std::size_t n = a.dim();
    std::vector<StructureTriple> t = a.triples();
    for (const auto& x : b.triples()) t.push_back({x.i + n, x.j + n, x.k + n, x.c});
    Vec counit = a.counit();
    counit.insert(counit.end(), b.counit().begin(), b.counit().end());
    return Coalgebra::from_triples(a.field(), n + b.dim(), t, std::move(counit));
}

Matrix inclusion_matrix(const Subspace& d) { return d.basis().transpose(); }

Coalgebra restrict_to(const Coalgebra& c, const Subspace& d) {
    require_ambient(c, d, "restrict_to");
    const std::size_t n = c.dim(), r = d.dim();
    const TensorIndex big(n, n), small(r, r);
    Matrix m(c.field(), small.dim(), r);
    const Subspace dd = tensor_of_subspaces(d, d);
    Vec counit;
    for (std::size_t i = 0; i < r; ++i) {
        const Vec delta = c.coproduct(d.basis().row(i));
        if (!dd.contains(delta)) throw InvalidArgument("restrict_to: subspace is not a subcoalgebra");
        // In echelon coordinates the coefficient of b_j (x) b_k sits at the pivot pair.
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) m(small(j, k), i) = delta[big(d.pivots()[j], d.pivots()[k])];
        counit.push_back(dot(c.counit(), d.basis().row(i)));
    }
    return Coalgebra(std::move(m), std::move(counit));
}

Subspace wedge_by_preimage(const Coalgebra& c, const Subspace& v, const Subspace& w) {
    require_ambient(c, v, "wedge");
    require_ambient(c, w, "wedge");
    const auto qv = quotient_with_lift(c.dim(), v);
    const auto qw = quotient_with_lift(c.dim(), w);
    return kernel(tensor_map(qv.projection, qw.projection) * c.comultiplication());
}

Subspace wedge_by_orthogonal_product(const Coalgebra& c, const Subspace& v, const Subspace& w) {
    require_ambient(c, v, "wedge");
    require_ambient(c, w, "wedge");
    return orthogonal(subspace_product(dual_algebra(c), orthogonal(v), orthogonal(w)));
}

Subspace wedge(const Coalgebra& c, const Subspace& v, const Subspace& w) {
    Subspace a = wedge_by_preimage(c, v, w);
    if (a != wedge_by_orthogonal_product(c, v, w))
        throw CrossCheckFailure("wedge: preimage and orthogonal-product formulas disagree");
    return a;
}

bool is_subcoalgebra(const Coalgebra& c, const Subspace& d) {
    require_ambient(c, d, "is_subcoalgebra");
    const Subspace dd = tensor_of_subspaces(d, d);
    bool closed = true;
    for (std::size_t i = 0; i < d.dim() && closed; ++i) closed = dd.contains(c.coproduct(d.basis().row(i)));
    const bool ideal = is_ideal(dual_algebra(c), orthogonal(d), Side::TwoSided);
    if (closed != ideal) throw CrossCheckFailure("is_subcoalgebra: Delta-closure and ideal criteria disagree");
    return closed;
}

Subspace largest_subcoalgebra_by_ideal(const Coalgebra& c, const Subspace& v) {
    require_ambient(c, v, "largest_subcoalgebra_in");
    return orthogonal(ideal_generated(dual_algebra(c), orthogonal(v), Side::TwoSided));
}

Subspace largest_subcoalgebra_by_fixpoint(const Coalgebra& c, const Subspace& v) {
    require_ambient(c, v, "largest_subcoalgebra_in");
    Subspace current = v;
    while (true) {
        Subspace next = intersect(current, preimage(c.comultiplication(), tensor_of_subspaces(current, current)));
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

Subspace largest_subcoalgebra_in(const Coalgebra& c, const Subspace& v) {
    Subspace a = largest_subcoalgebra_by_ideal(c, v);
    if (a != largest_subcoalgebra_by_fixpoint(c, v))
        throw CrossCheckFailure("largest_subcoalgebra_in: ideal and fixpoint routes disagree");
    return a;
}

Subspace pullback_dagger(const CoalgebraMorphism& f, const Subspace& d) {
    require_ambient(f.target, d, "pullback_dagger");
    if (const Report r = check_morphism(f); !r.ok())
        throw InvalidArgument("pullback_dagger: not a coalgebra morphism: " + r.to_string());
    if (!is_subcoalgebra(f.target, d)) throw InvalidArgument("pullback_dagger: D is not a subcoalgebra");
    return largest_subcoalgebra_in(f.source, preimage(f.matrix, d));
}

std::vector<Vec> grouplikes(const Coalgebra& c) {
    const Field f = c.field();
    const Algebra b = dual_algebra(c);
    const Subspace commutators = commutator_ideal(b);
    if (commutators.is_full()) return {};
    // Characters of the abelianization, found by splitting along base-field
    // eigenvalues of one basis element at a time.
    const QuotientAlgebra ab = quotient_algebra(b, commutators);
    struct Piece {
        Algebra algebra;
        Matrix projection;  // abelianization -> piece
    };
    std::vector<Piece> pieces{{ab.algebra, Matrix::identity(f, ab.algebra.dim())}};
    for (std::size_t r = 0; r < ab.algebra.dim(); ++r) {
        std::vector<Piece> next;
        for (auto& piece : pieces) {
            if (piece.algebra.dim() == 1) {
                next.push_back(std::move(piece));
                continue;
            }
            const Vec y = piece.projection.apply(ab.algebra.basis_vector(r));
            for (const Scalar& lambda : base_field_roots(minimal_polynomial(piece.algebra, y))) {
                const Vec shifted = sub(y, scale(lambda, piece.algebra.unit()));
                const Subspace ideal =
                    ideal_generated(piece.algebra, Subspace::span(f, piece.algebra.dim(), {shifted}), Side::TwoSided);
                if (ideal.is_full()) continue;
                auto q = quotient_algebra(piece.algebra, ideal);
                next.push_back({std::move(q.algebra), q.projection * piece.projection});
            }
        }
        pieces = std::move(next);
    }
    std::vector<Vec> out;
    for (const auto& piece : pieces) {
        if (piece.algebra.dim() != 1) throw CrossCheckFailure("grouplikes: split piece is not one-dimensional");
        const Scalar unit = piece.algebra.unit()[0];
        const Matrix chi = piece.projection * ab.projection;  // 1 x dim(B)
        Vec x;
        for (std::size_t k = 0; k < c.dim(); ++k) x.push_back(chi(0, k) / unit);
        if (c.coproduct(x) != tensor_vec(x, x) || !dot(c.counit(), x).is_one())
            throw CrossCheckFailure("grouplikes: candidate fails Delta(x) = x (x) x");
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end(), vec_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Subspace coradical(const Coalgebra& c) { return orthogonal(radical(dual_algebra(c))); }

std::vector<Subspace> coradical_filtration(const Coalgebra& c) {
    std::vector<Subspace> chain{coradical(c)};
    while (!chain.back().is_full()) {
        Subspace next = wedge(c, chain.back(), chain.front());
        if (next.dim() == chain.back().dim())
            throw CrossCheckFailure("coradical_filtration stalled below the whole coalgebra");
        chain.push_back(std::move(next));
    }
    return chain;
}

}  // namespace coalg
