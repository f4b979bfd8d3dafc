#include "coalg/subspace.hpp"

#include "coalg/errors.hpp"

namespace coalg {

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* what) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch(std::string(what) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                                " and " + std::to_string(b.ambient_dim()));
    if (a.field() != b.field()) throw FieldMismatch(std::string(what) + ": fields differ");
}

}  // namespace

Subspace::Subspace(std::size_t ambient, EchelonForm e)
    : ambient_(ambient), basis_(std::move(e.reduced)), pivots_(std::move(e.pivots)) {}

Subspace Subspace::zero(Field f, std::size_t ambient) { return Subspace(ambient, {Matrix(f, 0, ambient), {}}); }

Subspace Subspace::full(Field f, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(ambient, {Matrix::identity(f, ambient), std::move(piv)});
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
    return row_space(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(m.cols(), rref(m)); }

Vec Subspace::basis_vector(std::size_t i) const {
    auto r = basis_.row(i);
    return Vec(r.begin(), r.end());
}

Vec Subspace::reduce(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    Vec r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Scalar c = r[pivots_[i]];
        if (!c.is_zero()) axpy(r, -c, basis_.row(i));
    }
    return r;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coalg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    require_compatible(*this, other, "Subspace::contains");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Vec Subspace::coordinates(std::span<const Scalar> v) const {
    if (!contains(v)) throw InvalidArgument("vector does not lie in the subspace");
    Vec c;
    c.reserve(pivots_.size());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
}

Subspace kernel(const Matrix& m) {
    const Field f = m.field();
    const std::size_t n = m.cols();
    auto e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(f, n);
        v[free] = Scalar::one(f);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, n, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace image(const Matrix& m, const Subspace& v) {
    if (m.cols() != v.ambient_dim()) throw DimensionMismatch("image: map source differs from subspace ambient");
    std::vector<Vec> out;
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(m.apply(v.basis().row(i)));
    return Subspace::span(m.field(), m.rows(), out);
}

Subspace preimage(const Matrix& m, const Subspace& w) {
    if (m.rows() != w.ambient_dim()) throw DimensionMismatch("preimage: map target differs from subspace ambient");
    const auto q = quotient_with_lift(w.ambient_dim(), w);
    return kernel(q.projection * m);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_compatible(a, b, "sum");
    return Subspace::row_space(a.basis().vstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_compatible(a, b, "intersect");
    if (a.is_zero() || b.is_zero()) return Subspace::zero(a.field(), a.ambient_dim());
    // Combinations c of a's basis with sum c_i a_i in b: kernel of (proj_b o A^T).
    const auto q = quotient_with_lift(b.ambient_dim(), b);
    const Matrix coeffs = q.projection * a.basis().transpose();
    const Subspace k = kernel(coeffs);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < k.dim(); ++i) out.push_back(a.basis().transpose().apply(k.basis().row(i)));
    return Subspace::span(a.field(), a.ambient_dim(), out);
}

Subspace intersect(const std::vector<Subspace>& family) {
    if (family.empty()) throw InvalidArgument("intersection of an empty family");
    Subspace acc = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) acc = intersect(acc, family[i]);
    return acc;
}

Subspace orthogonal(const Subspace& v) {
    if (v.is_zero()) return Subspace::full(v.field(), v.ambient_dim());
    return kernel(v.basis());
}

QuotientMap quotient_with_lift(std::size_t ambient_dim, const Subspace& v) {
    if (v.ambient_dim() != ambient_dim) throw DimensionMismatch("quotient: ambient dimension mismatch");
    const Field f = v.field();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (auto p : v.pivots()) is_pivot[p] = true;
    QuotientMap q;
    for (std::size_t i = 0; i < ambient_dim; ++i)
        if (!is_pivot[i]) q.complement.push_back(i);
    const std::size_t qd = q.complement.size();
    std::vector<std::size_t> slot(ambient_dim, 0);
    for (std::size_t j = 0; j < qd; ++j) slot[q.complement[j]] = j;

    q.projection = Matrix(f, qd, ambient_dim);
    q.lift = Matrix(f, ambient_dim, qd);
    for (std::size_t j = 0; j < qd; ++j) {
        q.projection(j, q.complement[j]) = Scalar::one(f);
        q.lift(q.complement[j], j) = Scalar::one(f);
    }
    // e_p for a pivot p reduces to -(row restricted to the complement).
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t j = 0; j < qd; ++j) q.projection(j, v.pivots()[r]) = -v.basis()(r, q.complement[j]);
    return q;
}

}  // namespace coalg
