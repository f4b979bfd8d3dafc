#include "coalg/algebra.hpp"

#include <algorithm>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

void require_ambient(const Algebra& a, const Subspace& s, const char* what) {
    if (s.ambient_dim() != a.dim())
        throw DimensionMismatch(std::string(what) + ": subspace of k^" + std::to_string(s.ambient_dim()) +
                                " in an algebra of dimension " + std::to_string(a.dim()));
    if (s.field() != a.field()) throw FieldMismatch(std::string(what) + ": field mismatch");
}

}  // namespace

Algebra::Algebra(Field f, std::size_t dim, std::vector<Scalar> mult, Vec unit)
    : field_(f), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)) {
    if (mult_.size() != dim_ * dim_ * dim_) throw DimensionMismatch("structure tensor has wrong size");
    if (unit_.size() != dim_) throw DimensionMismatch("unit vector has wrong length");
    for (const auto& c : mult_)
        if (c.field() != f) throw FieldMismatch("structure constant over a different field");
    for (const auto& c : unit_)
        if (c.field() != f) throw FieldMismatch("unit coordinate over a different field");
}

Algebra Algebra::from_triples(Field f, std::size_t dim, const std::vector<StructureTriple>& triples, Vec unit) {
    std::vector<Scalar> mult(dim * dim * dim, Scalar(f));
    for (const auto& t : triples) {
        if (t.i >= dim || t.j >= dim || t.k >= dim) throw DimensionMismatch("structure triple index out of range");
        mult[(t.i * dim + t.j) * dim + t.k] += t.c;
    }
    return Algebra(f, dim, std::move(mult), std::move(unit));
}

std::vector<StructureTriple> Algebra::triples() const {
    std::vector<StructureTriple> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (!structure(i, j, k).is_zero()) out.push_back({i, j, k, structure(i, j, k)});
    return out;
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
    auto first = mult_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
    return Vec(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vec Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("multiply: operand length");
    Vec out = zero_vec(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Scalar& m = structure(i, j, k);
                if (!m.is_zero()) out[k] += c * m;
            }
        }
    }
    return out;
}

Matrix Algebra::left_multiplication(std::span<const Scalar> x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vec col = multiply(x, basis_vector(j));
        for (std::size_t r = 0; r < dim_; ++r) m(r, j) = col[r];
    }
    return m;
}

Matrix Algebra::right_multiplication(std::span<const Scalar> x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const Vec col = multiply(basis_vector(j), x);
        for (std::size_t r = 0; r < dim_; ++r) m(r, j) = col[r];
    }
    return m;
}

Report check_axioms(const Algebra& a) {
    Report report;
    const std::size_t n = a.dim();
    if (n == 0) report.add("unit", "zero algebra has no unit distinct from 0");
    for (std::size_t i = 0; i < n; ++i) {
        const Vec ei = a.basis_vector(i);
        if (a.multiply(a.unit(), ei) != ei) report.add("unit", "1 * e" + std::to_string(i) + " != e" + std::to_string(i));
        if (a.multiply(ei, a.unit()) != ei) report.add("unit", "e" + std::to_string(i) + " * 1 != e" + std::to_string(i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec ij = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const Vec lhs = a.multiply(ij, a.basis_vector(k));
                const Vec rhs = a.multiply(a.basis_vector(i), a.basis_product(j, k));
                if (lhs != rhs) report.add("associativity", "basis triple " + triple_name(i, j, k));
            }
        }
    return report;
}

Algebra matrix_algebra(Field f, std::size_t n) {
    if (n == 0) throw InvalidArgument("matrix_algebra needs n >= 1");
    std::vector<StructureTriple> t;
    Vec unit = zero_vec(f, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        unit[i * n + i] = Scalar::one(f);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) t.push_back({i * n + j, j * n + l, i * n + l, Scalar::one(f)});
    }
    return Algebra::from_triples(f, n * n, t, std::move(unit));
}

Algebra truncated_poly(Field f, std::size_t n) {
    if (n == 0) throw InvalidArgument("truncated_poly needs n >= 1");
    std::vector<StructureTriple> t;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) t.push_back({i, j, i + j, Scalar::one(f)});
    return Algebra::from_triples(f, n, t, unit_vec(f, n, 0));
}

Algebra group_algebra(Field f, const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = table.size();
    if (n == 0) throw InvalidArgument("empty Cayley table");
    for (const auto& row : table) {
        if (row.size() != n) throw InvalidArgument("Cayley table is not square");
        std::vector<bool> seen(n, false);
        for (auto g : row) {
            if (g >= n) throw InvalidArgument("Cayley table entry out of range");
            if (seen[g]) throw InvalidArgument("Cayley table row is not a permutation");
            seen[g] = true;
        }
    }
    for (std::size_t h = 0; h < n; ++h) {
        std::vector<bool> seen(n, false);
        for (std::size_t g = 0; g < n; ++g) {
            if (seen[table[g][h]]) throw InvalidArgument("Cayley table column is not a permutation");
            seen[table[g][h]] = true;
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InvalidArgument("Cayley table is not associative at " + triple_name(a, b, c));
    std::size_t identity = n;
    for (std::size_t e = 0; e < n && identity == n; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
        if (ok) identity = e;
    }
    if (identity == n) throw InvalidArgument("Cayley table has no identity");
    std::vector<StructureTriple> t;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) t.push_back({g, h, table[g][h], Scalar::one(f)});
    return Algebra::from_triples(f, n, t, unit_vec(f, n, identity));
}

Algebra cyclic_group_algebra(Field f, std::size_t n) {
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) table[g][h] = (g + h) % n;
    return group_algebra(f, table);
}

Algebra upper_triangular(Field f, std::size_t n) {
    if (n == 0) throw InvalidArgument("upper_triangular needs n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
    auto index = [&](std::size_t i, std::size_t j) {
        return static_cast<std::size_t>(std::find(units.begin(), units.end(), std::pair{i, j}) - units.begin());
    };
    const std::size_t d = units.size();
    std::vector<StructureTriple> t;
    Vec unit = zero_vec(f, d);
    for (std::size_t a = 0; a < d; ++a) {
        const auto [i, j] = units[a];
        if (i == j) unit[a] = Scalar::one(f);
        for (std::size_t b = 0; b < d; ++b) {
            const auto [k, l] = units[b];
            if (j == k) t.push_back({a, b, index(i, l), Scalar::one(f)});
        }
    }
    return Algebra::from_triples(f, d, t, std::move(unit));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field()) throw FieldMismatch("direct_product over different fields");
    const std::size_t n = a.dim(), m = b.dim();
    std::vector<StructureTriple> t;
    for (const auto& x : a.triples()) t.push_back(x);
    for (const auto& x : b.triples()) t.push_back({x.i + n, x.j + n, x.k + n, x.c});
    Vec unit = a.unit();
    unit.insert(unit.end(), b.unit().begin(), b.unit().end());
    return Algebra::from_triples(a.field(), n + m, t, std::move(unit));
}

Algebra quotient_polynomial(const Poly& f) {
    if (f.is_zero()) throw InvalidArgument("quotient by the zero polynomial is infinite-dimensional");
    if (f.degree() < 1) throw InvalidArgument("quotient by a unit polynomial is the zero algebra");
    const Field k = f.field();
    const Poly g = f.monic();
    const auto d = static_cast<std::size_t>(g.degree());
    std::vector<Scalar> mult(d * d * d, Scalar(k));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Poly r = Poly::monomial(k, i + j) % g;
            for (std::size_t c = 0; c < d; ++c) mult[(i * d + j) * d + c] = r.coefficient(c);
        }
    return Algebra(k, d, std::move(mult), unit_vec(k, d, 0));
}

Algebra change_basis(const Algebra& a, const Matrix& t) {
    if (t.rows() != a.dim() || t.cols() != a.dim()) throw DimensionMismatch("change_basis: matrix shape");
    const Matrix inv = inverse(t);
    const std::size_t n = a.dim();
    std::vector<Scalar> mult(n * n * n, Scalar(a.field()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec p = inv.apply(a.multiply(t.column(i), t.column(j)));
            for (std::size_t k = 0; k < n; ++k) mult[(i * n + j) * n + k] = p[k];
        }
    return Algebra(a.field(), n, std::move(mult), inv.apply(a.unit()));
}

Subspace subspace_product(const Algebra& a, const Subspace& s1, const Subspace& s2) {
    require_ambient(a, s1, "subspace_product");
    require_ambient(a, s2, "subspace_product");
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < s1.dim(); ++i)
        for (std::size_t j = 0; j < s2.dim(); ++j) gens.push_back(a.multiply(s1.basis().row(i), s2.basis().row(j)));
    return Subspace::span(a.field(), a.dim(), gens);
}

Subspace ideal_generated(const Algebra& a, const Subspace& s, Side side) {
    require_ambient(a, s, "ideal_generated");
    const Subspace everything = Subspace::full(a.field(), a.dim());
    Subspace current = s;
    while (true) {
        Subspace next = current;
        if (side != Side::Right) next = sum(next, subspace_product(a, everything, current));
        if (side != Side::Left) next = sum(next, subspace_product(a, current, everything));
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

bool is_ideal(const Algebra& a, const Subspace& s, Side side) {
    require_ambient(a, s, "is_ideal");
    const Subspace everything = Subspace::full(a.field(), a.dim());
    if (side != Side::Right && !s.contains(subspace_product(a, everything, s))) return false;
    if (side != Side::Left && !s.contains(subspace_product(a, s, everything))) return false;
    return true;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
    require_ambient(a, ideal, "quotient_algebra");
    if (!is_ideal(a, ideal, Side::TwoSided)) throw InvalidArgument("quotient_algebra: subspace is not a two-sided ideal");
    if (ideal.is_full()) throw InvalidArgument("quotient_algebra: quotient by the whole algebra is the zero algebra");
    auto q = quotient_with_lift(a.dim(), ideal);
    const std::size_t d = q.complement.size();
    std::vector<Scalar> mult(d * d * d, Scalar(a.field()));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec p = q.projection.apply(a.basis_product(q.complement[i], q.complement[j]));
            for (std::size_t k = 0; k < d; ++k) mult[(i * d + j) * d + k] = p[k];
        }
    Algebra quotient(a.field(), d, std::move(mult), q.projection.apply(a.unit()));
    return {std::move(quotient), std::move(q.projection), std::move(q.lift)};
}

Report check_morphism(const AlgebraMorphism& phi) {
    Report report;
    const auto& s = phi.source;
    const auto& t = phi.target;
    if (phi.matrix.rows() != t.dim() || phi.matrix.cols() != s.dim()) {
        report.add("shape", "matrix is " + std::to_string(phi.matrix.rows()) + "x" + std::to_string(phi.matrix.cols()));
        return report;
    }
    if (phi.matrix.apply(s.unit()) != t.unit()) report.add("unital", "phi(1) != 1");
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            const Vec lhs = phi.matrix.apply(s.basis_product(i, j));
            const Vec rhs = t.multiply(phi.matrix.column(i), phi.matrix.column(j));
            if (lhs != rhs)
                report.add("multiplicative", "phi(e" + std::to_string(i) + " e" + std::to_string(j) + ") differs");
        }
    return report;
}

AlgebraMorphism identity_morphism(const Algebra& a) { return {a, a, Matrix::identity(a.field(), a.dim())}; }

AlgebraMorphism compose(const AlgebraMorphism& second, const AlgebraMorphism& first) {
    if (!(first.target == second.source)) throw InvalidArgument("compose: target and source differ");
    return {first.source, second.target, second.matrix * first.matrix};
}

bool is_commutative(const Algebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a.basis_product(i, j) != a.basis_product(j, i)) return false;
    return true;
}

Subspace commutator_ideal(const Algebra& a) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j) gens.push_back(sub(a.basis_product(i, j), a.basis_product(j, i)));
    return ideal_generated(a, Subspace::span(a.field(), a.dim(), gens), Side::TwoSided);
}

Subspace radical(const Algebra& a) {
    if (!a.field().is_rational())
        throw UnsupportedCharacteristic("radical via the trace form needs characteristic zero");
    const std::size_t n = a.dim();
    // tr(L_x L_y) = tr(L_{xy}); kernel of the Gram matrix of the trace form.
    std::vector<Scalar> trace_of_basis(n, Scalar(a.field()));
    for (std::size_t k = 0; k < n; ++k) {
        const Matrix lk = a.left_multiplication(a.basis_vector(k));
        for (std::size_t r = 0; r < n; ++r) trace_of_basis[k] += lk(r, r);
    }
    Matrix gram(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = dot(a.basis_product(i, j), trace_of_basis);
    return kernel(gram);
}

std::vector<Vec> powers(const Algebra& a, std::span<const Scalar> x, std::size_t count) {
    std::vector<Vec> out;
    if (count == 0) return out;
    out.push_back(a.unit());
    for (std::size_t i = 1; i < count; ++i) out.push_back(a.multiply(out.back(), x));
    return out;
}

Poly minimal_polynomial(const Algebra& a, std::span<const Scalar> x) {
    if (x.size() != a.dim()) throw DimensionMismatch("minimal_polynomial: element length");
    std::vector<Vec> pw{a.unit()};
    while (true) {
        const Vec next = a.multiply(pw.back(), x);
        const Matrix cols = Matrix::from_columns(a.field(), a.dim(), pw);
        if (auto c = solve(cols, next)) {
            std::vector<Scalar> coeffs;
            for (const auto& v : *c) coeffs.push_back(-v);
            coeffs.push_back(Scalar::one(a.field()));
            return Poly(a.field(), std::move(coeffs));
        }
        pw.push_back(next);
    }
}

}  // namespace coalg
