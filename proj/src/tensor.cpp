#include "coalg/tensor.hpp"

#include <limits>

#include "coalg/errors.hpp"

namespace coalg {

TensorIndex::TensorIndex(std::size_t a, std::size_t b) : a_(a), b_(b) {
    std::size_t product = 0;
    if (__builtin_mul_overflow(a, b, &product) || product > static_cast<std::size_t>(std::numeric_limits<int>::max()))
        throw DimensionMismatch("tensor dimension " + std::to_string(a) + " x " + std::to_string(b) + " too large");
}

Matrix tensor_map(const Matrix& f, const Matrix& g) {
    if (f.field() != g.field()) throw FieldMismatch("tensor_map over different fields");
    const TensorIndex rows(f.rows(), g.rows());
    const TensorIndex cols(f.cols(), g.cols());
    Matrix m(f.field(), rows.dim(), cols.dim());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            const Scalar& a = f(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < g.rows(); ++k)
                for (std::size_t l = 0; l < g.cols(); ++l) {
                    const Scalar& b = g(k, l);
                    if (!b.is_zero()) m(rows(i, k), cols(j, l)) = a * b;
                }
        }
    return m;
}

Vec tensor_vec(std::span<const Scalar> v, std::span<const Scalar> w) {
    const TensorIndex t(v.size(), w.size());
    if (v.empty() || w.empty()) return {};
    const Field f = v[0].field();
    Vec out = zero_vec(f, t.dim());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!w[j].is_zero()) out[t(i, j)] = v[i] * w[j];
    }
    return out;
}

Subspace tensor_of_subspaces(const Subspace& v, const Subspace& w) {
    if (v.field() != w.field()) throw FieldMismatch("tensor_of_subspaces over different fields");
    const TensorIndex t(v.ambient_dim(), w.ambient_dim());
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j) gens.push_back(tensor_vec(v.basis().row(i), w.basis().row(j)));
    return Subspace::span(v.field(), t.dim(), gens);
}

Subspace mixed_tensor_sum(const Subspace& v, const Subspace& w) {
    const Subspace left = tensor_of_subspaces(v, Subspace::full(v.field(), w.ambient_dim()));
    const Subspace right = tensor_of_subspaces(Subspace::full(w.field(), v.ambient_dim()), w);
    return sum(left, right);
}

}  // namespace coalg
