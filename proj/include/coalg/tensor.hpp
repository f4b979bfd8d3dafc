#pragma once

#include <cstddef>

#include "coalg/subspace.hpp"

namespace coalg {

/// Coordinates of k^a (x) k^b. The pair (i, j) is stored at i * b + j
/// (row-major); every module goes through this helper.
class TensorIndex {
public:
    /// Throws DimensionMismatch when a * b overflows.
    TensorIndex(std::size_t a, std::size_t b);

    std::size_t left_dim() const { return a_; }
    std::size_t right_dim() const { return b_; }
    std::size_t dim() const { return a_ * b_; }
    std::size_t operator()(std::size_t i, std::size_t j) const { return i * b_ + j; }
    std::size_t left(std::size_t index) const { return index / b_; }
    std::size_t right(std::size_t index) const { return index % b_; }

private:
    std::size_t a_;
    std::size_t b_;
};

/// Kronecker product: the matrix of f (x) g in the row-major convention.
Matrix tensor_map(const Matrix& f, const Matrix& g);
Vec tensor_vec(std::span<const Scalar> v, std::span<const Scalar> w);

/// V (x) W inside k^a (x) k^b.
Subspace tensor_of_subspaces(const Subspace& v, const Subspace& w);
/// V (x) k^b + k^a (x) W.
Subspace mixed_tensor_sum(const Subspace& v, const Subspace& w);

}  // namespace coalg
