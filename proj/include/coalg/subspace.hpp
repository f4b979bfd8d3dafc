#pragma once

#include <cstddef>
#include <vector>

#include "coalg/matrix.hpp"

namespace coalg {

/// A linear subspace of the coordinate space k^n, stored by its reduced row
/// echelon basis. The basis is unique, so structural equality is set equality.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(Field f, std::size_t ambient);
    static Subspace full(Field f, std::size_t ambient);
    /// Span of the given vectors (rows); any spanning set is accepted.
    static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace row_space(const Matrix& m);

    Field field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const;
    std::vector<Vec> basis_vectors() const { return basis_.row_vectors(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the stored basis; throws InvalidArgument if v is outside.
    Vec coordinates(std::span<const Scalar> v) const;
    /// v minus its component along the basis: zero exactly when v lies in the space.
    Vec reduce(std::span<const Scalar> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    std::string to_string() const { return basis_.to_string(); }

private:
    Subspace(std::size_t ambient, EchelonForm e);

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// m(V) for V a subspace of the source.
Subspace image(const Matrix& m, const Subspace& v);
/// {v : m v in W}.
Subspace preimage(const Matrix& m, const Subspace& w);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace intersect(const std::vector<Subspace>& family);

/// Annihilator under the coordinate pairing <phi, v> = sum_i phi_i v_i.
Subspace orthogonal(const Subspace& v);

/// Projection onto the quotient k^n / V expressed in the non-pivot coordinates
/// of V's echelon basis, together with a right inverse that lifts quotient
/// coordinates back to those non-pivot coordinates.
struct QuotientMap {
    Matrix projection;                    // (n - d) x n
    Matrix lift;                          // n x (n - d)
    std::vector<std::size_t> complement;  // non-pivot coordinates of V
};
QuotientMap quotient_with_lift(std::size_t ambient_dim, const Subspace& v);

}  // namespace coalg
