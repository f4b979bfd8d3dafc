#pragma once

// Brute-force oracles over small prime fields. They only use the raw
// structure constants, never the library's subspace routines.

#include <algorithm>
#include <vector>

#include "coalg/coalgebra.hpp"

namespace oracle {

using coalg::Field;
using coalg::Scalar;
using coalg::Vec;

/// Every vector of F_p^n, in little-endian digit order.
inline std::vector<Vec> all_vectors(Field f, std::size_t n) {
    std::vector<Vec> out;
    std::vector<long> digits(n, 0);
    const long p = f.characteristic();
    while (true) {
        Vec v;
        for (const long d : digits) v.push_back(Scalar(f, d));
        out.push_back(std::move(v));
        std::size_t i = 0;
        while (i < n && ++digits[i] == p) digits[i++] = 0;
        if (i == n) break;
    }
    return out;
}

inline Scalar pair(const Vec& a, const Vec& b) {
    Scalar s(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), coalg::canonical_less);
}

inline std::vector<Vec> sorted(std::vector<Vec> v) {
    std::sort(v.begin(), v.end(), lex_less);
    return v;
}

/// Delta(x) computed straight from the comultiplication entries.
inline Vec coproduct(const coalg::Coalgebra& c, const Vec& x) {
    const auto& d = c.comultiplication();
    Vec out(d.rows(), Scalar(c.field()));
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t k = 0; k < d.cols(); ++k) out[r] += d(r, k) * x[k];
    return out;
}

/// {x : Delta(x) = x (x) x, eps(x) = 1} by exhaustive search.
inline std::vector<Vec> grouplikes(const coalg::Coalgebra& c) {
    const std::size_t n = c.dim();
    std::vector<Vec> out;
    for (const auto& x : all_vectors(c.field(), n)) {
        if (!pair(c.counit(), x).is_one()) continue;
        const Vec dx = coproduct(c, x);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) ok = dx[i * n + j] == x[i] * x[j];
        if (ok) out.push_back(x);
    }
    return sorted(std::move(out));
}

/// Every element of span(vectors), by enumeration of coefficients.
inline std::vector<Vec> span_elements(Field f, std::size_t n, const std::vector<Vec>& vectors) {
    std::vector<Vec> out;
    for (const auto& coeffs : all_vectors(f, vectors.size())) {
        Vec v(n, Scalar(f));
        for (std::size_t i = 0; i < vectors.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] += coeffs[i] * vectors[i][j];
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All functionals vanishing on the listed vectors.
inline std::vector<Vec> annihilator(Field f, std::size_t n, const std::vector<Vec>& vectors) {
    std::vector<Vec> out;
    for (const auto& phi : all_vectors(f, n)) {
        bool ok = true;
        for (const auto& v : vectors) ok = ok && pair(phi, v).is_zero();
        if (ok) out.push_back(phi);
    }
    return out;
}

/// Elements of V wedge W: x with (f (x) g)(Delta x) = 0 for all f in V^perp, g in W^perp.
inline std::vector<Vec> wedge_elements(const coalg::Coalgebra& c, const std::vector<Vec>& v, const std::vector<Vec>& w) {
    const Field f = c.field();
    const std::size_t n = c.dim();
    const auto vp = annihilator(f, n, v), wp = annihilator(f, n, w);
    std::vector<Vec> out;
    for (const auto& x : all_vectors(f, n)) {
        const Vec dx = coproduct(c, x);
        bool ok = true;
        for (const auto& a : vp) {
            for (const auto& b : wp) {
                Scalar s(f);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) s += a[i] * b[j] * dx[i * n + j];
                if (!s.is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) out.push_back(x);
    }
    return sorted(std::move(out));
}

}  // namespace oracle
