#include "coalg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "coalg/errors.hpp"
#include "coalg/polydual.hpp"
#include "coalg/rcmodules.hpp"

namespace coalg::verify {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------- helpers

Subspace direct_sum_subspace(const Subspace& a, const Subspace& b) {
    const std::size_t n = a.ambient_dim() + b.ambient_dim();
    std::vector<Vec> vectors;
    for (const auto& v : a.basis_vectors()) {
        Vec w = zero_vec(a.field(), n);
        std::copy(v.begin(), v.end(), w.begin());
        vectors.push_back(std::move(w));
    }
    for (const auto& v : b.basis_vectors()) {
        Vec w = zero_vec(a.field(), n);
        std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(a.ambient_dim()));
        vectors.push_back(std::move(w));
    }
    return Subspace::span(a.field(), n, vectors);
}

// V (contained in D) in the coordinates of D's echelon basis.
Subspace to_coordinates(const Subspace& d, const Subspace& v) {
    std::vector<Vec> vectors;
    for (const auto& x : v.basis_vectors()) vectors.push_back(d.coordinates(x));
    return Subspace::span(d.field(), d.dim(), vectors);
}

Subspace test_subspace(Rng& rng, const Coalgebra& c) {
    if (rng.chance(50)) return random_subcoalgebra(rng, c);
    return random_subspace(rng, c.field(), c.dim());
}

Subspace nonzero_subcoalgebra(Rng& rng, const Coalgebra& c) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        Subspace d = random_subcoalgebra(rng, c);
        if (!d.is_zero()) return d;
    }
    return Subspace::full(c.field(), c.dim());
}

Subspace proper_ideal(Rng& rng, const Algebra& a) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        Subspace i = random_ideal(rng, a);
        if (!i.is_full()) return i;
    }
    return Subspace::zero(a.field(), a.dim());
}

LeftModule random_module(Rng& rng, const Algebra& a) {
    switch (rng.below(6)) {
        case 0: return zero_module(a);
        case 1:
        case 2: {
            const LeftModule reg = regular_module(a);
            const Subspace n = submodule_generated(reg, random_subspace(rng, a.field(), a.dim(), 1));
            if (!n.is_full()) return quotient_module(reg, n);
            return reg;
        }
        case 3:
            if (a.dim() <= 3) return direct_sum(regular_module(a), random_module(rng, a));
            break;
        default: break;
    }
    return regular_module(a);
}

// The module over a x b on which b (resp. a) acts by zero.
LeftModule extend_by_zero(const LeftModule& m, const Algebra& product, std::size_t offset) {
    LeftModule out{product, m.dim, {}};
    for (std::size_t i = 0; i < product.dim(); ++i) {
        if (i >= offset && i - offset < m.action.size()) out.action.push_back(m.action[i - offset]);
        else out.action.push_back(Matrix(product.field(), m.dim, m.dim));
    }
    return out;
}

Algebra random_commutative_algebra(Rng& rng, Field f, std::size_t max_dim) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        Algebra a = random_algebra(rng, f, max_dim);
        if (is_commutative(a)) return a;
    }
    return truncated_poly(f, std::min<std::size_t>(max_dim, 3));
}

Poly random_monic(Rng& rng, Field f, int max_degree) {
    const int degree = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(max_degree)));
    std::vector<Scalar> coeffs;
    for (int i = 0; i < degree; ++i) coeffs.push_back(random_scalar(rng, f));
    coeffs.push_back(Scalar::one(f));
    return Poly(f, std::move(coeffs));
}

std::string describe(const Coalgebra& c) { return "coalgebra of dim " + std::to_string(c.dim()); }

bool vec_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

std::vector<Vec> brute_force_grouplikes(const Coalgebra& c) {
    const Field f = c.field();
    const std::size_t p = f.characteristic(), n = c.dim();
    std::vector<Vec> out;
    std::vector<std::size_t> digits(n, 0);
    while (true) {
        Vec x;
        for (const auto d : digits) x.push_back(Scalar(f, static_cast<long>(d)));
        if (dot(c.counit(), x).is_one() && c.coproduct(x) == tensor_vec(x, x)) out.push_back(x);
        std::size_t i = 0;
        while (i < n && ++digits[i] == p) digits[i++] = 0;
        if (i == n) break;
    }
    return out;
}

// ---------------------------------------------------------------- coalgebra

std::string wedge_associative(Rng& rng, Field f, std::size_t max_dim) {
    const Coalgebra c = random_coalgebra(rng, f, max_dim);
    const Subspace v1 = test_subspace(rng, c), v2 = test_subspace(rng, c), v3 = test_subspace(rng, c);
    if (wedge(c, wedge(c, v1, v2), v3) != wedge(c, v1, wedge(c, v2, v3)))
        return describe(c) + ", V1 = " + v1.to_string() + ", V2 = " + v2.to_string() + ", V3 = " + v3.to_string();
    return {};
}

std::string wedge_distributive(Rng& rng, Field f, std::size_t max_dim) {
    const Coalgebra c = random_coalgebra(rng, f, max_dim);
    std::vector<Subspace> family;
    const std::size_t count = 1 + rng.below(4);
    for (std::size_t i = 0; i < count; ++i) family.push_back(test_subspace(rng, c));
    const Subspace w = test_subspace(rng, c);
    std::vector<Subspace> right, left;
    for (const auto& v : family) {
        right.push_back(wedge(c, v, w));
        left.push_back(wedge(c, w, v));
    }
    const Subspace meet = intersect(family);
    if (wedge(c, meet, w) != intersect(right)) return describe(c) + ": (meet V_i) v W differs, W = " + w.to_string();
    if (wedge(c, w, meet) != intersect(left)) return describe(c) + ": W v (meet V_i) differs, W = " + w.to_string();
    return {};
}

std::string wedge_preimage(Rng& rng, Field f, std::size_t max_dim) {
    const CoalgebraMorphism m = dual_morphism(random_algebra_morphism(rng, f, max_dim));
    const Subspace v = test_subspace(rng, m.target), w = test_subspace(rng, m.target);
    const Subspace lhs = preimage(m.matrix, wedge(m.target, v, w));
    const Subspace rhs = wedge(m.source, preimage(m.matrix, v), preimage(m.matrix, w));
    if (lhs != rhs) return "f = " + m.matrix.to_string() + ", V = " + v.to_string() + ", W = " + w.to_string();
    return {};
}

std::string wedge_restriction(Rng& rng, Field f, std::size_t max_dim) {
    const Coalgebra c = random_coalgebra(rng, f, max_dim);
    const Subspace d = nonzero_subcoalgebra(rng, c);
    const Subspace v1 = test_subspace(rng, c), v2 = test_subspace(rng, c);
    const Subspace lhs = intersect(wedge(c, v1, v2), d);
    const Coalgebra rd = restrict_to(c, d);
    const Subspace inner = wedge(rd, to_coordinates(d, intersect(v1, d)), to_coordinates(d, intersect(v2, d)));
    const Subspace rhs = image(inclusion_matrix(d), inner);
    if (lhs != rhs) return describe(c) + ", D = " + d.to_string() + ", V1 = " + v1.to_string() + ", V2 = " + v2.to_string();
    return {};
}

std::string pts_union(Rng& rng, Field f, std::size_t max_dim) {
    const Coalgebra c = random_coalgebra(rng, f, max_dim);
    const std::vector<Vec> points = grouplikes(c);
    const auto pick = [&] {
        std::vector<Vec> vectors;
        for (const auto& g : points)
            if (rng.chance(40)) vectors.push_back(g);
        if (rng.chance(50)) vectors.push_back(random_vec(rng, f, c.dim()));
        return Subspace::span(f, c.dim(), vectors);
    };
    const Subspace v1 = pick(), v2 = pick();
    const Subspace w = wedge(c, v1, v2);
    for (const auto& g : points)
        if (w.contains(g) != (v1.contains(g) || v2.contains(g)))
            return describe(c) + ", group-like " + to_string(g) + ", V1 = " + v1.to_string() + ", V2 = " + v2.to_string();
    return {};
}

std::string direct_sum_law(Rng& rng, Field f, std::size_t max_dim) {
    const std::size_t half = std::max<std::size_t>(1, max_dim / 2);
    const Coalgebra c1 = random_coalgebra(rng, f, half), c2 = random_coalgebra(rng, f, half);
    const Coalgebra c = direct_sum(c1, c2);
    const Subspace v1 = test_subspace(rng, c1), w1 = test_subspace(rng, c1);
    const Subspace v2 = test_subspace(rng, c2), w2 = test_subspace(rng, c2);
    const Subspace lhs = wedge(c, direct_sum_subspace(v1, v2), direct_sum_subspace(w1, w2));
    const Subspace rhs = direct_sum_subspace(wedge(c1, v1, w1), wedge(c2, v2, w2));
    if (lhs != rhs) return "dims " + std::to_string(c1.dim()) + " + " + std::to_string(c2.dim());
    return {};
}

std::string wedge_image(Rng& rng, Field f, std::size_t max_dim) {
    const CoalgebraMorphism m = dual_morphism(random_algebra_morphism(rng, f, max_dim));
    const Subspace v = test_subspace(rng, m.source), w = test_subspace(rng, m.source);
    const Subspace lhs = image(m.matrix, wedge(m.source, v, w));
    const Subspace rhs = wedge(m.target, image(m.matrix, v), image(m.matrix, w));
    if (!rhs.contains(lhs)) return "f = " + m.matrix.to_string() + ", V = " + v.to_string() + ", W = " + w.to_string();
    return {};
}

std::string dagger_meet(Rng& rng, Field f, std::size_t max_dim) {
    const CoalgebraMorphism m = dual_morphism(random_algebra_morphism(rng, f, max_dim));
    const Subspace d1 = random_subcoalgebra(rng, m.target), d2 = random_subcoalgebra(rng, m.target);
    if (pullback_dagger(m, intersect(d1, d2)) != intersect(pullback_dagger(m, d1), pullback_dagger(m, d2)))
        return "f = " + m.matrix.to_string() + ", D = " + d1.to_string() + ", D' = " + d2.to_string();
    return {};
}

std::string wedge_subcoalgebra(Rng& rng, Field f, std::size_t max_dim) {
    const Coalgebra c = random_coalgebra(rng, f, max_dim);
    const Subspace d1 = random_subcoalgebra(rng, c), d2 = random_subcoalgebra(rng, c);
    if (!is_subcoalgebra(c, wedge(c, d1, d2))) return describe(c) + ", D1 = " + d1.to_string() + ", D2 = " + d2.to_string();
    return {};
}

std::string oracle_wedge(Rng& rng, Field f, std::size_t max_dim) {
    const Coalgebra c = random_coalgebra(rng, f, max_dim);
    const Subspace v = test_subspace(rng, c), w = test_subspace(rng, c);
    if (wedge_by_preimage(c, v, w) != wedge_by_orthogonal_product(c, v, w))
        return describe(c) + ", V = " + v.to_string() + ", W = " + w.to_string();
    return {};
}

std::string oracle_largest(Rng& rng, Field f, std::size_t max_dim) {
    const Coalgebra c = random_coalgebra(rng, f, max_dim);
    const Subspace v = test_subspace(rng, c);
    const Subspace by_ideal = largest_subcoalgebra_by_ideal(c, v);
    if (by_ideal != largest_subcoalgebra_by_fixpoint(c, v)) return describe(c) + ", V = " + v.to_string();
    if (!v.contains(by_ideal) || !is_subcoalgebra(c, by_ideal)) return "result is not a subcoalgebra inside V";
    const Subspace d = random_subcoalgebra(rng, c);
    if (v.contains(d) && !by_ideal.contains(d)) return "misses the subcoalgebra " + d.to_string();
    return {};
}

std::string oracle_dagger(Rng& rng, Field f, std::size_t max_dim) {
    const AlgebraMorphism phi = random_algebra_morphism(rng, f, max_dim);
    const CoalgebraMorphism m = dual_morphism(phi);
    const Subspace d = random_subcoalgebra(rng, m.target);
    const Subspace by_pullback = pullback_dagger(m, d);
    const Subspace by_ideal =
        orthogonal(ideal_generated(phi.target, image(phi.matrix, orthogonal(d)), Side::TwoSided));
    if (by_pullback != by_ideal) return "phi = " + phi.matrix.to_string() + ", D = " + d.to_string();
    return {};
}

std::string grouplikes_complete(Rng& rng, Field f, std::size_t max_dim) {
    if (f.is_rational()) {
        const Coalgebra c = random_coalgebra(rng, f, max_dim);
        const std::vector<Vec> points = grouplikes(c);
        for (const auto& g : points)
            if (c.coproduct(g) != tensor_vec(g, g) || !dot(c.counit(), g).is_one()) return "not group-like: " + to_string(g);
        if (Subspace::span(f, c.dim(), points).dim() != points.size()) return "group-likes are linearly dependent";
        return {};
    }
    std::size_t cap = 0;
    for (std::size_t total = 1; cap < max_dim && total * f.characteristic() <= 4096; ++cap) total *= f.characteristic();
    const Coalgebra c = random_coalgebra(rng, f, std::max<std::size_t>(cap, 1));
    std::vector<Vec> found = grouplikes(c), expected = brute_force_grouplikes(c);
    std::sort(found.begin(), found.end(), vec_less);
    std::sort(expected.begin(), expected.end(), vec_less);
    if (found != expected)
        return describe(c) + ": enumeration found " + std::to_string(found.size()) + ", brute force " +
               std::to_string(expected.size());
    return {};
}

std::string coradical_chain(Rng& rng, Field f, std::size_t max_dim) {
    const Coalgebra c = random_coalgebra(rng, f, max_dim);
    const std::vector<Subspace> chain = coradical_filtration(c);
    if (chain.front() != orthogonal(radical(dual_algebra(c)))) return "C_0 is not the coradical";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (!is_subcoalgebra(c, chain[i])) return "C_" + std::to_string(i) + " is not a subcoalgebra";
        if (i > 0 && (!chain[i].contains(chain[i - 1]) || chain[i] == chain[i - 1])) return "chain is not strictly increasing";
    }
    if (!chain.back().is_full()) return "filtration does not exhaust C";
    return {};
}

// ---------------------------------------------------------------- ringed

std::string quantale_laws(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, max_dim);
    const Coalgebra c = dual_coalgebra(a);
    std::vector<Subspace> family, zeros;
    const std::size_t count = 1 + rng.below(3);
    for (std::size_t i = 0; i < count; ++i) {
        family.push_back(random_subspace(rng, f, a.dim()));
        zeros.push_back(vanishing_space(a, family.back()));
    }
    Subspace total = Subspace::zero(f, a.dim());
    for (const auto& s : family) total = sum(total, s);
    if (intersect(zeros) != vanishing_space(a, total)) return "meet of Z(S_i) differs from Z(sum S_i)";
    const Subspace s1 = random_subspace(rng, f, a.dim()), s2 = random_subspace(rng, f, a.dim());
    if (wedge(c, vanishing_space(a, s1), vanishing_space(a, s2)) != vanishing_space(a, subspace_product(a, s1, s2)))
        return "Z(S1) v Z(S2) != Z(S1 S2) for S1 = " + s1.to_string() + ", S2 = " + s2.to_string();
    return {};
}

std::string galois_bijection(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, max_dim);
    const Subspace s = random_subspace(rng, f, a.dim());
    if (orthogonal(vanishing_space(a, s)) != s || closure(a, s) != s) return "Z(S)^perp != S for S = " + s.to_string();
    const Subspace t = random_subcoalgebra(rng, dual_coalgebra(a));
    if (vanishing_space(a, orthogonal(t)) != t) return "Z(T^perp) != T for T = " + t.to_string();
    return {};
}

std::string nullstellensatz(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, max_dim);
    const Subspace i = ideal_generated(a, random_subspace(rng, f, a.dim(), 1 + rng.below(2)), Side::Left);
    if (vanishing_space(a, i).is_zero() != i.is_full()) return "Z(I) = 0 but I != A for I = " + i.to_string();
    return {};
}

std::string topology_membership(Rng& rng, Field f, std::size_t max_dim) {
    const RingedCoalgebraView rc(random_algebra(rng, f, max_dim));
    const Subspace d = test_subspace(rng, rc.coalg());
    const bool in = is_in_topology(rc, d);
    if (in != is_ideal(rc.base_algebra(), orthogonal(d), Side::TwoSided)) return "membership differs from the ideal test";
    if (in && vanishing_space(rc.base_algebra(), orthogonal(d)) != d) return "algebraic D is not Z(D^perp)";
    return {};
}

std::string commutative_sections(Rng& rng, Field f, std::size_t max_dim) {
    const RingedCoalgebraView rc(random_commutative_algebra(rng, f, max_dim));
    const Subspace c = nonzero_subcoalgebra(rng, rc.coalg());
    const Algebra dual = dual_algebra(restrict_to(rc.coalg(), c));
    const Vec x = random_vec(rng, f, c.dim()), y = random_vec(rng, f, c.dim());
    if (!section_membership(rc, c, x) || !section_membership(rc, c, y)) return {};
    if (!section_membership(rc, c, add(x, y))) return "sum of sections rejected";
    if (!section_membership(rc, c, dual.multiply(x, y))) return "product of sections rejected";
    return {};
}

std::string counterexample_inequality(Rng&, Field f, std::size_t) {
    const CounterexampleReport r = counterexample(f);
    if (r.dagger_d != 0 || r.dagger_d_wedge != 4 || r.wedge_of_daggers != 0)
        return "dimensions " + std::to_string(r.dagger_d) + ", " + std::to_string(r.dagger_d_wedge) + ", " +
               std::to_string(r.wedge_of_daggers);
    for (const auto& check : r.checks)
        if (check.name.find("!=") != std::string::npos && !check.pass) return check.name;
    return {};
}

std::string section_quotient(Rng& rng, Field f, std::size_t max_dim) {
    const RingedCoalgebraView rc(random_algebra(rng, f, max_dim));
    const Subspace i = proper_ideal(rng, rc.base_algebra());
    const SectionAlgebra s = section_on_algebraic(rc, vanishing_space(rc.base_algebra(), i));
    if (s.algebra != quotient_algebra(rc.base_algebra(), closure(rc.base_algebra(), i)).algebra)
        return "A_Z(I) differs from A/I for I = " + i.to_string();
    return {};
}

std::string gamma_algebra(Rng& rng, Field f, std::size_t max_dim) {
    const AlgebraMorphism phi = random_algebra_morphism(rng, f, max_dim);
    const Report r = global_section_roundtrip(phi);
    return r.ok() ? std::string() : r.to_string();
}

std::string rc_morphism(Rng& rng, Field f, std::size_t max_dim) {
    const AlgebraMorphism phi = random_algebra_morphism(rng, f, max_dim);
    const Coalgebra source = dual_coalgebra(phi.source);
    std::vector<Subspace> sample;
    for (int i = 0; i < 3; ++i) sample.push_back(random_subcoalgebra(rng, source));
    const Report r = check_rc_morphism(phi, sample);
    return r.ok() ? std::string() : r.to_string();
}

// ---------------------------------------------------------------- comodule

std::string cotensor_sum(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, std::min<std::size_t>(max_dim, 4));
    const Comodule n1 = module_to_comodule(random_module(rng, a));
    const Comodule n2 = module_to_comodule(random_module(rng, a));
    const Subspace d = random_subcoalgebra(rng, n1.over);
    if (cotensor(d, direct_sum(n1, n2)) != direct_sum_subspace(cotensor(d, n1), cotensor(d, n2)))
        return "D = " + d.to_string() + ", dims " + std::to_string(n1.dim()) + " + " + std::to_string(n2.dim());
    return {};
}

std::string cotensor_monotone(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, std::min<std::size_t>(max_dim, 4));
    const Comodule n = module_to_comodule(random_module(rng, a));
    const Subspace d1 = random_subcoalgebra(rng, n.over);
    const Subspace d2 = sum(d1, random_subcoalgebra(rng, n.over));
    if (!cotensor(d2, n).contains(cotensor(d1, n))) return "D = " + d1.to_string() + ", D' = " + d2.to_string();
    return {};
}

std::string dual_roundtrip(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, std::min<std::size_t>(max_dim, 4));
    const LeftModule n = random_module(rng, a);
    const Comodule m = module_to_comodule(n);
    if (const Report r = check_axioms(m); !r.ok()) return "comodule axioms: " + r.to_string();
    const LeftModule back = dual_module(m);
    if (back.algebra != n.algebra || back.dim != n.dim || back.action != n.action) return "dual_module(module_to_comodule(N)) != N";
    const Comodule again = module_to_comodule(back);
    if (again.over != m.over || again.coaction != m.coaction) return "module_to_comodule(dual_module(M)) != M";
    return {};
}

std::string block_decomposition(Rng& rng, Field f, std::size_t max_dim) {
    const std::size_t half = std::max<std::size_t>(1, std::min<std::size_t>(max_dim, 6) / 2);
    const Algebra a1 = random_algebra(rng, f, half), a2 = random_algebra(rng, f, half);
    const Algebra a = direct_product(a1, a2);
    const LeftModule m1 = random_module(rng, a1), m2 = random_module(rng, a2);
    const LeftModule m = direct_sum(extend_by_zero(m1, a, 0), extend_by_zero(m2, a, a1.dim()));
    const Comodule c = module_to_comodule(m);
    Vec e1 = zero_vec(f, a.dim()), e2 = zero_vec(f, a.dim());
    for (std::size_t i = 0; i < a1.dim(); ++i) e1[i] = a1.unit()[i];
    for (std::size_t i = 0; i < a2.dim(); ++i) e2[a1.dim() + i] = a2.unit()[i];
    const std::vector<ComoduleBlock> blocks = block_decompose(c, {e1, e2});
    std::vector<Vec> first, second;
    for (std::size_t i = 0; i < m1.dim; ++i) first.push_back(unit_vec(f, m.dim, i));
    for (std::size_t i = 0; i < m2.dim; ++i) second.push_back(unit_vec(f, m.dim, m1.dim + i));
    if (blocks[0].support != Subspace::span(f, m.dim, first) || blocks[1].support != Subspace::span(f, m.dim, second))
        return "blocks are not the summands";
    for (const auto& b : blocks)
        if (const Report r = check_axioms(b.block); !r.ok()) return "block fails comodule axioms: " + r.to_string();
    if (sum(blocks[0].support, blocks[1].support).dim() != c.dim()) return "blocks do not reassemble M";
    return {};
}

// ---------------------------------------------------------------- rcmodules

std::string restriction_square(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, std::min<std::size_t>(max_dim, 4));
    const RCModuleView v(random_module(rng, a));
    const Subspace i1 = proper_ideal(rng, a);
    const Subspace i2 = intersect(i1, random_ideal(rng, a));
    const Report r = check_restriction_square(v, vanishing_space(a, i1), vanishing_space(a, i2));
    return r.ok() ? std::string() : r.to_string();
}

std::string module_cotensor(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, std::min<std::size_t>(max_dim, 4));
    const RCModuleView v(random_module(rng, a));
    const Subspace c = vanishing_space(a, random_ideal(rng, a));
    if (cotensor(c, v.comodule()) != orthogonal(annihilated_part(v, c))) return "C box M* != (IM)^perp for C = " + c.to_string();
    return {};
}

std::string module_section(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, std::min<std::size_t>(max_dim, 4));
    const RCModuleView v(random_module(rng, a));
    const Subspace c = vanishing_space(a, proper_ideal(rng, a));
    const ModuleSection s = module_section_on_algebraic(v, c);
    const Subspace im = annihilated_part(v, c);
    if (s.module.dim != v.base_module().dim - im.dim()) return "dim M/IM mismatch";
    if (const Report r = check_axioms(s.module); !r.ok()) return "M/IM is not a module: " + r.to_string();
    const Matrix m_c = module_section_map(v, c);
    if (kernel(m_c) != im) return "ker m_C != IM";
    const Vec m = random_vec(rng, f, v.base_module().dim);
    if (!module_section_membership(v, c, m_c.apply(m))) return "m_C(m) rejected";
    return {};
}

std::string module_gamma(Rng& rng, Field f, std::size_t max_dim) {
    const Algebra a = random_algebra(rng, f, std::min<std::size_t>(max_dim, 4));
    const LeftModule reg = regular_module(a);
    const Vec b = random_vec(rng, f, a.dim()), b2 = random_vec(rng, f, a.dim());
    const ModuleMorphism g1{reg, reg, a.right_multiplication(b)};
    const ModuleMorphism g2{reg, reg, a.right_multiplication(b2)};
    for (const auto* g : {&g1, &g2})
        if (const Report r = gamma_roundtrip(*g); !r.ok()) return r.to_string();
    const Subspace whole = Subspace::full(f, a.dim());
    const bool hats_differ = hat_functor_on_morphism(g1, {whole}) != hat_functor_on_morphism(g2, {whole});
    if (hats_differ != (g1.matrix != g2.matrix)) return "hat is not faithful on the sample";
    const LeftModule n = random_module(rng, a);
    const ModuleMorphism scale{n, n, Scalar(f, 2) * Matrix::identity(f, n.dim)};
    if (const Report r = gamma_roundtrip(scale); !r.ok()) return r.to_string();
    return {};
}

// ---------------------------------------------------------------- polydual

std::string tower_evaluation(Rng& rng, Field f, std::size_t) {
    const Poly m = random_monic(rng, f, 3);
    const Poly g = m * random_monic(rng, f, 2);
    const FinDualElement phi(m, random_vec(rng, f, static_cast<std::size_t>(m.degree())));
    const FinDualElement up = include(phi, g);
    for (int d = 0; d < g.degree() + 2; ++d) {
        const Poly p = Poly(f, random_vec(rng, f, static_cast<std::size_t>(d + 1)));
        if (up.evaluate(p) != phi.evaluate(p)) return "evaluation changed on " + p.to_string();
    }
    if (!(up == phi)) return "included element compares unequal";
    return {};
}

std::string tower_functorial(Rng& rng, Field f, std::size_t) {
    const Poly m = random_monic(rng, f, 2);
    const Poly g = m * random_monic(rng, f, 2);
    const Poly h = g * random_monic(rng, f, 2);
    const FinDualElement phi(m, random_vec(rng, f, static_cast<std::size_t>(m.degree())));
    if (include(include(phi, g), h).functional() != include(phi, h).functional())
        return "modulus " + m.to_string() + " | " + g.to_string() + " | " + h.to_string();
    return {};
}

std::string tower_wedge(Rng& rng, Field f, std::size_t) {
    const Poly p = random_monic(rng, f, 4), q = random_monic(rng, f, 4);
    const WedgeLawReport r = wedge_law(p, q);
    if (!r.report.ok()) return "f = " + p.to_string() + ", g = " + q.to_string() + ": " + r.report.to_string();
    return {};
}

std::string tower_rfd(Rng& rng, Field f, std::size_t) {
    Poly p(f);
    while (p.degree() < 0) p = Poly(f, random_vec(rng, f, 1 + rng.below(7)));
    const Poly modulus = Poly::monomial(f, static_cast<std::size_t>(p.degree() + 1));
    for (int i = 0; i < modulus.degree(); ++i) {
        const FinDualElement e(modulus, unit_vec(f, static_cast<std::size_t>(modulus.degree()), static_cast<std::size_t>(i)));
        if (!e.evaluate(p).is_zero()) return {};
    }
    return "every functional vanishes on " + p.to_string();
}

struct Entry {
    const char* id;
    const char* anchor;
    std::string (*run)(Rng&, Field, std::size_t);
    bool char0_only;
};

const Entry kEntries[] = {
    {"coalgebra.wedge.associative", "(V1 v V2) v V3 = V1 v (V2 v V3)", wedge_associative, false},
    {"coalgebra.wedge.distributive", "(meet_i V_i) v W = meet_i (V_i v W) and W v (meet_i V_i) = meet_i (W v V_i)", wedge_distributive, false},
    {"coalgebra.wedge.preimage", "f^-1(V v W) = f^-1(V) v f^-1(W)", wedge_preimage, false},
    {"coalgebra.wedge.restriction", "(V1 v V2) meet D = (V1 meet D) v_D (V2 meet D)", wedge_restriction, false},
    {"coalgebra.pts.union", "(V1 v V2) meet pts(C) = (V1 meet pts(C)) union (V2 meet pts(C))", pts_union, false},
    {"coalgebra.wedge.direct_sum", "(V1 + V2) v (W1 + W2) = (V1 v W1) + (V2 v W2) in C1 + C2", direct_sum_law, false},
    {"coalgebra.wedge.image", "f(V v W) in f(V) v f(W)", wedge_image, false},
    {"coalgebra.dagger.meet", "f_dagger(D meet D') = f_dagger(D) meet f_dagger(D')", dagger_meet, false},
    {"coalgebra.wedge.subcoalgebra", "D1, D2 subcoalgebras => D1 v D2 subcoalgebra", wedge_subcoalgebra, false},
    {"coalgebra.oracle.wedge", "Delta^-1(V (x) C + C (x) W) = (V^perp W^perp)^perp", oracle_wedge, false},
    {"coalgebra.oracle.largest", "largest subcoalgebra in V = (C* V^perp C*)^perp = fixpoint of D -> D meet Delta^-1(D (x) D)", oracle_largest, false},
    {"coalgebra.oracle.dagger", "f_dagger(Z(I)) = Z(B phi(I) B) for f = phi*", oracle_dagger, false},
    {"coalgebra.grouplikes.complete", "grouplikes(C) = {x : Delta(x) = x (x) x, eps(x) = 1}", grouplikes_complete, false},
    {"coalgebra.coradical.filtration", "C_0 = J(C*)^perp, C_{n+1} = C_n v C_0 increases to C", coradical_chain, true},
    {"ringed.quantale", "meet_i Z(S_i) = Z(sum_i S_i) and Z(S1) v Z(S2) = Z(S1 S2)", quantale_laws, false},
    {"ringed.galois", "Z(S)^perp = S and Z(T^perp) = T for algebraic T", galois_bijection, false},
    {"ringed.nullstellensatz", "I left ideal, Z(I) = 0 => I = A", nullstellensatz, false},
    {"ringed.topology", "D in Q_A <=> D^perp two-sided ideal <=> D subcoalgebra", topology_membership, false},
    {"ringed.sections.commutative", "A commutative => S_C closed under sum and product", commutative_sections, false},
    {"ringed.counterexample", "f_dagger(Z(I)) v f_dagger(Z(I)) = 0 != f_dagger(Z(I) v Z(I)) for phi(x) = e01", counterexample_inequality, false},
    {"ringed.sections.quotient", "A_{Z(I)} = a_C(A) = A/I", section_quotient, false},
    {"ringed.gamma.roundtrip", "Gamma(phi*) = phi, Gamma(A*) = A, iota_{A*} = id", gamma_algebra, false},
    {"ringed.morphism", "f_dagger(D) in Q_B and f* maps sections on D to sections on f_dagger(D)", rc_morphism, false},
    {"comodule.cotensor.sum", "D box (N1 + N2) = (D box N1) + (D box N2)", cotensor_sum, false},
    {"comodule.cotensor.monotone", "D in D' => D box N in D' box N", cotensor_monotone, false},
    {"comodule.dual.roundtrip", "module_to_comodule(dual_module(M)) = M", dual_roundtrip, false},
    {"comodule.blocks", "M = sum_i (e_i (x) id) rho(M) for central orthogonal idempotents e_i", block_decomposition, false},
    {"rcmodules.restriction.square", "lambda(s m) = rho(s) lambda(m) for C1 in C2", restriction_square, false},
    {"rcmodules.cotensor", "C box M* = (C^perp M)^perp", module_cotensor, false},
    {"rcmodules.section", "M^(Z(I)) = M/IM = m_C(M)", module_section, false},
    {"rcmodules.gamma", "Gamma(M^) = M and Gamma(f^) = f; f -> f^ faithful", module_gamma, false},
    {"polydual.evaluation", "include(phi, g)(p) = phi(p)", tower_evaluation, false},
    {"polydual.functorial", "include(include(phi, g), h) = include(phi, h)", tower_functorial, false},
    {"polydual.wedge_law", "Z((f)) v Z((g)) = Z((fg)) in (k[x]/(fg))*", tower_wedge, false},
    {"polydual.rfd", "p != 0 => some functional on k[x]/(x^{deg p + 1}) is nonzero on p", tower_rfd, false},
};

std::vector<Lemma> build_lemmas() {
    std::vector<Lemma> out;
    for (const Entry& e : kEntries) {
        auto fn = e.run;
        const bool char0 = e.char0_only;
        out.push_back({e.id, e.anchor, [fn, char0](Rng& rng, Field f, std::size_t max_dim) -> std::string {
                           if (char0 && !f.is_rational()) return {};
                           return fn(rng, f, max_dim);
                       }});
    }
    return out;
}

bool selected(const Options& options, const std::string& id) {
    if (options.only.empty()) return true;
    for (const auto& prefix : options.only)
        if (id.rfind(prefix, 0) == 0) return true;
    return false;
}

bool is_char0_only(const std::string& id) {
    for (const Entry& e : kEntries)
        if (id == e.id) return e.char0_only;
    return false;
}

}  // namespace

const std::vector<Lemma>& lemmas() {
    static const std::vector<Lemma> all = build_lemmas();
    return all;
}

const Lemma* find_lemma(const std::string& id) {
    for (const auto& l : lemmas())
        if (l.id == id) return &l;
    return nullptr;
}

bool SuiteResult::ok() const {
    for (const auto& l : lemmas)
        if (l.failed > 0) return false;
    return true;
}

std::size_t SuiteResult::cases_run() const {
    std::size_t n = 0;
    for (const auto& l : lemmas) n += l.passed + l.failed;
    return n;
}

std::string replay(const Lemma& lemma, Field field, std::uint64_t case_seed, std::size_t max_dim) {
    Rng rng(case_seed);
    try {
        return lemma.run(rng, field, max_dim);
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

SuiteResult run(const Options& options) {
    using clock = std::chrono::steady_clock;
    const auto suite_start = clock::now();
    SuiteResult result{options, {}, 0};
    for (const Lemma& lemma : lemmas()) {
        if (!selected(options, lemma.id)) continue;
        LemmaResult lr{lemma.id, lemma.anchor, 0, 0, std::nullopt, 0};
        const auto start = clock::now();
        for (const Field& field : options.fields) {
            if (is_char0_only(lemma.id) && !field.is_rational()) continue;
            for (std::size_t i = 0; i < options.cases; ++i) {
                const std::uint64_t case_seed = derive_seed(options.seed, lemma.id + "/" + field.name(), i);
                const std::string detail = replay(lemma, field, case_seed, options.max_dim);
                if (detail.empty()) {
                    ++lr.passed;
                } else {
                    ++lr.failed;
                    if (!lr.first_failure) lr.first_failure = Counterwitness{field.name(), i, case_seed, detail};
                }
            }
        }
        lr.seconds = std::chrono::duration<double>(clock::now() - start).count();
        result.lemmas.push_back(std::move(lr));
    }
    result.seconds = std::chrono::duration<double>(clock::now() - suite_start).count();
    return result;
}

ordered_json structured_report(const SuiteResult& result) {
    ordered_json fields = ordered_json::array();
    for (const auto& f : result.options.fields) fields.push_back(f.name());
    ordered_json lemmas_json = ordered_json::array();
    for (const auto& l : result.lemmas) {
        ordered_json entry;
        entry["id"] = l.id;
        entry["anchor"] = l.anchor;
        entry["pass"] = l.passed;
        entry["fail"] = l.failed;
        if (l.first_failure) {
            entry["counterwitness"] = {{"field", l.first_failure->field},
                                       {"case", l.first_failure->case_index},
                                       {"case_seed", l.first_failure->case_seed},
                                       {"detail", l.first_failure->detail}};
        } else {
            entry["counterwitness"] = nullptr;
        }
        lemmas_json.push_back(std::move(entry));
    }
    ordered_json out;
    out["suite"] = "verify";
    out["seed"] = result.options.seed;
    out["cases_per_lemma"] = result.options.cases;
    out["max_dim"] = result.options.max_dim;
    out["fields"] = fields;
    out["cases_run"] = result.cases_run();
    out["ok"] = result.ok();
    out["lemmas"] = lemmas_json;
    return out;
}

std::string text_report(const SuiteResult& result) {
    std::ostringstream out;
    out << "verify: seed " << result.options.seed << ", " << result.options.cases << " cases per lemma and field, max dim "
        << result.options.max_dim << ", fields";
    for (const auto& f : result.options.fields) out << " " << f.name();
    out << "\n";
    for (const auto& l : result.lemmas) {
        out << (l.failed == 0 ? "PASS " : "FAIL ") << l.id << "  " << l.passed << "/" << (l.passed + l.failed) << "  ("
            << l.anchor << ")";
        out.setf(std::ios::fixed);
        out.precision(2);
        out << "  " << l.seconds << "s\n";
        if (l.first_failure)
            out << "     first failure: field " << l.first_failure->field << ", case " << l.first_failure->case_index
                << ", case seed " << l.first_failure->case_seed << ": " << l.first_failure->detail << "\n";
    }
    out << (result.ok() ? "all lemmas passed" : "some lemmas failed") << " (" << result.cases_run() << " cases, "
        << result.seconds << "s)\n";
    return out.str();
}

ordered_json manifest() {
    ordered_json out = ordered_json::object();
    for (const auto& l : lemmas()) out[l.id] = l.anchor;
    return out;
}

}  // namespace coalg::verify
