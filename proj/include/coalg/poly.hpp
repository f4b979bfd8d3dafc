#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coalg/field.hpp"

namespace coalg {

/// Univariate polynomial with coefficients in ascending degree order and no
/// trailing zeros. The zero polynomial has no coefficients.
class Poly {
public:
    explicit Poly(Field f = Field{}) : field_(f) {}
    Poly(Field f, std::vector<Scalar> coefficients);
    static Poly from_ints(Field f, std::initializer_list<long> coefficients);
    static Poly x(Field f) { return from_ints(f, {0, 1}); }
    static Poly monomial(Field f, std::size_t degree);
    static Poly constant(const Scalar& c);
    /// Parses sums of terms like "x^3 - 2x + 1/2" (variable x).
    static Poly parse(Field f, std::string_view text);

    Field field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    Scalar coefficient(std::size_t i) const;
    Scalar leading() const;
    Poly monic() const;
    Scalar evaluate(const Scalar& at) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<Scalar> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};
PolyDivision divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

/// Distinct roots lying in the base field, sorted canonically. Over Q this is
/// the rational-root search; over F_p an exhaustive scan.
std::vector<Scalar> base_field_roots(const Poly& p);

}  // namespace coalg
