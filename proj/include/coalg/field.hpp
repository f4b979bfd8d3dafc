#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace coalg {

/// The base field: the rationals or a prime field F_p.
class Field {
public:
    Field() = default;  // the rationals

    static Field rationals() { return Field{}; }
    /// Throws InvalidArgument unless p is prime.
    static Field prime(std::uint32_t p);
    /// Accepts "q", "Q", "fp:<p>", "F<p>".
    static Field parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    /// "q" or "fp:<p>", the flag/file spelling.
    std::string name() const;

    auto operator<=>(const Field&) const = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// An exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues satisfy 0 <= r < p.
class Scalar {
public:
    Scalar() = default;  // rational zero
    explicit Scalar(Field f);
    Scalar(Field f, long value);
    Scalar(Field f, const mpq_class& value);
    Scalar(Field f, long num, long den);

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1); }
    /// Parses "p/q" or "n" (rationals) and a decimal integer (residues).
    static Scalar parse(Field f, std::string_view text);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Rational value; for residues the representative in [0, p).
    mpq_class to_rational() const;
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Total order for canonical sorting (not a field order).
    friend bool canonical_less(const Scalar& a, const Scalar& b);

private:
    void check_same(const Scalar& o) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> value_{mpq_class(0)};
};

bool canonical_less(const Scalar& a, const Scalar& b);

}  // namespace coalg
