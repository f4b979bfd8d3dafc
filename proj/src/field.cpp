#include "coalg/field.hpp"

#include <charconv>

#include "coalg/errors.hpp"

namespace coalg {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t reduce(long value, std::uint32_t p) {
    long r = value % static_cast<long>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    std::string_view digits;
    if (text.starts_with("fp:")) digits = text.substr(3);
    else if (text.starts_with("F")) digits = text.substr(1);
    else throw InvalidArgument("unknown field '" + std::string(text) + "'");
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw InvalidArgument("bad field characteristic in '" + std::string(text) + "'");
    return prime(p);
}

std::string Field::name() const { return is_rational() ? "q" : "fp:" + std::to_string(p_); }

Scalar::Scalar(Field f) : field_(f) {
    if (!f.is_rational()) value_ = std::uint64_t{0};
}

Scalar::Scalar(Field f, long value) : field_(f) {
    if (f.is_rational()) value_ = mpq_class(value);
    else value_ = reduce(value, f.characteristic());
}

Scalar::Scalar(Field f, const mpq_class& value) : field_(f) {
    if (f.is_rational()) {
        value_ = value;
        return;
    }
    const unsigned long p = f.characteristic();
    const std::uint64_t num = mpz_fdiv_ui(value.get_num_mpz_t(), p);
    const std::uint64_t den = mpz_fdiv_ui(value.get_den_mpz_t(), p);
    if (den == 0) throw InvalidArgument("denominator vanishes in " + f.name());
    value_ = num * pow_mod(den, p - 2, p) % p;
}

Scalar::Scalar(Field f, long num, long den) : Scalar(f, [&] {
    if (den == 0) throw InvalidArgument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}()) {}

Scalar Scalar::parse(Field f, std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidArgument("empty scalar");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InvalidArgument("malformed scalar '" + s + "'");
    if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    q.canonicalize();
    if (!f.is_rational() && q.get_den() != 1)
        throw InvalidArgument("residue '" + s + "' must be an integer");
    return Scalar(f, q);
}

bool Scalar::is_zero() const {
    if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

mpq_class Scalar::to_rational() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_);
    return mpq_class(static_cast<unsigned long>(std::get<std::uint64_t>(value_)));
}

std::string Scalar::to_string() const {
    if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch("scalars over " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.is_rational()) r.value_ = mpq_class(-std::get<mpq_class>(value_));
    else {
        const std::uint64_t v = std::get<std::uint64_t>(value_);
        r.value_ = v == 0 ? 0 : field_.characteristic() - v;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    else {
        auto& v = std::get<std::uint64_t>(value_);
        v = (v + std::get<std::uint64_t>(o.value_)) % field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    else {
        const std::uint64_t p = field_.characteristic();
        auto& v = std::get<std::uint64_t>(value_);
        v = (v + p - std::get<std::uint64_t>(o.value_)) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    else {
        auto& v = std::get<std::uint64_t>(value_);
        v = v * std::get<std::uint64_t>(o.value_) % field_.characteristic();
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InvalidArgument("division by zero");
    Scalar r(field_);
    if (field_.is_rational()) r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
    else {
        const std::uint64_t p = field_.characteristic();
        r.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
    }
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return a.field_ < b.field_;
    if (a.field_.is_rational()) return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
    return std::get<std::uint64_t>(a.value_) < std::get<std::uint64_t>(b.value_);
}

}  // namespace coalg
