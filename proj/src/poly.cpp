#include "coalg/poly.hpp"

#include <algorithm>
#include <map>

#include "coalg/errors.hpp"

namespace coalg {

Poly::Poly(Field f, std::vector<Scalar> coefficients) : field_(f), coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_)
        if (c.field() != f) throw FieldMismatch("polynomial coefficient over a different field");
    trim();
}

Poly Poly::from_ints(Field f, std::initializer_list<long> coefficients) {
    std::vector<Scalar> c;
    for (long v : coefficients) c.emplace_back(f, v);
    return Poly(f, std::move(c));
}

Poly Poly::monomial(Field f, std::size_t degree) {
    std::vector<Scalar> c(degree + 1, Scalar(f));
    c[degree] = Scalar::one(f);
    return Poly(f, std::move(c));
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(field_); }

Scalar Poly::leading() const { return is_zero() ? Scalar(field_) : coeffs_.back(); }

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const Scalar inv = leading().inverse();
    std::vector<Scalar> c = coeffs_;
    for (auto& x : c) x *= inv;
    return Poly(field_, std::move(c));
}

Scalar Poly::evaluate(const Scalar& at) const {
    Scalar acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_) throw FieldMismatch("polynomial sum over different fields");
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(a.field_));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_) throw FieldMismatch("polynomial difference over different fields");
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(a.field_));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_) throw FieldMismatch("polynomial product over different fields");
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(a.field_, std::move(c));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        const bool negative = field_.is_rational() && cs.front() == '-';
        if (negative) cs.erase(0, 1);
        if (s.empty()) s = negative ? "-" : "";
        else s += negative ? " - " : " + ";
        if (i == 0) s += cs;
        else {
            if (cs != "1") s += cs;
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly Poly::parse(Field f, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.empty()) throw InvalidArgument("empty polynomial");
    Poly result(f);
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw InvalidArgument("expected '+' or '-' at position " + std::to_string(pos) + " in '" + s + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            if (s[end] == '^') {  // exponent digits may follow
                ++end;
                continue;
            }
            ++end;
        }
        const std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw InvalidArgument("empty term at position " + std::to_string(pos) + " in '" + s + "'");
        const auto xpos = term.find('x');
        Scalar coef = Scalar::one(f);
        std::size_t degree = 0;
        std::string cpart = xpos == std::string::npos ? term : term.substr(0, xpos);
        if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
        if (!cpart.empty()) coef = Scalar::parse(f, cpart);
        if (xpos != std::string::npos) {
            degree = 1;
            const std::string rest = term.substr(xpos + 1);
            if (!rest.empty()) {
                if (rest[0] != '^' || rest.size() < 2)
                    throw InvalidArgument("malformed exponent in term '" + term + "'");
                try {
                    degree = std::stoul(rest.substr(1));
                } catch (const std::exception&) {
                    throw InvalidArgument("malformed exponent in term '" + term + "'");
                }
            }
        }
        if (negative) coef = -coef;
        std::vector<Scalar> c(degree + 1, Scalar(f));
        c[degree] = coef;
        result = result + Poly(f, std::move(c));
        pos = end;
    }
    return result;
}

PolyDivision divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    if (a.field() != b.field()) throw FieldMismatch("polynomial division over different fields");
    const Field f = a.field();
    std::vector<Scalar> rem = a.coefficients();
    const auto bd = static_cast<std::size_t>(b.degree());
    if (rem.size() <= bd) return {Poly(f), a};
    std::vector<Scalar> quot(rem.size() - bd, Scalar(f));
    const Scalar inv = b.leading().inverse();
    for (std::size_t i = rem.size(); i-- > bd;) {
        const Scalar c = rem[i] * inv;
        quot[i - bd] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= bd; ++j) rem[i - bd + j] -= c * b.coefficients()[j];
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field());
    return divmod(a * b, gcd(a, b)).quotient.monic();
}

namespace {

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out);

mpz_class pollard_brent(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto step = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            mpz_class diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    for (unsigned long p = 2; p < 1000 && p * p <= n; ++p)
        while (n % p == 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    const mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::map<mpz_class, unsigned> fac;
    factor_into(abs(n), fac);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<Scalar> base_field_roots(const Poly& p) {
    if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
    const Field f = p.field();
    std::vector<Scalar> roots;
    if (!f.is_rational()) {
        for (std::uint32_t v = 0; v < f.characteristic(); ++v) {
            Scalar s(f, static_cast<long>(v));
            if (p.evaluate(s).is_zero()) roots.push_back(s);
        }
        return roots;
    }
    // Clear denominators, strip the power of x, apply the rational root test.
    mpz_class den = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.to_rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : p.coefficients()) ints.push_back(mpz_class(c.to_rational() * den));
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar(f));
    if (ints.size() - low > 1) {
        const auto nums = positive_divisors(ints[low]);
        const auto dens = positive_divisors(ints.back());
        for (const auto& q : dens)
            for (const auto& n : nums)
                for (int sign : {1, -1}) {
                    mpq_class cand(n * sign, q);
                    cand.canonicalize();
                    if (cand.get_den() != q) continue;  // reached through a smaller denominator
                    Scalar s(f, cand);
                    if (p.evaluate(s).is_zero()) roots.push_back(s);
                }
    }
    std::sort(roots.begin(), roots.end(), canonical_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace coalg
