#include "nilcone/field.hpp"

#include <ostream>
#include <stdexcept>

#include "nilcone/errors.hpp"

namespace nilcone {

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_number(p))
        throw std::invalid_argument("F_p needs a prime p < 2^31, got " + std::to_string(p));
    return Field(Kind::prime, p);
}

std::string Field::name() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

namespace {

std::uint32_t reduce(const mpq_class& q, std::uint32_t p) {
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw DivisionByZero("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
    mpz_class r = (num * inv) % p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

Scalar::Scalar(const Field& f, long value) : field_(f) {
    if (f.is_rational()) {
        q_ = value;
    } else {
        long m = value % static_cast<long>(f.characteristic());
        if (m < 0) m += f.characteristic();
        r_ = static_cast<std::uint32_t>(m);
    }
}

Scalar::Scalar(const Field& f, const mpq_class& value) : field_(f) {
    if (f.is_rational()) {
        q_ = value;
        q_.canonicalize();
    } else {
        r_ = reduce(value, f.characteristic());
    }
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    mpq_class q;
    std::string t = text;
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    if (t.empty() || q.set_str(t, 10) != 0) throw ParseError("not a scalar: '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(f, q);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw FieldMismatch("rational() on an element of " + field_.name());
    return q_;
}

std::uint32_t Scalar::residue() const {
    if (!field_.is_prime()) throw FieldMismatch("residue() on an element of Q");
    return r_;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch(field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = field_.characteristic() - r_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        q_ += o.q_;
    } else {
        std::uint64_t s = std::uint64_t(r_) + o.r_;
        r_ = static_cast<std::uint32_t>(s % field_.characteristic());
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational()) {
        q_ -= o.q_;
    } else {
        std::uint64_t p = field_.characteristic();
        r_ = static_cast<std::uint32_t>((r_ + p - o.r_) % p);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (field_.is_rational())
        q_ *= o.q_;
    else
        r_ = static_cast<std::uint32_t>(std::uint64_t(r_) * o.r_ % field_.characteristic());
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar s = *this;
    if (field_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
    return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same(b);
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace nilcone
