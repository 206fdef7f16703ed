#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace nilcone {

/// The base field: the rationals or a prime field F_p.
class Field {
public:
    enum class Kind : std::uint8_t { rational, prime };

    static Field rationals() { return Field(Kind::rational, 0); }
    /// Throws std::invalid_argument unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::rational; }
    bool is_prime() const noexcept { return kind_ == Kind::prime; }
    /// 0 for Q, p for F_p.
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n);

/// An element of Q (lowest terms, positive denominator) or of F_p (residue
/// in [0, p)). Arithmetic across different fields throws FieldMismatch.
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    Scalar(const Field& f, long value);
    Scalar(const Field& f, const mpq_class& value);

    static Scalar zero(const Field& f) { return Scalar(f, 0L); }
    static Scalar one(const Field& f) { return Scalar(f, 1L); }
    /// Accepts "a", "-a", "a/b"; over F_p the rational is reduced mod p.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Exact rational value; only valid over Q.
    const mpq_class& rational() const;
    /// Residue in [0, p); only valid over F_p.
    std::uint32_t residue() const;

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
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    Field field_;
    mpq_class q_;
    std::uint32_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nilcone
