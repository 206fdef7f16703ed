#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcone/matrix.hpp"

namespace nilcone {

/// Univariate polynomial; coefficients stored lowest degree first with no
/// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
public:
    explicit Polynomial(const Field& f) : field_(f) {}
    Polynomial(const Field& f, std::vector<Scalar> coeffs);
    static Polynomial constant(const Scalar& c);
    /// t - a
    static Polynomial linear_root(const Scalar& a);
    static Polynomial monomial(const Field& f, unsigned degree);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Scalar coeff(std::size_t i) const;
    const Scalar& leading() const { return c_.back(); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    Polynomial monic() const;
    Polynomial derivative() const;
    Scalar operator()(const Scalar& t) const;
    Matrix operator()(const Matrix& x) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& s, Polynomial p);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Quotient and remainder; throws DivisionByZero on a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<Scalar> c_;
};

/// Monic gcd (zero if both inputs vanish).
Polynomial gcd(Polynomial a, Polynomial b);

/// (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
struct ExtendedGcd {
    Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow_mod(Polynomial base, unsigned long long e, const Polynomial& modulus);

/// Roots of a polynomial in its base field with multiplicities, plus the
/// monic cofactor that has no roots in the field (degree 0 when f splits).
struct RootFactorization {
    std::vector<std::pair<Scalar, unsigned>> roots;
    Polynomial residual;

    bool splits() const { return residual.degree() <= 0; }
};
RootFactorization find_roots(const Polynomial& f);

/// The monic g with g*g == f if it exists (characteristic != 2).
std::optional<Polynomial> square_root(const Polynomial& f);

}  // namespace nilcone
