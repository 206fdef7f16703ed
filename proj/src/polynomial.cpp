#include "nilcone/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "nilcone/errors.hpp"

namespace nilcone {

Polynomial::Polynomial(const Field& f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const auto& s : c_)
        if (!(s.field() == f)) throw FieldMismatch("polynomial coefficient field");
    trim();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::linear_root(const Scalar& a) {
    return Polynomial(a.field(), {-a, Scalar::one(a.field())});
}

Polynomial Polynomial::monomial(const Field& f, unsigned degree) {
    std::vector<Scalar> c(degree + 1, Scalar::zero(f));
    c.back() = Scalar::one(f);
    return Polynomial(f, std::move(c));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

Polynomial Polynomial::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Scalar(field_, static_cast<long>(i)) * c_[i]);
    return Polynomial(field_, std::move(d));
}

Scalar Polynomial::operator()(const Scalar& t) const {
    Scalar r = Scalar::zero(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

Matrix Polynomial::operator()(const Matrix& x) const {
    if (!x.is_square()) throw DimensionMismatch("polynomial of a non-square matrix");
    const Matrix id = Matrix::identity(field_, x.rows());
    Matrix r(field_, x.rows(), x.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + (*it) * id;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomial sum");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomial difference");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("polynomial product");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Scalar& s, Polynomial p) {
    for (auto& c : p.c_) c *= s;
    p.trim();
    return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial r = *this;
    if (r.degree() < d.degree()) return {Polynomial(field_), r};
    std::vector<Scalar> q(r.c_.size() - d.c_.size() + 1, Scalar::zero(field_));
    const Scalar inv_lead = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const std::size_t shift = r.c_.size() - d.c_.size();
        const Scalar factor = r.leading() * inv_lead;
        q[shift] = factor;
        for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= factor * d.c_[i];
        r.trim();
    }
    return {Polynomial(field_, std::move(q)), r};
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& c = c_[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !c.is_one()) os << c.to_string();
        if (i >= 1) os << (c.is_one() ? "" : "*") << "t";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    const Field& f = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(Scalar::one(f)), s1(f);
    Polynomial t0(f), t1 = Polynomial::constant(Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Scalar inv = r0.leading().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

Polynomial pow_mod(Polynomial base, unsigned long long e, const Polynomial& modulus) {
    Polynomial result = Polynomial::constant(Scalar::one(base.field())).divmod(modulus).second;
    base = base.divmod(modulus).second;
    while (e) {
        if (e & 1ull) result = (result * base).divmod(modulus).second;
        e >>= 1ull;
        if (e) base = (base * base).divmod(modulus).second;
    }
    return result;
}

namespace {

/// Strips the factor (t - r) from f as often as possible.
unsigned strip_root(Polynomial& f, const Scalar& r) {
    unsigned m = 0;
    const Polynomial lin = Polynomial::linear_root(r);
    for (;;) {
        auto [q, rem] = f.divmod(lin);
        if (!rem.is_zero()) break;
        f = std::move(q);
        ++m;
    }
    return m;
}

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (unsigned long d = 2; d <= 1000000 && mpz_class(d) * d <= n; ++d) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            n /= d;
            ++e;
        }
        if (e) factors.emplace_back(mpz_class(d), e);
    }
    // What is left is 1, a prime, or (beyond the trial bound) treated as one.
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

std::vector<Scalar> distinct_rational_roots(const Polynomial& f) {
    const Field& q = f.field();
    std::vector<Scalar> roots;
    // Square-free part, cleared of denominators and of the root 0.
    Polynomial g = f.divmod(gcd(f, f.derivative())).first;
    if (g.coeff(0).is_zero()) {
        roots.push_back(Scalar::zero(q));
        g = g.divmod(Polynomial::monomial(q, 1)).first;
    }
    if (g.degree() < 1) return roots;
    mpz_class den = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : g.coeffs()) ints.push_back(mpz_class(c.rational() * den));
    mpz_class bound = 0;  // Cauchy bound on |root| times the leading coefficient
    for (std::size_t i = 0; i + 1 < ints.size(); ++i) bound = std::max(bound, mpz_class(abs(ints[i])));
    const mpz_class lead = abs(ints.back());
    const auto num_divs = divisors(ints.front());
    const auto den_divs = divisors(lead);
    for (const auto& b : den_divs) {
        for (const auto& a : num_divs) {
            if (a * lead > (bound + lead) * b) continue;
            for (int sign : {1, -1}) {
                mpq_class cand(sign * a, b);
                cand.canonicalize();
                if (cand.get_den() != b) continue;  // seen with a smaller denominator
                const Scalar s(q, cand);
                if (g(s).is_zero()) roots.push_back(s);
            }
        }
    }
    return roots;
}

std::vector<Scalar> distinct_prime_roots(const Polynomial& f) {
    const Field& fp = f.field();
    const std::uint32_t p = fp.characteristic();
    std::vector<Scalar> roots;
    const Polynomial t = Polynomial::monomial(fp, 1);
    Polynomial h = gcd(f, pow_mod(t, p, f) - t);
    if (h.degree() < 1) return roots;
    if (p <= 4096) {
        for (std::uint32_t a = 0; a < p && static_cast<int>(roots.size()) < h.degree(); ++a) {
            const Scalar s(fp, static_cast<long>(a));
            if (h(s).is_zero()) roots.push_back(s);
        }
        return roots;
    }
    // Cantor-Zassenhaus equal-degree splitting of a product of distinct linear factors.
    std::vector<Polynomial> work{h};
    long shift = 0;
    while (!work.empty()) {
        Polynomial g = work.back();
        work.pop_back();
        if (g.degree() == 1) {
            roots.push_back(-(g.monic().coeff(0)));
            continue;
        }
        for (;; ++shift) {
            const Polynomial base = t + Polynomial::constant(Scalar(fp, shift));
            Polynomial w = pow_mod(base, (p - 1) / 2, g) - Polynomial::constant(Scalar::one(fp));
            Polynomial d = gcd(g, w);
            if (d.degree() >= 1 && d.degree() < g.degree()) {
                work.push_back(d);
                work.push_back(g.divmod(d).first);
                ++shift;
                break;
            }
        }
    }
    return roots;
}

}  // namespace

RootFactorization find_roots(const Polynomial& f) {
    if (f.is_zero()) throw DivisionByZero("roots of the zero polynomial");
    RootFactorization out{{}, f.monic()};
    const auto distinct = f.field().is_rational() ? distinct_rational_roots(out.residual)
                                                  : distinct_prime_roots(out.residual);
    for (const auto& r : distinct) {
        const unsigned m = strip_root(out.residual, r);
        if (m) out.roots.emplace_back(r, m);
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
        if (a.first.field().is_rational()) return a.first.rational() < b.first.rational();
        return a.first.residue() < b.first.residue();
    });
    return out;
}

std::optional<Polynomial> square_root(const Polynomial& f) {
    const Field& fld = f.field();
    if (fld.characteristic() == 2) throw CharTwo("square root of a polynomial in characteristic 2");
    if (f.is_zero()) return f;
    if (f.degree() % 2 != 0) return std::nullopt;
    const Polynomial m = f.monic();
    if (!(m == f)) return std::nullopt;
    const std::size_t n = static_cast<std::size_t>(f.degree() / 2);
    // g = t^n + g_{n-1} t^{n-1} + ...; solve coefficients top-down from f = g^2.
    std::vector<Scalar> g(n + 1, Scalar::zero(fld));
    g[n] = Scalar::one(fld);
    const Scalar half = Scalar(fld, 2L).inverse();
    for (std::size_t k = 1; k <= n; ++k) {
        Scalar acc = f.coeff(2 * n - k);
        for (std::size_t i = 1; i < k; ++i) acc -= g[n - i] * g[n - (k - i)];
        g[n - k] = acc * half;
    }
    Polynomial root(fld, std::move(g));
    if (!(root * root == f)) return std::nullopt;
    return root;
}

}  // namespace nilcone
