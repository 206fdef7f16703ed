#include "nilcone/linalg.hpp"

#include <algorithm>

#include "nilcone/errors.hpp"

namespace nilcone {

RowEchelon row_reduce(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        const Scalar inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Scalar factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
    const auto [r, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.field(), m.cols());
        v[free] = Scalar::one(m.field());
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t span_dim(const Field& f, std::size_t dim, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return 0;
    return rank(Matrix::from_columns(f, dim, vectors));
}

std::vector<Vector> independent_subset(const Field& f, std::size_t dim, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return {};
    const auto ech = row_reduce(Matrix::from_columns(f, dim, vectors));
    std::vector<Vector> out;
    for (auto p : ech.pivots) out.push_back(vectors[p]);
    return out;
}

Scalar determinant(Matrix m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const Field f = m.field();
    Scalar det = Scalar::one(f);
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) ++sel;
        if (sel == n) return Scalar::zero(f);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const Scalar inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            const Scalar factor = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    const auto ech = row_reduce(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw DivisionByZero("singular matrix");
    return ech.reduced.block(0, n, n, n);
}

std::optional<Vector> coordinates(const Matrix& basis, const Vector& w) {
    const std::size_t d = basis.cols();
    Matrix aug(basis.field(), basis.rows(), d + 1);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        for (std::size_t j = 0; j < d; ++j) aug(i, j) = basis(i, j);
        aug(i, d) = w[i];
    }
    const auto ech = row_reduce(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == d) return std::nullopt;
    Vector c(basis.field(), d);
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) c[ech.pivots[k]] = ech.reduced(k, d);
    return c;
}

bool is_nilpotent(const Matrix& x) {
    if (!x.is_square()) throw DimensionMismatch("nilpotency of a non-square matrix");
    return x.pow(static_cast<unsigned>(x.rows())).is_zero();
}

namespace {

/// Partition whose transpose has parts rank_{i-1} - rank_i.
Partition from_rank_sequence(const std::vector<std::size_t>& ranks) {
    std::vector<int> cols;
    for (std::size_t i = 1; i < ranks.size(); ++i) {
        const auto diff = static_cast<int>(ranks[i - 1] - ranks[i]);
        if (diff > 0) cols.push_back(diff);
    }
    return Partition(std::move(cols)).transpose();
}

std::size_t idx(std::size_t i, std::size_t j, std::size_t n) { return i * n + j; }

/// Rows of the linear system a x - x a = 0 in the unknowns a_ij, appended
/// starting at row `offset` of `sys`.
void commutator_rows(const Matrix& x, Matrix& sys, std::size_t offset) {
    const std::size_t n = x.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t r = offset + idx(i, k, n);
            for (std::size_t j = 0; j < n; ++j) {
                if (!x(j, k).is_zero()) sys(r, idx(i, j, n)) += x(j, k);
                if (!x(i, j).is_zero()) sys(r, idx(j, k, n)) -= x(i, j);
            }
        }
}

void annihilator_rows(const Vector& v, Matrix& sys, std::size_t offset) {
    const std::size_t n = v.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys(offset + i, idx(i, j, n)) = v[j];
}

Matrix unflatten(const Vector& a, std::size_t n) {
    Matrix m(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a[idx(i, j, n)];
    return m;
}

Matrix stabilizer_system_gl(const Vector& v, const Matrix& x) {
    const std::size_t n = x.rows();
    if (!x.is_square() || v.dim() != n) throw DimensionMismatch("stabilizer of (v, x)");
    Matrix sys(x.field(), n + n * n, n * n);
    annihilator_rows(v, sys, 0);
    commutator_rows(x, sys, n);
    return sys;
}

}  // namespace

Partition jordan_type_nilpotent(const Matrix& x) {
    if (!is_nilpotent(x)) throw NotNilpotent("matrix is not nilpotent");
    const std::size_t n = x.rows();
    std::vector<std::size_t> ranks{n};
    Matrix p = x;
    for (std::size_t i = 1; i <= n && ranks.back() > 0; ++i) {
        ranks.push_back(rank(p));
        p = p * x;
    }
    return from_rank_sequence(ranks);
}

std::vector<Matrix> centralizer_basis(const Matrix& x) {
    const std::size_t n = x.rows();
    Matrix sys(x.field(), n * n, n * n);
    commutator_rows(x, sys, 0);
    std::vector<Matrix> out;
    for (const auto& a : nullspace(sys)) out.push_back(unflatten(a, n));
    return out;
}

std::pair<Partition, Partition> restricted_jordan_type(const Matrix& x, const Vector& v) {
    if (!is_nilpotent(x)) throw NotNilpotent("matrix is not nilpotent");
    const std::size_t n = x.rows();
    const Field& f = x.field();
    std::vector<Vector> gens;
    for (const auto& a : centralizer_basis(x)) gens.push_back(a * v);
    const std::vector<Vector> sub = independent_subset(f, n, gens);
    const std::size_t d = sub.size();

    std::vector<std::size_t> sub_ranks{d}, quot_ranks{n - d};
    std::vector<Vector> image = sub;
    std::vector<Vector> full;
    for (std::size_t j = 0; j < n; ++j) full.push_back(Vector::unit(f, n, j));
    for (std::size_t i = 1; i <= n; ++i) {
        for (auto& w : image) w = x * w;
        for (auto& w : full) w = x * w;
        sub_ranks.push_back(span_dim(f, n, image));
        std::vector<Vector> joined = full;
        joined.insert(joined.end(), sub.begin(), sub.end());
        quot_ranks.push_back(span_dim(f, n, joined) - d);
        if (sub_ranks.back() == 0 && quot_ranks.back() == 0) break;
    }
    return {from_rank_sequence(sub_ranks), from_rank_sequence(quot_ranks)};
}

std::size_t stabilizer_dim_gl(const Vector& v, const Matrix& x) {
    const std::size_t n = x.rows();
    return n * n - rank(stabilizer_system_gl(v, x));
}

std::vector<Matrix> stabilizer_basis_gl(const Vector& v, const Matrix& x) {
    std::vector<Matrix> out;
    for (const auto& a : nullspace(stabilizer_system_gl(v, x))) out.push_back(unflatten(a, x.rows()));
    return out;
}

Matrix symplectic_form(const Field& f, std::size_t n) {
    Matrix omega(f, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        omega(i, n + i) = Scalar::one(f);
        omega(n + i, i) = -Scalar::one(f);
    }
    return omega;
}

namespace {

void require_odd_char(const Field& f) {
    if (f.characteristic() == 2) throw CharTwo("symplectic structures need characteristic != 2");
}

}  // namespace

bool is_wedge_matrix(const Matrix& x) {
    require_odd_char(x.field());
    if (!x.is_square() || x.rows() % 2 != 0) return false;
    const std::size_t n = x.rows() / 2;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (x(n + i, n + j) != x(j, i)) return false;       // D = ᵀA
            if (x(i, n + j) != -x(j, n + i)) return false;      // ᵀB = -B
            if (x(n + i, j) != -x(n + j, i)) return false;      // ᵀC = -C
        }
    return true;
}

bool is_sp_matrix(const Matrix& a) {
    require_odd_char(a.field());
    if (!a.is_square() || a.rows() % 2 != 0) return false;
    const Matrix omega = symplectic_form(a.field(), a.rows() / 2);
    return (a.transpose() * omega + omega * a).is_zero();
}

std::size_t stabilizer_dim_sp(const Vector& v, const Matrix& x) {
    if (!is_wedge_matrix(x)) throw WedgeViolation("x is not of the form [[A, B], [C, ᵀA]] with B, C skew");
    const std::size_t dim = x.rows();
    if (v.dim() != dim) throw DimensionMismatch("stabilizer of (v, x)");
    const Matrix omega = symplectic_form(x.field(), dim / 2);
    Matrix sys(x.field(), dim + 2 * dim * dim, dim * dim);
    annihilator_rows(v, sys, 0);
    commutator_rows(x, sys, dim);
    // ᵀa Ω + Ω a = 0, row (i, k): Σ_j a_ji Ω_jk + Σ_j Ω_ij a_jk
    const std::size_t off = dim + dim * dim;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            const std::size_t r = off + idx(i, k, dim);
            for (std::size_t j = 0; j < dim; ++j) {
                if (!omega(j, k).is_zero()) sys(r, idx(j, i, dim)) += omega(j, k);
                if (!omega(i, j).is_zero()) sys(r, idx(j, k, dim)) += omega(i, j);
            }
        }
    return dim * dim - rank(sys);
}

Polynomial char_polynomial(const Matrix& x) {
    if (!x.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    const Field& f = x.field();
    const std::size_t n = x.rows();
    Matrix h = x;
    // Reduce to upper Hessenberg form by similarity.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t sel = m;
        while (sel < n && h(sel, m - 1).is_zero()) ++sel;
        if (sel == n) continue;
        if (sel != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(sel, j), h(m, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, sel), h(i, m));
        }
        const Scalar inv = h(m, m - 1).inverse();
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h(i, m - 1).is_zero()) continue;
            const Scalar u = h(i, m - 1) * inv;
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(m, j);
            for (std::size_t r = 0; r < n; ++r) h(r, m) += u * h(r, i);
        }
    }
    // p_m = (t - h_mm) p_{m-1} - Σ_{i<m} h_im (Π_{j=i+1..m} h_{j,j-1}) p_{i-1}
    std::vector<Polynomial> p{Polynomial::constant(Scalar::one(f))};
    const Polynomial t = Polynomial::monomial(f, 1);
    for (std::size_t m = 1; m <= n; ++m) {
        Polynomial next = (t - Polynomial::constant(h(m - 1, m - 1))) * p[m - 1];
        Scalar prod = Scalar::one(f);
        for (std::size_t i = m - 1; i >= 1; --i) {
            prod *= h(i, i - 1);
            if (prod.is_zero()) break;
            next -= (h(i - 1, m - 1) * prod) * p[i - 1];
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

std::vector<Scalar> char_poly(const Matrix& x) {
    const Polynomial p = char_polynomial(x);
    const std::size_t n = x.rows();
    std::vector<Scalar> c;
    for (std::size_t i = 1; i <= n; ++i) c.push_back(p.coeff(n - i));
    return c;
}

JordanChevalley jordan_chevalley_split(const Matrix& x) {
    const Field& f = x.field();
    const Polynomial chi = char_polynomial(x);
    const RootFactorization roots = find_roots(chi);
    if (!roots.splits())
        throw NonSplitSpectrum("characteristic polynomial has the root-free factor " + roots.residual.to_string() +
                               " over " + f.name());
    std::vector<Polynomial> powers;
    for (const auto& [r, m] : roots.roots) {
        Polynomial q = Polynomial::constant(Scalar::one(f));
        for (unsigned k = 0; k < m; ++k) q = q * Polynomial::linear_root(r);
        powers.push_back(std::move(q));
    }
    JordanChevalley out{Matrix(f, x.rows(), x.cols()), x, roots.roots, {}};
    Polynomial s_poly(f);
    for (std::size_t i = 0; i < powers.size(); ++i) {
        Polynomial others = Polynomial::constant(Scalar::one(f));
        for (std::size_t j = 0; j < powers.size(); ++j)
            if (j != i) others = others * powers[j];
        // e_i ≡ 1 mod (t - r_i)^{m_i}, e_i ≡ 0 mod the other prime powers.
        const ExtendedGcd eg = extended_gcd(others, powers[i]);
        const Polynomial e = (eg.s * others).divmod(chi).second;
        out.idempotents.push_back(e(x));
        s_poly += roots.roots[i].first * e;
    }
    out.semisimple = s_poly.divmod(chi).second(x);
    out.nilpotent = x - out.semisimple;
    return out;
}

std::optional<std::pair<Vector, Matrix>> limit_along_cocharacter(const std::vector<int>& weights, const Vector& v,
                                                                 const Matrix& x) {
    const std::size_t n = weights.size();
    if (v.dim() != n || x.rows() != n || x.cols() != n) throw DimensionMismatch("cocharacter weights vs element");
    Vector lv(v.field(), n);
    Matrix lx(x.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        if (weights[i] < 0) return std::nullopt;
        if (weights[i] == 0) lv[i] = v[i];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (x(i, j).is_zero()) continue;
            const int w = weights[i] - weights[j];
            if (w < 0) return std::nullopt;
            if (w == 0) lx(i, j) = x(i, j);
        }
    return std::make_pair(std::move(lv), std::move(lx));
}

std::uint64_t gaussian_binomial(unsigned n, unsigned d, std::uint32_t p) {
    if (d > n) return 0;
    std::uint64_t num = 1, den = 1;
    auto ppow = [p](unsigned e) {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < e; ++i) r *= p;
        return r;
    };
    for (unsigned i = 0; i < d; ++i) {
        num *= ppow(n - i) - 1;
        den *= ppow(i + 1) - 1;
    }
    return num / den;
}

void enumerate_subspaces(unsigned n, unsigned d, std::uint32_t p, const std::function<void(const Matrix&)>& visit) {
    if (n > 5 || !(p == 2 || p == 3 || p == 5))
        throw BudgetExceeded("subspace enumeration limited to n <= 5 and p in {2,3,5}");
    if (d > n) return;
    const Field f = Field::prime(p);
    std::vector<unsigned> pivots(d);
    for (unsigned i = 0; i < d; ++i) pivots[i] = i;
    for (;;) {
        std::vector<bool> is_pivot(n, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::pair<unsigned, unsigned>> free;
        for (unsigned r = 0; r < d; ++r)
            for (unsigned c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free.emplace_back(r, c);
        std::vector<std::uint32_t> digits(free.size(), 0);
        for (;;) {
            Matrix basis(f, d, n);
            for (unsigned r = 0; r < d; ++r) basis(r, pivots[r]) = Scalar::one(f);
            for (std::size_t k = 0; k < free.size(); ++k)
                basis(free[k].first, free[k].second) = Scalar(f, static_cast<long>(digits[k]));
            visit(basis);
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
            if (k == digits.size()) break;
        }
        // Next pivot combination in lexicographic order.
        int i = static_cast<int>(d) - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - d + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

}  // namespace nilcone
