#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "nilcone/matrix.hpp"
#include "nilcone/partitions.hpp"
#include "nilcone/polynomial.hpp"

namespace nilcone {

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);
/// Basis of {y : m y = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
/// Rank of the span of a family of vectors of a common dimension.
std::size_t span_dim(const Field& f, std::size_t dim, const std::vector<Vector>& vectors);
/// A maximal linearly independent subfamily, in input order.
std::vector<Vector> independent_subset(const Field& f, std::size_t dim, const std::vector<Vector>& vectors);
Scalar determinant(Matrix m);
/// Throws DivisionByZero when m is singular.
Matrix inverse(const Matrix& m);
/// Coordinates c with basis * c == w (basis has independent columns);
/// nullopt when w is outside the column span.
std::optional<Vector> coordinates(const Matrix& basis, const Vector& w);

bool is_nilpotent(const Matrix& x);
/// Jordan type of a nilpotent operator: λ^tr_i = rank(x^{i-1}) - rank(x^i).
/// Throws NotNilpotent.
Partition jordan_type_nilpotent(const Matrix& x);

/// Basis of the centralizer algebra {a : a x = x a}.
std::vector<Matrix> centralizer_basis(const Matrix& x);

/// (μ, ν): the Jordan types of x on the submodule E^x v generated by v under
/// the centralizer algebra of x, and on the quotient k^n / E^x v.
/// Throws NotNilpotent.
std::pair<Partition, Partition> restricted_jordan_type(const Matrix& x, const Vector& v);

/// dim {a ∈ gl_n : a v = 0, a x = x a}
std::size_t stabilizer_dim_gl(const Vector& v, const Matrix& x);
/// Basis of the same stabilizer, as matrices.
std::vector<Matrix> stabilizer_basis_gl(const Vector& v, const Matrix& x);

/// Ω = [[0, I_n], [-I_n, 0]]
Matrix symplectic_form(const Field& f, std::size_t n);
/// x = [[A, B], [C, ᵀA]] with ᵀB = -B and ᵀC = -C. Throws CharTwo over F_2.
bool is_wedge_matrix(const Matrix& x);
/// ᵀa Ω + Ω a = 0. Throws CharTwo over F_2.
bool is_sp_matrix(const Matrix& a);

/// dim {a ∈ sp_2n : a v = 0, a x = x a}. Throws WedgeViolation when x is
/// not a wedge matrix.
std::size_t stabilizer_dim_sp(const Vector& v, const Matrix& x);

/// det(tI - x) = t^n + c_1 t^{n-1} + ... + c_n
Polynomial char_polynomial(const Matrix& x);
/// (c_1, ..., c_n) of the characteristic polynomial.
std::vector<Scalar> char_poly(const Matrix& x);

/// x = semisimple + nilpotent, both polynomials in x.
struct JordanChevalley {
    Matrix semisimple;
    Matrix nilpotent;
    /// Distinct eigenvalues with algebraic multiplicities.
    std::vector<std::pair<Scalar, unsigned>> eigenvalues;
    /// idempotents[i] = projector onto the generalized eigenspace of eigenvalues[i].
    std::vector<Matrix> idempotents;
};
/// Throws NonSplitSpectrum (naming the root-free factor) when the
/// characteristic polynomial does not split over the base field.
JordanChevalley jordan_chevalley_split(const Matrix& x);

/// Acts by v_i -> t^{w_i} v_i and x_ij -> t^{w_i - w_j} x_ij and returns the
/// t -> 0 limit, or nullopt when some nonzero coordinate has negative weight.
std::optional<std::pair<Vector, Matrix>> limit_along_cocharacter(const std::vector<int>& weights, const Vector& v,
                                                                 const Matrix& x);

/// Gaussian binomial [n choose d]_p.
std::uint64_t gaussian_binomial(unsigned n, unsigned d, std::uint32_t p);

/// Calls visit once per d-dimensional subspace of F_p^n, passing its basis in
/// reduced row echelon form (d rows). Requires p ∈ {2,3,5} and n ≤ 5;
/// throws BudgetExceeded otherwise.
void enumerate_subspaces(unsigned n, unsigned d, std::uint32_t p, const std::function<void(const Matrix&)>& visit);

}  // namespace nilcone
