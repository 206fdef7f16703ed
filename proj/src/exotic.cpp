#include "nilcone/exotic.hpp"

#include "nilcone/errors.hpp"

namespace nilcone {

ExoticElement::ExoticElement(Vector v_, Matrix x_) : v(std::move(v_)), x(std::move(x_)) {
    if (x.field().is_prime() && x.field().characteristic() == 2) throw CharTwo("the exotic module needs char ≠ 2");
    if (!x.is_square() || x.rows() != v.dim() || v.dim() % 2 != 0)
        throw DimensionMismatch("exotic element needs v ∈ k^{2n}, x ∈ gl_{2n}");
    if (!(x.field() == v.field())) throw FieldMismatch("exotic element v and x over different fields");
    if (!is_wedge_matrix(x)) throw WedgeViolation("x is not of the form [[A, B], [C, ᵀA]] with B, C skew");
}

ExoticElement ExoticElement::zero(const Field& f, std::size_t n) { return {Vector(f, 2 * n), Matrix(f, 2 * n, 2 * n)}; }

bool is_wedge_element(const Matrix& x) { return is_wedge_matrix(x); }

bool is_sp_element(const Matrix& a) { return is_sp_matrix(a); }

long sp_dim(long n) { return 2 * n * n + n; }

ExoticElement embed_phi(const EnhancedElement& e) {
    const std::size_t n = e.n();
    Vector v(e.field(), 2 * n);
    for (std::size_t i = 0; i < n; ++i) v[i] = e.v[i];
    return {std::move(v), Matrix::block_diagonal(e.x, e.x.transpose())};
}

EnhancedElement embed_psi(const ExoticElement& e) { return {e.v, e.x}; }

long exotic_orbit_dim(const Bipartition& b) { return 2 * orbit_dim(b); }

long exotic_orbit_dim_of(const ExoticElement& e) {
    return sp_dim(static_cast<long>(e.n())) - static_cast<long>(stabilizer_dim_sp(e.v, e.x));
}

Bipartition identify_exotic_orbit(const ExoticElement& e) { return halve_bipartition(identify_orbit(embed_psi(e))); }

ExoticElement build_semisimple_exotic(const Partition& lambda, const std::vector<Scalar>& eigenvalues) {
    if (eigenvalues.size() != lambda.length())
        throw SizeMismatch("need one eigenvalue per part of " + lambda.to_string());
    if (eigenvalues.empty()) throw SizeMismatch("empty partition has no field to build over");
    const Field f = eigenvalues.front().field();
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j])
                throw RepeatedEigenvalue("eigenvalue " + eigenvalues[i].to_string() + " repeated");
    std::vector<Scalar> diag;
    for (int copy = 0; copy < 2; ++copy)
        for (std::size_t i = 0; i < lambda.length(); ++i) diag.insert(diag.end(), static_cast<std::size_t>(lambda[i]), eigenvalues[i]);
    return {Vector(f, diag.size()), Matrix::diagonal(diag)};
}

std::pair<ExoticElement, ExoticElement> exotic_jkv_decompose(const ExoticElement& e) {
    const JordanChevalley jc = jordan_chevalley_split(e.x);
    return {ExoticElement(Vector(e.field(), e.v.dim()), jc.semisimple), ExoticElement(e.v, jc.nilpotent)};
}

}  // namespace nilcone
