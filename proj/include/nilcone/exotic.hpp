#pragma once

#include <utility>
#include <vector>

#include "nilcone/enhanced.hpp"

namespace nilcone {

/// A point (v, x) of the exotic module k^{2n} ⊕ ∧²k^{2n}, with ∧² realised as
/// the Ω-self-adjoint matrices [[A, B], [C, ᵀA]] (B, C skew).
struct ExoticElement {
    Vector v;
    Matrix x;

    ExoticElement() = default;
    /// Throws CharTwo over F_2, DimensionMismatch on odd or inconsistent
    /// sizes, WedgeViolation when x is not of wedge form.
    ExoticElement(Vector v, Matrix x);
    static ExoticElement zero(const Field& f, std::size_t n);

    /// Rank of the symplectic group, i.e. half the ambient dimension.
    std::size_t n() const noexcept { return v.dim() / 2; }
    const Field& field() const noexcept { return x.field(); }

    friend bool operator==(const ExoticElement&, const ExoticElement&) = default;
};

bool is_wedge_element(const Matrix& x);
bool is_sp_element(const Matrix& a);

/// dim sp_2n = 2n² + n
long sp_dim(long n);

/// (v, x) ↦ (v ⊕ 0, diag(x, ᵀx))
ExoticElement embed_phi(const EnhancedElement& e);
/// Forget the symplectic structure: the same data as an enhanced GL_2n element.
EnhancedElement embed_psi(const ExoticElement& e);

/// 2 · orbit_dim(b)
long exotic_orbit_dim(const Bipartition& b);
/// dim sp_2n − dim of the infinitesimal stabilizer in sp_2n.
long exotic_orbit_dim_of(const ExoticElement& e);

/// Halves the GL_2n label of embed_psi(e). Throws NotNilpotent, NotDoubled.
Bipartition identify_exotic_orbit(const ExoticElement& e);

/// (0, diag(a_1 I_{λ_1}, …, a_l I_{λ_l}, a_1 I_{λ_1}, …, a_l I_{λ_l})).
/// Throws RepeatedEigenvalue, SizeMismatch when the lengths differ.
ExoticElement build_semisimple_exotic(const Partition& lambda, const std::vector<Scalar>& eigenvalues);

/// (v, x) = (0, x_s) + (v, x_n) inside ∧²; both parts stay of wedge form.
std::pair<ExoticElement, ExoticElement> exotic_jkv_decompose(const ExoticElement& e);

}  // namespace nilcone
