#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nilcone/enhanced.hpp"
#include "nilcone/exotic.hpp"

namespace nilcone {

/// A Jordan class: the eigenvalue multiplicities λ of the semisimple part and
/// one nilpotent orbit label per eigenvalue. Blocks are stored in canonical
/// order: by size decreasing, equal sizes by the bipartition order decreasing.
struct ClassLabel {
    Partition lambda;
    std::vector<Bipartition> blocks;

    ClassLabel() = default;
    /// Throws std::invalid_argument unless already canonical and size-consistent.
    ClassLabel(Partition lambda, std::vector<Bipartition> blocks);
    /// Sorts the blocks into canonical order; λ is read off their sizes.
    static ClassLabel canonical(std::vector<Bipartition> blocks);
    /// The class of a nilpotent orbit: λ = (n), one block.
    static ClassLabel nilpotent(const Bipartition& b);

    int n() const noexcept { return lambda.size(); }
    /// "λ=[3,2,2] ; blocks=[(1^3;),(2;),(1;1)]"
    std::string to_string(TextStyle style = TextStyle::compact) const;
    /// The blocks as a (non-rigid) induction datum in canonical order.
    InductionDatum datum() const;

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

ClassLabel parse_class_label(std::string_view text);

/// Σ_{λ⊢n} Π_i C(|Q_{λ_i}| + d_i − 1, d_i) where d_i are the part multiplicities.
std::uint64_t class_count(int n);
/// Every canonical label once. Budget n ≤ 12.
std::vector<ClassLabel> enumerate_classes(int n);

/// Dimension of the orbit part: n² − Σλ_i² + Σ_i orbit_dim(blocks[i]).
long class_orbit_dim(const ClassLabel& c);
/// class_orbit_dim + ℓ(λ)
long class_dim_enhanced(const ClassLabel& c);
/// 2 · class_orbit_dim + ℓ(λ)
long class_dim_exotic(const ClassLabel& c);

/// The label together with the eigenvalue carried by each block.
struct ClassIdentification {
    ClassLabel label;
    std::vector<Scalar> eigenvalues;
};

/// Throws NonSplitSpectrum.
ClassIdentification identify_class_detailed(const EnhancedElement& e);
ClassLabel identify_class(const EnhancedElement& e);
/// Eigenvalue multiplicities of x are halved; blocks go through the GL
/// identifier and label halving. Throws NonSplitSpectrum, NotDoubled.
ClassIdentification identify_class_detailed(const ExoticElement& e);
ClassLabel identify_class(const ExoticElement& e);

/// (v, x) with x block diagonal, block i = a_i I + x_i for the normal-form
/// representative (v_i, x_i) of blocks[i]; a_i defaults to 0, 1, 2, ….
EnhancedElement class_representative(const ClassLabel& c, const Field& f = Field::rationals(),
                                     std::vector<Scalar> eigenvalues = {});

/// The unique nilpotent orbit in the class closure: (Σ μ^(i); Σ ν^(i)).
Bipartition class_nilcone_orbit(const ClassLabel& c);

/// c1 ⪯ c2 iff some surjection π from the parts of λ(c2) onto the parts of
/// λ(c1), with λ(c1)_j = Σ_{π(i)=j} λ(c2)_i, has blocks(c1)[j] ≤ Σ_{π(i)=j} blocks(c2)[i]
/// in the orbit closure order for every j. Throws SizeMismatch.
bool class_closure_leq(const ClassLabel& c1, const ClassLabel& c2);

}  // namespace nilcone
