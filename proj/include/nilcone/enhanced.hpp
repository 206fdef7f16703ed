#pragma once

#include <utility>
#include <vector>

#include "nilcone/linalg.hpp"
#include "nilcone/matrix.hpp"
#include "nilcone/partitions.hpp"

namespace nilcone {

/// A point (v, x) of the enhanced module k^n ⊕ gl_n.
struct EnhancedElement {
    Vector v;
    Matrix x;

    EnhancedElement() = default;
    /// Throws DimensionMismatch / FieldMismatch on inconsistent data.
    EnhancedElement(Vector v, Matrix x);
    static EnhancedElement zero(const Field& f, std::size_t n);

    std::size_t n() const noexcept { return v.dim(); }
    const Field& field() const noexcept { return x.field(); }

    friend bool operator==(const EnhancedElement&, const EnhancedElement&) = default;
};

/// Which vector accompanies the Jordan-form x in a normal-form representative.
enum class RepresentativeConvention {
    /// v = Σ_i v_{i, μ_i}
    mu_endpoints,
    /// v = Σ_i Σ_{j ≤ μ_i} v_{i, j}
    summed,
};

/// dim O_(μ;ν) = n² − Σ_j ((μ+ν)^tr_j)² + |μ|
long orbit_dim(const Bipartition& b);
/// Codimension of the orbit in k^n ⊕ gl_n, i.e. n + n² − orbit_dim(b).
long orbit_codim(const Bipartition& b);

/// x in Jordan form with blocks μ_i + ν_i (basis v_{i,1..λ_i}, x v_{i,j} = v_{i,j-1}).
EnhancedElement build_representative(const Bipartition& b, const Field& f = Field::rationals(),
                                     RepresentativeConvention conv = RepresentativeConvention::mu_endpoints);

/// The bipartition of a nilpotent pair; throws NotNilpotent otherwise.
Bipartition identify_orbit(const EnhancedElement& e);

/// (v, x) = (0, x_s) + (v, x_n) from the Jordan–Chevalley split of x.
/// Throws NonSplitSpectrum.
std::pair<EnhancedElement, EnhancedElement> jkv_decompose(const EnhancedElement& e);

/// Levi block sizes with one nilpotent orbit label per block. The blocks are
/// listed in the order of the upper block-triangular parabolic; for a rigid
/// datum the blocks carrying the vector form the marked prefix.
struct InductionDatum {
    Composition composition;
    std::vector<Bipartition> per_block;

    InductionDatum() = default;
    /// Throws SizeMismatch when |per_block[i]| != composition.parts[i].
    InductionDatum(Composition c, std::vector<Bipartition> blocks);
    /// Blocks (1^{n_i}; ∅) on the marked prefix and (∅; 1^{n_i}) after it.
    static InductionDatum rigid(const Composition& c);
    /// Composition read off the block sizes (marked prefix = 0).
    static InductionDatum from_blocks(std::vector<Bipartition> blocks);

    int n() const noexcept { return composition.size(); }
    /// Every block rigid, vector-carrying blocks exactly the marked prefix.
    bool is_rigid() const;
};

/// μ_j = #{i ≤ k : n_i ≥ j}, ν_j = #{i > k : n_i ≥ j}. Throws NotRigidDatum.
Bipartition induce_from_vector(const InductionDatum& d);
/// (Σ_i μ^(i); Σ_i ν^(i))
Bipartition induce(const InductionDatum& d);
/// A representative of the induced orbit built by the column-linking rule:
/// each block is a column of basis vectors and x sends the vector in row i of
/// a column to the vector in row i of the nearest earlier column that has a
/// row i (or to 0). Non-rigid data are first refined into their rigid
/// columns with all vector-carrying columns moved to the front.
EnhancedElement induction_representative(const InductionDatum& d, const Field& f = Field::rationals());
/// Column-linking representative of a rigid composition.
EnhancedElement column_rule_representative(const Composition& c, const Field& f = Field::rationals());

/// (1^n; ∅) or (∅; 1^n)
bool is_rigid(const Bipartition& b);
/// Columns of μ in ascending order (marked), then the columns of ν.
InductionDatum rigid_datum(const Bipartition& b);

/// O_a ⊆ closure(O_b), via the combinatorial order.
bool closure_leq(const Bipartition& a, const Bipartition& b);

}  // namespace nilcone
