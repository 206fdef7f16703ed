#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilcone/enhanced.hpp"

namespace nilcone {

/// Serial kernels are the reference; parallel ones split the outermost
/// search level across OpenMP threads and combine results by disjunction.
enum class Execution { serial, parallel };

/// Is there a partial flag F_1 ⊂ … ⊂ F_r = F_p^n with dim F_i = n_1 + … + n_i,
/// x F_i ⊆ F_{i-1} and v ∈ F_k, for the composition (n_i) with marked prefix k?
/// Entries of e must be 0/1-reducible; e is reduced mod p entrywise.
/// Budget n ≤ 5, p ≤ 5.
bool flag_witness_exists(const EnhancedElement& e, const Composition& c, std::uint32_t p,
                         Execution exec = Execution::serial);

/// Is there g ∈ GL_n(F_p) with g v in the span of the first n_1 + … + n_k
/// coordinates and g x g⁻¹ strictly block upper triangular for the blocks of c?
/// Budget n ≤ 3, p ≤ 5.
bool sweep_witness_exists(const EnhancedElement& e, const Composition& c, std::uint32_t p,
                          Execution exec = Execution::serial);

/// Exhaustive flag search for the representative of `small` against the rigid datum of `big`.
bool closure_oracle_flag(const Bipartition& small, const Bipartition& big, std::uint32_t p,
                         Execution exec = Execution::serial);
/// Exhaustive GL_n(F_p) sweep for the same membership question.
bool closure_oracle_sweep(const Bipartition& small, const Bipartition& big, std::uint32_t p,
                          Execution exec = Execution::serial);

/// The rigid datum of b with both column groups in the opposite order.
Composition alternative_rigid_ordering(const Bipartition& b);

struct GateMismatch {
    Bipartition small, big;
    bool rule = false;
    bool flag = false;
    bool flag_alternative = false;
    /// Present only when the sweep ran.
    int sweep = -1;
};

struct GateReport {
    int n = 0;
    std::uint32_t p = 0;
    std::size_t pairs = 0;
    bool swept = false;
    std::vector<GateMismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares closure_leq with the flag oracle (and the alternative column
/// ordering, and the sweep when with_sweep) on every ordered pair of Q_n.
GateReport closure_gate(int n, std::uint32_t p, bool with_sweep, Execution exec = Execution::serial);

}  // namespace nilcone
