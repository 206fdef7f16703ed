#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "nilcone/jordan_classes.hpp"

namespace nilcone {

enum class SheetChoice { vec, zero };

/// A sheet: a partition λ with each part carrying either the rigid orbit
/// (1^{λ_i}; ∅) (VEC) or (∅; 1^{λ_i}) (ZERO). Within equal parts VEC comes first.
struct SheetLabel {
    Partition lambda;
    std::vector<SheetChoice> choice;

    SheetLabel() = default;
    /// Throws std::invalid_argument on length mismatch or non-canonical order.
    SheetLabel(Partition lambda, std::vector<SheetChoice> choice);
    /// Sorts (part, choice) pairs into canonical order.
    static SheetLabel canonical(std::vector<std::pair<int, SheetChoice>> parts);

    int n() const noexcept { return lambda.size(); }
    /// The dense Jordan class of the sheet.
    ClassLabel dense_class() const;
    /// "λ=[3,2,2] ; choice=[VEC,VEC,ZERO]"
    std::string to_string() const;

    friend bool operator==(const SheetLabel&, const SheetLabel&) = default;
};

/// Σ_{λ⊢n} Π_i (d_i(λ) + 1)
std::uint64_t sheet_count(int n);
/// Budget n ≤ 20.
std::vector<SheetLabel> enumerate_sheets(int n);

/// (n² − Σλ_i²) + Σ_{VEC parts} λ_i + ℓ(λ)
long sheet_dim_enhanced(const SheetLabel& s);
long sheet_dim_exotic(const SheetLabel& s);
/// μ_j = #{VEC parts ≥ j}, ν_j = #{ZERO parts ≥ j}
Bipartition sheet_nilpotent_orbit(const SheetLabel& s);

/// Classes whose orbit part has dimension k. Budget as enumerate_classes.
std::vector<ClassLabel> rank_stratum(int n, long k);

struct MaximalityReport {
    int n = 0;
    std::size_t strata = 0;
    /// Maximal in their stratum but not a sheet label, or the converse.
    std::vector<ClassLabel> unexpected_maximal, sheets_not_maximal;
    bool ok() const noexcept { return unexpected_maximal.empty() && sheets_not_maximal.empty(); }
};
/// In every rank stratum, compare the ⪯-maximal classes with the dense
/// classes of sheets. Budget n ≤ 6.
MaximalityReport sheets_maximality(int n);
bool sheets_are_maximal_check(int n);

using InvariantVector = std::vector<Scalar>;

/// (c_1, …, c_n) of det(tI − x)
InvariantVector enhanced_invariants(const EnhancedElement& e);
/// The coefficients of p where det(tI − x) = p(t)². Throws NotPerfectSquare.
InvariantVector exotic_invariants(const ExoticElement& e);

using AnyElement = std::variant<EnhancedElement, ExoticElement>;
InvariantVector invariants(const AnyElement& e);
/// Throws ModuleMismatch across modules, FieldMismatch across fields.
bool same_fiber(const AnyElement& a, const AnyElement& b);

/// Every point of F_p^n ⊕ gl_n(F_p) grouped by invariant vector, then by
/// Jordan class where the spectrum splits.
struct FiberCensus {
    std::size_t points = 0;
    std::size_t non_split = 0;
    /// invariant vector text → (class label text → point count)
    std::map<std::string, std::map<std::string, std::size_t>> fibers;
};
/// Budget n ≤ 2, p ≤ 5.
FiberCensus fiber_census(int n, std::uint32_t p);

}  // namespace nilcone
