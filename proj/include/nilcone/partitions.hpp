#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nilcone {

/// Output style for partition text: "2^3,1" (compact) or "2,2,2,1" (expanded).
enum class TextStyle { compact, expanded };

/// Weakly decreasing sequence of positive integers; the empty partition is
/// the partition of 0. Trailing zeros are never stored.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    /// Sorts decreasingly and drops zero parts; negative parts are rejected.
    static Partition from_unsorted(std::vector<int> parts);
    /// (1^n)
    static Partition column(int n);
    /// (n)
    static Partition row(int n);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    /// |λ|
    int size() const noexcept;
    /// λ_i with 0-based index; 0 past the end.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    Partition transpose() const;
    /// Number of parts equal to i.
    int multiplicity(int i) const;
    /// Σ λ_i^2
    long sum_of_squares() const;

    std::string to_string(TextStyle style = TextStyle::compact) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Part-wise sum after padding with zeros.
Partition add(const Partition& a, const Partition& b);
/// Classical dominance order; throws SizeMismatch when |a| != |b|.
bool dominance_leq(const Partition& a, const Partition& b);
/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Parses "2^3,1" / "2,2,2,1" / "" (empty partition); parts may come in any
/// order and are sorted. Throws ParseError.
Partition parse_partition(std::string_view text);

/// A pair (μ; ν) of partitions. The library-wide total order on bipartitions
/// of a fixed n compares the key (|μ|, μ, ν) lexicographically.
struct Bipartition {
    Partition mu;
    Partition nu;

    int n() const noexcept { return mu.size() + nu.size(); }
    /// μ + ν, the Jordan type of x on any representative.
    Partition jordan_type() const { return add(mu, nu); }

    std::string to_string(TextStyle style = TextStyle::compact) const;

    friend std::strong_ordering operator<=>(const Bipartition& a, const Bipartition& b);
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// (μ∪μ; ν∪ν)
Bipartition double_bipartition(const Bipartition& b);
/// The halved label if every part of μ and of ν occurs an even number of times.
bool is_doubled(const Bipartition& b);
Bipartition halve_bipartition(const Bipartition& b);

/// Every bipartition of n, listed in decreasing total order (|μ| descending,
/// then μ and ν in decreasing lexicographic order).
std::vector<Bipartition> enumerate_bipartitions(int n, int budget = 30);

/// Closure order on orbit labels: for all k ≥ 1
///   Σ_{i<k}(μ_i+ν_i) + μ_k  ≤  Σ_{i<k}(μ'_i+ν'_i) + μ'_k   and
///   Σ_{i≤k}(μ_i+ν_i)        ≤  Σ_{i≤k}(μ'_i+ν'_i).
/// Throws SizeMismatch when the sizes differ.
bool ah_closure_leq(const Bipartition& a, const Bipartition& b);

/// Parses "μ;ν" with optional surrounding parentheses, e.g. "(2^3,1;2^2,1^2)".
Bipartition parse_bipartition(std::string_view text);
/// Parses blocks separated by '|', e.g. "1^3;|1^4;|;1^4|;1^2".
std::vector<Bipartition> parse_bipartition_list(std::string_view text);

/// Integer sequence with a marked prefix of length k (the blocks carrying
/// the vector in an induction datum).
struct Composition {
    std::vector<int> parts;
    int marked = 0;

    Composition() = default;
    /// Throws std::invalid_argument on non-positive parts or k out of range.
    Composition(std::vector<int> parts, int marked);

    int size() const noexcept;
    std::string to_string() const;
    friend bool operator==(const Composition&, const Composition&) = default;
};

/// Parses "4,2,3,5" into a composition with the given marked prefix.
Composition parse_composition(std::string_view text, int marked = 0);

/// p(n)
std::uint64_t partition_count(int n);
/// |Q_n| = Σ_k p(k) p(n-k)
std::uint64_t bipartition_count(int n);

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const Bipartition& b);

}  // namespace nilcone
