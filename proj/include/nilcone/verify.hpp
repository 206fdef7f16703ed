#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilcone/closure_oracles.hpp"
#include "nilcone/sheets.hpp"

namespace nilcone {

struct CheckGroup {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    double elapsed_ms = 0;
    /// The first few failing cases, for the report.
    std::vector<std::string> examples;

    void record(bool pass, const std::string& detail = {});
};

struct VerifyReport {
    VerifyReport() = default;
    VerifyReport(std::string suite_, int n_, std::uint32_t p_ = 0, std::uint64_t seed_ = 0)
        : suite(std::move(suite_)), n(n_), p(p_), seed(seed_) {}

    std::string suite;
    int n = 0;
    std::uint32_t p = 0;
    std::uint64_t seed = 0;
    std::vector<CheckGroup> groups;
    double elapsed_ms = 0;

    std::size_t checks() const;
    std::size_t failures() const;
    bool ok() const { return failures() == 0; }
    std::string to_json(int indent = 2) const;
};

/// The element v = (1, 1), x = [[a, 1], [0, b]] with two competing decompositions.
EnhancedElement jkv_example_element(long a, long b);

/// The three axioms of a decomposition (v, x) = (0, s) + (v, x − s).
struct JkvAxioms {
    /// (0, s) has a closed orbit: every block of its class is a zero orbit.
    bool semisimple = false;
    /// The cocharacter t ↦ diag(t^w) lies in G^s and sends (v, x − s) to 0.
    bool nilpotent = false;
    /// Every element of the Lie stabilizer of (v, x) commutes with s.
    bool stabilizer = false;
    bool all() const { return semisimple && nilpotent && stabilizer; }
};
JkvAxioms check_jkv_axioms(const EnhancedElement& e, const Matrix& s, const std::vector<int>& weights);

/// Stabilizer-oracle dimensions of every orbit representative against the
/// formulas: enhanced, exotic (×2) and GL_2n (×4). Budget n ≤ 5.
VerifyReport verify_doubling(int n);
/// closure_gate at (n, p); the sweep runs when n ≤ 3. Budget n ≤ 4.
VerifyReport verify_closure(int n, std::uint32_t p, Execution exec = Execution::serial);
/// Codimension preservation, transitivity, representatives and rigidity for
/// every datum of size ≤ n. Budget n ≤ 8.
VerifyReport verify_induction(int n);
/// Class counts, dimensions, representatives, closure order properties and
/// sheet maximality. Budget n ≤ 6.
VerifyReport verify_classes(int n);
/// Invariant compatibility, nilcone detection and conjugation invariance on
/// seeded random elements. Budget n ≤ 6.
VerifyReport verify_quotient(int n, std::uint64_t seed);
/// Both decompositions of that element satisfy the axioms.
VerifyReport verify_jkv();

}  // namespace nilcone
