#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "nilcone/closure_oracles.hpp"
#include "nilcone/enhanced.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/linalg.hpp"
#include "oracles.hpp"

using namespace nilcone;

namespace {

const Field Q = Field::rationals();
const Bipartition kThirteen{{2, 2, 2, 1}, {2, 2, 1, 1}};
const Bipartition kColumnExample{{2, 2, 1, 1}, {2, 2, 2, 1, 1}};

InductionDatum thirteen_datum() {
    return InductionDatum(Composition({3, 4, 4, 2}, 0),
                          {{{1, 1, 1}, {}}, {{1, 1, 1, 1}, {}}, {{}, {1, 1, 1, 1}}, {{}, {1, 1}}});
}

// Every ordered sequence of labels, one per part of c.
void for_each_datum(const std::vector<int>& parts, const std::function<void(const InductionDatum&)>& visit) {
    std::vector<Bipartition> chosen;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == parts.size()) {
            visit(InductionDatum(Composition(parts, 0), chosen));
            return;
        }
        for (const auto& b : enumerate_bipartitions(parts[i])) {
            chosen.push_back(b);
            go(i + 1);
            chosen.pop_back();
        }
    };
    go(0);
}

void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    std::function<void(int)> go = [&](int rest) {
        if (rest == 0) {
            visit(cur);
            return;
        }
        for (int part = 1; part <= rest; ++part) {
            cur.push_back(part);
            go(rest - part);
            cur.pop_back();
        }
    };
    go(n);
}

}  // namespace

TEST_SUITE("enhanced") {

TEST_CASE("element construction") {
    CHECK_THROWS_AS(EnhancedElement(Vector(Q, 2), Matrix(Q, 3, 3)), DimensionMismatch);
    CHECK_THROWS_AS(EnhancedElement(Vector(Q, 2), Matrix(Q, 2, 3)), DimensionMismatch);
    CHECK_THROWS_AS(EnhancedElement(Vector(Field::prime(3), 2), Matrix(Q, 2, 2)), FieldMismatch);
}

TEST_CASE("orbit dimension formula") {
    CHECK(orbit_dim({{}, {1, 1, 1}}) == 0);
    CHECK(orbit_dim({{}, {2}}) == 2);
    CHECK(orbit_dim(kThirteen) == 131);
    CHECK(orbit_codim(kThirteen) == 13 + 169 - 131);
}

TEST_CASE("orbit dimension formula matches the stabilizer oracle") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            CAPTURE(b.to_string());
            const auto e = build_representative(b, Q);
            CHECK(orbit_dim(b) == static_cast<long>(n * n) - static_cast<long>(stabilizer_dim_gl(e.v, e.x)));
        }
}

TEST_CASE("representatives") {
    const auto one = build_representative({{1}, {}}, Q);
    CHECK(one.v == Vector::from_ints(Q, {1}));
    CHECK(one.x.is_zero());

    const auto zero = build_representative({{}, {1, 1, 1}}, Q);
    CHECK(zero.v.is_zero());
    CHECK(zero.x.is_zero());

    // The worked 13-dimensional element: v is the sum of the first μ_i basis
    // vectors of each block.
    const auto e = build_representative(kThirteen, Q, RepresentativeConvention::summed);
    const std::vector<std::size_t> ones{0, 1, 4, 5, 8, 9, 11};
    for (std::size_t i = 0; i < 13; ++i) CHECK(e.v[i].is_one() == (std::find(ones.begin(), ones.end(), i) != ones.end()));
    CHECK(identify_orbit(e) == kThirteen);
}

TEST_CASE("identification round-trips") {
    CHECK(identify_orbit(EnhancedElement::zero(Q, 3)) == Bipartition{{}, {1, 1, 1}});
    for (int n = 0; n <= 6; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            CHECK(identify_orbit(build_representative(b, Q)) == b);
            CHECK(identify_orbit(build_representative(b, Q, RepresentativeConvention::summed)) == b);
            CHECK(identify_orbit(build_representative(b, Field::prime(3))) == b);
        }
    CHECK_THROWS_AS(identify_orbit(EnhancedElement(Vector(Q, 2), Matrix::identity(Q, 2))), NotNilpotent);
}

TEST_CASE("identification is invariant under conjugation") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 4; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            const auto e = build_representative(b, Q);
            const Matrix g = oracle::random_invertible(rng, Q, static_cast<std::size_t>(n));
            const EnhancedElement moved(g * e.v, g * e.x * inverse(g));
            CHECK(identify_orbit(moved) == b);
        }
}

TEST_CASE("identification separates the brute-force orbits over small fields") {
    for (auto [n, p] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        CAPTURE(n);
        CAPTURE(p);
        const Field f = Field::prime(static_cast<std::uint32_t>(p));
        const auto orbits = oracle::nilcone_orbits(n, p);
        CHECK(orbits.size() == bipartition_count(n));
        std::set<Bipartition> labels;
        for (const auto& orbit : orbits) {
            const Bipartition label = identify_orbit(oracle::to_element(orbit.front(), f));
            labels.insert(label);
            for (const auto& pt : orbit) REQUIRE(identify_orbit(oracle::to_element(pt, f)) == label);
        }
        CHECK(labels.size() == orbits.size());
    }
}

TEST_CASE("jkv decomposition") {
    const auto nil = build_representative({{1}, {2}}, Q);
    auto [ss, np] = jkv_decompose(nil);
    CHECK(ss.v.is_zero());
    CHECK(ss.x.is_zero());
    CHECK(np == nil);

    std::vector<Scalar> d{Scalar(Q, 3), Scalar(Q, -1)};
    const EnhancedElement semi(Vector::from_ints(Q, {1, 2}), Matrix::diagonal(d));
    std::tie(ss, np) = jkv_decompose(semi);
    CHECK(ss.x == semi.x);
    CHECK(ss.v.is_zero());
    CHECK(np.v == semi.v);
    CHECK(np.x.is_zero());

    // [[a,1],[0,b]] with a ≠ b is semisimple.
    const EnhancedElement upper(Vector::from_ints(Q, {1, 1}), Matrix::from_ints(Q, {{1, 1}, {0, 2}}));
    std::tie(ss, np) = jkv_decompose(upper);
    CHECK(ss == EnhancedElement(Vector(Q, 2), upper.x));
    CHECK(np == EnhancedElement(upper.v, Matrix(Q, 2, 2)));
}

TEST_CASE("induction from the vector") {
    CHECK(induce_from_vector(InductionDatum::rigid(Composition({4, 2, 3, 5}, 2))) == kColumnExample);
    for (int n = 1; n <= 6; ++n) {
        CHECK(induce_from_vector(InductionDatum::rigid(Composition({n}, 1))) == Bipartition{Partition::column(n), {}});
        const Bipartition regular = induce_from_vector(InductionDatum::rigid(Composition(std::vector<int>(n, 1), 0)));
        CHECK(regular == Bipartition{{}, {n}});
        const auto e = build_representative(regular, Q);
        CHECK(static_cast<long>(stabilizer_dim_gl(e.v, e.x)) == n);
        CHECK(orbit_dim(regular) == n * n - n);
    }
    CHECK_THROWS_AS(induce_from_vector(thirteen_datum()), NotRigidDatum);
}

TEST_CASE("induction from arbitrary data") {
    CHECK(induce(thirteen_datum()) == kThirteen);
    for (const auto& b : enumerate_bipartitions(4)) CHECK(induce(InductionDatum::from_blocks({b})) == b);
    CHECK(induce(InductionDatum::from_blocks({{{1}, {}}, {{1}, {}}})) == Bipartition{{2}, {}});
    const auto e = induction_representative(InductionDatum::from_blocks({{{1}, {}}, {{1}, {}}}), Q);
    // The open orbit of the nilcone k² × N(gl_2), which has dimension 4.
    CHECK(4 - static_cast<long>(stabilizer_dim_gl(e.v, e.x)) == 4);
    CHECK(orbit_dim({{2}, {}}) == 4);
    CHECK_THROWS_AS(InductionDatum(Composition({2, 1}, 0), {{{1}, {}}, {{1}, {}}}), SizeMismatch);
    CHECK_THROWS_AS(InductionDatum(Composition({2}, 0), {{{1}, {}}, {{1}, {}}}), SizeMismatch);
}

TEST_CASE("column rule representative") {
    const auto e = column_rule_representative(Composition({4, 2, 3, 5}, 2), Q);
    CHECK(e.n() == 14);
    CHECK(identify_orbit(e) == kColumnExample);
    CHECK(restricted_jordan_type(e.x, e.v).first == Partition{2, 2, 1, 1});

    for (int n = 1; n <= 5; ++n) {
        const auto c = column_rule_representative(Composition({n}, 1), Q);
        CHECK(c.x.is_zero());
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) CHECK(c.v[i].is_one());
    }

    const auto t = induction_representative(thirteen_datum(), Q);
    CHECK(identify_orbit(t) == kThirteen);
}

TEST_CASE("column rule agrees with the combinatorial induction") {
    for (int n = 1; n <= 6; ++n)
        for_each_composition(n, [&](const std::vector<int>& parts) {
            for (int k = 0; k <= static_cast<int>(parts.size()); ++k) {
                const Composition c(parts, k);
                CHECK(identify_orbit(column_rule_representative(c, Q)) ==
                      induce_from_vector(InductionDatum::rigid(c)));
            }
        });
}

TEST_CASE("rigidity") {
    CHECK(is_rigid({{1, 1}, {}}));
    CHECK_FALSE(is_rigid({{}, {2}}));
    CHECK_FALSE(is_rigid({{1}, {1}}));
    CHECK(is_rigid({{}, {1, 1}}));
    for (int n = 1; n <= 8; ++n) {
        int rigid = 0;
        for (const auto& b : enumerate_bipartitions(n)) {
            if (is_rigid(b)) {
                ++rigid;
                continue;
            }
            CHECK(induce_from_vector(rigid_datum(b)) == b);
        }
        CHECK(rigid == 2);
    }
}

TEST_CASE("rigid data") {
    auto sorted_groups = [](const InductionDatum& d) {
        const auto& p = d.composition.parts;
        const auto k = static_cast<std::ptrdiff_t>(d.composition.marked);
        std::multiset<int> marked(p.begin(), p.begin() + k), rest(p.begin() + k, p.end());
        return std::pair{marked, rest};
    };
    const auto d = rigid_datum(kColumnExample);
    CHECK(d.composition.marked == 2);
    CHECK(sorted_groups(d) == std::pair{std::multiset<int>{4, 2}, std::multiset<int>{3, 5}});
    CHECK(d.composition.parts[0] <= d.composition.parts[1]);

    CHECK(rigid_datum({Partition::column(4), {}}).composition == Composition({4}, 1));
    CHECK(rigid_datum({{4}, {}}).composition == Composition({1, 1, 1, 1}, 4));
}

TEST_CASE("closure order examples against the flag oracle") {
    CHECK(closure_leq({{}, {1, 1}}, {{2}, {}}));
    const auto all = enumerate_bipartitions(2);
    for (const auto& a : all)
        for (const auto& b : all) {
            CAPTURE(a.to_string());
            CAPTURE(b.to_string());
            CHECK(closure_leq(a, b) == closure_oracle_flag(a, b, 2));
        }
}

TEST_CASE("flag witnesses") {
    for (std::uint32_t p : {2u, 3u})
        for (const auto& b : enumerate_bipartitions(3)) CHECK(closure_oracle_flag(b, b, p));
    CHECK(closure_oracle_flag({{}, {1, 1}}, {{1, 1}, {}}, 2));
    CHECK_FALSE(closure_oracle_flag({{2}, {}}, {{1, 1}, {}}, 2));
    CHECK(orbit_dim({{2}, {}}) == 4);
    CHECK(orbit_dim({{1, 1}, {}}) == 2);
    CHECK_THROWS_AS(flag_witness_exists(EnhancedElement::zero(Q, 6), Composition({6}, 0), 2), BudgetExceeded);
    CHECK_THROWS_AS(flag_witness_exists(EnhancedElement::zero(Q, 2), Composition({2}, 0), 7), BudgetExceeded);
}

TEST_CASE("sweep witnesses agree with the flag search") {
    for (auto [n, p] : {std::pair{2, 3u}, std::pair{3, 2u}}) {
        const auto all = enumerate_bipartitions(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                CAPTURE(a.to_string());
                CAPTURE(b.to_string());
                CHECK(closure_oracle_sweep(a, b, p) == closure_oracle_flag(a, b, p));
            }
    }
    CHECK_THROWS_AS(sweep_witness_exists(EnhancedElement::zero(Q, 4), Composition({4}, 0), 2), BudgetExceeded);
}

TEST_CASE("serial and parallel oracles agree") {
    for (int n = 1; n <= 3; ++n) {
        const auto all = enumerate_bipartitions(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                CHECK(closure_oracle_flag(a, b, 3, Execution::serial) == closure_oracle_flag(a, b, 3, Execution::parallel));
                CHECK(closure_oracle_sweep(a, b, 2, Execution::serial) ==
                      closure_oracle_sweep(a, b, 2, Execution::parallel));
            }
    }
    const GateReport s = closure_gate(3, 2, true, Execution::serial);
    const GateReport par = closure_gate(3, 2, true, Execution::parallel);
    CHECK(s.pairs == par.pairs);
    CHECK(s.mismatches.size() == par.mismatches.size());
}

TEST_CASE("closure gate at small size") {
    const GateReport r = closure_gate(3, 3, true);
    CHECK(r.pairs == 100);
    CHECK(r.swept);
    CHECK(r.ok());
}

TEST_CASE("alternative column ordering reverses both groups") {
    const Composition c = alternative_rigid_ordering(kColumnExample);
    CHECK(c.marked == 2);
    CHECK(c.parts == std::vector<int>{4, 2, 3, 5});
    CHECK(induce_from_vector(InductionDatum::rigid(c)) == kColumnExample);
}

TEST_CASE("induction preserves codimension and is transitive") {
    for (int n = 1; n <= 4; ++n)
        for_each_composition(n, [&](const std::vector<int>& parts) {
            for_each_datum(parts, [&](const InductionDatum& d) {
                const Bipartition total = induce(d);
                long codim = 0;
                for (const auto& b : d.per_block) codim += orbit_codim(b);
                CHECK(orbit_codim(total) == codim);
                // Coarsen the first two blocks, then induce again.
                if (d.per_block.size() >= 2) {
                    const Bipartition head = induce(InductionDatum::from_blocks({d.per_block[0], d.per_block[1]}));
                    std::vector<Bipartition> rest{head};
                    rest.insert(rest.end(), d.per_block.begin() + 2, d.per_block.end());
                    CHECK(induce(InductionDatum::from_blocks(rest)) == total);
                }
            });
        });
}

}  // TEST_SUITE
