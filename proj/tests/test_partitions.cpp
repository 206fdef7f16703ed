#include <doctest.h>

#include <set>

#include "nilcone/enhanced.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/partitions.hpp"
#include "oracles.hpp"

using namespace nilcone;

TEST_SUITE("partitions") {

TEST_CASE("partition construction") {
    CHECK_THROWS(Partition(std::vector<int>{1, 2}));
    CHECK_THROWS(Partition(std::vector<int>{2, 0}));
    CHECK(Partition::from_unsorted({1, 0, 3, 2}) == Partition{3, 2, 1});
    CHECK(Partition::column(3) == Partition{1, 1, 1});
    CHECK(Partition::row(3) == Partition{3});
}

TEST_CASE("transpose") {
    CHECK(Partition{4, 4, 3, 2}.transpose() == Partition{4, 4, 3, 2});
    CHECK(Partition::row(5).transpose() == Partition::column(5));
    CHECK(Partition{}.transpose() == Partition{});
    for (int n = 0; n <= 30; ++n)
        for (const auto& p : partitions_of(n)) REQUIRE(p.transpose().transpose() == p);
}

TEST_CASE("add") {
    CHECK(add({2, 1}, {1, 1}) == Partition{3, 2});
    CHECK(add({4, 2}, {}) == Partition{4, 2});
    // Columns of (2,2,1) reassemble it.
    CHECK(add(add({1, 1, 1}, {1, 1}), {}) == Partition{2, 2, 1});
    const auto small = partitions_of(4);
    for (const auto& a : small)
        for (const auto& b : small) {
            CHECK(add(a, b) == add(b, a));
            CHECK(add(a, b).size() == a.size() + b.size());
            for (const auto& c : partitions_of(2)) CHECK(add(add(a, b), c) == add(a, add(b, c)));
        }
}

TEST_CASE("doubling") {
    CHECK(double_bipartition({{2, 1}, {1}}) == Bipartition{{2, 2, 1, 1}, {1, 1}});
    CHECK(double_bipartition({{}, {}}) == Bipartition{});
    CHECK(double_bipartition({{}, {2}}) == Bipartition{{}, {2, 2}});
    for (int n = 0; n <= 6; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            const auto d = double_bipartition(b);
            CHECK(d.n() == 2 * b.n());
            CHECK(is_doubled(d));
            CHECK(halve_bipartition(d) == b);
        }
    CHECK_FALSE(is_doubled({{2, 1}, {}}));
}

TEST_CASE("bipartition enumeration") {
    CHECK(enumerate_bipartitions(1).size() == 2);
    CHECK(enumerate_bipartitions(2).size() == 5);
    CHECK(enumerate_bipartitions(4).size() == 20);
    CHECK_THROWS_AS(enumerate_bipartitions(31), BudgetExceeded);

    for (int n = 0; n <= 12; ++n) {
        std::size_t expected = 0;
        for (int k = 0; k <= n; ++k) expected += oracle::partition_number(k) * oracle::partition_number(n - k);
        const auto all = enumerate_bipartitions(n);
        CHECK(all.size() == expected);
        CHECK(bipartition_count(n) == expected);
        CHECK(partition_count(n) == oracle::partition_number(n));
        std::set<Bipartition> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
        // Listed in decreasing total order.
        for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] > all[i]);
        for (const auto& b : all) CHECK(b.n() == n);
    }
}

TEST_CASE("total order key") {
    const Bipartition a{{1}, {1}}, b{{2}, {}}, c{{}, {2}};
    CHECK(b > a);
    CHECK(a > c);
    CHECK(Bipartition{{1, 1}, {}} < b);
}

TEST_CASE("closure order examples") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            CHECK(ah_closure_leq({{}, Partition::column(n)}, b));
            CHECK(ah_closure_leq(b, b));
        }
    CHECK(ah_closure_leq({{1}, {1}}, {{2}, {}}));
    CHECK_FALSE(ah_closure_leq({{2}, {}}, {{1}, {1}}));
    CHECK_THROWS_AS(ah_closure_leq({{1}, {}}, {{2}, {}}), SizeMismatch);
}

TEST_CASE("closure order is a partial order") {
    for (int n = 1; n <= 6; ++n) {
        const auto all = enumerate_bipartitions(n);
        const std::size_t m = all.size();
        std::vector<std::vector<char>> leq(m, std::vector<char>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) leq[i][j] = ah_closure_leq(all[i], all[j]);
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(leq[i][i]);
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j && leq[i][j]) CHECK_FALSE(leq[j][i]);
                if (leq[i][j]) CHECK(orbit_dim(all[i]) <= orbit_dim(all[j]));
                for (std::size_t k = 0; k < m; ++k)
                    if (leq[i][j] && leq[j][k]) CHECK(leq[i][k]);
            }
        }
    }
}

TEST_CASE("doubling embeds the closure order") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = enumerate_bipartitions(n);
        for (const auto& a : all)
            for (const auto& b : all)
                CHECK(ah_closure_leq(a, b) == ah_closure_leq(double_bipartition(a), double_bipartition(b)));
    }
}

TEST_CASE("dominance") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(dominance_leq(Partition::column(n), Partition::row(n)));
        for (const auto& p : partitions_of(n)) CHECK(dominance_leq(p, p));
    }
    CHECK(dominance_leq({2, 2}, {3, 1}));
    CHECK_FALSE(dominance_leq({3, 1}, {2, 2}));
    CHECK_THROWS_AS(dominance_leq({2}, {1}), SizeMismatch);
}

TEST_CASE("nilpotent projection is monotone for dominance") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = enumerate_bipartitions(n);
        for (const auto& a : all)
            for (const auto& b : all)
                if (ah_closure_leq(a, b)) CHECK(dominance_leq(a.jordan_type(), b.jordan_type()));
    }
}

TEST_CASE("multiplicity") {
    CHECK(Partition{3, 2, 2, 1}.multiplicity(2) == 2);
    CHECK(Partition{1, 1, 1}.multiplicity(1) == 3);
    CHECK(Partition{3, 1}.multiplicity(7) == 0);
}

TEST_CASE("text syntax") {
    CHECK(parse_partition("2^3,1") == Partition{2, 2, 2, 1});
    CHECK(parse_partition("2,2,2,1") == Partition{2, 2, 2, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_bipartition("(2^3,1;2^2,1^2)") == Bipartition{{2, 2, 2, 1}, {2, 2, 1, 1}});
    CHECK(parse_bipartition(";1^3") == Bipartition{{}, {1, 1, 1}});
    CHECK(Bipartition{{2, 2, 2, 1}, {2, 2, 1, 1}}.to_string() == "(2^3,1;2^2,1^2)");
    CHECK(Bipartition{{2, 2, 2, 1}, {2, 2, 1, 1}}.to_string(TextStyle::expanded) == "(2,2,2,1;2,2,1,1)");
    const auto blocks = parse_bipartition_list("1^3;|1^4;|;1^4|;1^2");
    REQUIRE(blocks.size() == 4);
    CHECK(blocks[2] == Bipartition{{}, {1, 1, 1, 1}});
    CHECK(parse_composition("4,2,3,5", 2) == Composition({4, 2, 3, 5}, 2));
    CHECK(parse_partition("1,2^2") == Partition{2, 2, 1});
    CHECK_THROWS_AS(parse_partition("0"), ParseError);
    CHECK_THROWS_AS(parse_partition("a"), ParseError);
    CHECK_THROWS_AS(parse_bipartition("1,1"), ParseError);
    CHECK_THROWS(Composition({1, 0}, 0));
    CHECK_THROWS(Composition({1, 2}, 3));

    for (int n = 0; n <= 6; ++n)
        for (const auto& b : enumerate_bipartitions(n)) {
            CHECK(parse_bipartition(b.to_string()) == b);
            CHECK(parse_bipartition(b.to_string(TextStyle::expanded)) == b);
        }
}

}  // TEST_SUITE
