#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "rscells/perm.hpp"

using namespace rscells;

namespace {

// Independent inversion counter: adjacent-swap sort, counting swaps.
long long sort_swap_count(std::vector<int> v) {
    long long swaps = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                ++swaps;
                moved = true;
            }
    }
    return swaps;
}

// Independent pattern oracle: enumerate every m-subset of positions and
// compare relative orders directly.
bool pattern_oracle(const Permutation& w, const Permutation& p) {
    const int n = w.size(), m = p.size();
    if (m > n) return false;
    if (m == 0) return true;
    std::vector<int> idx(static_cast<std::size_t>(m));
    auto rec = [&](auto&& self, int slot, int from) -> bool {
        if (slot == m) {
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    if ((p(a + 1) < p(b + 1)) !=
                        (w(idx[static_cast<std::size_t>(a)]) < w(idx[static_cast<std::size_t>(b)])))
                        return false;
            return true;
        }
        for (int pos = from; pos <= n - (m - slot) + 1; ++pos) {
            idx[static_cast<std::size_t>(slot)] = pos;
            if (self(self, slot + 1, pos + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 1);
}

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    return Permutation(std::move(w));
}

} // namespace

TEST_CASE("length counts inversions") {
    CHECK(length(Permutation({4, 3, 2, 1, 6, 5, 7})) == 7);
    CHECK(length(Permutation::identity(5)) == 0);
    CHECK(length(Permutation::identity(0)) == 0);
    for (int n : {1, 4, 7}) CHECK(length(Permutation::longest(n)) == n * (n - 1) / 2);

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const Permutation w = random_permutation(1 + trial % 8, rng);
        CHECK(length(w) == sort_swap_count(w.word()));
    }
}

TEST_CASE("compose and inverse") {
    CHECK(compose(Permutation({4, 3, 2, 1}), Permutation({2, 1, 4, 3})) == Permutation({3, 4, 1, 2}));
    CHECK(inverse(Permutation({2, 4, 1, 3})) == Permutation({3, 1, 4, 2}));
    CHECK(inverse(Permutation::identity(6)) == Permutation::identity(6));
    CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = trial % 9;
        const Permutation w = random_permutation(n, rng);
        CHECK(compose(Permutation::identity(n), w) == w);
        CHECK(compose(w, inverse(w)) == Permutation::identity(n));
        CHECK(inverse(inverse(w)) == w);
    }
}

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
    CHECK(Permutation().size() == 0);
}

TEST_CASE("longest element of a Young subgroup") {
    CHECK(longest_element(Composition({4, 2, 1})) == Permutation({4, 3, 2, 1, 6, 5, 7}));
    CHECK(longest_element(Composition({2, 4, 1})) == Permutation({2, 1, 6, 5, 4, 3, 7}));
    CHECK(longest_element(Composition({1, 1, 1, 1})) == Permutation::identity(4));
    CHECK(longest_element(Composition{}) == Permutation());

    for (int n = 0; n <= 8; ++n)
        for (const Composition& c : compositions_of(n)) {
            const Permutation s = longest_element(c);
            CHECK(inverse(s) == s);
            long long expected = 0;
            for (int part : c.parts()) expected += choose2(part);
            CHECK(length(s) == expected);
        }
}

TEST_CASE("coset_max") {
    CHECK(coset_max(Composition({2, 2})) == Permutation({3, 4, 1, 2}));
    CHECK(coset_max(Composition({5})) == Permutation::identity(5));
    CHECK(coset_max(Composition({1, 1, 1, 1, 1})) == Permutation::longest(5));

    for (int n = 0; n <= 7; ++n)
        for (const Composition& c : compositions_of(n))
            CHECK(length(coset_max(c)) == choose2(n) - length(longest_element(c)));
}

TEST_CASE("left multiplication by the longest element flips length") {
    for (int n = 0; n <= 7; ++n) {
        const Permutation w0 = Permutation::longest(n);
        for (const Permutation& w : all_permutations(n))
            CHECK(length(compose(w0, w)) == choose2(n) - length(w));
    }
}

TEST_CASE("pattern containment") {
    const Permutation p4231({4, 2, 3, 1});
    const Permutation p3412({3, 4, 1, 2});
    CHECK(contains_pattern(Permutation({6, 3, 2, 5, 4, 1}), p4231));
    CHECK_FALSE(contains_pattern(Permutation({4, 3, 2, 1, 6, 5, 7}), p4231));
    CHECK_FALSE(contains_pattern(Permutation({4, 3, 2, 1, 6, 5, 7}), p3412));
    CHECK(contains_pattern(p3412, p3412));
    CHECK_FALSE(contains_pattern(Permutation({1, 2, 3}), p4231));

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 8;
        const Permutation w = random_permutation(n, rng);
        const Permutation p = random_permutation(1 + trial % std::min(n, 4), rng);
        CHECK(contains_pattern(w, p) == pattern_oracle(w, p));
    }
}

TEST_CASE("is_young_longest") {
    REQUIRE(is_young_longest(Permutation({2, 1, 6, 5, 4, 3, 7})).has_value());
    CHECK(*is_young_longest(Permutation({2, 1, 6, 5, 4, 3, 7})) == Composition({2, 4, 1}));
    REQUIRE(is_young_longest(Permutation::identity(5)).has_value());
    CHECK(*is_young_longest(Permutation::identity(5)) == Composition({1, 1, 1, 1, 1}));
    CHECK_FALSE(is_young_longest(Permutation({6, 3, 2, 5, 4, 1})).has_value());
    CHECK(*is_young_longest(Permutation()) == Composition{});

    // Exact fiber: recogniser returns c iff input is longest_element(c).
    for (int n = 0; n <= 6; ++n) {
        std::set<Permutation> longest_set;
        for (const Composition& c : compositions_of(n)) {
            const Permutation s = longest_element(c);
            longest_set.insert(s);
            REQUIRE(is_young_longest(s).has_value());
            CHECK(*is_young_longest(s) == c);
        }
        for (const Permutation& w : all_permutations(n))
            CHECK(is_young_longest(w).has_value() == (longest_set.count(w) > 0));
    }
}

TEST_CASE("pattern avoidance characterises Young-subgroup longest elements") {
    const Permutation p4231({4, 2, 3, 1});
    const Permutation p3412({3, 4, 1, 2});
    for (int n = 1; n <= 6; ++n)
        for (const Permutation& w : all_permutations(n)) {
            if (w != inverse(w)) continue;
            const bool avoids = !contains_pattern(w, p4231) && !contains_pattern(w, p3412);
            CHECK(avoids == is_young_longest(w).has_value());
        }
}

TEST_CASE("subset <-> composition bijection") {
    CHECK(subset_to_composition(7, {4, 6}) == Composition({4, 2, 1}));
    CHECK(subset_to_composition(6, {}) == Composition({6}));
    CHECK(subset_to_composition(4, {1, 2, 3}) == Composition({1, 1, 1, 1}));
    CHECK_THROWS_AS(subset_to_composition(4, {4}), std::invalid_argument);
    CHECK_THROWS_AS(subset_to_composition(4, {2, 2}), std::invalid_argument);

    for (int n = 1; n <= 10; ++n) {
        std::set<Composition> seen;
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> absent;
            for (int i = 1; i <= n - 1; ++i)
                if (mask & (1u << (i - 1))) absent.push_back(i);
            const Composition c = subset_to_composition(n, absent);
            CHECK(c.sum() == n);
            CHECK(composition_to_subset(c) == absent);
            seen.insert(c);
        }
        CHECK(seen.size() == (1u << (n - 1)));
    }
}

TEST_CASE("generated parabolic subgroup equals the block subgroup") {
    // The composition read off a generator subset really does present
    // W_I as the corresponding Young subgroup.
    for (int n = 1; n <= 5; ++n)
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> absent;
            for (int i = 1; i <= n - 1; ++i)
                if (mask & (1u << (i - 1))) absent.push_back(i);
            const Composition c = subset_to_composition(n, absent);

            std::vector<Permutation> gens;
            for (int i = 1; i <= n - 1; ++i)
                if (std::find(absent.begin(), absent.end(), i) == absent.end()) {
                    std::vector<int> t = Permutation::identity(n).word();
                    std::swap(t[static_cast<std::size_t>(i) - 1], t[static_cast<std::size_t>(i)]);
                    gens.emplace_back(std::move(t));
                }
            std::set<Permutation> closure{Permutation::identity(n)};
            std::vector<Permutation> frontier(closure.begin(), closure.end());
            while (!frontier.empty()) {
                const Permutation w = frontier.back();
                frontier.pop_back();
                for (const Permutation& g : gens) {
                    Permutation u = compose(g, w);
                    if (closure.insert(u).second) frontier.push_back(std::move(u));
                }
            }

            std::set<Permutation> blocks;
            for (const Permutation& w : all_permutations(n)) {
                bool in_blocks = true;
                int lo = 1;
                for (int part : c.parts()) {
                    for (int i = lo; i < lo + part; ++i)
                        if (w(i) < lo || w(i) >= lo + part) in_blocks = false;
                    lo += part;
                }
                if (in_blocks) blocks.insert(w);
            }
            CHECK(closure == blocks);
        }
}

TEST_CASE("partition_of and enumeration helpers") {
    CHECK(partition_of(Composition({2, 4, 1})) == Partition({4, 2, 1}));
    CHECK(compositions_of(4).size() == 8);
    CHECK(partitions_of(6).size() == 11);
    CHECK(compositions_with_parts(Partition({2, 2, 1})).size() == 3);
    CHECK(nth_permutation(4, 0) == Permutation::identity(4));
    CHECK(nth_permutation(4, 23) == Permutation::longest(4));
    CHECK(all_permutations(5).size() == 120);
    CHECK(factorial(8) == 40320);
    CHECK(binomial(10, 3) == 120);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Composition({0}), std::invalid_argument);
}

TEST_CASE("human rendering") {
    CHECK(to_human(Permutation({6, 3, 2, 5, 4, 1})) == "632541");
    CHECK(to_human(nth_permutation(10, 0)) == "1,2,3,4,5,6,7,8,9,10");
}
