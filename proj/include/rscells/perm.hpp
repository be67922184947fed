#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// Core permutation arithmetic on the symmetric group S_n.
//
// Conventions, fixed project-wide:
//   * one-line notation, 1-indexed: the word x1 x2 ... xn means w(i) = xi;
//   * composition acts as (w * v)(i) = w(v(i)), i.e. v first, then w;
//   * the empty permutation (n = 0) is valid everywhere.

namespace rscells {

class Permutation {
public:
    Permutation() = default;
    // Throws std::invalid_argument unless word is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation longest(int n); // n n-1 ... 1

    int size() const { return static_cast<int>(word_.size()); }
    // w(i), 1-indexed.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& word() const { return word_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default; // lexicographic by word

private:
    std::vector<int> word_;
};

// A sequence of parts, each >= 1. k = 0 parts (the empty composition of 0)
// is allowed.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts); // throws if any part < 1

    int sum() const;
    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

// Weakly decreasing parts, each >= 1.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // throws unless weakly decreasing, all >= 1

    int sum() const;
    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Number of inversions |{(i,j) : i < j, w(i) > w(j)}|.
long long length(const Permutation& w);

// (w * v)(i) = w(v(i)). Throws on size mismatch.
Permutation compose(const Permutation& w, const Permutation& v);

Permutation inverse(const Permutation& w);

// The longest element of the Young subgroup S_c: each consecutive block of
// positions carries its value range reversed. Always an involution.
Permutation longest_element(const Composition& c);

// longest(n) * longest_element(c), i.e. i -> n+1 - sigma_c(i). The longest
// minimal-coset-representative element of S_c.
Permutation coset_max(const Composition& c);

// True iff some subsequence of w is order-isomorphic to p. Naive scan;
// fine for the pattern lengths (<= 4) and n (<= 10) used here.
bool contains_pattern(const Permutation& w, const Permutation& p);

// If w is the longest element of some Young subgroup, returns the unique
// composition c with w = longest_element(c); otherwise empty. Scans w for
// maximal descending consecutive-value blocks.
std::optional<Composition> is_young_longest(const Permutation& w);

// The classical bijection between subsets of the simple transpositions and
// compositions of n. `absent` lists the indices i (1 <= i <= n-1) of the
// generators NOT in the subgroup; the returned composition has the block
// boundaries exactly there. Throws if an index is out of range or repeated.
Composition subset_to_composition(int n, std::vector<int> absent);

// Inverse of the above: the proper prefix sums of c.
std::vector<int> composition_to_subset(const Composition& c);

// Decreasing reordering of the parts of c.
Partition partition_of(const Composition& c);

std::vector<Composition> compositions_of(int n);                     // all 2^(n-1)
std::vector<Composition> compositions_with_parts(const Partition& p); // distinct orderings of p
std::vector<Partition> partitions_of(int n);

std::vector<Permutation> all_permutations(int n); // lexicographic order
Permutation nth_permutation(int n, std::uint64_t index); // lexicographic rank -> word
std::uint64_t factorial(int n);
long long binomial(long long n, long long k);
inline long long choose2(long long k) { return k * (k - 1) / 2; }

// Digits concatenated when n <= 9, comma-separated otherwise.
std::string to_human(const Permutation& w);

} // namespace rscells
