#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "rscells/perm.hpp"

// Small-scale Kazhdan-Lusztig oracle: Bruhat order via sorted-prefix
// dominance, the standard P_{x,w} recursion on a left descent of w, and the
// smoothness criterion check (P_{e,w} = 1 iff w avoids 4231 and 3412).

namespace rscells {

// Integer-coefficient polynomial in q, dense, trailing zeros stripped.
// The zero polynomial has no coefficients and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default; // zero
    explicit IntPolynomial(std::vector<long long> coeffs);
    static IntPolynomial one();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long coeff(int k) const;
    const std::vector<long long>& coeffs() const { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    // this * c * q^shift
    IntPolynomial scaled_shifted(long long c, int shift) const;

    bool operator==(const IntPolynomial&) const = default;

private:
    void normalize();
    std::vector<long long> coeffs_;
};

// x <= w in Bruhat order: entrywise comparison of increasingly sorted
// prefixes. Throws on size mismatch.
bool bruhat_leq(const Permutation& x, const Permutation& w);

// Memoized Kazhdan-Lusztig polynomials for one fixed n. Construction
// enumerates S_n; n <= 7 unless override_ceiling. Queries are internally
// synchronized.
class KlTable {
public:
    enum class DescentRule { smallest_index, largest_index };

    explicit KlTable(int n, DescentRule rule = DescentRule::smallest_index,
                     bool override_ceiling = false);

    int n() const { return n_; }
    IntPolynomial polynomial(const Permutation& x, const Permutation& w) const;
    // mu(x, w): coefficient of q^((l(w)-l(x)-1)/2) in P_{x,w}; 0 unless the
    // length gap is odd.
    long long mu(const Permutation& x, const Permutation& w) const;
    int delta(const Permutation& w) const; // degree of P_{e,w}

private:
    std::uint32_t rank_of(const Permutation& w) const;
    bool leq(std::uint32_t x, std::uint32_t w) const;
    const IntPolynomial& kl(std::uint32_t x, std::uint32_t w) const;
    long long mu_idx(std::uint32_t x, std::uint32_t w) const;
    int pick_descent(std::uint32_t w) const;

    int n_;
    DescentRule rule_;
    std::uint64_t size_; // n!
    std::vector<std::vector<int>> words_;     // index -> one-line word
    std::vector<std::vector<int>> positions_; // index -> value -> position
    std::vector<int> len_;
    std::vector<std::vector<std::uint32_t>> by_length_;
    std::vector<std::uint32_t> left_mul_; // index * (n-1) + (i-1) -> rank of tau_i * w
    std::vector<std::uint64_t> leq_bits_; // full Bruhat matrix for n <= 6
    bool has_matrix_ = false;
    mutable std::unordered_map<std::uint64_t, IntPolynomial> memo_;
    mutable std::mutex lock_;
};

// Convenience wrappers over a shared per-n table (smallest-index descent).
IntPolynomial kl_polynomial(const Permutation& x, const Permutation& w,
                            bool override_ceiling = false);
int delta(const Permutation& w, bool override_ceiling = false);

// For every w in S_n: P_{e,w} = 1 iff w avoids 4231 and 3412; and for
// every involution w: delta(w) = 0 iff w is the longest element of a Young
// subgroup. True only if both hold universally.
bool verify_smoothness_criterion(int n, bool override_ceiling = false);

} // namespace rscells
