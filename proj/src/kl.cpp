#include "rscells/kl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rscells {

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({1}); }

long long IntPolynomial::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::scaled_shifted(long long c, int shift) const {
    if (is_zero() || c == 0) return {};
    std::vector<long long> out(coeffs_.size() + static_cast<std::size_t>(shift), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i + static_cast<std::size_t>(shift)] = coeffs_[i] * c;
    return IntPolynomial(std::move(out));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

// sorted_prefixes[i-1] holds the increasingly sorted first i values.
std::vector<std::vector<int>> sorted_prefixes(const Permutation& w) {
    std::vector<std::vector<int>> sp;
    std::vector<int> cur;
    for (int i = 1; i <= w.size(); ++i) {
        cur.insert(std::upper_bound(cur.begin(), cur.end(), w(i)), w(i));
        sp.push_back(cur);
    }
    return sp;
}

bool prefix_dominated(const std::vector<std::vector<int>>& x, const std::vector<std::vector<int>>& w) {
    for (std::size_t i = 0; i + 1 < x.size(); ++i) // prefix i == n is always equal
        for (std::size_t t = 0; t <= i; ++t)
            if (x[i][t] > w[i][t]) return false;
    return true;
}

} // namespace

bool bruhat_leq(const Permutation& x, const Permutation& w) {
    if (x.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    return prefix_dominated(sorted_prefixes(x), sorted_prefixes(w));
}

KlTable::KlTable(int n, DescentRule rule, bool override_ceiling) : n_(n), rule_(rule) {
    if (n < 0) throw std::invalid_argument("KlTable: n must be >= 0");
    if (n > 7 && !override_ceiling)
        throw std::runtime_error("KlTable: n exceeds the ceiling of 7; pass the override to proceed");
    size_ = factorial(n);

    words_.reserve(size_);
    positions_.reserve(size_);
    len_.reserve(size_);
    by_length_.assign(static_cast<std::size_t>(choose2(n)) + 1, {});
    std::vector<std::vector<std::vector<int>>> prefixes;
    prefixes.reserve(size_);

    std::uint32_t idx = 0;
    for (const Permutation& w : all_permutations(n)) {
        words_.push_back(w.word());
        std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(w(i))] = i;
        positions_.push_back(std::move(pos));
        len_.push_back(static_cast<int>(length(w)));
        by_length_[static_cast<std::size_t>(len_.back())].push_back(idx);
        prefixes.push_back(sorted_prefixes(w));
        ++idx;
    }

    left_mul_.assign(size_ * static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0);
    for (std::uint32_t x = 0; x < size_; ++x)
        for (int i = 1; i <= n - 1; ++i) {
            std::vector<int> word = words_[x];
            // tau_i * w swaps the values i and i+1
            std::swap(word[static_cast<std::size_t>(positions_[x][static_cast<std::size_t>(i)]) - 1],
                      word[static_cast<std::size_t>(positions_[x][static_cast<std::size_t>(i) + 1]) - 1]);
            left_mul_[x * static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(i - 1)] =
                rank_of(Permutation(std::move(word)));
        }

    // Full Bruhat matrix is cheap up to S_6; beyond that fall back to
    // per-query prefix dominance.
    if (n <= 6) {
        leq_bits_.assign((size_ * size_ + 63) / 64, 0);
        for (std::uint32_t x = 0; x < size_; ++x)
            for (std::uint32_t w = 0; w < size_; ++w)
                if (len_[x] <= len_[w] && prefix_dominated(prefixes[x], prefixes[w])) {
                    const std::uint64_t bit = static_cast<std::uint64_t>(x) * size_ + w;
                    leq_bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
                }
        has_matrix_ = true;
    }
}

std::uint32_t KlTable::rank_of(const Permutation& w) const {
    std::uint64_t rank = 0;
    const int n = w.size();
    for (int i = 1; i <= n; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j <= n; ++j)
            if (w(j) < w(i)) ++smaller_after;
        rank += static_cast<std::uint64_t>(smaller_after) * factorial(n - i);
    }
    return static_cast<std::uint32_t>(rank);
}

bool KlTable::leq(std::uint32_t x, std::uint32_t w) const {
    if (x == w) return true;
    if (len_[x] >= len_[w]) return false;
    if (has_matrix_) {
        const std::uint64_t bit = static_cast<std::uint64_t>(x) * size_ + w;
        return (leq_bits_[bit >> 6] >> (bit & 63)) & 1;
    }
    for (int i = 1; i < n_; ++i) {
        // |{k <= i : x(k) >= j}| <= |{k <= i : w(k) >= j}| for all j,
        // phrased as entrywise sorted-prefix comparison done incrementally.
        int sum_x = 0, sum_w = 0;
        for (int j = n_; j >= 1; --j) {
            if (positions_[x][static_cast<std::size_t>(j)] <= i) ++sum_x;
            if (positions_[w][static_cast<std::size_t>(j)] <= i) ++sum_w;
            if (sum_x > sum_w) return false;
        }
    }
    return true;
}

int KlTable::pick_descent(std::uint32_t w) const {
    if (rule_ == DescentRule::smallest_index) {
        for (int i = 1; i <= n_ - 1; ++i)
            if (positions_[w][static_cast<std::size_t>(i) + 1] < positions_[w][static_cast<std::size_t>(i)])
                return i;
    } else {
        for (int i = n_ - 1; i >= 1; --i)
            if (positions_[w][static_cast<std::size_t>(i) + 1] < positions_[w][static_cast<std::size_t>(i)])
                return i;
    }
    return 0; // w == identity; callers never reach this
}

const IntPolynomial& KlTable::kl(std::uint32_t x, std::uint32_t w) const {
    static const IntPolynomial zero;
    static const IntPolynomial unit = IntPolynomial::one();
    if (x == w) return unit;
    if (!leq(x, w)) return zero;
    const std::uint64_t key = static_cast<std::uint64_t>(x) * size_ + w;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int i = pick_descent(w);
    const auto gen = static_cast<std::size_t>(i - 1);
    const std::uint32_t sx = left_mul_[x * static_cast<std::size_t>(n_ - 1) + gen];
    IntPolynomial r;
    if (len_[sx] > len_[x]) {
        r = kl(sx, w); // P is constant along the s-ascent under a descent of w
    } else {
        const std::uint32_t v = left_mul_[w * static_cast<std::size_t>(n_ - 1) + gen]; // sw < w
        r = kl(sx, v) + kl(x, v).scaled_shifted(1, 1);
        const int lw = len_[w];
        for (int lz = len_[x]; lz < len_[v]; ++lz) {
            if (((len_[v] - lz) & 1) == 0) continue;
            for (std::uint32_t z : by_length_[static_cast<std::size_t>(lz)]) {
                if (len_[left_mul_[z * static_cast<std::size_t>(n_ - 1) + gen]] > lz) continue; // need sz < z
                if (!leq(x, z) || !leq(z, v)) continue;
                const long long m = mu_idx(z, v);
                if (m != 0) r -= kl(x, z).scaled_shifted(m, (lw - lz) / 2);
            }
        }
    }
    return memo_.emplace(key, std::move(r)).first->second;
}

long long KlTable::mu_idx(std::uint32_t x, std::uint32_t w) const {
    const int gap = len_[w] - len_[x];
    if (gap <= 0 || (gap & 1) == 0) return 0;
    return kl(x, w).coeff((gap - 1) / 2);
}

IntPolynomial KlTable::polynomial(const Permutation& x, const Permutation& w) const {
    if (x.size() != n_ || w.size() != n_) throw std::invalid_argument("kl_polynomial: size mismatch");
    std::scoped_lock guard(lock_);
    return kl(rank_of(x), rank_of(w));
}

long long KlTable::mu(const Permutation& x, const Permutation& w) const {
    if (x.size() != n_ || w.size() != n_) throw std::invalid_argument("mu: size mismatch");
    std::scoped_lock guard(lock_);
    return mu_idx(rank_of(x), rank_of(w));
}

int KlTable::delta(const Permutation& w) const {
    return polynomial(Permutation::identity(n_), w).degree();
}

namespace {

const KlTable& shared_table(int n, bool override_ceiling) {
    static std::mutex tables_lock;
    static std::map<int, std::unique_ptr<KlTable>> tables;
    std::scoped_lock guard(tables_lock);
    auto it = tables.find(n);
    if (it == tables.end())
        it = tables.emplace(n, std::make_unique<KlTable>(n, KlTable::DescentRule::smallest_index,
                                                         override_ceiling)).first;
    return *it->second;
}

} // namespace

IntPolynomial kl_polynomial(const Permutation& x, const Permutation& w, bool override_ceiling) {
    if (x.size() != w.size()) throw std::invalid_argument("kl_polynomial: size mismatch");
    return shared_table(x.size(), override_ceiling).polynomial(x, w);
}

int delta(const Permutation& w, bool override_ceiling) {
    return shared_table(w.size(), override_ceiling).delta(w);
}

bool verify_smoothness_criterion(int n, bool override_ceiling) {
    const KlTable table(n, KlTable::DescentRule::smallest_index, override_ceiling);
    const IntPolynomial unit = IntPolynomial::one();
    const Permutation e = Permutation::identity(n);
    const Permutation p4231({4, 2, 3, 1});
    const Permutation p3412({3, 4, 1, 2});
    for (const Permutation& w : all_permutations(n)) {
        const bool trivial_poly = table.polynomial(e, w) == unit;
        const bool avoids = !contains_pattern(w, p4231) && !contains_pattern(w, p3412);
        if (trivial_poly != avoids) return false;
        if (w == inverse(w)) {
            const bool degree_zero = table.delta(w) == 0;
            if (degree_zero != is_young_longest(w).has_value()) return false;
        }
    }
    return true;
}

} // namespace rscells
