#include "rscells/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rscells {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

long long length(const Permutation& w) {
    const int n = w.size();
    long long inv = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

Permutation compose(const Permutation& w, const Permutation& v) {
    if (w.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> u(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) u[static_cast<std::size_t>(i) - 1] = w(v(i));
    return Permutation(std::move(u));
}

Permutation inverse(const Permutation& w) {
    std::vector<int> u(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) u[static_cast<std::size_t>(w(i)) - 1] = i;
    return Permutation(std::move(u));
}

Permutation longest_element(const Composition& c) {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(c.sum()));
    int base = 0;
    for (int part : c.parts()) {
        for (int t = 0; t < part; ++t) w.push_back(base + part - t);
        base += part;
    }
    return Permutation(std::move(w));
}

Permutation coset_max(const Composition& c) {
    const int n = c.sum();
    const Permutation sigma = longest_element(c);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = n + 1 - sigma(i);
    return Permutation(std::move(w));
}

namespace {

// Extend a partial order-isomorphic match of p into w, one pattern slot at a
// time. `chosen` holds the w-values picked for slots 1..t-1.
bool match_pattern(const std::vector<int>& w, const std::vector<int>& p,
                   std::vector<int>& chosen, std::size_t from) {
    const std::size_t t = chosen.size();
    if (t == p.size()) return true;
    for (std::size_t pos = from; pos + (p.size() - t) <= w.size(); ++pos) {
        const int cand = w[pos];
        bool ok = true;
        for (std::size_t s = 0; s < t; ++s) {
            if ((p[s] < p[t]) != (chosen[s] < cand)) { ok = false; break; }
        }
        if (!ok) continue;
        chosen.push_back(cand);
        if (match_pattern(w, p, chosen, pos + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& w, const Permutation& p) {
    if (p.size() > w.size()) return false;
    if (p.size() == 0) return true;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(p.size()));
    return match_pattern(w.word(), p.word(), chosen, 0);
}

std::optional<Composition> is_young_longest(const Permutation& w) {
    const int n = w.size();
    std::vector<int> parts;
    int pos = 1;
    while (pos <= n) {
        const int top = w(pos);        // block covers positions pos..top
        if (top < pos) return std::nullopt;
        for (int t = 0; t <= top - pos; ++t)
            if (w(pos + t) != top - t) return std::nullopt;
        parts.push_back(top - pos + 1);
        pos = top + 1;
    }
    return Composition(std::move(parts));
}

Composition subset_to_composition(int n, std::vector<int> absent) {
    if (n < 0) throw std::invalid_argument("subset_to_composition: n must be >= 0");
    std::sort(absent.begin(), absent.end());
    std::vector<int> parts;
    int prev = 0;
    for (int i : absent) {
        if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range 1..n-1");
        if (i == prev) throw std::invalid_argument("repeated generator index");
        parts.push_back(i - prev);
        prev = i;
    }
    if (n > 0) parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::vector<int> composition_to_subset(const Composition& c) {
    std::vector<int> cuts;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < c.parts().size(); ++i) {
        acc += c.parts()[i];
        cuts.push_back(acc);
    }
    return cuts;
}

Partition partition_of(const Composition& c) {
    std::vector<int> parts = c.parts();
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            cur.push_back(part);
            self(self, remaining - part);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<Composition> compositions_with_parts(const Partition& p) {
    std::vector<int> parts = p.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, maxpart); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Permutation nth_permutation(int n, std::uint64_t index) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = factorial(i - 1);
        const std::size_t digit = static_cast<std::size_t>(index / f);
        index %= f;
        w.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return Permutation(std::move(w));
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact: r is always a binomial prefix
    }
    return r;
}

std::string to_human(const Permutation& w) {
    std::string s;
    const bool compact = w.size() <= 9;
    for (int i = 1; i <= w.size(); ++i) {
        if (!compact && i > 1) s += ',';
        s += std::to_string(w(i));
    }
    return s;
}

} // namespace rscells
