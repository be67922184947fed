#include "rscells/cells.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "rscells/rsk.hpp"

namespace rscells {

namespace {

void require_sums_to(const Partition& shape, int n) {
    if (shape.sum() != n) throw std::invalid_argument("shape does not sum to n");
}

std::map<Partition, std::vector<Permutation>> sweep_range(int n, std::uint64_t lo, std::uint64_t hi) {
    std::map<Partition, std::vector<Permutation>> buckets;
    if (lo >= hi) return buckets;
    std::vector<int> word = nth_permutation(n, lo).word();
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        Permutation w{std::vector<int>(word)};
        buckets[robinson_schensted(w).first.shape()].push_back(std::move(w));
        std::next_permutation(word.begin(), word.end());
    }
    return buckets;
}

} // namespace

std::map<Partition, std::vector<Permutation>> cells_by_shape(int n, int workers) {
    const std::uint64_t total = factorial(n);
    if (workers < 1) workers = 1;
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);

    std::vector<std::map<Partition, std::vector<Permutation>>> parts(static_cast<std::size_t>(workers));
    if (workers == 1) {
        parts[0] = sweep_range(n, 0, total);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < workers; ++k) {
            const std::uint64_t lo = total * static_cast<std::uint64_t>(k) / static_cast<std::uint64_t>(workers);
            const std::uint64_t hi = total * static_cast<std::uint64_t>(k + 1) / static_cast<std::uint64_t>(workers);
            pool.emplace_back([&parts, k, n, lo, hi] { parts[static_cast<std::size_t>(k)] = sweep_range(n, lo, hi); });
        }
        for (auto& t : pool) t.join();
    }

    // Workers cover disjoint lexicographic ranges in order, so plain
    // concatenation keeps every bucket sorted.
    std::map<Partition, std::vector<Permutation>> merged = std::move(parts[0]);
    for (std::size_t k = 1; k < parts.size(); ++k)
        for (auto& [shape, bucket] : parts[k]) {
            auto& dst = merged[shape];
            dst.insert(dst.end(), std::make_move_iterator(bucket.begin()), std::make_move_iterator(bucket.end()));
        }
    return merged;
}

std::vector<Permutation> two_sided_cell(const Partition& shape, int n) {
    require_sums_to(shape, n);
    std::vector<Permutation> cell;
    const std::uint64_t total = factorial(n);
    std::vector<int> word = Permutation::identity(n).word();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Permutation w{std::vector<int>(word)};
        if (robinson_schensted(w).first.shape() == shape) cell.push_back(std::move(w));
        std::next_permutation(word.begin(), word.end());
    }
    return cell;
}

std::vector<Permutation> two_sided_cell_via_pairs(const Partition& shape, int n) {
    require_sums_to(shape, n);
    const std::vector<StandardTableau> tabs = enumerate_syt(shape);
    std::vector<Permutation> cell;
    cell.reserve(tabs.size() * tabs.size());
    for (const auto& p : tabs)
        for (const auto& q : tabs) cell.push_back(inverse_rs(p, q));
    std::sort(cell.begin(), cell.end());
    return cell;
}

namespace {

std::vector<Permutation> extreme_elements(std::vector<Permutation> cell, bool want_max) {
    std::vector<Permutation> out;
    long long best = want_max ? -1 : static_cast<long long>(1) << 62;
    for (auto& w : cell) {
        const long long l = length(w);
        if ((want_max && l > best) || (!want_max && l < best)) {
            best = l;
            out.clear();
        }
        if (l == best) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Permutation> min_elements(const Partition& shape, int n) {
    return extreme_elements(two_sided_cell(shape, n), false);
}

std::vector<Permutation> max_elements(const Partition& shape, int n) {
    return extreme_elements(two_sided_cell(shape, n), true);
}

std::vector<Permutation> predicted_min_elements(const Partition& shape) {
    std::vector<Permutation> out;
    for (const Composition& c : compositions_with_parts(conjugate(shape)))
        out.push_back(longest_element(c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> predicted_max_elements(const Partition& shape) {
    std::vector<Permutation> out;
    for (const Composition& c : compositions_with_parts(shape)) out.push_back(coset_max(c));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::uint64_t multiplicity_multinomial(const Partition& shape) {
    std::vector<int> mult; // multiplicities of the distinct part values
    const std::vector<int>& parts = shape.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 && parts[i] == parts[i - 1]) ++mult.back();
        else mult.push_back(1);
    }
    std::uint64_t r = 1;
    long long placed = 0;
    for (int m : mult) {
        placed += m;
        r *= static_cast<std::uint64_t>(binomial(placed, m));
    }
    return r;
}

} // namespace

std::uint64_t count_min(const Partition& shape) { return multiplicity_multinomial(conjugate(shape)); }

std::uint64_t count_max(const Partition& shape) { return multiplicity_multinomial(shape); }

long long n_lambda(const Partition& shape) {
    const Partition conj = conjugate(shape);
    long long s = 0;
    for (int part : conj.parts()) s += choose2(part);
    return s;
}

long long max_length_formula(const Partition& shape, int n) {
    require_sums_to(shape, n);
    long long s = choose2(n);
    for (int part : shape.parts()) s -= choose2(part);
    return s;
}

std::vector<Permutation> knuth_moves(const Permutation& w) {
    const std::vector<int>& v = w.word();
    std::vector<Permutation> out;
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        const int a = v[i], b = v[i + 1], c = v[i + 2];
        if (std::min(a, b) < c && c < std::max(a, b)) { // x z y <-> z x y
            std::vector<int> u = v;
            std::swap(u[i], u[i + 1]);
            out.emplace_back(std::move(u));
        }
        if (std::min(b, c) < a && a < std::max(b, c)) { // y x z <-> y z x
            std::vector<int> u = v;
            std::swap(u[i + 1], u[i + 2]);
            out.emplace_back(std::move(u));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Permutation> dual_knuth_moves(const Permutation& w) {
    std::vector<Permutation> out;
    for (const Permutation& u : knuth_moves(inverse(w))) out.push_back(inverse(u));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> knuth_neighbors(const Permutation& w) {
    std::vector<Permutation> out = knuth_moves(w);
    for (Permutation& u : dual_knuth_moves(w)) out.push_back(std::move(u));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_locally_minimal(const Permutation& w) {
    const long long l = length(w);
    for (const Permutation& u : knuth_neighbors(w))
        if (length(u) <= l) return false;
    return true;
}

bool cell_connected_under_knuth(const std::vector<Permutation>& cell) {
    if (cell.empty()) return true;
    std::set<Permutation> todo(cell.begin(), cell.end());
    std::vector<Permutation> stack{*todo.begin()};
    todo.erase(todo.begin());
    while (!stack.empty()) {
        const Permutation w = std::move(stack.back());
        stack.pop_back();
        for (const Permutation& u : knuth_neighbors(w)) {
            auto it = todo.find(u);
            if (it != todo.end()) {
                stack.push_back(*it);
                todo.erase(it);
            }
        }
    }
    return todo.empty();
}

CellReport analyze_cell(const Partition& shape, std::vector<Permutation> cell) {
    CellReport rep;
    rep.shape = shape;
    rep.cell_size = cell.size();
    rep.min_set = extreme_elements(cell, false);
    rep.max_set = extreme_elements(std::move(cell), true);
    rep.min_length = rep.min_set.empty() ? 0 : length(rep.min_set.front());
    rep.max_length = rep.max_set.empty() ? 0 : length(rep.max_set.front());
    rep.predicted_min_set = predicted_min_elements(shape);
    rep.predicted_max_set = predicted_max_elements(shape);

    std::vector<Permutation> reading_family;
    for (const StandardTableau& t : all_reading_tableaux(shape))
        reading_family.push_back(involution_of_tableau(t));
    std::sort(reading_family.begin(), reading_family.end());

    rep.min_matches = rep.min_set == rep.predicted_min_set && rep.min_set == reading_family;
    rep.max_matches = rep.max_set == rep.predicted_max_set;
    rep.counts_match = rep.min_set.size() == count_min(shape) && rep.max_set.size() == count_max(shape);
    rep.lengths_match = rep.min_length == n_lambda(shape) &&
                        rep.max_length == max_length_formula(shape, shape.sum());
    return rep;
}

std::vector<CellReport> analyze_all_cells(int n, int workers) {
    std::vector<CellReport> out;
    for (auto& [shape, cell] : cells_by_shape(n, workers))
        out.push_back(analyze_cell(shape, std::move(cell)));
    return out;
}

} // namespace rscells
