#include "rscells/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace rscells {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    // Drop trailing empty rows, reject embedded ones.
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();

    std::size_t n = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty()) throw std::invalid_argument("tableau has an empty row");
        if (r > 0 && rows_[r].size() > rows_[r - 1].size())
            throw std::invalid_argument("tableau row lengths must weakly decrease");
        n += rows_[r].size();
    }
    std::vector<char> seen(n + 1, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const int v = rows_[r][c];
            if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("tableau entries must be exactly 1..n");
            seen[static_cast<std::size_t>(v)] = 1;
            if (c > 0 && rows_[r][c - 1] >= v)
                throw std::invalid_argument("tableau rows must strictly increase");
            if (r > 0 && rows_[r - 1][c] >= v)
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

int StandardTableau::size() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return static_cast<int>(n);
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> t;
    if (!lambda.parts().empty()) {
        t.assign(static_cast<std::size_t>(lambda.parts()[0]), 0);
        for (int part : lambda.parts())
            for (int i = 0; i < part; ++i) ++t[static_cast<std::size_t>(i)];
    }
    return Partition(std::move(t));
}

StandardTableau transpose(const StandardTableau& t) {
    std::vector<std::vector<int>> out;
    if (t.row_count() > 0) out.resize(t.rows()[0].size());
    for (const auto& row : t.rows())
        for (std::size_t c = 0; c < row.size(); ++c) out[c].push_back(row[c]);
    return StandardTableau(std::move(out));
}

bool is_reading_tableau(const StandardTableau& t) {
    const int n = t.size();
    std::vector<int> row_of(static_cast<std::size_t>(n) + 1, 0);
    for (int r = 0; r < t.row_count(); ++r)
        for (int v : t.rows()[static_cast<std::size_t>(r)])
            row_of[static_cast<std::size_t>(v)] = r + 1;
    for (int p = 1; p <= n; ++p) {
        const int r = row_of[static_cast<std::size_t>(p)];
        if (r == 1) continue;
        if (row_of[static_cast<std::size_t>(p) - 1] != r - 1) return false;
    }
    return true;
}

StandardTableau reading_tableau_from_composition(const Composition& c) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int part : c.parts()) {
        if (static_cast<std::size_t>(part) > rows.size()) rows.resize(static_cast<std::size_t>(part));
        for (int r = 0; r < part; ++r) rows[static_cast<std::size_t>(r)].push_back(next++);
    }
    // The constructor re-validates; the block construction cannot actually
    // violate the shape invariant (row r ends with one cell per block of
    // size >= r+1, so lengths weakly decrease), but callers rely on the
    // validated type either way.
    return StandardTableau(std::move(rows));
}

std::vector<StandardTableau> all_reading_tableaux(const Partition& lambda) {
    std::vector<StandardTableau> out;
    for (const Composition& c : compositions_with_parts(conjugate(lambda)))
        out.push_back(reading_tableau_from_composition(c));
    std::sort(out.begin(), out.end());
    return out;
}

StandardTableau evacuation(const StandardTableau& t) {
    std::vector<std::vector<int>> work = t.rows();
    std::vector<std::vector<int>> ev = work; // same shape, values overwritten
    const int n = t.size();
    for (int k = n; k >= 1; --k) {
        // Delete the minimum entry (always at the top-left corner) and slide
        // the hole to an outer corner.
        std::size_t r = 0, c = 0;
        for (;;) {
            const bool has_right = c + 1 < work[r].size();
            const bool has_below = r + 1 < work.size() && c < work[r + 1].size();
            if (!has_right && !has_below) break;
            if (!has_below || (has_right && work[r][c + 1] < work[r + 1][c])) {
                work[r][c] = work[r][c + 1];
                ++c;
            } else {
                work[r][c] = work[r + 1][c];
                ++r;
            }
        }
        ev[r][c] = k;
        work[r].pop_back();
        if (work[r].empty()) work.pop_back();
    }
    return StandardTableau(std::move(ev));
}

std::vector<StandardTableau> enumerate_syt(const Partition& lambda) {
    const int n = lambda.sum();
    const std::vector<int>& shape = lambda.parts();
    std::vector<std::vector<int>> rows(shape.size());
    std::vector<StandardTableau> out;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.emplace_back(rows);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (rows[r].size() >= static_cast<std::size_t>(shape[r])) continue;
            if (r > 0 && rows[r].size() >= rows[r - 1].size()) continue;
            rows[r].push_back(next);
            self(self, next + 1);
            rows[r].pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

StandardTableau column_superstandard(const Partition& lambda) {
    const Partition heights = conjugate(lambda);
    std::vector<std::vector<int>> rows(lambda.parts().size());
    int next = 1;
    for (int h : heights.parts())
        for (int r = 0; r < h; ++r) rows[static_cast<std::size_t>(r)].push_back(next++);
    return StandardTableau(std::move(rows));
}

std::uint64_t hook_length_count(const Partition& lambda) {
    const std::vector<int>& parts = lambda.parts();
    const Partition conj = conjugate(lambda);
    std::uint64_t hooks = 1;
    for (std::size_t r = 0; r < parts.size(); ++r)
        for (int c = 0; c < parts[r]; ++c) {
            const int arm = parts[r] - c - 1;
            const int leg = conj.parts()[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            hooks *= static_cast<std::uint64_t>(arm + leg + 1);
        }
    return factorial(lambda.sum()) / hooks;
}

} // namespace rscells
