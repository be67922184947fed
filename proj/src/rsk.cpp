#include "rscells/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace rscells {

std::pair<StandardTableau, StandardTableau> robinson_schensted(const Permutation& w) {
    std::vector<std::vector<int>> p, q;
    for (int i = 1; i <= w.size(); ++i) {
        int x = w(i);
        std::size_t r = 0;
        for (;;) {
            if (r == p.size()) {
                p.push_back({x});
                q.push_back({i});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
            if (it == p[r].end()) {
                p[r].push_back(x);
                q[r].push_back(i);
                break;
            }
            std::swap(*it, x); // bump
            ++r;
        }
    }
    return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

Permutation inverse_rs(const StandardTableau& p, const StandardTableau& q) {
    if (p.shape() != q.shape()) throw std::invalid_argument("inverse_rs: shape mismatch");
    const int n = p.size();

    // Position of each recording entry; q standard means entry i sits at a
    // corner of the shape restricted to entries <= i.
    std::vector<std::pair<std::size_t, std::size_t>> where(static_cast<std::size_t>(n) + 1);
    for (std::size_t r = 0; r < q.rows().size(); ++r)
        for (std::size_t c = 0; c < q.rows()[r].size(); ++c)
            where[static_cast<std::size_t>(q.rows()[r][c])] = {r, c};

    std::vector<std::vector<int>> rows = p.rows();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        auto [r, c] = where[static_cast<std::size_t>(i)];
        int x = rows[r][c];
        rows[r].pop_back();
        for (std::size_t rr = r; rr-- > 0;) {
            // rightmost entry < x bumps back up
            auto it = std::lower_bound(rows[rr].begin(), rows[rr].end(), x);
            std::swap(*std::prev(it), x);
        }
        word[static_cast<std::size_t>(i) - 1] = x;
    }
    return Permutation(std::move(word));
}

Permutation involution_of_tableau(const StandardTableau& t) { return inverse_rs(t, t); }

} // namespace rscells
