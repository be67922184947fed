#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rscells/perm.hpp"
#include "rscells/tableau.hpp"

// Two-sided cells of S_n: the fibers of w -> shape(P(w)) under the
// Robinson-Schensted correspondence. Enumeration, minimal/maximal length
// element extraction, the counting and length formulas, and Knuth /
// dual-Knuth moves.

namespace rscells {

// Per-shape record of a cell's min/max structure and how it compares with
// the predicted families. All permutation sets are sorted lexicographically
// by one-line word.
struct CellReport {
    Partition shape;
    std::uint64_t cell_size = 0;
    long long min_length = 0;
    long long max_length = 0;
    std::vector<Permutation> min_set;
    std::vector<Permutation> max_set;
    std::vector<Permutation> predicted_min_set; // {sigma_c : partition_of(c) == conjugate(shape)}
    std::vector<Permutation> predicted_max_set; // {d_c : partition_of(c) == shape}
    bool min_matches = false;     // min_set == predicted_min_set == reading-tableau family
    bool max_matches = false;     // max_set == predicted_max_set
    bool counts_match = false;    // |min_set| == count_min, |max_set| == count_max
    bool lengths_match = false;   // min/max lengths equal the closed formulas
};

// One sweep of S_n grouped by shape(P(w)). The sweep may be partitioned
// across workers; the merged result does not depend on the worker count.
std::map<Partition, std::vector<Permutation>> cells_by_shape(int n, int workers = 1);

// {w in S_n : shape(P(w)) == shape}, sorted. Throws if shape does not sum
// to n.
std::vector<Permutation> two_sided_cell(const Partition& shape, int n);

// Same set computed through the other route: inverse_rs over all pairs of
// standard tableaux of the given shape. Cross-check oracle for the sweep.
std::vector<Permutation> two_sided_cell_via_pairs(const Partition& shape, int n);

std::vector<Permutation> min_elements(const Partition& shape, int n);
std::vector<Permutation> max_elements(const Partition& shape, int n);

// {sigma_c : partition_of(c) == conjugate(shape)}, sorted.
std::vector<Permutation> predicted_min_elements(const Partition& shape);
// {coset_max(c) : partition_of(c) == shape}, sorted.
std::vector<Permutation> predicted_max_elements(const Partition& shape);

// Multinomial of the part multiplicities of conjugate(shape) resp. shape.
std::uint64_t count_min(const Partition& shape);
std::uint64_t count_max(const Partition& shape);

// Sum of C(conjugate(shape)_i, 2): the common length of all minimal cell
// elements.
long long n_lambda(const Partition& shape);

// C(n,2) - sum of C(shape_i, 2): the common length of all maximal cell
// elements.
long long max_length_formula(const Partition& shape, int n);

// One elementary Knuth move: swap w(i),w(i+1) in a window x z y <-> z x y
// (x < y < z), or w(i+1),w(i+2) in a window y x z <-> y z x. Preserves P.
std::vector<Permutation> knuth_moves(const Permutation& w);
// Knuth moves applied to the inverse, re-inverted. Preserves Q.
std::vector<Permutation> dual_knuth_moves(const Permutation& w);
// Union of both kinds, sorted and deduplicated.
std::vector<Permutation> knuth_neighbors(const Permutation& w);

// True iff every Knuth/dual-Knuth neighbor is strictly longer.
bool is_locally_minimal(const Permutation& w);

// True iff the cell is one component under combined Knuth + dual-Knuth
// moves.
bool cell_connected_under_knuth(const std::vector<Permutation>& cell);

CellReport analyze_cell(const Partition& shape, std::vector<Permutation> cell);
std::vector<CellReport> analyze_all_cells(int n, int workers = 1);

} // namespace rscells
