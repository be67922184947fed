#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "rscells/perm.hpp"

// Standard Young tableaux: conjugation, transposition, the reading-tableau
// predicate and construction, Schutzenberger evacuation, enumeration.
// Storage is row-major (English convention: row lengths weakly decrease
// top to bottom, rows increase left to right, columns top to bottom).

namespace rscells {

class StandardTableau {
public:
    StandardTableau() = default; // empty tableau (n = 0)
    // Throws std::invalid_argument unless rows form a standard Young
    // tableau with content exactly 1..n.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    int size() const; // number of entries
    int row_count() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;

    bool operator==(const StandardTableau&) const = default;
    auto operator<=>(const StandardTableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Conjugate partition: parts_i^t = |{j : parts_j >= i}|.
Partition conjugate(const Partition& lambda);

// Cell (i,j) -> cell (j,i). Shape becomes the conjugate.
StandardTableau transpose(const StandardTableau& t);

// True iff every entry p either lies in row 1, or lies in row i > 1 with
// p-1 in row i-1.
bool is_reading_tableau(const StandardTableau& t);

// Builds the reading tableau of composition c: block j appends its
// consecutive values to rows 1..c_j. The result has shape
// conjugate(partition_of(c)) and satisfies is_reading_tableau.
StandardTableau reading_tableau_from_composition(const Composition& c);

// Exactly {reading_tableau_from_composition(c) : partition_of(c) ==
// conjugate(lambda)}, sorted.
std::vector<StandardTableau> all_reading_tableaux(const Partition& lambda);

// Schutzenberger evacuation: shape-preserving involution, computed by
// iterated delete-minimum / jeu-de-taquin slides.
StandardTableau evacuation(const StandardTableau& t);

// All standard Young tableaux of the given shape, sorted. Cardinality is
// the hook length number.
std::vector<StandardTableau> enumerate_syt(const Partition& lambda);

// Columns filled consecutively, left to right (each column increasing
// downwards). Always a reading tableau.
StandardTableau column_superstandard(const Partition& lambda);

// Hook length formula: n! / product of hooks.
std::uint64_t hook_length_count(const Partition& lambda);

} // namespace rscells
