#pragma once

#include <utility>

#include "rscells/perm.hpp"
#include "rscells/tableau.hpp"

// Robinson-Schensted correspondence. Row insertion (bump the leftmost entry
// strictly greater than x), inserting w(1) first; the recording tableau gets
// entry i in the box created at step i.

namespace rscells {

// w -> (P, Q), equal shapes.
std::pair<StandardTableau, StandardTableau> robinson_schensted(const Permutation& w);

// The unique w with robinson_schensted(w) == (p, q). Reverse bumping driven
// by q's entries n..1. Throws std::invalid_argument on shape mismatch.
Permutation inverse_rs(const StandardTableau& p, const StandardTableau& q);

// The involution paired with t under T -> inverse_rs(T, T).
Permutation involution_of_tableau(const StandardTableau& t);

} // namespace rscells
