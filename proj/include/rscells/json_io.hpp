#pragma once

#include <string>

#include "json.hpp"
#include "rscells/cells.hpp"
#include "rscells/kl.hpp"
#include "rscells/perm.hpp"
#include "rscells/tableau.hpp"

// Canonical machine formats: permutations, compositions and partitions are
// JSON arrays of integers; tableaux are arrays of row arrays; polynomials
// are coefficient arrays, lowest degree first.

namespace rscells {

nlohmann::json to_json(const Permutation& w);
nlohmann::json to_json(const Composition& c);
nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const StandardTableau& t);
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const CellReport& r);

Permutation permutation_from_json(const nlohmann::json& j);
Composition composition_from_json(const nlohmann::json& j);
Partition partition_from_json(const nlohmann::json& j);
StandardTableau tableau_from_json(const nlohmann::json& j);

// CSV summary form of a CellReport: shape, cell_size, min_length,
// max_length, counts, verdicts.
std::string cell_report_csv_header();
std::string cell_report_csv_row(const CellReport& r);

// "4,3,2,1" -> [4,3,2,1]; used for CLI words and shapes.
std::vector<int> parse_int_list(const std::string& s);

} // namespace rscells
