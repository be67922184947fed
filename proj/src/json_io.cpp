#include "rscells/json_io.hpp"

#include <stdexcept>

namespace rscells {

using nlohmann::json;

json to_json(const Permutation& w) { return json(w.word()); }
json to_json(const Composition& c) { return json(c.parts()); }
json to_json(const Partition& p) { return json(p.parts()); }
json to_json(const StandardTableau& t) { return json(t.rows()); }
json to_json(const IntPolynomial& p) { return json(p.coeffs()); }

json to_json(const CellReport& r) {
    json sets = json::object();
    auto dump_set = [](const std::vector<Permutation>& set) {
        json arr = json::array();
        for (const Permutation& w : set) arr.push_back(w.word());
        return arr;
    };
    return json{{"shape", r.shape.parts()},
                {"cell_size", r.cell_size},
                {"min_length", r.min_length},
                {"max_length", r.max_length},
                {"min_set", dump_set(r.min_set)},
                {"max_set", dump_set(r.max_set)},
                {"predicted_min_set", dump_set(r.predicted_min_set)},
                {"predicted_max_set", dump_set(r.predicted_max_set)},
                {"verdicts",
                 {{"theorem_min", r.min_matches},
                  {"corollary_max", r.max_matches},
                  {"counts", r.counts_match},
                  {"lengths", r.lengths_match}}}};
}

std::string cell_report_csv_header() {
    return "shape,cell_size,min_length,max_length,count_min,count_max,"
           "theorem_min,corollary_max,counts,lengths";
}

std::string cell_report_csv_row(const CellReport& r) {
    std::string shape;
    for (std::size_t i = 0; i < r.shape.parts().size(); ++i) {
        if (i) shape += '+';
        shape += std::to_string(r.shape.parts()[i]);
    }
    if (shape.empty()) shape = "-";
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::string row = shape;
    row += ',' + std::to_string(r.cell_size);
    row += ',' + std::to_string(r.min_length);
    row += ',' + std::to_string(r.max_length);
    row += ',' + std::to_string(r.min_set.size());
    row += ',' + std::to_string(r.max_set.size());
    row += ','; row += flag(r.min_matches);
    row += ','; row += flag(r.max_matches);
    row += ','; row += flag(r.counts_match);
    row += ','; row += flag(r.lengths_match);
    return row;
}

namespace {

std::vector<int> int_vector_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected a JSON array");
    std::vector<int> v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw std::invalid_argument(std::string(what) + ": expected integers");
        v.push_back(e.get<int>());
    }
    return v;
}

} // namespace

Permutation permutation_from_json(const json& j) {
    return Permutation(int_vector_from_json(j, "permutation"));
}

Composition composition_from_json(const json& j) {
    return Composition(int_vector_from_json(j, "composition"));
}

Partition partition_from_json(const json& j) {
    return Partition(int_vector_from_json(j, "partition"));
}

StandardTableau tableau_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("tableau: expected a JSON array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) rows.push_back(int_vector_from_json(row, "tableau row"));
    return StandardTableau(std::move(rows));
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(s.substr(pos), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("expected a comma-separated list of integers: " + s);
        }
        out.push_back(v);
        pos += used;
        if (pos < s.size()) {
            if (s[pos] != ',') throw std::invalid_argument("expected ',' in integer list: " + s);
            ++pos;
        }
    }
    return out;
}

} // namespace rscells
