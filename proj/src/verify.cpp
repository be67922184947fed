#include "rscells/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rscells/cells.hpp"
#include "rscells/kl.hpp"
#include "rscells/rsk.hpp"
#include "rscells/tableau.hpp"

namespace rscells {

namespace {

constexpr int kKlCeiling = 6;    // kl-criterion check stops here unless overridden
constexpr int kKnuthCeiling = 6; // exhaustive move/connectivity sweep stops here
constexpr int kFullRsCeiling = 7; // above this the bijections check is one-directional

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string shape_str(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += '+';
        s += std::to_string(p.parts()[i]);
    }
    return s.empty() ? "-" : s;
}

// Cell analyses are shared by several checks; compute once per n.
struct SweepCache {
    int workers = 1;
    std::map<int, std::vector<CellReport>> reports;

    const std::vector<CellReport>& for_n(int n) {
        auto it = reports.find(n);
        if (it == reports.end()) it = reports.emplace(n, analyze_all_cells(n, workers)).first;
        return it->second;
    }
};

void check_theorem_min(int n, SweepCache& cache, std::vector<VerifyRow>& rows) {
    for (const CellReport& rep : cache.for_n(n)) {
        const auto t0 = Clock::now();
        std::ostringstream detail;
        detail << "min elements: " << rep.min_set.size() << " of length " << rep.min_length;
        rows.push_back({"theorem-min", n, shape_str(rep.shape), rep.min_matches, detail.str(), ms_since(t0)});
    }
}

void check_corollary_max(int n, SweepCache& cache, std::vector<VerifyRow>& rows) {
    const Permutation w0 = Permutation::longest(n);
    for (const CellReport& rep : cache.for_n(n)) {
        const auto t0 = Clock::now();
        bool evac_form = true;
        const Partition conj = conjugate(rep.shape);
        for (const Permutation& w : rep.max_set) {
            const auto [p, q] = robinson_schensted(w);
            const StandardTableau lhs = evacuation(transpose(q));
            const StandardTableau rhs = robinson_schensted(compose(w, w0)).first;
            if (lhs != rhs || !is_reading_tableau(lhs) || lhs.shape() != conj) {
                evac_form = false;
                break;
            }
        }
        const bool ok = rep.max_matches && evac_form;
        std::ostringstream detail;
        detail << "max elements: " << rep.max_set.size() << " of length " << rep.max_length
               << (evac_form ? "" : "; evacuation form failed");
        rows.push_back({"corollary-max", n, shape_str(rep.shape), ok, detail.str(), ms_since(t0)});
    }
}

void check_counts(int n, SweepCache& cache, std::vector<VerifyRow>& rows) {
    for (const CellReport& rep : cache.for_n(n)) {
        const auto t0 = Clock::now();
        std::ostringstream detail;
        detail << "|min|=" << rep.min_set.size() << " expected " << count_min(rep.shape)
               << "; |max|=" << rep.max_set.size() << " expected " << count_max(rep.shape);
        rows.push_back({"counts", n, shape_str(rep.shape), rep.counts_match, detail.str(), ms_since(t0)});
    }
}

void check_lengths(int n, SweepCache& cache, std::vector<VerifyRow>& rows) {
    for (const CellReport& rep : cache.for_n(n)) {
        const auto t0 = Clock::now();
        std::ostringstream detail;
        detail << "min length " << rep.min_length << " expected " << n_lambda(rep.shape)
               << "; max length " << rep.max_length << " expected "
               << max_length_formula(rep.shape, n);
        rows.push_back({"lengths", n, shape_str(rep.shape), rep.lengths_match, detail.str(), ms_since(t0)});
    }
}

void check_kl_criterion(int n, bool override_ceiling, std::vector<VerifyRow>& rows) {
    const auto t0 = Clock::now();
    const bool ok = verify_smoothness_criterion(n, override_ceiling);
    std::ostringstream detail;
    detail << "P_{e,w}=1 iff {4231,3412}-avoiding; involutions: delta=0 iff Young-longest ("
           << factorial(n) << " permutations)";
    rows.push_back({"kl-criterion", n, "-", ok, detail.str(), ms_since(t0)});
}

void check_bijections(int n, std::vector<VerifyRow>& rows) {
    const auto t0 = Clock::now();
    const bool full = n <= kFullRsCeiling;
    bool ok = true;
    std::uint64_t involutions = 0;
    for (const Permutation& w : all_permutations(n)) {
        const auto [p, q] = robinson_schensted(w);
        if (p.shape() != q.shape()) ok = false;
        const Permutation wi = inverse(w);
        const bool is_involution = wi == w;
        if (is_involution) ++involutions;
        if ((p == q) != is_involution) ok = false;
        if (full) {
            if (inverse_rs(p, q) != w) ok = false;
            const auto [pi, qi] = robinson_schensted(wi);
            if (pi != q || qi != p) ok = false;
        }
        if (!ok) break;
    }
    std::uint64_t sum_f = 0, sum_f2 = 0;
    for (const Partition& shape : partitions_of(n)) {
        const std::uint64_t f = hook_length_count(shape);
        sum_f += f;
        sum_f2 += f * f;
    }
    if (sum_f2 != factorial(n) || sum_f != involutions) ok = false;
    std::ostringstream detail;
    detail << (full ? "round-trip, shapes, inverse symmetry, " : "shapes, ")
           << "sum f^2=" << sum_f2 << ", involutions=" << involutions;
    rows.push_back({"bijections", n, "-", ok, detail.str(), ms_since(t0)});
}

void check_knuth(int n, SweepCache& cache, std::vector<VerifyRow>& rows) {
    const auto t0 = Clock::now();
    bool ok = true;
    for (const Permutation& w : all_permutations(n)) {
        const long long lw = length(w);
        const StandardTableau p = robinson_schensted(w).first;
        const StandardTableau q = robinson_schensted(w).second;
        for (const Permutation& u : knuth_moves(w))
            if (robinson_schensted(u).first != p || std::llabs(length(u) - lw) != 1) ok = false;
        for (const Permutation& u : dual_knuth_moves(w))
            if (robinson_schensted(u).second != q || std::llabs(length(u) - lw) != 1) ok = false;
        if (!ok) break;
    }
    for (const CellReport& rep : cache.for_n(n)) {
        if (!ok) break;
        if (!cell_connected_under_knuth(two_sided_cell(rep.shape, n))) ok = false;
    }
    std::ostringstream detail;
    detail << "P/Q preservation and cell connectivity over " << factorial(n) << " permutations";
    rows.push_back({"knuth", n, "-", ok, detail.str(), ms_since(t0)});
}

void check_evacuation(int n, std::vector<VerifyRow>& rows) {
    const auto t0 = Clock::now();
    bool ok = true;
    std::uint64_t tableaux = 0;
    for (const Partition& shape : partitions_of(n))
        for (const StandardTableau& t : enumerate_syt(shape)) {
            ++tableaux;
            const StandardTableau e = evacuation(t);
            if (e.shape() != t.shape() || evacuation(e) != t) ok = false;
        }
    const bool full = n <= kFullRsCeiling;
    if (full) {
        const Permutation w0 = Permutation::longest(n);
        for (const Permutation& w : all_permutations(n)) {
            const StandardTableau q = robinson_schensted(w).second;
            if (robinson_schensted(compose(w, w0)).second != evacuation(transpose(q))) ok = false;
        }
    }
    std::ostringstream detail;
    detail << "involution on " << tableaux << " tableaux"
           << (full ? "; Q(w*w0) identity over all w" : "");
    rows.push_back({"evacuation", n, "-", ok, detail.str(), ms_since(t0)});
}

} // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {"theorem-min", "corollary-max", "counts",
                                                   "lengths",     "kl-criterion",  "bijections",
                                                   "knuth",       "evacuation"};
    return names;
}

VerifyReport run_verify(const VerifyConfig& config) {
    if (config.n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (config.parallel_workers < 1) throw std::invalid_argument("parallel_workers must be >= 1");

    std::vector<std::string> checks;
    for (const std::string& c : config.checks.empty() ? known_checks() : config.checks) {
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
            throw std::invalid_argument("unknown check: " + c);
        if (std::find(checks.begin(), checks.end(), c) == checks.end()) checks.push_back(c);
    }

    SweepCache cache;
    cache.workers = config.parallel_workers;
    VerifyReport report;
    for (const std::string& check : checks) {
        for (int n = 1; n <= config.n_max; ++n) {
            if (check == "kl-criterion" && n > kKlCeiling && !config.override_ceiling) {
                std::fprintf(stderr, "[verify] %s: skipping n=%d (ceiling %d, no override)\n",
                             check.c_str(), n, kKlCeiling);
                continue;
            }
            if (check == "knuth" && n > kKnuthCeiling) continue;
            std::fprintf(stderr, "[verify] %s n=%d...\n", check.c_str(), n);
            if (check == "theorem-min") check_theorem_min(n, cache, report.rows);
            else if (check == "corollary-max") check_corollary_max(n, cache, report.rows);
            else if (check == "counts") check_counts(n, cache, report.rows);
            else if (check == "lengths") check_lengths(n, cache, report.rows);
            else if (check == "kl-criterion") check_kl_criterion(n, config.override_ceiling, report.rows);
            else if (check == "bijections") check_bijections(n, report.rows);
            else if (check == "knuth") check_knuth(n, cache, report.rows);
            else if (check == "evacuation") check_evacuation(n, report.rows);
        }
    }
    for (const VerifyRow& row : report.rows) report.all_pass = report.all_pass && row.verdict;
    return report;
}

std::string render_report(const VerifyReport& report, VerifyConfig::Format format) {
    std::ostringstream out;
    switch (format) {
    case VerifyConfig::Format::json: {
        nlohmann::json rows = nlohmann::json::array();
        for (const VerifyRow& r : report.rows)
            rows.push_back({{"check", r.check},
                            {"n", r.n},
                            {"shape", r.shape},
                            {"verdict", r.verdict},
                            {"detail", r.detail},
                            {"millis", r.millis}});
        out << nlohmann::json{{"rows", rows}, {"all_pass", report.all_pass}}.dump() << "\n";
        break;
    }
    case VerifyConfig::Format::csv: {
        out << "check,n,shape,verdict,detail,millis\n";
        for (const VerifyRow& r : report.rows) {
            std::string detail = r.detail;
            std::replace(detail.begin(), detail.end(), ',', ';');
            out << r.check << ',' << r.n << ',' << r.shape << ',' << (r.verdict ? "true" : "false")
                << ',' << detail << ',' << r.millis << "\n";
        }
        break;
    }
    case VerifyConfig::Format::text: {
        for (const VerifyRow& r : report.rows)
            out << (r.verdict ? "pass" : "FAIL") << "  " << r.check << "  n=" << r.n
                << "  shape=" << r.shape << "  " << r.detail << "  (" << r.millis << " ms)\n";
        out << (report.all_pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
        break;
    }
    }
    return out.str();
}

int sweep_ceiling() {
    if (const char* env = std::getenv("RS_CELLS_N_CEILING")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 9;
}

} // namespace rscells
