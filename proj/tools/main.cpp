#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rscells/cells.hpp"
#include "rscells/json_io.hpp"
#include "rscells/kl.hpp"
#include "rscells/perm.hpp"
#include "rscells/rsk.hpp"
#include "rscells/tableau.hpp"
#include "rscells/verify.hpp"

// rscells: query and verify the Robinson-Schensted cell structure of S_n.
// Machine-readable payload goes to stdout, progress and errors to stderr.
// Exit codes: 0 ok / all verdicts true, 1 some verify verdict false,
// 2 usage or input error.

namespace {

using rscells::Permutation;

nlohmann::json read_stdin_json() {
    nlohmann::json j;
    std::cin >> j;
    return j;
}

Permutation permutation_from_arg(const std::string& arg, bool from_stdin) {
    if (from_stdin) return rscells::permutation_from_json(read_stdin_json());
    return Permutation(rscells::parse_int_list(arg));
}

int cmd_rs(const std::string& word, bool json_stdin) {
    const Permutation w = permutation_from_arg(word, json_stdin);
    const auto [p, q] = rscells::robinson_schensted(w);
    std::cout << nlohmann::json{{"P", rscells::to_json(p)}, {"Q", rscells::to_json(q)}}.dump()
              << "\n";
    return 0;
}

int cmd_unrs(const std::string& p_arg, const std::string& q_arg, bool json_stdin) {
    rscells::StandardTableau p, q;
    if (json_stdin) {
        const nlohmann::json j = read_stdin_json();
        p = rscells::tableau_from_json(j.at("P"));
        q = rscells::tableau_from_json(j.at("Q"));
    } else {
        p = rscells::tableau_from_json(nlohmann::json::parse(p_arg));
        q = rscells::tableau_from_json(nlohmann::json::parse(q_arg));
    }
    std::cout << rscells::to_json(rscells::inverse_rs(p, q)).dump() << "\n";
    return 0;
}

int cmd_evac(const std::string& arg, bool json_stdin) {
    const rscells::StandardTableau t =
        rscells::tableau_from_json(json_stdin ? read_stdin_json() : nlohmann::json::parse(arg));
    std::cout << rscells::to_json(rscells::evacuation(t)).dump() << "\n";
    return 0;
}

int cmd_cell(const std::string& shape_arg, int n, bool only_min, bool only_max, bool csv,
             bool override_ceiling) {
    if (n > rscells::sweep_ceiling() && !override_ceiling) {
        std::cerr << "cell: n=" << n << " exceeds the sweep ceiling of " << rscells::sweep_ceiling()
                  << "; pass --override (or set RS_CELLS_N_CEILING) to proceed\n";
        return 2;
    }
    const rscells::Partition shape(rscells::parse_int_list(shape_arg));
    if (only_min || only_max) {
        const auto elems = only_min ? rscells::min_elements(shape, n) : rscells::max_elements(shape, n);
        for (const Permutation& w : elems) std::cout << rscells::to_json(w).dump() << "\n";
        return 0;
    }
    const rscells::CellReport rep = rscells::analyze_cell(shape, rscells::two_sided_cell(shape, n));
    if (csv)
        std::cout << rscells::cell_report_csv_header() << "\n"
                  << rscells::cell_report_csv_row(rep) << "\n";
    else
        std::cout << rscells::to_json(rep).dump() << "\n";
    return 0;
}

int cmd_kl(const std::string& x_arg, const std::string& w_arg, bool want_delta, bool override_ceiling) {
    const Permutation x(rscells::parse_int_list(x_arg));
    const Permutation w(rscells::parse_int_list(w_arg));
    const rscells::IntPolynomial p = rscells::kl_polynomial(x, w, override_ceiling);
    if (want_delta) {
        std::cout << p.degree() << "\n";
    } else {
        std::cout << rscells::to_json(p).dump() << "\n";
    }
    return 0;
}

int cmd_count(const std::string& shape_arg) {
    const rscells::Partition shape(rscells::parse_int_list(shape_arg));
    const std::uint64_t f = rscells::hook_length_count(shape);
    std::cout << nlohmann::json{{"shape", shape.parts()},
                                {"n", shape.sum()},
                                {"count_min", rscells::count_min(shape)},
                                {"count_max", rscells::count_max(shape)},
                                {"n_lambda", rscells::n_lambda(shape)},
                                {"max_length", rscells::max_length_formula(shape, shape.sum())},
                                {"f_lambda", f},
                                {"cell_size", f * f}}
                     .dump()
              << "\n";
    return 0;
}

int cmd_verify(const rscells::VerifyConfig& config) {
    if (config.n_max > rscells::sweep_ceiling() && !config.override_ceiling) {
        std::cerr << "verify: n=" << config.n_max << " exceeds the sweep ceiling of "
                  << rscells::sweep_ceiling()
                  << "; pass --override (or set RS_CELLS_N_CEILING) to proceed\n";
        return 2;
    }
    const rscells::VerifyReport report = rscells::run_verify(config);
    std::cout << rscells::render_report(report, config.format);
    return report.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robinson-Schensted cells of the symmetric group: queries and exhaustive checks"};
    app.require_subcommand(1);

    std::string word, p_arg, q_arg, tab_arg, shape_arg, x_arg, w_arg;
    bool json_stdin = false, only_min = false, only_max = false, csv = false, override_ceiling = false;
    bool want_delta = false;
    int n = 0;

    auto* rs = app.add_subcommand("rs", "Insertion and recording tableaux of a permutation");
    rs->add_option("word", word, "comma-separated one-line word, e.g. 4,3,2,1,6,5,7");
    rs->add_flag("--json", json_stdin, "read the permutation as a JSON array from stdin");

    auto* unrs = app.add_subcommand("unrs", "Permutation mapped to a tableau pair");
    unrs->add_option("--p", p_arg, "insertion tableau as JSON rows");
    unrs->add_option("--q", q_arg, "recording tableau as JSON rows");
    unrs->add_flag("--json", json_stdin, "read {\"P\":...,\"Q\":...} from stdin");

    auto* evac = app.add_subcommand("evac", "Schutzenberger evacuation of a standard tableau");
    evac->add_option("tableau", tab_arg, "tableau as JSON rows, e.g. [[1,3],[2,4]]");
    evac->add_flag("--json", json_stdin, "read the tableau from stdin");

    auto* cell = app.add_subcommand("cell", "Two-sided cell of a shape: report or min/max elements");
    cell->add_option("--shape", shape_arg, "partition, e.g. 3,2,1,1")->required();
    cell->add_option("--n", n, "symmetric group degree")->required();
    cell->add_flag("--min", only_min, "print only the minimal-length elements");
    cell->add_flag("--max", only_max, "print only the maximal-length elements");
    cell->add_flag("--csv", csv, "emit the report as a CSV summary row");
    cell->add_flag("--override", override_ceiling, "allow n above the sweep ceiling");

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
    kl->add_option("--x", x_arg, "lower permutation, comma-separated")->required();
    kl->add_option("--w", w_arg, "upper permutation, comma-separated")->required();
    kl->add_flag("--delta", want_delta, "print only the degree");
    kl->add_flag("--override", override_ceiling, "allow n above the KL ceiling of 7");

    auto* count = app.add_subcommand("count", "Closed-form counts and lengths for a shape");
    count->add_option("--shape", shape_arg, "partition, e.g. 3,2,1,1")->required();

    rscells::VerifyConfig config;
    std::string format = "text", checks_arg;
    auto* verify = app.add_subcommand("verify", "Run exhaustive checks for n = 1..N");
    verify->add_option("--n", config.n_max, "largest symmetric group degree")->default_val(8);
    verify->add_option("--checks", checks_arg, "comma-separated subset of: theorem-min, corollary-max, "
                                               "counts, lengths, kl-criterion, bijections, knuth, evacuation");
    verify->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--workers", config.parallel_workers, "worker threads for the S_n sweeps")
        ->default_val(1);
    verify->add_flag("--override", config.override_ceiling, "allow n above the ceilings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rs->parsed()) return cmd_rs(word, json_stdin);
        if (unrs->parsed()) return cmd_unrs(p_arg, q_arg, json_stdin);
        if (evac->parsed()) return cmd_evac(tab_arg, json_stdin);
        if (cell->parsed()) {
            if (only_min && only_max) {
                std::cerr << "cell: --min and --max are mutually exclusive\n";
                return 2;
            }
            return cmd_cell(shape_arg, n, only_min, only_max, csv, override_ceiling);
        }
        if (kl->parsed()) return cmd_kl(x_arg, w_arg, want_delta, override_ceiling);
        if (count->parsed()) return cmd_count(shape_arg);
        if (verify->parsed()) {
            if (!checks_arg.empty()) {
                std::size_t pos = 0;
                while (pos <= checks_arg.size()) {
                    const std::size_t comma = checks_arg.find(',', pos);
                    const std::size_t end = comma == std::string::npos ? checks_arg.size() : comma;
                    if (end > pos) config.checks.push_back(checks_arg.substr(pos, end - pos));
                    if (comma == std::string::npos) break;
                    pos = comma + 1;
                }
            }
            if (format == "json") config.format = rscells::VerifyConfig::Format::json;
            else if (format == "csv") config.format = rscells::VerifyConfig::Format::csv;
            else config.format = rscells::VerifyConfig::Format::text;
            return cmd_verify(config);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
