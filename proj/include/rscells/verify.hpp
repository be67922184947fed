#pragma once

#include <string>
#include <vector>

#include "rscells/perm.hpp"

// Verification harness behind the `verify` CLI subcommand: runs the named
// checks for n = 1..n_max and reports one verdict row per (check, n, shape)
// unit. A false verdict is a report outcome, not an error.

namespace rscells {

struct VerifyConfig {
    int n_max = 8;
    std::vector<std::string> checks; // empty means all known checks
    enum class Format { json, csv, text } format = Format::text;
    int parallel_workers = 1;
    bool override_ceiling = false;
};

struct VerifyRow {
    std::string check;
    int n = 0;
    std::string shape; // "-" for whole-S_n rows
    bool verdict = false;
    std::string detail;
    long long millis = 0;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_pass = true;
};

// theorem-min, corollary-max, counts, lengths, kl-criterion, bijections,
// knuth, evacuation.
const std::vector<std::string>& known_checks();

// Throws std::invalid_argument on bad config (unknown check, n_max < 1).
// Progress goes to stderr; the returned rows are deterministic for a fixed
// config regardless of parallel_workers.
VerifyReport run_verify(const VerifyConfig& config);

std::string render_report(const VerifyReport& report, VerifyConfig::Format format);

// Default sweep ceiling (9), or the value of RS_CELLS_N_CEILING if set.
int sweep_ceiling();

} // namespace rscells
