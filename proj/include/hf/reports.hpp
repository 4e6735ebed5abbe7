#pragma once

#include "hf/bounds.hpp"
#include "hf/codes.hpp"
#include "hf/golden.hpp"
#include "hf/spheres.hpp"
#include "hf/words.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hf {

using Json = nlohmann::ordered_json;

// One disagreement between a computed cell and the golden reference data.
struct DiffEntry {
    std::string table;
    std::string cell;
    std::string expected;
    std::string computed;
    std::string formula;
    bool whitelisted = false;
};

// Outcome of one verification sweep.
struct SuiteResult {
    std::string suite;
    bool passed = false;
    std::uint64_t checks = 0;
    std::string detail;  // first counterexample when failed, summary otherwise
};

// Payload of one command: machine-readable rows plus diff and suite
// sections. CSV output never contains the timestamp, so it is byte-identical
// across runs.
struct ReportBundle {
    std::string command;
    Json params = Json::object();
    std::string timestamp;
    Json rows = Json::array();
    std::vector<DiffEntry> diffs;
    std::vector<SuiteResult> suites;
    std::string csv_header;
    std::vector<std::string> csv_rows;
    std::string text_body;
};

// 0: all diffs empty or whitelisted and all suites passed;
// 2: diffs beyond the whitelist; 3: suite failure.
int exit_code(const ReportBundle& bundle);

std::string render_json(const ReportBundle& bundle);
std::string render_csv(const ReportBundle& bundle);
std::string render_text(const ReportBundle& bundle);

// Bound grid for q = 4 with diffs against the golden table. Upper blocks run
// d = 1..min(5, max_d), lower blocks d = 1..min(3, max_d).
ReportBundle cmd_table1(int max_n, int max_d, std::uint64_t budget = kDefaultBudget);

// Sphere profiles of the extremal pattern words for q = 4, n = 1..max_n.
ReportBundle cmd_table2(int max_n);

// Groups C_{4,n} by full sphere profile; diffs against the golden class
// tables for n = 4 and n = 5.
ReportBundle cmd_classify(int n, std::uint64_t budget = kDefaultBudget);

// Rate curves for the classic and homopolymer-free bounds, n = d..n_max.
// For q = 4, d = 3 the closed-average comparison curve is included.
ReportBundle cmd_curves(int q, int d, int n_max);

// Invariant sweeps: "oracle", "closed-form", "extremal", "sandwich", "all".
ReportBundle cmd_verify(const std::string& suite, std::uint64_t budget = kDefaultBudget,
                        std::uint64_t seed = 20230517);

// Sphere profile of one center in the profile CSV schema.
ReportBundle cmd_profile(const Word& center, int max_radius);

// "%.12g" rendering used for every floating-point field.
std::string fmt_double(double value);

}  // namespace hf
