#include "hf/reports.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <map>
#include <random>
#include <sstream>

namespace hf {

namespace {

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string big_to_string(const BigInt& v) { return v.str(); }

std::string sanitize_csv(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

Word random_hf_word(Alphabet alphabet, int n, std::mt19937_64& rng) {
    std::vector<int> symbols(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> first(0, alphabet.q - 1);
    symbols[0] = first(rng);
    std::uniform_int_distribution<int> step(0, alphabet.q - 2);
    for (int i = 1; i < n; ++i) {
        int v = step(rng);
        if (v >= symbols[static_cast<std::size_t>(i - 1)]) ++v;
        symbols[static_cast<std::size_t>(i)] = v;
    }
    return Word::unchecked(std::move(symbols), alphabet);
}

}  // namespace

std::string fmt_double(double value) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

int exit_code(const ReportBundle& bundle) {
    for (const SuiteResult& suite : bundle.suites)
        if (!suite.passed) return 3;
    for (const DiffEntry& diff : bundle.diffs)
        if (!diff.whitelisted) return 2;
    return 0;
}

std::string render_csv(const ReportBundle& bundle) {
    std::ostringstream out;
    out << bundle.csv_header << "\n";
    for (const std::string& row : bundle.csv_rows) out << row << "\n";
    return out.str();
}

std::string render_json(const ReportBundle& bundle) {
    Json j = Json::object();
    j["command"] = bundle.command;
    j["params"] = bundle.params;
    j["timestamp"] = bundle.timestamp;
    j["rows"] = bundle.rows;
    Json diffs = Json::array();
    for (const DiffEntry& d : bundle.diffs) {
        diffs.push_back(Json{{"table", d.table},
                             {"cell", d.cell},
                             {"expected", d.expected},
                             {"computed", d.computed},
                             {"formula", d.formula},
                             {"whitelisted", d.whitelisted}});
    }
    j["diffs"] = diffs;
    Json suites = Json::array();
    for (const SuiteResult& s : bundle.suites) {
        suites.push_back(Json{{"suite", s.suite},
                              {"passed", s.passed},
                              {"checks", s.checks},
                              {"detail", s.detail}});
    }
    j["suite_results"] = suites;
    return j.dump(2) + "\n";
}

std::string render_text(const ReportBundle& bundle) {
    std::ostringstream out;
    out << "command: " << bundle.command << "\n";
    out << "params: " << bundle.params.dump() << "\n";
    out << "timestamp: " << bundle.timestamp << "\n\n";
    out << bundle.text_body;
    if (!bundle.diffs.empty()) {
        out << "\ndiffs:\n";
        for (const DiffEntry& d : bundle.diffs) {
            out << "  " << d.table << " " << d.cell << ": expected " << d.expected
                << ", computed " << d.computed << (d.whitelisted ? " [whitelisted]" : "")
                << "  via " << d.formula << "\n";
        }
    } else if (bundle.command == "table1" || bundle.command == "table2" ||
               bundle.command == "classify") {
        out << "\ndiffs: none\n";
    }
    for (const SuiteResult& s : bundle.suites) {
        out << (s.passed ? "[PASS] " : "[FAIL] ") << s.suite << " (" << s.checks
            << " checks)";
        if (!s.detail.empty()) out << " " << s.detail;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// table1

namespace {

struct Table1Block {
    const char* name;
    BoundKind kind;
    int max_d;
    const char* formula;
};

constexpr Table1Block kTable1Blocks[] = {
    {"upper1", BoundKind::HfUpper1, 5, "floor(q(q-1)^(n-1) / S(a_min, floor((d-1)/2)))"},
    {"upper3", BoundKind::HfUpper3, 5, "floor(q(q-1)^(n-1) / avg(floor((d-1)/2)))"},
    {"lower1", BoundKind::HfLower1, 3, "ceil(q(q-1)^(n-1) / S(a_max, d-1))"},
    {"lower3", BoundKind::HfLower3, 3, "ceil(q(q-1)^(n-1) / avg(d-1))"},
};

BoundReport table1_cell(BoundKind kind, int n, int d, std::uint64_t budget) {
    const Alphabet q4(4);
    switch (kind) {
        case BoundKind::HfUpper1: return hf_upper_1(q4, n, d, budget);
        case BoundKind::HfLower1: return hf_lower_1(q4, n, d, budget);
        case BoundKind::HfUpper3: {
            const int r = (d - 1) / 2;
            return hf_upper_3(q4, n, d, average_cumulative(q4, n, r, AveragePath::Expectation));
        }
        case BoundKind::HfLower3: {
            const int r = d - 1;
            return hf_lower_3(q4, n, d, average_cumulative(q4, n, r, AveragePath::Expectation));
        }
        default: throw BadParameters("not a table block");
    }
}

std::string grid_text(const std::string& title,
                      const std::vector<std::pair<int, std::vector<std::string>>>& rows,
                      int max_n) {
    std::size_t width = 5;
    for (const auto& [d, cells] : rows)
        for (const std::string& c : cells) width = std::max(width, c.size());
    std::ostringstream out;
    out << title << "\n";
    out << "  d\\n";
    for (int n = 1; n <= max_n; ++n) {
        std::string head = std::to_string(n);
        out << std::string(width + 1 - head.size(), ' ') << head;
    }
    out << "\n";
    for (const auto& [d, cells] : rows) {
        std::string head = std::to_string(d);
        out << "  " << head << std::string(3 - head.size(), ' ');
        for (const std::string& c : cells) out << std::string(width + 1 - c.size(), ' ') << c;
        out << "\n";
    }
    return out.str();
}

}  // namespace

ReportBundle cmd_table1(int max_n, int max_d, std::uint64_t budget) {
    if (max_n < 1 || max_d < 1) throw BadParameters("table1 needs max_n >= 1 and max_d >= 1");
    if (max_n > 12) throw BudgetExceeded("table1 supports max_n <= 12");
    ReportBundle bundle;
    bundle.command = "table1";
    bundle.params = Json{{"max_n", max_n}, {"max_d", max_d}};
    bundle.timestamp = utc_timestamp();
    bundle.csv_header = "block,d,n,value";

    // computed[block][d][n]
    std::map<std::string, std::map<int, std::map<int, BigInt>>> computed;
    std::ostringstream text;
    for (const Table1Block& block : kTable1Blocks) {
        std::vector<std::pair<int, std::vector<std::string>>> grid_rows;
        for (int d = 1; d <= std::min(block.max_d, max_d); ++d) {
            std::vector<std::string> cells;
            for (int n = 1; n <= max_n; ++n) {
                if (d > n) {
                    cells.push_back("-");
                    continue;
                }
                const BoundReport report = table1_cell(block.kind, n, d, budget);
                const BigInt value = *report.value;
                computed[block.name][d][n] = value;
                cells.push_back(big_to_string(value));
                bundle.rows.push_back(Json{{"block", block.name},
                                           {"d", d},
                                           {"n", n},
                                           {"value", big_to_string(value)},
                                           {"denominator", rat_to_string(report.denominator)},
                                           {"rate", report.rate}});
                bundle.csv_rows.push_back(std::string(block.name) + "," + std::to_string(d) +
                                          "," + std::to_string(n) + "," + big_to_string(value));
            }
            grid_rows.emplace_back(d, std::move(cells));
        }
        text << grid_text(std::string(block.name) + "  [" + block.formula + "]", grid_rows,
                          max_n)
             << "\n";
    }
    bundle.text_body = text.str();

    for (const golden::BoundCell& cell : golden::table1()) {
        if (cell.n > max_n || cell.d > max_d) continue;
        const auto block_it = computed.find(cell.block);
        if (block_it == computed.end()) continue;
        const auto d_it = block_it->second.find(cell.d);
        if (d_it == block_it->second.end()) continue;
        const auto n_it = d_it->second.find(cell.n);
        if (n_it == d_it->second.end()) continue;
        if (n_it->second != cell.value) {
            const char* formula = "";
            for (const Table1Block& block : kTable1Blocks)
                if (cell.block == std::string(block.name)) formula = block.formula;
            bundle.diffs.push_back(
                {"table1", std::string(cell.block) + " d=" + std::to_string(cell.d) +
                               " n=" + std::to_string(cell.n),
                 std::to_string(cell.value), big_to_string(n_it->second), formula,
                 golden::table1_whitelisted(cell.block, cell.d, cell.n)});
        }
    }
    return bundle;
}

// ---------------------------------------------------------------------------
// table2 and profiles

namespace {

void push_profile_rows(ReportBundle& bundle, const SphereProfile& profile, int max_radius,
                       const std::string& kind = "") {
    const int n = profile.center.length();
    const std::string center = to_text(profile.center);
    for (int r = 0; r <= std::min(max_radius, n); ++r) {
        const std::string size = big_to_string(profile.sizes[static_cast<std::size_t>(r)]);
        Json row{{"n", n},
                 {"q", profile.center.q()},
                 {"center", center},
                 {"r", r},
                 {"size", size}};
        if (!kind.empty()) row["kind"] = kind;
        bundle.rows.push_back(std::move(row));
        bundle.csv_rows.push_back(std::to_string(n) + "," + std::to_string(profile.center.q()) +
                                  "," + center + "," + std::to_string(r) + "," + size);
    }
}

}  // namespace

ReportBundle cmd_table2(int max_n) {
    if (max_n < 1) throw BadParameters("table2 needs max_n >= 1");
    if (max_n > 12) throw BudgetExceeded("table2 supports max_n <= 12");
    ReportBundle bundle;
    bundle.command = "table2";
    bundle.params = Json{{"max_n", max_n}};
    bundle.timestamp = utc_timestamp();
    bundle.csv_header = "n,q,center,r,size";

    const Alphabet q4(4);
    std::ostringstream text;
    // profiles[n][kind] -> sizes at radii 1..n
    std::map<int, std::map<std::string, std::vector<BigInt>>> computed;
    for (int n = 1; n <= max_n; ++n) {
        const std::vector<std::pair<std::string, Word>> kinds =
            n == 1 ? std::vector<std::pair<std::string, Word>>{
                         {"a_min=a_max", min_pattern_word(q4, n)}}
                   : std::vector<std::pair<std::string, Word>>{
                         {"a_min", min_pattern_word(q4, n)},
                         {"a_max", max_pattern_word(q4, n)}};
        for (const auto& [kind, word] : kinds) {
            const SphereProfile profile = sphere_profile(word);
            push_profile_rows(bundle, profile, n, kind);
            std::vector<BigInt> tail(profile.sizes.begin() + 1, profile.sizes.end());
            text << "n=" << n << " " << kind << " (" << to_text(word) << "):";
            for (const BigInt& s : tail) text << " " << s;
            text << "\n";
            computed[n][kind] = std::move(tail);
        }
    }
    bundle.text_body = text.str();

    for (const golden::ProfileRow& row : golden::table2()) {
        if (row.n > max_n) continue;
        const auto& sizes = computed[row.n][row.kind];
        for (int r = 1; r <= row.n; ++r) {
            const long long expected = row.sizes[static_cast<std::size_t>(r - 1)];
            const BigInt& got = sizes[static_cast<std::size_t>(r - 1)];
            if (got != expected) {
                bundle.diffs.push_back({"table2",
                                        std::string(row.kind) + " n=" + std::to_string(row.n) +
                                            " r=" + std::to_string(r),
                                        std::to_string(expected), big_to_string(got),
                                        "recurrence table over the pattern word", false});
            }
        }
    }
    return bundle;
}

ReportBundle cmd_profile(const Word& center, int max_radius) {
    if (max_radius < 0) throw RadiusOutOfRange("radius must be nonnegative");
    ReportBundle bundle;
    bundle.command = "profile";
    bundle.params = Json{{"center", to_text(center)}, {"q", center.q()},
                         {"n", center.length()}, {"max_radius", max_radius}};
    bundle.timestamp = utc_timestamp();
    bundle.csv_header = "n,q,center,r,size";
    const SphereProfile profile = sphere_profile(center);
    push_profile_rows(bundle, profile, max_radius);
    std::ostringstream text;
    text << "profile of " << to_text(center) << ":";
    for (int r = 0; r <= std::min(max_radius, center.length()); ++r)
        text << " " << profile.sizes[static_cast<std::size_t>(r)];
    text << "\n";
    bundle.text_body = text.str();
    return bundle;
}

// ---------------------------------------------------------------------------
// classify

ReportBundle cmd_classify(int n, std::uint64_t budget) {
    if (n < 1) throw BadParameters("classify needs n >= 1");
    if (n > 7) throw BudgetExceeded("classify supports n <= 7");
    const Alphabet q4(4);
    if (count_hf(q4, n) > budget) throw BudgetExceeded("classification exceeds the budget");
    ReportBundle bundle;
    bundle.command = "classify";
    bundle.params = Json{{"q", 4}, {"n", n}};
    bundle.timestamp = utc_timestamp();
    bundle.csv_header = "class,count,profile,representative";

    struct ClassInfo {
        long long count = 0;
        std::vector<int> representative;
    };
    std::map<std::vector<BigInt>, ClassInfo> classes;
    for_each_hf(q4, n, [&](const std::vector<int>& w) {
        SphereProfile profile = sphere_profile(Word::unchecked(w, q4));
        std::vector<BigInt> key(profile.sizes.begin() + 1, profile.sizes.end());
        ClassInfo& info = classes[key];
        if (info.count == 0) info.representative = w;  // lexicographic scan order
        ++info.count;
    });

    std::ostringstream text;
    int index = 0;
    for (const auto& [profile, info] : classes) {
        ++index;
        const Word rep = Word::unchecked(info.representative, q4);
        std::string profile_text;
        Json profile_json = Json::array();
        for (const BigInt& s : profile) {
            if (!profile_text.empty()) profile_text += "|";
            profile_text += big_to_string(s);
            profile_json.push_back(big_to_string(s));
        }
        bundle.rows.push_back(Json{{"class", index},
                                   {"count", info.count},
                                   {"profile", profile_json},
                                   {"representative", to_text(rep)},
                                   {"representative_dna", to_dna(rep)}});
        bundle.csv_rows.push_back(std::to_string(index) + "," + std::to_string(info.count) +
                                  "," + profile_text + "," + to_text(rep));
        text << "class " << index << ": count=" << info.count << " profile=" << profile_text
             << " representative=" << to_text(rep) << " (" << to_dna(rep) << ")\n";
    }
    bundle.text_body = text.str();

    const std::vector<golden::ClassRow>* golden_rows = nullptr;
    if (n == 4) golden_rows = &golden::table3();
    if (n == 5) golden_rows = &golden::table4();
    if (golden_rows != nullptr) {
        const std::string table = n == 4 ? "table3" : "table4";
        if (classes.size() != golden_rows->size()) {
            bundle.diffs.push_back({table, "class count",
                                    std::to_string(golden_rows->size()),
                                    std::to_string(classes.size()),
                                    "grouping by full sphere profile", false});
        } else {
            std::size_t i = 0;
            for (const auto& [profile, info] : classes) {
                const golden::ClassRow& expected = (*golden_rows)[i];
                bool same = info.count == expected.count;
                for (int r = 1; r <= n && same; ++r)
                    same = profile[static_cast<std::size_t>(r - 1)] ==
                           expected.profile[static_cast<std::size_t>(r - 1)];
                if (!same) {
                    std::string expected_text = std::to_string(expected.count) + " x";
                    for (int r = 1; r <= n; ++r)
                        expected_text +=
                            " " + std::to_string(expected.profile[static_cast<std::size_t>(r - 1)]);
                    std::string got_text = std::to_string(info.count) + " x";
                    for (const BigInt& s : profile) got_text += " " + big_to_string(s);
                    bundle.diffs.push_back({table, "class " + std::to_string(i + 1),
                                            expected_text, got_text,
                                            "grouping by full sphere profile", false});
                }
                ++i;
            }
        }
    }
    return bundle;
}

// ---------------------------------------------------------------------------
// curves

namespace {

BigRat caption_average(int n) {
    // Closed average printed alongside the rate figure: exact for n <= 3,
    // divergent from the exact mean for n >= 4 (kept as a comparison curve).
    if (n == 2) return 12;
    if (n == 3) return BigRat(59, 3);
    return BigRat(8 * BigInt(n + 2) * (n + 2) + 235, 9);
}

void push_curve_row(ReportBundle& bundle, const std::string& curve, const BoundReport& report) {
    bundle.rows.push_back(Json{{"curve", curve},
                               {"q", report.q},
                               {"n", report.n},
                               {"d", report.d},
                               {"value_log10", report.value_log10},
                               {"rate", report.rate}});
    bundle.csv_rows.push_back(curve + "," + std::to_string(report.q) + "," +
                              std::to_string(report.n) + "," + std::to_string(report.d) + "," +
                              fmt_double(report.value_log10) + "," + fmt_double(report.rate));
}

}  // namespace

ReportBundle cmd_curves(int q, int d, int n_max) {
    if (q < 2 || d < 1 || n_max < d) throw BadParameters("curves need q >= 2, 1 <= d <= n_max");
    const Alphabet alphabet(q);
    ReportBundle bundle;
    bundle.command = "curves";
    bundle.params = Json{{"q", q}, {"d", d}, {"n_max", n_max}};
    bundle.timestamp = utc_timestamp();
    bundle.csv_header = "curve,q,n,d,value_log10,rate";

    enum class Family { ClassicSP, ClassicGV, Upper1, Lower1, Upper3, Lower3, Caption };
    const std::vector<std::pair<std::string, Family>> curves = {
        {"classic_sp", Family::ClassicSP}, {"classic_gv", Family::ClassicGV},
        {"hf_upper_1", Family::Upper1},    {"hf_lower_1", Family::Lower1},
        {"hf_upper_3", Family::Upper3},    {"hf_lower_3", Family::Lower3},
        {"caption_formula", Family::Caption}};

    for (const auto& [name, family] : curves) {
        if (family == Family::Caption && !(q == 4 && d == 3)) continue;
        for (int n = d; n <= n_max; ++n) {
            try {
                BoundReport report;
                switch (family) {
                    case Family::ClassicSP: report = classic_sp(alphabet, n, d); break;
                    case Family::ClassicGV: report = classic_gv(alphabet, n, d); break;
                    case Family::Upper1: report = hf_upper_1(alphabet, n, d); break;
                    case Family::Lower1: report = hf_lower_1(alphabet, n, d); break;
                    case Family::Upper3:
                        report = hf_upper_3(alphabet, n, d,
                                            average_cumulative(alphabet, n, (d - 1) / 2));
                        break;
                    case Family::Lower3:
                        report = hf_lower_3(alphabet, n, d,
                                            average_cumulative(alphabet, n, d - 1));
                        break;
                    case Family::Caption:
                        report = hf_lower_3(alphabet, n, d, caption_average(n));
                        break;
                }
                push_curve_row(bundle, name, report);
            } catch (const BudgetExceeded&) {
                // point not computable exactly at this size; omit it
            } catch (const UnsupportedRadius&) {
            } catch (const UnsupportedParameters&) {
            }
        }
    }
    bundle.text_body = "curve points: " + std::to_string(bundle.csv_rows.size()) + "\n";
    return bundle;
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct FailureTracker {
    SuiteResult result;
    explicit FailureTracker(std::string name) { result.suite = std::move(name); }
    bool ok() const { return result.detail.empty(); }
    void fail(const std::string& counterexample) {
        if (result.detail.empty()) result.detail = counterexample;
    }
    SuiteResult finish() {
        result.passed = result.detail.empty();
        if (result.passed) result.detail = "";
        return result;
    }
};

void oracle_full_sweep(FailureTracker& tracker, int q, int n, std::uint64_t budget) {
    const Alphabet alphabet(q);
    const BigInt total = count_hf(alphabet, n);
    if (total > budget) return;  // sweep skipped under a reduced budget
    const std::size_t m = total.convert_to<std::size_t>();
    std::vector<std::int8_t> flat;
    flat.reserve(m * static_cast<std::size_t>(n));
    for_each_hf(alphabet, n, [&](const std::vector<int>& w) {
        for (int s : w) flat.push_back(static_cast<std::int8_t>(s));
    });
    const std::size_t stride = static_cast<std::size_t>(n);
    std::vector<std::uint32_t> hist(m * static_cast<std::size_t>(n + 1), 0);
    for (std::size_t i = 0; i < m; ++i) hist[i * static_cast<std::size_t>(n + 1)] = 1;
    for (std::size_t i = 0; i < m; ++i) {
        const std::int8_t* wi = flat.data() + i * stride;
        for (std::size_t j = i + 1; j < m; ++j) {
            const std::int8_t* wj = flat.data() + j * stride;
            int dist = 0;
            for (std::size_t k = 0; k < stride; ++k) dist += wi[k] != wj[k];
            ++hist[i * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(dist)];
            ++hist[j * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(dist)];
        }
    }
    for (std::size_t i = 0; i < m && tracker.ok(); ++i) {
        std::vector<int> symbols(stride);
        for (std::size_t k = 0; k < stride; ++k) symbols[k] = flat[i * stride + k];
        const Word center = Word::unchecked(std::move(symbols), alphabet);
        const SphereProfile profile = sphere_profile(center);
        for (int r = 0; r <= n; ++r) {
            ++tracker.result.checks;
            const std::uint32_t expected =
                hist[i * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(r)];
            if (profile.sizes[static_cast<std::size_t>(r)] != expected) {
                tracker.fail("recurrence vs enumeration at q=" + std::to_string(q) +
                             " n=" + std::to_string(n) + " center=" + to_text(center) +
                             " r=" + std::to_string(r));
                break;
            }
        }
    }
}

SuiteResult suite_oracle(std::uint64_t budget, std::uint64_t seed) {
    FailureTracker tracker("oracle");
    for (int q : {3, 4, 5})
        for (int n = 1; n <= 7 && tracker.ok(); ++n) oracle_full_sweep(tracker, q, n, budget);
    const Alphabet q4(4);
    std::mt19937_64 rng(seed);
    for (int n : {8, 9, 10}) {
        if (!tracker.ok()) break;
        if (count_hf(q4, n) > budget) continue;
        for (int i = 0; i < 100 && tracker.ok(); ++i) {
            const Word center = random_hf_word(q4, n, rng);
            const std::vector<BigInt> oracle = sphere_profile_oracle(center, budget);
            const SphereProfile profile = sphere_profile(center);
            for (int r = 0; r <= n; ++r) {
                ++tracker.result.checks;
                if (profile.sizes[static_cast<std::size_t>(r)] !=
                    oracle[static_cast<std::size_t>(r)]) {
                    tracker.fail("recurrence vs enumeration at q=4 n=" + std::to_string(n) +
                                 " center=" + to_text(center) + " r=" + std::to_string(r));
                    break;
                }
            }
        }
    }
    return tracker.finish();
}

SuiteResult suite_closed_form(std::uint64_t budget) {
    FailureTracker tracker("closed-form");
    for (int q : {3, 4, 5, 6}) {
        const Alphabet alphabet(q);
        for (int n = 2; n <= 8 && tracker.ok(); ++n) {
            if (count_hf(alphabet, n) > budget) continue;
            for_each_hf(alphabet, n, [&](const std::vector<int>& w) {
                if (!tracker.ok()) return;
                const Word word = Word::unchecked(w, alphabet);
                ++tracker.result.checks;
                if (h1_closed_form(word) != STable(word, 1).sphere_size(1))
                    tracker.fail("radius-1 closed form differs at q=" + std::to_string(q) +
                                 " center=" + to_text(word));
            });
        }
    }
    for (int q : {3, 4, 5}) {
        const Alphabet alphabet(q);
        for (int n = 3; n <= 8 && tracker.ok(); ++n) {
            if (count_hf(alphabet, n) > budget) continue;
            for_each_hf(alphabet, n, [&](const std::vector<int>& w) {
                if (!tracker.ok()) return;
                const Word word = Word::unchecked(w, alphabet);
                ++tracker.result.checks;
                if (h2_closed_form(word) != STable(word, 2).sphere_size(2))
                    tracker.fail("radius-2 closed form differs at q=" + std::to_string(q) +
                                 " center=" + to_text(word));
            });
        }
    }
    for (int q : {4, 5, 6}) {
        const Alphabet alphabet(q);
        for (int n = 1; n <= 10 && tracker.ok(); ++n) {
            for (int r : {1, 2}) {
                if (r > n) continue;  // sphere radius beyond the length
                ++tracker.result.checks;
                if (extremal_min_closed_form(alphabet, n, r) !=
                    sphere_size_dp(min_pattern_word(alphabet, n), r))
                    tracker.fail("minimizer closed form differs at q=" + std::to_string(q) +
                                 " n=" + std::to_string(n) + " r=" + std::to_string(r));
                ++tracker.result.checks;
                if (extremal_max_closed_form(alphabet, n, r) !=
                    sphere_size_dp(max_pattern_word(alphabet, n), r))
                    tracker.fail("maximizer closed form differs at q=" + std::to_string(q) +
                                 " n=" + std::to_string(n) + " r=" + std::to_string(r));
            }
        }
    }
    return tracker.finish();
}

SuiteResult suite_extremal(std::uint64_t budget) {
    FailureTracker tracker("extremal");
    const Alphabet q4(4);
    for (int n = 4; n <= 8 && tracker.ok(); ++n) {
        for (int radius : {1, 2}) {
            const ExtremalCenters searched = extremal_search(q4, n, radius, budget);
            const ExtremalCenters pattern = extremal_centers(q4, n, radius, budget);
            ++tracker.result.checks;
            if (searched.cumulative_min != pattern.cumulative_min ||
                searched.cumulative_max != pattern.cumulative_max)
                tracker.fail("search disagrees with pattern sums at n=" + std::to_string(n) +
                             " R=" + std::to_string(radius));
            ++tracker.result.checks;
            if (cumulative_sphere_sum(min_pattern_word(q4, n), radius) !=
                    searched.cumulative_min ||
                cumulative_sphere_sum(max_pattern_word(q4, n), radius) !=
                    searched.cumulative_max)
                tracker.fail("pattern words fail to attain the searched extremes at n=" +
                             std::to_string(n) + " R=" + std::to_string(radius));
        }
    }
    if (tracker.ok()) {
        const ExtremalCenters binary = extremal_search(Alphabet(2), 4, 1, budget);
        ++tracker.result.checks;
        if (binary.cumulative_min != binary.cumulative_max)
            tracker.fail("the two binary alternating words should have equal sums");
    }
    // Radius-1 sphere sizes grow with the alphabet for a fixed center pattern.
    std::mt19937_64 rng(97);
    for (int n = 3; n <= 6 && tracker.ok(); ++n) {
        std::vector<Word> patterns = {min_pattern_word(Alphabet(3), n),
                                      max_pattern_word(Alphabet(3), n)};
        for (int i = 0; i < 10; ++i) patterns.push_back(random_hf_word(Alphabet(3), n, rng));
        for (const Word& pattern : patterns) {
            BigInt previous = -1;
            for (int q = 3; q <= 8; ++q) {
                const Word lifted = Word::unchecked(pattern.symbols(), Alphabet(q));
                const BigInt size = sphere_size_dp(lifted, 1);
                ++tracker.result.checks;
                if (size < previous) {
                    tracker.fail("radius-1 size decreased in q at center " + to_text(pattern));
                    break;
                }
                previous = size;
            }
            if (!tracker.ok()) break;
        }
    }
    return tracker.finish();
}

SuiteResult suite_sandwich(std::uint64_t budget, std::uint64_t seed) {
    FailureTracker tracker("sandwich");
    const Alphabet q4(4);
    for (int n = 1; n <= 6 && tracker.ok(); ++n) {
        const std::size_t space = count_hf(q4, n).convert_to<std::size_t>();
        for (int i = 0; i < 50 && tracker.ok(); ++i) {
            const std::uint64_t code_seed = seed * 1000003ULL + static_cast<std::uint64_t>(n) * 101ULL +
                                            static_cast<std::uint64_t>(i);
            std::mt19937_64 rng(code_seed);
            Code code = [&] {
                if (i % 2 == 0) {
                    std::uniform_int_distribution<std::size_t> size_pick(
                        2, std::min<std::size_t>(16, space));
                    return random_code(q4, n, size_pick(rng), code_seed, budget);
                }
                const int d_target = std::min(3, n);
                Code base = greedy_construct(q4, n, d_target, ScanOrder::SeededShuffle,
                                             code_seed, budget);
                if (base.size() <= 2) return base;
                std::vector<Word> words = base.words();
                std::shuffle(words.begin(), words.end(), rng);
                std::uniform_int_distribution<std::size_t> size_pick(
                    2, std::min<std::size_t>(16, words.size()));
                words.erase(words.begin() + static_cast<std::ptrdiff_t>(size_pick(rng)),
                            words.end());
                return Code::from_words(std::move(words));
            }();

            for (int radius : {1, 2}) {
                const CodeSphereStats stats = code_sphere_stats(code, radius);
                const ExtremalCenters extremes = extremal_centers(q4, n, radius, budget);
                ++tracker.result.checks;
                const bool chain = BigRat(extremes.cumulative_min) <= BigRat(stats.w_min) &&
                                   BigRat(stats.w_min) <= stats.u_bar &&
                                   stats.u_bar <= BigRat(stats.w_max) &&
                                   BigRat(stats.w_max) <= BigRat(extremes.cumulative_max);
                if (!chain)
                    tracker.fail("cumulative-sum chain broken at n=" + std::to_string(n) +
                                 " R=" + std::to_string(radius) + " seed=" +
                                 std::to_string(code_seed));
            }

            if (code.size() >= 2 && tracker.ok()) {
                const int d = code.min_distance();
                const CodeSphereStats packing = code_sphere_stats(code, (d - 1) / 2);
                BigInt total = 0;
                for (const BigInt& c : packing.cumulative) total += c;
                ++tracker.result.checks;
                if (total > count_hf(q4, n))
                    tracker.fail("packing sum exceeds the space at n=" + std::to_string(n));

                // Spheres around distinct codewords with radii summing below d
                // are disjoint: no word may sit at distances d1, d2 with
                // d1 + d2 <= d - 1.
                bool disjoint = true;
                for_each_hf(q4, n, [&](const std::vector<int>& w) {
                    if (!disjoint) return;
                    int best1 = n + 1, best2 = n + 1;
                    for (const Word& c : code.words()) {
                        int dist = 0;
                        for (int k = 0; k < n; ++k)
                            dist += w[static_cast<std::size_t>(k)] != c[static_cast<std::size_t>(k)];
                        if (dist < best1) {
                            best2 = best1;
                            best1 = dist;
                        } else if (dist < best2) {
                            best2 = dist;
                        }
                    }
                    if (best1 + best2 <= d - 1) disjoint = false;
                });
                ++tracker.result.checks;
                if (!disjoint)
                    tracker.fail("spheres of distinct codewords overlap at n=" +
                                 std::to_string(n) + " seed=" + std::to_string(code_seed));
            }
        }
    }
    return tracker.finish();
}

}  // namespace

ReportBundle cmd_verify(const std::string& suite, std::uint64_t budget, std::uint64_t seed) {
    ReportBundle bundle;
    bundle.command = "verify";
    bundle.params = Json{{"suite", suite}, {"budget", budget}, {"seed", seed}};
    bundle.timestamp = utc_timestamp();
    bundle.csv_header = "suite,passed,checks,detail";

    if (suite == "oracle" || suite == "all") bundle.suites.push_back(suite_oracle(budget, seed));
    if (suite == "closed-form" || suite == "all")
        bundle.suites.push_back(suite_closed_form(budget));
    if (suite == "extremal" || suite == "all") bundle.suites.push_back(suite_extremal(budget));
    if (suite == "sandwich" || suite == "all")
        bundle.suites.push_back(suite_sandwich(budget, seed));
    if (bundle.suites.empty())
        throw BadParameters("unknown suite '" + suite +
                            "' (expected oracle, closed-form, extremal, sandwich, or all)");

    for (const SuiteResult& result : bundle.suites) {
        bundle.rows.push_back(Json{{"suite", result.suite},
                                   {"passed", result.passed},
                                   {"checks", result.checks},
                                   {"detail", result.detail}});
        bundle.csv_rows.push_back(result.suite + "," + (result.passed ? "1" : "0") + "," +
                                  std::to_string(result.checks) + "," +
                                  sanitize_csv(result.detail));
    }
    return bundle;
}

}  // namespace hf
