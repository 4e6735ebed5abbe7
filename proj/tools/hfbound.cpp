// hfbound: reports on homopolymer-free codes. Reproduces the golden bound
// and sphere tables, emits rate curves, classifies sphere profiles, runs the
// verification sweeps, and handles greedy construction plus code files.

#include "hf/bounds.hpp"
#include "hf/codes.hpp"
#include "hf/reports.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CommonOptions {
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--format", options.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", options.out, "write the report to this path instead of stdout");
}

int emit(const hf::ReportBundle& bundle, const CommonOptions& options) {
    std::string payload;
    if (options.format == "csv") {
        payload = hf::render_csv(bundle);
    } else if (options.format == "json") {
        payload = hf::render_json(bundle);
    } else {
        payload = hf::render_text(bundle);
    }
    if (options.out.empty() || options.out == "-") {
        std::cout << payload;
    } else {
        std::ofstream file(options.out, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open " << options.out << " for writing\n";
            return 64;
        }
        file << payload;
    }
    return hf::exit_code(bundle);
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("HFBOUND_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "ignoring malformed HFBOUND_BUDGET\n";
        }
    }
    return hf::kDefaultBudget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for homopolymer-free q-ary codes"};
    app.require_subcommand(1);

    std::uint64_t budget = default_budget();
    app.add_option("--budget", budget, "enumeration budget (word count)")
        ->envname("HFBOUND_BUDGET");

    CommonOptions options;

    auto* table1 = app.add_subcommand("table1", "bound grid for q=4 with golden diffs");
    int t1_n = 8, t1_d = 5;
    table1->add_option("--n", t1_n, "largest length");
    table1->add_option("--d", t1_d, "largest distance");
    add_common(table1, options);

    auto* table2 = app.add_subcommand("table2", "extremal pattern profiles for q=4");
    int t2_n = 10;
    table2->add_option("--n", t2_n, "largest length");
    add_common(table2, options);

    auto* classify = app.add_subcommand("classify", "group C_{4,n} by sphere profile");
    int cl_n = 4;
    classify->add_option("--n", cl_n, "word length")->required();
    add_common(classify, options);

    auto* curves = app.add_subcommand("curves", "rate curves for the bound families");
    int cv_q = 4, cv_d = 3, cv_n = 500;
    curves->add_option("--q", cv_q, "alphabet size");
    curves->add_option("--d", cv_d, "minimum distance");
    curves->add_option("--n", cv_n, "largest length");
    add_common(curves, options);

    auto* verify = app.add_subcommand("verify", "run invariant sweeps");
    std::string suite = "all";
    std::uint64_t seed = 20230517;
    verify->add_option("--suite", suite, "oracle | closed-form | extremal | sandwich | all");
    verify->add_option("--seed", seed, "seed for the randomized sweeps");
    add_common(verify, options);

    auto* profile = app.add_subcommand("profile", "sphere profile of one center");
    std::string pr_center;
    int pr_q = 4, pr_radius = -1;
    profile->add_option("--center", pr_center, "center word")->required();
    profile->add_option("--q", pr_q, "alphabet size");
    profile->add_option("--radius", pr_radius, "largest radius (defaults to n)");
    add_common(profile, options);

    auto* greedy = app.add_subcommand("greedy", "greedy code construction");
    int gr_q = 4, gr_n = 5, gr_d = 3;
    std::string gr_order = "lex";
    std::uint64_t gr_seed = 0;
    greedy->add_option("--q", gr_q, "alphabet size");
    greedy->add_option("--n", gr_n, "word length")->required();
    greedy->add_option("--d", gr_d, "target minimum distance")->required();
    greedy->add_option("--order", gr_order, "scan order")
        ->check(CLI::IsMember({"lex", "shuffle"}));
    greedy->add_option("--seed", gr_seed, "seed for the shuffled order");
    greedy->add_option("--out", options.out, "write the code file to this path");

    auto* checkcode = app.add_subcommand("checkcode", "verify a code file");
    std::string cc_file;
    int cc_d = 0;
    checkcode->add_option("--file", cc_file, "code file path")->required();
    checkcode->add_option("--d", cc_d, "claimed minimum distance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (table1->parsed()) return emit(hf::cmd_table1(t1_n, t1_d, budget), options);
        if (table2->parsed()) return emit(hf::cmd_table2(t2_n), options);
        if (classify->parsed()) return emit(hf::cmd_classify(cl_n, budget), options);
        if (curves->parsed()) return emit(hf::cmd_curves(cv_q, cv_d, cv_n), options);
        if (verify->parsed()) return emit(hf::cmd_verify(suite, budget, seed), options);
        if (profile->parsed()) {
            const hf::Word center = hf::parse_word(pr_center, hf::Alphabet(pr_q));
            const int radius = pr_radius < 0 ? center.length() : pr_radius;
            return emit(hf::cmd_profile(center, radius), options);
        }
        if (greedy->parsed()) {
            const hf::ScanOrder order = gr_order == "shuffle" ? hf::ScanOrder::SeededShuffle
                                                              : hf::ScanOrder::Lexicographic;
            const hf::Code code =
                hf::greedy_construct(hf::Alphabet(gr_q), gr_n, gr_d, order, gr_seed, budget);
            std::ostringstream out;
            hf::write_code_file(out, code);
            if (options.out.empty() || options.out == "-") {
                std::cout << out.str();
            } else {
                std::ofstream file(options.out, std::ios::binary);
                if (!file) {
                    std::cerr << "cannot open " << options.out << " for writing\n";
                    return 64;
                }
                file << out.str();
            }
            std::cerr << "kept " << code.size() << " words\n";
            return 0;
        }
        if (checkcode->parsed()) {
            std::ifstream file(cc_file);
            if (!file) {
                std::cerr << "cannot open " << cc_file << "\n";
                return 64;
            }
            const hf::Code code = hf::read_code_file(file);
            std::vector<std::vector<int>> words;
            for (const hf::Word& w : code.words()) words.push_back(w.symbols());
            hf::CodeClaim claim{code.q(), code.length(), code.size(), std::nullopt};
            if (cc_d > 0) claim.d = cc_d;
            const hf::VerificationReport report = hf::verify_code(words, claim);
            std::cout << (report.accepted ? "accepted" : "rejected") << "\n";
            for (const std::string& violation : report.violations)
                std::cout << "  " << violation << "\n";
            if (report.computed_distance)
                std::cout << "  computed d=" << *report.computed_distance << "\n";
            return report.accepted ? 0 : 2;
        }
    } catch (const hf::BadParameters& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const hf::BudgetExceeded& e) {
        std::cerr << "usage error: " << e.what()
                  << " (raise --budget or HFBOUND_BUDGET if intended)\n";
        return 64;
    } catch (const hf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 64;
}
