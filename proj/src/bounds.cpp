#include "hf/bounds.hpp"

#include <cmath>

namespace hf {

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::ClassicSP: return "classic_sp";
        case BoundKind::ClassicGV: return "classic_gv";
        case BoundKind::HfUpper1: return "hf_upper_1";
        case BoundKind::HfUpper2: return "hf_upper_2";
        case BoundKind::HfUpper3: return "hf_upper_3";
        case BoundKind::HfLower1: return "hf_lower_1";
        case BoundKind::HfLower2: return "hf_lower_2";
        case BoundKind::HfLower3: return "hf_lower_3";
    }
    return "?";
}

bool is_upper(BoundKind kind) {
    switch (kind) {
        case BoundKind::ClassicSP:
        case BoundKind::HfUpper1:
        case BoundKind::HfUpper2:
        case BoundKind::HfUpper3:
            return true;
        default:
            return false;
    }
}

double rate_of_value(const BigInt& value, int q, int n) {
    return log2_big(value) / (std::log2(static_cast<double>(q)) * n);
}

double rate_log_domain_hf(int q, int n, const BigRat& denominator) {
    const double log2q = std::log2(static_cast<double>(q));
    const double log2q1 = std::log2(static_cast<double>(q - 1));
    return (log2q + (n - 1) * log2q1 - log2_rat(denominator)) / (log2q * n);
}

double rate_log_domain_full(int q, int n, const BigRat& denominator) {
    const double log2q = std::log2(static_cast<double>(q));
    return (n * log2q - log2_rat(denominator)) / (log2q * n);
}

namespace {

// Fills the quotient fields of a report whose numerator and denominator are
// already known exactly. log10_numerator is supplied separately so that the
// caller can keep it closed-form for large n.
void finish_report(BoundReport& report, const BigInt& numerator, double log10_numerator) {
    report.log10_numerator = log10_numerator;
    const bool exact = report.n <= kExactIntegerMaxN;
    const double log10_value = log10_numerator - log10_rat(report.denominator);
    if (exact) {
        report.numerator = numerator;
        const BigRat quotient = BigRat(numerator) / report.denominator;
        report.value = is_upper(report.kind) ? floor_rat(quotient) : ceil_rat(quotient);
        report.value_log10 = log10_big(*report.value);
        report.rate = rate_of_value(*report.value, report.q, report.n);
    } else {
        report.value_log10 = log10_value;
        const bool hf = report.kind != BoundKind::ClassicSP && report.kind != BoundKind::ClassicGV;
        report.rate = hf ? rate_log_domain_hf(report.q, report.n, report.denominator)
                         : rate_log_domain_full(report.q, report.n, report.denominator);
        if (!report.notes.empty()) report.notes += "; ";
        report.notes += "log-domain report: exact integer fields omitted for n > " +
                        std::to_string(kExactIntegerMaxN);
    }
}

double log10_hf_numerator(int q, int n) {
    return std::log10(static_cast<double>(q)) +
           (n - 1) * std::log10(static_cast<double>(q - 1));
}

double log10_full_numerator(int q, int n) {
    return n * std::log10(static_cast<double>(q));
}

BigInt classic_shell_sum(int q, int n, int max_radius) {
    BigInt sum = 0;
    for (int r = 0; r <= max_radius; ++r)
        sum += binomial_big(static_cast<unsigned>(n), static_cast<unsigned>(r)) *
               pow_big(q - 1, static_cast<unsigned>(r));
    return sum;
}

void check_parameters(Alphabet alphabet, int n, int d) {
    (void)alphabet;
    if (n < 1) throw BadParameters("word length must be at least 1");
    if (d < 1 || d > n) throw BadParameters("distance must satisfy 1 <= d <= n");
}

}  // namespace

BoundReport classic_sp(Alphabet alphabet, int n, int d) {
    check_parameters(alphabet, n, d);
    BoundReport report;
    report.kind = BoundKind::ClassicSP;
    report.q = alphabet.q;
    report.n = n;
    report.d = d;
    report.radius_used = (d - 1) / 2;
    report.denominator = BigRat(classic_shell_sum(alphabet.q, n, report.radius_used));
    finish_report(report, pow_big(alphabet.q, static_cast<unsigned>(n)),
                  log10_full_numerator(alphabet.q, n));
    return report;
}

BoundReport classic_gv(Alphabet alphabet, int n, int d) {
    check_parameters(alphabet, n, d);
    BoundReport report;
    report.kind = BoundKind::ClassicGV;
    report.q = alphabet.q;
    report.n = n;
    report.d = d;
    report.radius_used = d - 1;
    report.denominator = BigRat(classic_shell_sum(alphabet.q, n, report.radius_used));
    report.notes = "lower bound on the maximum code size";
    finish_report(report, pow_big(alphabet.q, static_cast<unsigned>(n)),
                  log10_full_numerator(alphabet.q, n));
    return report;
}

namespace {

BoundReport hf_extremal_bound(BoundKind kind, Alphabet alphabet, int n, int d,
                              std::uint64_t budget) {
    check_parameters(alphabet, n, d);
    if (alphabet.q < 3) throw BadParameters("homopolymer-free bounds require q >= 3");
    BoundReport report;
    report.kind = kind;
    report.q = alphabet.q;
    report.n = n;
    report.d = d;
    report.radius_used = is_upper(kind) ? (d - 1) / 2 : d - 1;
    const ExtremalCenters centers = extremal_centers(alphabet, n, report.radius_used, budget);
    report.denominator =
        BigRat(is_upper(kind) ? centers.cumulative_min : centers.cumulative_max);
    report.notes = centers.provenance == Provenance::Pattern ? "extremal center: pattern"
                                                             : "extremal center: search";
    if (!is_upper(kind)) report.notes += "; rounded up (the floor variant is also valid)";
    finish_report(report, count_hf(alphabet, n), log10_hf_numerator(alphabet.q, n));
    return report;
}

BoundReport hf_code_bound(BoundKind kind, const Code& code) {
    const int d = code.min_distance();  // EmptyDistance for degenerate codes
    BoundReport report;
    report.kind = kind;
    report.q = code.q();
    report.n = code.length();
    report.d = d;
    report.radius_used = is_upper(kind) ? (d - 1) / 2 : d - 1;
    const CodeSphereStats stats = code_sphere_stats(code, report.radius_used);
    report.denominator = BigRat(is_upper(kind) ? stats.w_min : stats.w_max);
    report.notes = std::string(is_upper(kind) ? "c_min = " : "c_max = ") +
                   to_text(is_upper(kind) ? stats.c_min : stats.c_max);
    if (!is_upper(kind)) report.notes += "; rounded up (the floor variant is also valid)";
    finish_report(report, count_hf(Alphabet(code.q()), code.length()),
                  log10_hf_numerator(code.q(), code.length()));
    return report;
}

BoundReport hf_average_bound(BoundKind kind, Alphabet alphabet, int n, int d,
                             const BigRat& average) {
    check_parameters(alphabet, n, d);
    if (average <= 0) throw NonpositiveAverage("the average cumulative sum must be positive");
    BoundReport report;
    report.kind = kind;
    report.q = alphabet.q;
    report.n = n;
    report.d = d;
    report.radius_used = is_upper(kind) ? (d - 1) / 2 : d - 1;
    report.denominator = average;
    if (!is_upper(kind)) report.notes = "rounded up (the floor variant is also valid)";
    finish_report(report, count_hf(alphabet, n), log10_hf_numerator(alphabet.q, n));
    return report;
}

}  // namespace

BoundReport hf_upper_1(Alphabet alphabet, int n, int d, std::uint64_t budget) {
    return hf_extremal_bound(BoundKind::HfUpper1, alphabet, n, d, budget);
}

BoundReport hf_lower_1(Alphabet alphabet, int n, int d, std::uint64_t budget) {
    return hf_extremal_bound(BoundKind::HfLower1, alphabet, n, d, budget);
}

BoundReport hf_upper_2(const Code& code) { return hf_code_bound(BoundKind::HfUpper2, code); }

BoundReport hf_lower_2(const Code& code) { return hf_code_bound(BoundKind::HfLower2, code); }

BoundReport hf_upper_3(Alphabet alphabet, int n, int d, const BigRat& average) {
    return hf_average_bound(BoundKind::HfUpper3, alphabet, n, d, average);
}

BoundReport hf_lower_3(Alphabet alphabet, int n, int d, const BigRat& average) {
    return hf_average_bound(BoundKind::HfLower3, alphabet, n, d, average);
}

}  // namespace hf
