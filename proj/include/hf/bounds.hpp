#pragma once

#include "hf/codes.hpp"
#include "hf/numeric.hpp"
#include "hf/words.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace hf {

enum class BoundKind {
    ClassicSP,
    ClassicGV,
    HfUpper1,
    HfUpper2,
    HfUpper3,
    HfLower1,
    HfLower2,
    HfLower3,
};
std::string to_string(BoundKind kind);
bool is_upper(BoundKind kind);

// Above this length the exact integer fields are omitted and reports carry
// logarithms only.
inline constexpr int kExactIntegerMaxN = 64;

// One evaluated bound. Upper kinds floor the quotient, lower kinds take the
// ceiling. numerator/value are present on the exact path (n <= 64) only;
// the log fields are always filled.
struct BoundReport {
    BoundKind kind;
    int q = 0;
    int n = 0;
    int d = 0;
    int radius_used = 0;
    std::optional<BigInt> numerator;
    BigRat denominator;
    std::optional<BigInt> value;
    double log10_numerator = 0.0;
    double value_log10 = 0.0;
    double rate = 0.0;  // (1/n) log_q(value), in [0,1]
    std::string notes;
};

// Code-rate helpers. rate_of_value uses the exact integer; rate_log_domain
// evaluates (1/n)(log_q q + (n-1) log_q(q-1) - log_q denominator) so large n
// needs no materialized integer.
double rate_of_value(const BigInt& value, int q, int n);
double rate_log_domain_hf(int q, int n, const BigRat& denominator);
double rate_log_domain_full(int q, int n, const BigRat& denominator);

// Classic sphere-packing and Gilbert-Varshamov bounds over the unconstrained
// space: V_q(n) = q^n, V_q(n,r) = C(n,r)(q-1)^r.
BoundReport classic_sp(Alphabet alphabet, int n, int d);
BoundReport classic_gv(Alphabet alphabet, int n, int d);

// Homopolymer-free bounds. The numerator is |C_{q,n}| = q(q-1)^(n-1); the
// denominators are cumulative sphere sums:
//   upper 1 / lower 1: whole-space extremal centers at radius
//     floor((d-1)/2) resp. d-1 (closed-form patterns when applicable,
//     exhaustive search otherwise);
//   upper 2 / lower 2: the given code's own extremal codewords;
//   upper 3 / lower 3: a supplied average cumulative sum.
BoundReport hf_upper_1(Alphabet alphabet, int n, int d, std::uint64_t budget = kDefaultBudget);
BoundReport hf_upper_2(const Code& code);
BoundReport hf_upper_3(Alphabet alphabet, int n, int d, const BigRat& average);
BoundReport hf_lower_1(Alphabet alphabet, int n, int d, std::uint64_t budget = kDefaultBudget);
BoundReport hf_lower_2(const Code& code);
BoundReport hf_lower_3(Alphabet alphabet, int n, int d, const BigRat& average);

}  // namespace hf
