#include "hf/numeric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hf {

BigInt pow_big(const BigInt& base, unsigned exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return result;
}

BigInt binomial_big(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact at every step: result is C(n-k+i, i)
    }
    return result;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    if (den <= 0 || num < 0) throw std::invalid_argument("floor_div expects positive operands");
    return num / den;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    if (den <= 0 || num < 0) throw std::invalid_argument("ceil_div expects positive operands");
    return (num + den - 1) / den;
}

BigInt floor_rat(const BigRat& x) {
    return floor_div(numerator(x), denominator(x));
}

BigInt ceil_rat(const BigRat& x) {
    return ceil_div(numerator(x), denominator(x));
}

double log2_big(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log2_big expects a positive value");
    const unsigned bits = msb(v) + 1;  // bit length
    if (bits <= 64) return std::log2(v.convert_to<double>());
    // Scale the top 64 bits; the discarded tail is below double precision.
    const unsigned shift = bits - 64;
    const BigInt top = v >> shift;
    return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double log10_big(const BigInt& v) {
    return log2_big(v) * 0.30102999566398119521;  // log10(2)
}

double log2_rat(const BigRat& x) {
    return log2_big(numerator(x)) - log2_big(denominator(x));
}

double log10_rat(const BigRat& x) {
    return log2_rat(x) * 0.30102999566398119521;
}

std::string rat_to_string(const BigRat& x) {
    std::ostringstream out;
    if (denominator(x) == 1) {
        out << numerator(x);
    } else {
        out << numerator(x) << "/" << denominator(x);
    }
    return out.str();
}

}  // namespace hf
