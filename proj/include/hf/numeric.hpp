#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt pow_big(const BigInt& base, unsigned exp);
BigInt binomial_big(unsigned n, unsigned k);

// Quotient rounding; operands must be positive.
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);
BigInt floor_rat(const BigRat& x);
BigInt ceil_rat(const BigRat& x);

// Logarithms of positive exact values, accurate to double precision even
// when the operand does not fit in a double.
double log2_big(const BigInt& v);
double log10_big(const BigInt& v);
double log2_rat(const BigRat& x);
double log10_rat(const BigRat& x);

// "p" when the value is integral, "p/q" otherwise.
std::string rat_to_string(const BigRat& x);

}  // namespace hf
