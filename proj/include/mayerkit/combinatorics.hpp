#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mayerkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt ipow(const BigInt& base, unsigned exponent);

// Exact value rounded once to the nearest double.
double to_double(const Rational& q);
double to_double(const BigInt& z);

// "num/den" (or "num" when the denominator is one).
std::string to_string(const Rational& q);

// ln(n!) by direct summation below one million, Stirling series beyond.
double log_factorial(std::uint64_t n);

}  // namespace mayerkit
