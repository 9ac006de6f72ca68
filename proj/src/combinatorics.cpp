#include "mayerkit/combinatorics.hpp"

#include <cmath>
#include <numbers>

namespace mayerkit {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

double to_double(const BigInt& z) { return z.convert_to<double>(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double log_factorial(std::uint64_t n) {
  constexpr std::uint64_t kExactLimit = 1'000'000;
  if (n <= kExactLimit) {
    // Kahan summation keeps the million-term sum at full precision.
    double sum = 0.0, comp = 0.0;
    for (std::uint64_t i = 2; i <= n; ++i) {
      const double y = std::log(static_cast<double>(i)) - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    return sum;
  }
  const double x = static_cast<double>(n);
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  return x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x) +
         inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0));
}

}  // namespace mayerkit
