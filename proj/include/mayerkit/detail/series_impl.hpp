#pragma once

#include "mayerkit/errors.hpp"

namespace mayerkit::series {

namespace detail {

// Truncated product of series a, b (index = power), keeping powers <= order.
template <class T>
std::vector<T> mul_trunc(const std::vector<T>& a, const std::vector<T>& b, int order) {
  std::vector<T> c(order + 1, T(0));
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == T(0)) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace detail

template <class T>
std::vector<T> invert_mayer_series(std::span<const T> b, int k_max) {
  if (k_max < 1) throw InputError("k_max must be >= 1");
  if (b.empty() || b[0] != T(1)) throw InputError("inversion needs b_1 = 1");
  if (static_cast<int>(b.size()) < k_max + 1) {
    throw InputError("inversion needs b_1..b_" + std::to_string(k_max + 1));
  }
  const int order = k_max + 1;
  // lambda(rho) from lambda = rho - sum_{n>=2} n b_n lambda^n; each pass fixes one more order.
  std::vector<T> lam(order + 1, T(0));
  lam[1] = T(1);
  for (int pass = 1; pass < order; ++pass) {
    std::vector<T> next(order + 1, T(0));
    next[1] = T(1);
    std::vector<T> power = lam;
    for (int n = 2; n <= order; ++n) {
      power = detail::mul_trunc(power, lam, order);
      const T c = T(n) * b[n - 1];
      for (int j = 0; j <= order; ++j) next[j] -= c * power[j];
    }
    lam.swap(next);
  }
  // beta P(rho) = sum_n b_n lambda(rho)^n.
  std::vector<T> p(order + 1, T(0));
  std::vector<T> power = lam;
  for (int n = 1; n <= order; ++n) {
    if (n > 1) power = detail::mul_trunc(power, lam, order);
    for (int j = 0; j <= order; ++j) p[j] += b[n - 1] * power[j];
  }
  std::vector<T> beta(k_max);
  for (int k = 1; k <= k_max; ++k) beta[k - 1] = -T(k + 1) / T(k) * p[k + 1];
  return beta;
}

}  // namespace mayerkit::series
