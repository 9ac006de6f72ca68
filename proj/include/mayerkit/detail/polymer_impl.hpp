#pragma once

#include "mayerkit/errors.hpp"

#include <string>

namespace mayerkit::polymer {

namespace detail {

template <class T>
void check_zeta(int N, std::span<const T> zeta) {
  if (N < 0) throw DomainError("N must be >= 0");
  if (static_cast<int>(zeta.size()) < N + 1 && N >= 2) {
    throw InputError("activity list must cover m = 2.." + std::to_string(N));
  }
}

template <class T>
void partitions_rec(int N, int i, std::vector<int>& sizes, int blocks, const T& weight,
                    std::span<const T> zeta, T& total) {
  if (i == N) {
    T w = weight;
    for (int b = 0; b < blocks; ++b)
      if (sizes[b] >= 2) w *= zeta[sizes[b]];
    total += w;
    return;
  }
  // Restricted growth: element i joins an existing block or opens block `blocks`.
  for (int b = 0; b <= blocks; ++b) {
    ++sizes[b];
    partitions_rec(N, i + 1, sizes, b == blocks ? blocks + 1 : blocks, weight, zeta, total);
    --sizes[b];
  }
}

}  // namespace detail

template <class T>
T xi_recursion(int N, std::span<const T> zeta) {
  detail::check_zeta(N, zeta);
  std::vector<T> xi(N + 1, T(1));
  for (int n = 2; n <= N; ++n) {
    T v = xi[n - 1];
    for (int m = 2; m <= n; ++m) {
      v += T(binomial(n - 1, m - 1)) * zeta[m] * xi[n - m];
    }
    xi[n] = v;
  }
  return xi[N];
}

template <class T>
T xi_bruteforce(int N, std::span<const T> zeta) {
  detail::check_zeta(N, zeta);
  if (N > kMaxBruteForceN) {
    throw CapacityError("brute-force Xi supports N <= " + std::to_string(kMaxBruteForceN));
  }
  if (N <= 1) return T(1);
  std::vector<int> sizes(N, 0);
  T total = T(0);
  detail::partitions_rec<T>(N, 0, sizes, 0, T(1), zeta, total);
  return total;
}

}  // namespace mayerkit::polymer
