#pragma once

#include "mayerkit/cluster.hpp"
#include "mayerkit/combinatorics.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace mayerkit::polymer {

inline constexpr int kMaxBruteForceN = 8;
inline constexpr int kMaxUrsellN = 8;
inline constexpr int kMaxUrsellOrder = 4;
inline constexpr int kMaxPExactN = 12;
inline constexpr int kMaxPExactParts = 4;

// Activities zeta_m of polymers R subset [N], |R| = m >= 2.
struct ActivityProfile {
  int N = 0;
  std::map<int, double> zeta;
  std::optional<double> rho;   // set when derived from b_n
  std::optional<double> V;
  std::map<int, double> mu;    // mu_s = b_s s! / N^{s-1}

  static ActivityProfile from_zeta(int N, std::map<int, double> zeta);
  // zeta_n = b_n n! / V^{n-1}; b must hold every order 2..N.
  static ActivityProfile from_mayer(int N, double V, const cluster::MayerCoefficients& b);
  // Hard rods: zeta_m = (-m sigma / V)^{m-1}, valid for any N.
  static ActivityProfile from_tonks(int N, double V, double sigma);

  double zeta_at(int m) const;
  // C^rho_m = |zeta_m| C(N-1, m-1).
  std::map<int, double> C_rho() const;
  void validate() const;
};

// Xi_n = Xi_{n-1} + sum_{m=2}^n C(n-1, m-1) zeta_m Xi_{n-m}, Xi_0 = Xi_1 = 1.
// zeta[m] for m = 2..N (entries 0, 1 ignored).
template <class T>
T xi_recursion(int N, std::span<const T> zeta);

// Sum over set partitions of [N]; blocks of size >= 2 carry zeta_|B|.
template <class T>
T xi_bruteforce(int N, std::span<const T> zeta);

enum class XiMethod { recursion, bruteforce };
double xi_exact(int N, const ActivityProfile& a, XiMethod method = XiMethod::recursion);

struct UrsellSeries {
  std::vector<double> terms;         // terms[n-1]: order n
  std::vector<double> partial_sums;  // through order n
};

// Order n: (1/n!) sum over tuples (R_1..R_n) of phi^T(G(R)) prod zeta_|R_i|.
UrsellSeries log_xi_ursell(int N, const ActivityProfile& a, int n_max);

struct FpCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// sum_m e^{a m} C^rho_m <= e^a - 1.
FpCheck fp_check(const ActivityProfile& a, double alpha);

// (1/N^{k+1}) sum over tuples with |R_i| = s_i of |penrose_trees(G(R))|,
// k = sum (s_i - 1). `naive` skips the ground-set symmetry reduction.
Rational p_exact(int N, std::span<const int> s, bool naive = false);

// N -> infinity value: 1/s! for one part, else
// (n-2)! / prod (s_i - 1)! * C(k-1+n, n-2).
Rational p_limit(std::span<const int> s);

// C_k(N) = sum_n (-1)^{n-1} W_n(k),
// W_n(k) = (k+1)/n! sum_{s_i >= 2, sum s = k+n} prod [b_{s_i} s_i!] P(s).
double ck_finite_N(int N, const cluster::MayerCoefficients& b, int k);
// b[i] = b_i (index 0 unused).
Rational ck_finite_N_exact(int N, std::span<const Rational> b, int k);

}  // namespace mayerkit::polymer

#include "mayerkit/detail/polymer_impl.hpp"
