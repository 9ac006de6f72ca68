#pragma once

#include "mayerkit/cluster.hpp"
#include "mayerkit/combinatorics.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mayerkit::series {

// m_i for i = 2..k+1 with sum m_i = n and sum (i-1) m_i = k.
struct MultisetPartition {
  int k = 0;
  int n = 0;
  std::map<int, int> m;  // only nonzero multiplicities

  friend bool operator==(const MultisetPartition&, const MultisetPartition&) = default;
};

// Partitions of k into n parts (part i-1 per block of size i); 1 <= n <= k.
std::vector<MultisetPartition> enum_partitions(int k, int n);

// C_k = sum_{n=1}^k (-1)^{n-1} (k-1+n)!/k! sum_m prod_i (i b_i)^{m_i} / m_i!
double virial_from_mayer(const cluster::MayerCoefficients& b, int k);
// Exact form on b_1..b_{k+1} (index 0 holds b_1, ignored).
Rational virial_from_mayer_exact(std::span<const Rational> b, int k);

enum class Source { mayer_transform, direct_integral, inversion_oracle, finite_N };
std::string to_string(Source s);

struct VirialCoefficients {
  Source source = Source::mayer_transform;
  int N = 0;  // finite_N only
  std::map<int, double> values;
  std::map<int, double> errors;

  double at(int k) const;
};

VirialCoefficients virial_table_from_mayer(const cluster::MayerCoefficients& b, int k_max);
VirialCoefficients virial_table_from_direct(const cluster::VirialDirect& d);

// Eliminates lambda between rho = sum n b_n lambda^n and beta P = sum b_n lambda^n
// order by order, then beta_k = -(k+1)/k [rho^{k+1}] beta P.
VirialCoefficients invert_mayer_oracle(const cluster::MayerCoefficients& b, int k_max);

// Same elimination in any field; b[0] is b_1 and must equal 1. Returns
// beta_1..beta_{k_max}.
template <class T>
std::vector<T> invert_mayer_series(std::span<const T> b, int k_max);

struct CombiSides {
  BigInt lhs;
  BigInt rhs;
};

// lhs = sum_{l_1+..+l_n = n-2, 0 <= l_i <= t_i} prod C(t_i, l_i), rhs = C(k-1+n, n-2).
CombiSides combi_identity_check(std::span<const int> t, int n, int k);

struct RadiusInputs {
  double beta = 1.0;
  double B = 0.0;
  double c_beta = 1.0;
  std::optional<double> a_star;  // computed from u when empty
};

struct FreeEnergySeries {
  double rho = 0.0;
  int k_max = 0;
  double Q = 0.0;                   // sum_{k<=k_max} C_k/(k+1) rho^{k+1}
  std::optional<double> tail_bound;  // absent unless certified
  bool certified = false;
  double ratio = 0.0;  // geometric ratio of the majorant
  double rho_star = 0.0;
  std::string warning;
};

// Tail majorant: the terms ours_k/(k+1) |rho|^{k+1} shrink by at most
// r = e^{1+a} u C |rho| per order, so the dropped part is <= t_{k_max+1}/(1-r).
FreeEnergySeries free_energy_series(double rho, const VirialCoefficients& C, int k_max,
                                    const RadiusInputs& radius);

// f = -(1/beta) [ (1/V) ln(V^N / N!) + Q ]; rho must equal N/V.
double assemble_free_energy(double beta, double rho, std::uint64_t N, double V, double Q);

}  // namespace mayerkit::series

#include "mayerkit/detail/series_impl.hpp"
