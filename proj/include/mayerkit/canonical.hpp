#pragma once

#include "mayerkit/cluster.hpp"
#include "mayerkit/potentials.hpp"

#include <optional>
#include <string>

namespace mayerkit::canonical {

inline constexpr int kMaxQuadratureN = 4;
inline constexpr int kMaxMonteCarloN = 12;

enum class ZMethod { quadrature, monte_carlo, tonks_closed };
std::string to_string(ZMethod m);
ZMethod parse_zmethod(const std::string& s);

struct CanonicalResult {
  int N = 0;
  double L = 0.0;
  double beta = 1.0;
  int dimension = 1;
  double ztilde = 0.0;  // (1/V^N) int_{Lambda^N} e^{-beta U}, free boundary
  double error = 0.0;
  ZMethod method = ZMethod::tonks_closed;
};

// tonks_closed: (1 - (N-1) sigma / L)^N. monte_carlo reads seed, samples,
// workers and chunks from `mc`.
CanonicalResult ztilde_direct(const PairPotential& p, double beta, double L, int N, ZMethod method,
                              const cluster::MethodSpec& mc = {});

// ln(ztilde) / L^d.
double q_lambda(const CanonicalResult& r);

struct CompareOptions {
  std::optional<ZMethod> direct;  // default: tonks_closed for hard rods
  cluster::MethodSpec mc;
};

struct CompareReport {
  int N = 0;
  double L = 0.0;
  double beta = 1.0;
  double rho = 0.0;
  int k_max = 0;
  double rho_star = 0.0;
  double Q_direct = 0.0;
  double direct_error = 0.0;
  double Q_series = 0.0;
  std::optional<double> tail_bound;
  double gap = 0.0;
  double budget = 0.0;  // tail + 2 |Q_series| / N + 3 direct_error + 3 coefficient error (Q units)
  bool certified = false;
  bool pass = false;
  std::string direct_method;
  std::string note;
};

CompareReport compare_series_direct(const PairPotential& p, double beta, double L, int N, int k_max,
                                    const CompareOptions& opt = {});

}  // namespace mayerkit::canonical
