#pragma once

#include "mayerkit/graphs.hpp"
#include "mayerkit/potentials.hpp"
#include "mayerkit/quadrature.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mayerkit::cluster {

inline constexpr int kMaxQuadratureOrder = 6;  // d = 1 nested quadrature
inline constexpr int kMaxMonteCarloOrder = 5;

struct VolumeSpec {
  std::optional<double> box;  // side L; empty = infinite volume

  static VolumeSpec infinite() { return {}; }
  static VolumeSpec cube(double L) { return {L}; }
  bool is_infinite() const { return !box.has_value(); }
  std::string label() const;
};

enum class Method { quadrature, monte_carlo, exact };

struct MethodSpec {
  Method method = Method::quadrature;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1'000'000;
  int workers = 0;   // 0 = available parallelism; results do not depend on it
  int chunks = 32;
  int extra_nodes = 0;  // quadrature: nodes added beyond the polynomial-exact count

  static MethodSpec quadrature() { return {}; }
  static MethodSpec monte_carlo(std::uint64_t seed, std::uint64_t samples, int workers = 0) {
    MethodSpec m;
    m.method = Method::monte_carlo;
    m.seed = seed;
    m.samples = samples;
    m.workers = workers;
    return m;
  }
  std::string label() const;
};

struct ClusterValue {
  double value = 0.0;
  double error = 0.0;
};

// Coefficient table keyed by order. For Mayer coefficients the key is n and
// b_1 = 1 (zero error) is always present; for virial tables the key is k.
struct ClusterTable {
  std::string quantity;  // "b_n" or "beta_k"
  std::map<int, ClusterValue> values;
  double beta = 1.0;
  VolumeSpec volume;
  MethodSpec method;
  std::string potential;

  // Throws InputError naming the missing order.
  double at(int order) const;
  bool has(int order) const { return values.count(order) != 0; }
};

using MayerCoefficients = ClusterTable;
using VirialDirect = ClusterTable;

MayerCoefficients make_mayer_table(double beta, VolumeSpec volume, MethodSpec method,
                                   std::string potential);
// b_2..b_{n_max} from an arbitrary list (index 0 is b_2).
MayerCoefficients mayer_table_from_values(std::span<const double> b_from_2);

// b_n = (1/V)(1/n!) int sum_{g connected on [n]} prod_{ij in g} f(x_i - x_j).
ClusterValue mayer_bn(const PairPotential& p, double beta, int n, const VolumeSpec& volume,
                      const MethodSpec& method);
MayerCoefficients mayer_coefficients(const PairPotential& p, double beta, int n_max,
                                     const VolumeSpec& volume, const MethodSpec& method);

// beta_k = (1/V)(1/k!) int sum over two-connected graphs on [k+1]; for
// k = 1 the single edge on two vertices is the irreducible diagram.
ClusterValue virial_bk_direct(const PairPotential& p, double beta, int k, const MethodSpec& method,
                              const VolumeSpec& volume = VolumeSpec::infinite());
VirialDirect virial_direct_table(const PairPotential& p, double beta, int k_max,
                                 const MethodSpec& method);

// Penrose: |b_n| <= e^{2 beta B (n-2)} n^{n-2} C^{n-1} / n!.
double penrose_bn_bound(int n, double beta, double B, double c_beta);

// 1-D hard rods: b_n = (-1)^{n-1} n^{n-1} sigma^{n-1} / n!, the coefficients
// of the tree (Lambert W) series solving lambda = beta P e^{beta P sigma}.
MayerCoefficients tonks_mayer_coefficients(double sigma, int n_max);

// ---------------------------------------------------------------------------
// Building blocks, exposed for tests and for the canonical module.

// Sum over a fixed graph list of prod f_e, with f indexed by edge bit.
class GraphSum {
 public:
  GraphSum(int n, graphs::GraphClass cls);
  explicit GraphSum(int n, std::vector<graphs::EdgeMask> masks);

  int vertices() const { return n_; }
  std::size_t size() const { return offsets_.size() - 1; }
  double operator()(std::span<const double> f) const;

 private:
  int n_;
  std::vector<int> edges_;        // concatenated edge bits
  std::vector<std::size_t> offsets_;
};

// Same connected-graph sum via the subset recursion
//   C(S) = W(S) - sum_{T < S, min S in T} C(T) W(S \ T),  W(S) = prod_{S} (1 + f),
// O(3^n) per point.
double connected_sum_recursive(int n, std::span<const double> f);

struct ChainDomain {
  int points = 1;
  bool pin_first = false;          // x_1 = 0, others ordered above it
  double box = std::numeric_limits<double>::infinity();  // positions in [0, box]
  double max_gap = std::numeric_limits<double>::infinity();  // prune larger gaps
};

using PairIntegrand = std::function<double(std::span<const double> f)>;

// Integral over the ordered region 0 <= x_1 <= ... <= x_n <= box (x_1 = 0 if
// pinned) of integrand(f), f[e] = f_bond at the pair of edge bit e. Every
// variable is split at all anchor + offset points, offsets being integer
// combinations of the potential's breakpoints; on each piece the rule is
// exact for piecewise-constant bonds. Error: mesh-doubling difference.
quad::Estimate ordered_chain_integral(const PairPotential& p, double beta, const ChainDomain& dom,
                                      const PairIntegrand& integrand, int extra_nodes = 0);

}  // namespace mayerkit::cluster
