#pragma once

#include "mayerkit/quadrature.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mayerkit {

enum class PotentialKind { hard_rod, hard_sphere, square_well, custom_tabulated };

std::string to_string(PotentialKind k);
PotentialKind parse_potential_kind(const std::string& s);

// Radial pair potential with its declared stability constant B:
//   sum_{i<j} V(x_i - x_j) >= -B N  for every configuration.
// B is never computed here. Nonnegative potentials carry B = 0. For a
// square well the usual route is a neighbor count: with well range
// lambda_w * sigma, at most z particles fit in the well of any particle, so
// B = z * epsilon / 2 is valid (z = 2 * ceil(lambda_w) - 2 in one dimension).
class PairPotential {
 public:
  static PairPotential hard_rod(double sigma);
  static PairPotential hard_sphere(double sigma, int dimension = 3);
  static PairPotential square_well(double sigma, double lambda_w, double epsilon, double B,
                                   int dimension = 1);
  // Linear interpolation of (r, V) samples. V may be +inf (hard core); V is
  // held at samples.front() below the first radius, interpolated to zero at
  // `support`, and zero beyond. B may be omitted only if all samples are >= 0.
  static PairPotential tabulated(std::vector<double> r, std::vector<double> v, double support,
                                 std::optional<double> B, int dimension = 1);

  // Keys: kind, sigma, epsilon, lambda_w, B, dimension, r, v, support.
  // Unknown keys and violated invariants raise InputError naming the field.
  static PairPotential from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  PotentialKind kind() const { return kind_; }
  double sigma() const { return sigma_; }
  double epsilon() const { return epsilon_; }
  double lambda_w() const { return lambda_w_; }
  double stability_B() const { return B_; }
  int dimension() const { return dimension_; }
  std::string name() const;

  // V(r); +inf inside a hard core.
  double energy(double r) const;
  // V(r) = 0 for r >= range(); +inf when the tail never vanishes.
  double range() const;
  // Radii where V jumps or changes slope, ascending, all < range().
  std::vector<double> breakpoints() const;
  bool nonnegative() const;

 private:
  PairPotential() = default;
  void validate() const;

  PotentialKind kind_ = PotentialKind::hard_rod;
  double sigma_ = 1.0;
  double epsilon_ = 0.0;
  double lambda_w_ = 1.0;
  double B_ = 0.0;
  int dimension_ = 1;
  std::vector<double> tab_r_, tab_v_;
  double support_ = 0.0;
};

// Mayer bond e^{-beta V(r)} - 1; exactly -1 inside a hard core.
double f_bond(const PairPotential& p, double beta, double r);

// Area of the unit sphere in R^d (2 for d = 1).
double sphere_surface(int d);

// C(beta) = int_{R^d} |e^{-beta V}-1| dx as surface(d) * int r^{d-1} |f| dr,
// adaptive by panel doubling on each breakpoint segment until the
// mesh-doubling difference is below `tolerance` (relative).
quad::Estimate c_beta(const PairPotential& p, double beta, double tolerance = 1e-13);

// Fixed mesh: `panels` panels of a q-point rule per segment; the error
// estimate compares against 2 * panels.
quad::Estimate c_beta_fixed(const PairPotential& p, double beta, int panels, int q);

struct ThermoState {
  double beta = 1.0;
  std::optional<double> L;
  std::optional<int> N;

  // N / L^d; throws InputError unless both L and N are set.
  double density(int dimension) const;
  void validate() const;
};

}  // namespace mayerkit
