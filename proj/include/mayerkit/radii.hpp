#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

namespace mayerkit::radii {

// Commonly quoted maximizer at beta = 0; kept so the
// report can show its arithmetic next to the computed one.
inline constexpr double kReferenceAStar = 0.426;
inline constexpr double kLebowitzPenroseConstant = 0.28952;

struct FResult {
  double value = 0.0;
  double a_star = 0.0;
  int grid_local_maxima = 0;  // 1 for a unimodal scan
};

// F(u) = max_{a>0} ln y / (e^a y),  y = 1 + u (1 - e^{-a}).
FResult F_of_u(double u);

struct GResult {
  double value = 0.0;
  double w_star = 0.0;
};

// g(u) = max_{0<w<ln(1+u)} [(1+u) e^{-w} - 1] w / u.
GResult g_of_u(double u);

struct KStar {
  double closed_form = 0.0;   // 1 / F(u)
  double series_check = 0.0;  // inf over a of the smallest admissible kappa
  double a_at_min = 0.0;
};

// Smallest kappa with sum_{n>=1} n^{n-1}/n! (e^a/kappa)^{n-1} <= 1 + u(1-e^{-a}),
// minimized over a > 0.
KStar K_star(double u);

// Series side of K_star at fixed a: bisection on kappa, terms dropped below 1e-14.
double kappa_min_series(double u, double a);

// e^{2 beta B}; throws DomainError for beta <= 0 or B < 0.
double u_of(double beta, double B);

// F(u) / (u C).
double rho_star(double beta, double B, double c_beta);
// 1 / (e^{2 beta B + 1} C).
double mayer_radius(double beta, double B, double c_beta);

struct CkBound {
  double ours = 0.0;       // bound on |C_k|
  double lp = 0.0;         // bound on k |beta_k|
  double base_ours = 0.0;  // e^{1+a} u C
  double base_lp = 0.0;    // (u+1) C / 0.28952
};

// ours = [1/(k+1) + (e^a - 1) e^{a k}] u^{k-1} (k+1)^k / k! C^k
// lp   = [(u+1) C / 0.28952]^k
CkBound ck_bound(int k, double beta, double B, double c_beta, double a_star);

struct RadiusReport {
  double beta = 0.0;
  double B = 0.0;
  double u = 1.0;
  double c_beta = 1.0;
  bool c_beta_assumed = false;  // no potential given; quantities are per unit C
  FResult F;
  GResult g;
  KStar K;
  double rho_star = 0.0;
  double mayer_radius = 0.0;
  std::vector<CkBound> bounds;  // k = 1..k_max

  // Base constants 1/e^{1+a}: reference a = 0.426 versus computed a*.
  double reference_a = kReferenceAStar;
  double base_constant_reference = 0.0;
  double base_constant_computed = 0.0;
  double lp_constant = 1.0 / kLebowitzPenroseConstant;
  // Radius per unit C at this u for both bounds: 1/(e^{1+a*} u) and 0.28952/(u+1).
  double radius_constant_ours = 0.0;
  double radius_constant_lp = 0.0;
  bool a_star_discrepancy = false;
};

RadiusReport radius_report(double u, std::optional<double> c_beta, int k_max,
                           double beta = 0.0, double B = 0.0);

nlohmann::json to_json(const RadiusReport& r);

}  // namespace mayerkit::radii
