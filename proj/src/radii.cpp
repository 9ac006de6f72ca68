#include "mayerkit/radii.hpp"

#include "mayerkit/combinatorics.hpp"
#include "mayerkit/errors.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace mayerkit::radii {

namespace {

double F_objective(double u, double a) {
  const double y = 1.0 + u * (-std::expm1(-a));
  return std::log(y) / (std::exp(a) * y);
}

// Sign of dF/da: u e^{-a} (1 - ln y) - y ln y.
double F_slope(double u, double a) {
  const double y = 1.0 + u * (-std::expm1(-a));
  const double ly = std::log(y);
  return u * std::exp(-a) * (1.0 - ly) - y * ly;
}

struct Bracket {
  double lo, hi, best;
  int local_maxima;
};

// Log-spaced scan of `obj` (to be maximized) on [lo, hi]; the low end is
// pushed down while the best point sits on it.
Bracket scan(const std::function<double(double)>& obj, double lo, double hi) {
  constexpr int kPoints = 64;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<double> a(kPoints), v(kPoints);
    const double l0 = std::log(lo), l1 = std::log(hi);
    for (int i = 0; i < kPoints; ++i) {
      a[i] = std::exp(l0 + (l1 - l0) * i / (kPoints - 1));
      v[i] = obj(a[i]);
    }
    int best = 0;
    for (int i = 1; i < kPoints; ++i)
      if (v[i] > v[best]) best = i;
    if (best == 0) {
      lo *= 1e-3;
      continue;
    }
    int maxima = 0;
    for (int i = 0; i < kPoints; ++i) {
      const bool left = i == 0 || v[i] > v[i - 1];
      const bool right = i == kPoints - 1 || v[i] >= v[i + 1];
      if (left && right) ++maxima;
    }
    return {a[best - 1], a[std::min(best + 1, kPoints - 1)], a[best], maxima};
  }
  throw DomainError("maximizer lies below the scanned range");
}

double golden_max(const std::function<double(double)>& obj, double lo, double hi, double tol) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - r * (hi - lo), d = lo + r * (hi - lo);
  double fc = obj(c), fd = obj(d);
  for (int it = 0; it < 400 && hi - lo > tol * (1.0 + std::abs(lo)); ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - r * (hi - lo);
      fc = obj(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + r * (hi - lo);
      fd = obj(d);
    }
  }
  return 0.5 * (lo + hi);
}

// Root of a decreasing function on [lo, hi] with f(lo) > 0 > f(hi).
double bisect_decreasing(const std::function<double(double)>& f, double lo, double hi) {
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void check_u(double u) {
  if (!(u >= 1.0) || !std::isfinite(u)) {
    throw DomainError("u = e^{2 beta B} must be finite and >= 1, got " + std::to_string(u));
  }
}

// sum_{n>=1} n^{n-1}/n! x^{n-1}, with the term ratio x (1 + 1/n)^{n-1}.
double tree_ratio_series(double x) {
  double sum = 1.0, term = 1.0;
  for (int n = 1; n < 100000; ++n) {
    term *= x * std::pow(1.0 + 1.0 / n, n - 1);
    sum += term;
    if (term < 1e-14) break;
  }
  return sum;
}

}  // namespace

FResult F_of_u(double u) {
  check_u(u);
  auto obj = [u](double a) { return F_objective(u, a); };
  const Bracket br = scan(obj, 1e-6, 20.0);
  double a = golden_max(obj, br.lo, br.hi, 1e-13);
  // Polish on the sign of the derivative, which crosses zero cleanly where
  // the objective itself is flat to rounding.
  double lo = br.lo, hi = br.hi;
  if (F_slope(u, lo) > 0 && F_slope(u, hi) < 0) {
    a = bisect_decreasing([u](double t) { return F_slope(u, t); }, lo, hi);
  }
  return {F_objective(u, a), a, br.local_maxima};
}

GResult g_of_u(double u) {
  if (!(u > 0) || !std::isfinite(u)) throw DomainError("g_of_u needs finite u > 0");
  // h'(w) has the sign of (1+u) e^{-w} (1-w) - 1, decreasing on (0, 1).
  const double hi = std::min(1.0, std::log1p(u));
  const double w = bisect_decreasing(
      [u](double t) { return (1.0 + u) * std::exp(-t) * (1.0 - t) - 1.0; }, 0.0, hi);
  return {((1.0 + u) * std::exp(-w) - 1.0) * w / u, w};
}

double kappa_min_series(double u, double a) {
  check_u(u);
  if (!(a > 0)) throw DomainError("kappa_min_series needs a > 0");
  const double y = 1.0 + u * (-std::expm1(-a));
  const double ea = std::exp(a);
  // The series converges for x = e^a / kappa <= 1/e, where it sums to e.
  const double lo = ea * std::exp(1.0);
  if (y >= std::exp(1.0)) return lo;
  double hi = lo;
  while (tree_ratio_series(ea / hi) > y) hi *= 2.0;
  return bisect_decreasing([&](double k) { return tree_ratio_series(ea / k) - y; }, lo, hi);
}

KStar K_star(double u) {
  check_u(u);
  const FResult f = F_of_u(u);
  KStar k;
  k.closed_form = 1.0 / f.value;
  auto obj = [u](double a) { return -kappa_min_series(u, a); };
  const Bracket br = scan(obj, 1e-6, 20.0);
  k.a_at_min = golden_max(obj, br.lo, br.hi, 1e-10);
  k.series_check = kappa_min_series(u, k.a_at_min);
  return k;
}

double u_of(double beta, double B) {
  if (!(beta >= 0) || !std::isfinite(beta)) throw DomainError("beta must be finite and >= 0");
  if (!(B >= 0) || !std::isfinite(B)) throw DomainError("stability constant B must be >= 0");
  return std::exp(2.0 * beta * B);
}

double rho_star(double beta, double B, double c_beta) {
  if (!(c_beta > 0)) throw DomainError("C(beta) must be > 0");
  const double u = u_of(beta, B);
  return F_of_u(u).value / (u * c_beta);
}

double mayer_radius(double beta, double B, double c_beta) {
  if (!(c_beta > 0)) throw DomainError("C(beta) must be > 0");
  u_of(beta, B);
  return 1.0 / (std::exp(2.0 * beta * B + 1.0) * c_beta);
}

CkBound ck_bound(int k, double beta, double B, double c_beta, double a_star) {
  if (k < 1) throw DomainError("ck_bound needs k >= 1");
  if (!(c_beta > 0)) throw DomainError("C(beta) must be > 0");
  if (!(a_star > 0)) throw DomainError("ck_bound needs a > 0");
  const double u = u_of(beta, B);
  const double comb = to_double(Rational(ipow(k + 1, k), factorial(k)));
  CkBound b;
  b.ours = (1.0 / (k + 1) + std::expm1(a_star) * std::exp(a_star * k)) * std::pow(u, k - 1) * comb *
           std::pow(c_beta, k);
  b.lp = std::pow((u + 1.0) * c_beta / kLebowitzPenroseConstant, k);
  b.base_ours = std::exp(1.0 + a_star) * u * c_beta;
  b.base_lp = (u + 1.0) * c_beta / kLebowitzPenroseConstant;
  return b;
}

RadiusReport radius_report(double u, std::optional<double> c_beta, int k_max, double beta,
                           double B) {
  check_u(u);
  if (k_max < 0) throw InputError("k_max must be >= 0");
  RadiusReport r;
  r.beta = beta;
  r.B = B;
  r.u = u;
  r.c_beta_assumed = !c_beta.has_value();
  r.c_beta = c_beta.value_or(1.0);
  if (!(r.c_beta > 0)) throw DomainError("C(beta) must be > 0");
  r.F = F_of_u(u);
  r.g = g_of_u(u);
  r.K = K_star(u);
  r.rho_star = r.F.value / (u * r.c_beta);
  r.mayer_radius = 1.0 / (std::exp(1.0) * u * r.c_beta);
  // ck_bound takes beta and B; reproduce u through an equivalent pair.
  const double beta_eff = 0.5, B_eff = std::log(u);
  for (int k = 1; k <= k_max; ++k) r.bounds.push_back(ck_bound(k, beta_eff, B_eff, r.c_beta, r.F.a_star));
  r.base_constant_reference = 1.0 / std::exp(1.0 + r.reference_a);
  r.base_constant_computed = 1.0 / std::exp(1.0 + r.F.a_star);
  r.radius_constant_ours = r.base_constant_computed / u;
  r.radius_constant_lp = kLebowitzPenroseConstant / (u + 1.0);
  r.a_star_discrepancy = std::abs(r.F.a_star - r.reference_a) > 1e-3;
  return r;
}

nlohmann::json to_json(const RadiusReport& r) {
  nlohmann::json j;
  j["quantity"] = "radius_report";
  j["beta"] = r.beta;
  j["B"] = r.B;
  j["u"] = r.u;
  j["c_beta"] = r.c_beta;
  j["c_beta_assumed"] = r.c_beta_assumed;
  j["F"] = r.F.value;
  j["a_star"] = r.F.a_star;
  j["grid_local_maxima"] = r.F.grid_local_maxima;
  j["g"] = r.g.value;
  j["w_star"] = r.g.w_star;
  j["F_minus_g"] = r.F.value - r.g.value;
  j["K_star"] = {{"closed_form", r.K.closed_form}, {"series_check", r.K.series_check},
                 {"a_at_min", r.K.a_at_min}};
  j["rho_star"] = r.rho_star;
  j["mayer_radius"] = r.mayer_radius;
  nlohmann::json bounds = nlohmann::json::array();
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    const auto& b = r.bounds[i];
    bounds.push_back({{"k", i + 1}, {"ours", b.ours}, {"lp", b.lp}, {"lp_over_k", b.lp / (i + 1.0)}});
  }
  j["ck_bounds"] = bounds;
  if (!r.bounds.empty()) {
    j["base_ours"] = r.bounds.front().base_ours;
    j["base_lp"] = r.bounds.front().base_lp;
  }
  j["base_constants"] = {
      {"reference_a", r.reference_a},
      {"base_constant_reference_a", r.base_constant_reference},
      {"computed_a_star", r.F.a_star},
      {"base_constant_computed_a", r.base_constant_computed},
      {"lp_constant", r.lp_constant},
      {"radius_constant_ours", r.radius_constant_ours},
      {"radius_constant_lp", r.radius_constant_lp},
      {"a_star_discrepancy", r.a_star_discrepancy},
  };
  return j;
}

}  // namespace mayerkit::radii
