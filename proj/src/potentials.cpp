#include "mayerkit/potentials.hpp"

#include "mayerkit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

namespace mayerkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::string to_string(PotentialKind k) {
  switch (k) {
    case PotentialKind::hard_rod: return "hard_rod";
    case PotentialKind::hard_sphere: return "hard_sphere";
    case PotentialKind::square_well: return "square_well";
    case PotentialKind::custom_tabulated: return "custom_tabulated";
  }
  return "?";
}

PotentialKind parse_potential_kind(const std::string& s) {
  if (s == "hard_rod") return PotentialKind::hard_rod;
  if (s == "hard_sphere") return PotentialKind::hard_sphere;
  if (s == "square_well") return PotentialKind::square_well;
  if (s == "custom_tabulated") return PotentialKind::custom_tabulated;
  throw InputError("unknown potential kind '" + s +
                   "' (expected hard_rod, hard_sphere, square_well, custom_tabulated)");
}

PairPotential PairPotential::hard_rod(double sigma) {
  PairPotential p;
  p.kind_ = PotentialKind::hard_rod;
  p.sigma_ = sigma;
  p.dimension_ = 1;
  p.validate();
  return p;
}

PairPotential PairPotential::hard_sphere(double sigma, int dimension) {
  PairPotential p;
  p.kind_ = PotentialKind::hard_sphere;
  p.sigma_ = sigma;
  p.dimension_ = dimension;
  p.validate();
  return p;
}

PairPotential PairPotential::square_well(double sigma, double lambda_w, double epsilon, double B,
                                         int dimension) {
  PairPotential p;
  p.kind_ = PotentialKind::square_well;
  p.sigma_ = sigma;
  p.lambda_w_ = lambda_w;
  p.epsilon_ = epsilon;
  p.B_ = B;
  p.dimension_ = dimension;
  p.validate();
  return p;
}

PairPotential PairPotential::tabulated(std::vector<double> r, std::vector<double> v,
                                       double support, std::optional<double> B, int dimension) {
  PairPotential p;
  p.kind_ = PotentialKind::custom_tabulated;
  p.tab_r_ = std::move(r);
  p.tab_v_ = std::move(v);
  p.support_ = support;
  p.dimension_ = dimension;
  const bool nonneg = std::all_of(p.tab_v_.begin(), p.tab_v_.end(), [](double x) { return x >= 0; });
  if (!B && !nonneg) {
    throw InputError("B: custom_tabulated potential with negative values needs an explicit "
                     "stability constant");
  }
  p.B_ = B.value_or(0.0);
  // sigma is the hard-core radius, if any; informational only.
  p.sigma_ = 0.0;
  for (std::size_t i = 0; i + 1 < p.tab_r_.size(); ++i)
    if (std::isinf(p.tab_v_[i]) && p.tab_v_[i] > 0) p.sigma_ = p.tab_r_[i + 1];
  p.validate();
  return p;
}

void PairPotential::validate() const {
  if (dimension_ < 1 || dimension_ > 3) {
    throw InputError("dimension: must be 1, 2 or 3, got " + std::to_string(dimension_));
  }
  if (!(B_ >= 0) || !std::isfinite(B_)) throw InputError("B: must be finite and >= 0");
  switch (kind_) {
    case PotentialKind::hard_rod:
      if (dimension_ != 1) throw InputError("dimension: hard_rod is one-dimensional");
      [[fallthrough]];
    case PotentialKind::hard_sphere:
      if (!(sigma_ > 0) || !std::isfinite(sigma_)) throw InputError("sigma: must be > 0");
      if (B_ != 0) throw InputError("B: nonnegative potentials have B = 0");
      break;
    case PotentialKind::square_well:
      if (!(sigma_ > 0) || !std::isfinite(sigma_)) throw InputError("sigma: must be > 0");
      if (!(lambda_w_ > 1) || !std::isfinite(lambda_w_)) {
        throw InputError("lambda_w: must be > 1, got " + num(lambda_w_));
      }
      if (!(epsilon_ >= 0) || !std::isfinite(epsilon_)) throw InputError("epsilon: must be >= 0");
      break;
    case PotentialKind::custom_tabulated: {
      if (tab_r_.empty() || tab_r_.size() != tab_v_.size()) {
        throw InputError("r/v: tabulated potential needs equally many (r, V) samples");
      }
      if (tab_r_.front() < 0) throw InputError("r: sample radii must be >= 0");
      for (std::size_t i = 1; i < tab_r_.size(); ++i)
        if (!(tab_r_[i] > tab_r_[i - 1])) throw InputError("r: sample radii must increase");
      for (double v : tab_v_)
        if (std::isnan(v)) throw InputError("v: NaN sample");
      if (std::isnan(support_) || support_ < tab_r_.back()) {
        throw InputError("support: must be >= the last sample radius");
      }
      break;
    }
  }
}

PairPotential PairPotential::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("potential: expected an object");
  static const std::set<std::string> known = {"kind", "sigma",     "epsilon", "lambda_w", "B",
                                              "dimension", "r", "v", "support"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw InputError("potential: unknown key '" + key + "'");
  if (!j.contains("kind")) throw InputError("potential: missing key 'kind'");

  auto number = [&](const char* key) -> double {
    if (!j.contains(key)) throw InputError(std::string("potential: missing key '") + key + "'");
    if (!j[key].is_number()) throw InputError(std::string("potential: '") + key + "' must be a number");
    return j[key].get<double>();
  };
  auto opt_number = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key)) return std::nullopt;
    return number(key);
  };
  auto opt_int = [&](const char* key, int dflt) -> int {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_number_integer()) throw InputError(std::string("potential: '") + key + "' must be an integer");
    return j[key].get<int>();
  };

  const PotentialKind kind = parse_potential_kind(j["kind"].get<std::string>());
  switch (kind) {
    case PotentialKind::hard_rod: {
      if (opt_int("dimension", 1) != 1) throw InputError("dimension: hard_rod is one-dimensional");
      if (opt_number("B").value_or(0.0) != 0) throw InputError("B: nonnegative potentials have B = 0");
      return hard_rod(number("sigma"));
    }
    case PotentialKind::hard_sphere: {
      if (opt_number("B").value_or(0.0) != 0) throw InputError("B: nonnegative potentials have B = 0");
      return hard_sphere(number("sigma"), opt_int("dimension", 3));
    }
    case PotentialKind::square_well:
      return square_well(number("sigma"), number("lambda_w"), number("epsilon"), number("B"),
                         opt_int("dimension", 1));
    case PotentialKind::custom_tabulated: {
      if (!j.contains("r") || !j.contains("v")) throw InputError("potential: tabulated needs 'r' and 'v'");
      auto grab = [](const nlohmann::json& arr, const char* key) {
        if (!arr.is_array()) throw InputError(std::string(key) + ": must be an array");
        std::vector<double> out;
        for (const auto& x : arr) {
          if (x.is_string() && x.get<std::string>() == "inf") out.push_back(kInf);
          else if (x.is_number()) out.push_back(x.get<double>());
          else throw InputError(std::string(key) + ": entries must be numbers or \"inf\"");
        }
        return out;
      };
      return tabulated(grab(j["r"], "r"), grab(j["v"], "v"), number("support"), opt_number("B"),
                       opt_int("dimension", 1));
    }
  }
  throw InputError("potential: unhandled kind");
}

nlohmann::json PairPotential::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind_);
  j["dimension"] = dimension_;
  j["B"] = B_;
  switch (kind_) {
    case PotentialKind::hard_rod:
    case PotentialKind::hard_sphere: j["sigma"] = sigma_; break;
    case PotentialKind::square_well:
      j["sigma"] = sigma_;
      j["lambda_w"] = lambda_w_;
      j["epsilon"] = epsilon_;
      break;
    case PotentialKind::custom_tabulated: {
      j["r"] = tab_r_;
      nlohmann::json v = nlohmann::json::array();
      for (double x : tab_v_) {
        if (std::isinf(x)) v.push_back("inf");
        else v.push_back(x);
      }
      j["v"] = v;
      j["support"] = support_;
      break;
    }
  }
  return j;
}

std::string PairPotential::name() const {
  switch (kind_) {
    case PotentialKind::hard_rod: return "hard_rod(sigma=" + num(sigma_) + ")";
    case PotentialKind::hard_sphere:
      return "hard_sphere(sigma=" + num(sigma_) + ",d=" + std::to_string(dimension_) + ")";
    case PotentialKind::square_well:
      return "square_well(sigma=" + num(sigma_) + ",lambda_w=" + num(lambda_w_) +
             ",epsilon=" + num(epsilon_) + ",d=" + std::to_string(dimension_) + ")";
    case PotentialKind::custom_tabulated:
      return "custom_tabulated(" + std::to_string(tab_r_.size()) + " samples,d=" +
             std::to_string(dimension_) + ")";
  }
  return "?";
}

double PairPotential::energy(double r) const {
  r = std::abs(r);
  switch (kind_) {
    case PotentialKind::hard_rod:
    case PotentialKind::hard_sphere: return r < sigma_ ? kInf : 0.0;
    case PotentialKind::square_well:
      if (r < sigma_) return kInf;
      return r < lambda_w_ * sigma_ ? -epsilon_ : 0.0;
    case PotentialKind::custom_tabulated: {
      if (r >= support_) return 0.0;
      if (r <= tab_r_.front()) return tab_v_.front();
      auto it = std::upper_bound(tab_r_.begin(), tab_r_.end(), r);
      double r0, r1, v0, v1;
      if (it == tab_r_.end()) {
        if (std::isinf(support_)) return tab_v_.back();
        r0 = tab_r_.back(); v0 = tab_v_.back(); r1 = support_; v1 = 0.0;
      } else {
        const auto i = static_cast<std::size_t>(it - tab_r_.begin());
        r0 = tab_r_[i - 1]; r1 = tab_r_[i]; v0 = tab_v_[i - 1]; v1 = tab_v_[i];
      }
      if (std::isinf(v0) || std::isinf(v1)) return (v0 == -kInf || v1 == -kInf) ? -kInf : kInf;
      return v0 + (v1 - v0) * (r - r0) / (r1 - r0);
    }
  }
  return 0.0;
}

double PairPotential::range() const {
  switch (kind_) {
    case PotentialKind::hard_rod:
    case PotentialKind::hard_sphere: return sigma_;
    case PotentialKind::square_well: return epsilon_ > 0 ? lambda_w_ * sigma_ : sigma_;
    case PotentialKind::custom_tabulated:
      if (std::isinf(support_)) return tab_v_.back() == 0.0 ? tab_r_.back() : kInf;
      return support_;
  }
  return kInf;
}

std::vector<double> PairPotential::breakpoints() const {
  std::vector<double> b;
  switch (kind_) {
    case PotentialKind::hard_rod:
    case PotentialKind::hard_sphere: b = {sigma_}; break;
    case PotentialKind::square_well:
      b = {sigma_};
      if (epsilon_ > 0) b.push_back(lambda_w_ * sigma_);
      break;
    case PotentialKind::custom_tabulated: {
      const double rng = range();
      for (std::size_t i = 0; i < tab_r_.size(); ++i) {
        if (tab_r_[i] > 0 && tab_r_[i] < rng) b.push_back(tab_r_[i]);
        // Sign changes of V are kinks of |f|.
        if (i + 1 < tab_r_.size() && std::isfinite(tab_v_[i]) && std::isfinite(tab_v_[i + 1]) &&
            tab_v_[i] * tab_v_[i + 1] < 0) {
          const double t = tab_v_[i] / (tab_v_[i] - tab_v_[i + 1]);
          b.push_back(tab_r_[i] + t * (tab_r_[i + 1] - tab_r_[i]));
        }
      }
      if (std::isfinite(rng)) b.push_back(rng);
      break;
    }
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

bool PairPotential::nonnegative() const {
  switch (kind_) {
    case PotentialKind::hard_rod:
    case PotentialKind::hard_sphere: return true;
    case PotentialKind::square_well: return epsilon_ == 0;
    case PotentialKind::custom_tabulated:
      return std::all_of(tab_v_.begin(), tab_v_.end(), [](double v) { return v >= 0; });
  }
  return false;
}

double f_bond(const PairPotential& p, double beta, double r) {
  const double v = p.energy(r);
  if (v == kInf) return -1.0;
  return std::expm1(-beta * v);
}

double sphere_surface(int d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

namespace {

void check_integrable(const PairPotential& p, double beta) {
  if (!(beta > 0)) throw DomainError("beta must be > 0");
  if (!std::isfinite(p.range())) {
    throw DivergenceError("C(beta) diverges: the potential has a non-vanishing tail");
  }
  if (p.kind() == PotentialKind::custom_tabulated) {
    std::vector<double> probe = p.breakpoints();
    probe.push_back(0.0);
    for (double r : probe)
      if (p.energy(r) == -kInf) throw DivergenceError("C(beta) diverges: V = -inf sample");
  }
}

std::vector<double> c_beta_breaks(const PairPotential& p) {
  std::vector<double> b{0.0};
  for (double r : p.breakpoints()) b.push_back(r);
  if (b.back() < p.range()) b.push_back(p.range());
  return b;
}

}  // namespace

quad::Estimate c_beta_fixed(const PairPotential& p, double beta, int panels, int q) {
  check_integrable(p, beta);
  const int d = p.dimension();
  const auto breaks = c_beta_breaks(p);
  auto integrand = [&](double r) { return std::pow(r, d - 1) * std::abs(f_bond(p, beta, r)); };
  quad::Estimate e = quad::piecewise(integrand, breaks, panels, q);
  const double s = sphere_surface(d);
  return {s * e.value, s * e.error};
}

quad::Estimate c_beta(const PairPotential& p, double beta, double tolerance) {
  quad::Estimate e;
  // 8-point rule: exact for the polynomial pieces of hard cores and wells.
  for (int panels = 1; panels <= 4096; panels *= 2) {
    e = c_beta_fixed(p, beta, panels, 8);
    if (e.error <= tolerance * std::max(1.0, std::abs(e.value))) break;
  }
  return e;
}

double ThermoState::density(int dimension) const {
  if (!L || !N) throw InputError("density needs both L and N");
  return *N / std::pow(*L, dimension);
}

void ThermoState::validate() const {
  if (!(beta > 0)) throw InputError("beta: must be > 0");
  if (L && !(*L > 0)) throw InputError("L: must be > 0");
  if (N && *N < 1) throw InputError("N: must be >= 1");
}

}  // namespace mayerkit
