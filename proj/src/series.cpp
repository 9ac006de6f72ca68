#include "mayerkit/series.hpp"

#include "mayerkit/errors.hpp"
#include "mayerkit/radii.hpp"

#include <cmath>
#include <functional>

namespace mayerkit::series {

namespace {

void partitions_rec(int i, int parts_left, int weight_left, std::map<int, int>& m, int k, int n,
                    std::vector<MultisetPartition>& out) {
  if (parts_left == 0) {
    if (weight_left == 0) out.push_back({k, n, m});
    return;
  }
  if (i < 2) return;
  // Blocks of size i weigh i-1; smaller blocks must still fit the remaining weight.
  for (int c = std::min(parts_left, weight_left / (i - 1)); c >= 0; --c) {
    const int wl = weight_left - c * (i - 1);
    const int pl = parts_left - c;
    if (wl < pl) continue;  // each remaining part weighs at least 1
    if (c > 0) m[i] = c;
    partitions_rec(i - 1, pl, wl, m, k, n, out);
    m.erase(i);
  }
}

template <class T, class GetB>
T transform(int k, GetB&& get_b, const std::function<T(const Rational&)>& conv) {
  T total = T(0);
  for (int n = 1; n <= k; ++n) {
    const BigInt lead = factorial(k - 1 + n) / factorial(k);
    T inner = T(0);
    for (const auto& part : enum_partitions(k, n)) {
      BigInt denom = 1;
      T prod = T(1);
      for (auto [i, mi] : part.m) {
        denom *= factorial(mi);
        const T ib = T(i) * get_b(i);
        for (int r = 0; r < mi; ++r) prod *= ib;
      }
      inner += conv(Rational(lead, denom)) * prod;
    }
    if (n % 2 == 0) total -= inner;
    else total += inner;
  }
  return total;
}

}  // namespace

std::vector<MultisetPartition> enum_partitions(int k, int n) {
  if (k < 1 || n < 1 || n > k) throw DomainError("enum_partitions needs 1 <= n <= k");
  std::vector<MultisetPartition> out;
  std::map<int, int> m;
  partitions_rec(k + 1, n, k, m, k, n, out);
  return out;
}

double virial_from_mayer(const cluster::MayerCoefficients& b, int k) {
  if (k < 1) throw DomainError("virial_from_mayer needs k >= 1");
  for (int i = 2; i <= k + 1; ++i) b.at(i);
  return transform<double>(k, [&](int i) { return b.at(i); },
                           [](const Rational& q) { return to_double(q); });
}

Rational virial_from_mayer_exact(std::span<const Rational> b, int k) {
  if (k < 1) throw DomainError("virial_from_mayer needs k >= 1");
  if (static_cast<int>(b.size()) < k + 1) {
    throw InputError("virial_from_mayer is missing b_" + std::to_string(b.size() + 1));
  }
  return transform<Rational>(k, [&](int i) { return b[i - 1]; },
                             [](const Rational& q) { return q; });
}

std::string to_string(Source s) {
  switch (s) {
    case Source::mayer_transform: return "mayer_transform";
    case Source::direct_integral: return "direct_integral";
    case Source::inversion_oracle: return "inversion_oracle";
    case Source::finite_N: return "finite_N";
  }
  return "?";
}

double VirialCoefficients::at(int k) const {
  auto it = values.find(k);
  if (it == values.end()) throw InputError("virial table is missing C_" + std::to_string(k));
  return it->second;
}

VirialCoefficients virial_table_from_mayer(const cluster::MayerCoefficients& b, int k_max) {
  VirialCoefficients t;
  t.source = Source::mayer_transform;
  for (int k = 1; k <= k_max; ++k) {
    t.values[k] = virial_from_mayer(b, k);
    // First-order propagation of the b_n errors through the transform.
    double err = 0.0;
    for (int i = 2; i <= k + 1; ++i) {
      const double e = b.values.at(i).error;
      if (e == 0.0) continue;
      cluster::MayerCoefficients bp = b;
      const double h = std::max(std::abs(b.at(i)) * 1e-6, 1e-9);
      bp.values[i].value += h;
      err += std::abs((virial_from_mayer(bp, k) - t.values[k]) / h) * e;
    }
    t.errors[k] = err;
  }
  return t;
}

VirialCoefficients virial_table_from_direct(const cluster::VirialDirect& d) {
  VirialCoefficients t;
  t.source = Source::direct_integral;
  for (const auto& [k, v] : d.values) {
    t.values[k] = v.value;
    t.errors[k] = v.error;
  }
  return t;
}

VirialCoefficients invert_mayer_oracle(const cluster::MayerCoefficients& b, int k_max) {
  if (std::abs(b.at(1) - 1.0) != 0.0) throw InputError("inversion needs b_1 = 1");
  std::vector<double> bv;
  for (int n = 1; n <= k_max + 1; ++n) bv.push_back(b.at(n));
  const auto beta = invert_mayer_series<double>(bv, k_max);
  VirialCoefficients t;
  t.source = Source::inversion_oracle;
  for (int k = 1; k <= k_max; ++k) {
    t.values[k] = beta[k - 1];
    t.errors[k] = 0.0;
  }
  return t;
}

CombiSides combi_identity_check(std::span<const int> t, int n, int k) {
  if (n < 2) throw InputError("combi identity needs n >= 2");
  if (k < 1) throw InputError("combi identity needs k >= 1");
  if (static_cast<int>(t.size()) != n) throw InputError("tuple length must equal n");
  if (t[0] < 1) throw InputError("t_1 must be >= 1");
  long sum = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && t[i] < 2) throw InputError("t_" + std::to_string(i + 1) + " must be >= 2");
    sum += t[i];
  }
  if (sum != n + k - 1) throw InputError("tuple must sum to n + k - 1");

  CombiSides s;
  s.lhs = 0;
  std::vector<int> l(n, 0);
  std::function<void(int, int, BigInt)> rec = [&](int i, int left, BigInt prod) {
    if (i == n) {
      if (left == 0) s.lhs += prod;
      return;
    }
    for (int li = 0; li <= std::min(t[i], left); ++li)
      rec(i + 1, left - li, prod * binomial(t[i], li));
  };
  rec(0, n - 2, BigInt(1));
  s.rhs = binomial(k - 1 + n, n - 2);
  return s;
}

FreeEnergySeries free_energy_series(double rho, const VirialCoefficients& C, int k_max,
                                    const RadiusInputs& radius) {
  if (k_max < 1) throw InputError("k_max must be >= 1");
  FreeEnergySeries out;
  out.rho = rho;
  out.k_max = k_max;
  double q = 0.0;
  for (int k = 1; k <= k_max; ++k) q += C.at(k) / (k + 1) * std::pow(rho, k + 1);
  out.Q = q;

  const double u = radii::u_of(radius.beta, radius.B);
  const radii::FResult F = radii::F_of_u(u);
  const double a = radius.a_star.value_or(F.a_star);
  out.rho_star = F.value / (u * radius.c_beta);
  const auto next = radii::ck_bound(k_max + 1, radius.beta, radius.B, radius.c_beta, a);
  out.ratio = next.base_ours * std::abs(rho);
  if (rho == 0.0) {
    out.tail_bound = 0.0;
    out.certified = true;
  } else if (std::abs(rho) > out.rho_star) {
    out.warning = "uncertified: |rho| exceeds rho_star";
  } else if (out.ratio >= 1.0) {
    out.warning = "uncertified: majorant ratio >= 1";
  } else {
    const double t_next = next.ours / (k_max + 2) * std::pow(std::abs(rho), k_max + 2);
    out.tail_bound = t_next / (1.0 - out.ratio);
    out.certified = true;
  }
  return out;
}

double assemble_free_energy(double beta, double rho, std::uint64_t N, double V, double Q) {
  if (!(beta > 0)) throw DomainError("beta must be > 0");
  if (N == 0) throw DomainError("N must be > 0");
  if (!(V > 0)) throw DomainError("V must be > 0");
  const double expect = static_cast<double>(N) / V;
  if (std::abs(rho - expect) > 1e-12 * std::max(1.0, expect)) {
    throw InputError("rho must equal N/V");
  }
  const double ideal = (static_cast<double>(N) * std::log(V) - log_factorial(N)) / V;
  return -(ideal + Q) / beta;
}

}  // namespace mayerkit::series
