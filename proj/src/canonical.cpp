#include "mayerkit/canonical.hpp"

#include "mayerkit/combinatorics.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/parallel.hpp"
#include "mayerkit/radii.hpp"
#include "mayerkit/series.hpp"

#include <cmath>

namespace mayerkit::canonical {

namespace {

CanonicalResult base(const PairPotential& p, double beta, double L, int N, ZMethod m) {
  CanonicalResult r;
  r.N = N;
  r.L = L;
  r.beta = beta;
  r.dimension = p.dimension();
  r.method = m;
  return r;
}

double boltzmann(std::span<const double> f) {
  double w = 1.0;
  for (double x : f) {
    w *= 1.0 + x;
    if (w == 0.0) break;
  }
  return w;
}

}  // namespace

std::string to_string(ZMethod m) {
  switch (m) {
    case ZMethod::quadrature: return "quadrature";
    case ZMethod::monte_carlo: return "monte_carlo";
    case ZMethod::tonks_closed: return "tonks_closed";
  }
  return "?";
}

ZMethod parse_zmethod(const std::string& s) {
  if (s == "quadrature") return ZMethod::quadrature;
  if (s == "monte_carlo") return ZMethod::monte_carlo;
  if (s == "tonks_closed") return ZMethod::tonks_closed;
  throw InputError("method: unknown value '" + s + "'");
}

CanonicalResult ztilde_direct(const PairPotential& p, double beta, double L, int N, ZMethod method,
                              const cluster::MethodSpec& mc) {
  if (!(beta > 0) || !std::isfinite(beta)) throw DomainError("beta must be finite and > 0");
  if (!(L > 0) || !std::isfinite(L)) throw InputError("L: must be finite and > 0");
  if (N < 1) throw InputError("N: must be >= 1");
  CanonicalResult r = base(p, beta, L, N, method);
  const bool rods = p.kind() == PotentialKind::hard_rod;
  if (rods && L <= (N - 1) * p.sigma()) {
    throw DomainError("jammed: L <= (N-1) sigma leaves no allowed configuration");
  }
  if (N == 1) {
    r.ztilde = 1.0;
    return r;
  }
  switch (method) {
    case ZMethod::tonks_closed:
      if (!rods) throw InputError("tonks_closed needs hard rods");
      r.ztilde = std::pow(1.0 - (N - 1) * p.sigma() / L, N);
      return r;
    case ZMethod::quadrature: {
      if (p.dimension() != 1) throw InputError("canonical quadrature is one-dimensional");
      if (N > kMaxQuadratureN) {
        throw CapacityError("canonical quadrature supports N <= " + std::to_string(kMaxQuadratureN));
      }
      cluster::ChainDomain dom;
      dom.points = N;
      dom.box = L;
      const auto est = cluster::ordered_chain_integral(p, beta, dom, boltzmann, mc.extra_nodes);
      const double factor = to_double(factorial(N)) / std::pow(L, N);
      r.ztilde = factor * est.value;
      r.error = factor * est.error;
      return r;
    }
    case ZMethod::monte_carlo: {
      if (N > kMaxMonteCarloN) {
        throw CapacityError("canonical Monte Carlo supports N <= " + std::to_string(kMaxMonteCarloN));
      }
      if (mc.samples < 1) throw InputError("samples: must be >= 1");
      if (mc.chunks < 2) throw InputError("chunks: Monte Carlo needs at least 2 chunks");
      const int d = p.dimension();
      const int chunks = mc.chunks;
      const std::uint64_t per_chunk = (mc.samples + chunks - 1) / chunks;
      std::vector<double> means(chunks, 0.0);
      for_each_chunk(chunks, mc.workers, [&](int c) {
        ChunkRng rng(mc.seed, static_cast<std::uint64_t>(c));
        std::vector<double> x(static_cast<std::size_t>(N) * d);
        double sum = 0.0;
        for (std::uint64_t s = 0; s < per_chunk; ++s) {
          for (double& xi : x) xi = L * rng.uniform();
          double w = 1.0;
          for (int i = 0; i < N && w != 0.0; ++i)
            for (int j = i + 1; j < N && w != 0.0; ++j) {
              double r2 = 0.0;
              for (int a = 0; a < d; ++a) {
                const double dx = x[static_cast<std::size_t>(i) * d + a] - x[static_cast<std::size_t>(j) * d + a];
                r2 += dx * dx;
              }
              w *= 1.0 + f_bond(p, beta, std::sqrt(r2));
            }
          sum += w;
        }
        means[c] = sum / static_cast<double>(per_chunk);
      });
      double mean = 0.0;
      for (double v : means) mean += v;
      mean /= chunks;
      double var = 0.0;
      for (double v : means) var += (v - mean) * (v - mean);
      var /= chunks - 1;
      r.ztilde = mean;
      r.error = std::sqrt(var / chunks);
      return r;
    }
  }
  throw InputError("unknown method");
}

double q_lambda(const CanonicalResult& r) {
  if (!(r.ztilde > 0)) throw DomainError("Q needs ztilde > 0");
  return std::log(r.ztilde) / std::pow(r.L, r.dimension);
}

CompareReport compare_series_direct(const PairPotential& p, double beta, double L, int N, int k_max,
                                    const CompareOptions& opt) {
  if (k_max < 1) throw InputError("k_max: must be >= 1");
  CompareReport rep;
  rep.N = N;
  rep.L = L;
  rep.beta = beta;
  rep.k_max = k_max;
  const double V = std::pow(L, p.dimension());
  rep.rho = N / V;

  const bool rods = p.kind() == PotentialKind::hard_rod;
  const ZMethod m = opt.direct.value_or(rods ? ZMethod::tonks_closed
                                             : (N <= kMaxQuadratureN && p.dimension() == 1
                                                    ? ZMethod::quadrature
                                                    : ZMethod::monte_carlo));
  rep.direct_method = to_string(m);
  const CanonicalResult direct = ztilde_direct(p, beta, L, N, m, opt.mc);
  rep.Q_direct = q_lambda(direct);
  rep.direct_error = direct.error / (direct.ztilde * V);

  cluster::MayerCoefficients b;
  if (rods) {
    b = cluster::tonks_mayer_coefficients(p.sigma(), k_max + 1);
  } else {
    const auto method =
        p.dimension() == 1 ? cluster::MethodSpec::quadrature() : opt.mc;
    b = cluster::mayer_coefficients(p, beta, k_max + 1, cluster::VolumeSpec::infinite(), method);
  }
  const auto C = series::virial_table_from_mayer(b, k_max);
  series::RadiusInputs rad;
  rad.beta = beta;
  rad.B = p.stability_B();
  rad.c_beta = c_beta(p, beta).value;
  const auto fe = series::free_energy_series(rep.rho, C, k_max, rad);
  rep.rho_star = fe.rho_star;
  rep.Q_series = fe.Q;
  rep.tail_bound = fe.tail_bound;
  rep.certified = fe.certified;
  rep.gap = std::abs(rep.Q_direct - rep.Q_series);
  double coeff_err = 0.0;
  for (const auto& [k, e] : C.errors) coeff_err += e / (k + 1) * std::pow(rep.rho, k + 1);
  rep.budget = fe.tail_bound.value_or(0.0) + 2.0 * std::abs(rep.Q_series) / N +
               3.0 * rep.direct_error + 3.0 * coeff_err;
  rep.pass = rep.certified && rep.gap <= rep.budget;
  if (!rep.certified) rep.note = fe.warning;
  return rep;
}

}  // namespace mayerkit::canonical
