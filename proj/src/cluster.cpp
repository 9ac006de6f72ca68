#include "mayerkit/cluster.hpp"

#include "mayerkit/combinatorics.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/parallel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mayerkit::cluster {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Edge bit of 0-based pair (i, j), i < j, on n vertices.
constexpr int pair_bit(int n, int i, int j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

// All integer combinations sum c_i r_i with sum |c_i| <= depth and
// |value| <= span, sorted and merged at relative 1e-13.
std::vector<double> offset_set(const std::vector<double>& radii, int depth, double span) {
  std::vector<double> level{0.0};
  std::vector<double> all{0.0};
  auto merge = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
      if (out.empty() || x - out.back() > 1e-13 * (1.0 + std::abs(x))) out.push_back(x);
    v.swap(out);
  };
  for (int d = 0; d < depth; ++d) {
    std::vector<double> next;
    for (double o : level)
      for (double r : radii)
        for (double s : {-r, r}) {
          const double t = o + s;
          if (std::abs(t) <= span * (1 + 1e-12)) next.push_back(t);
        }
    merge(next);
    all.insert(all.end(), next.begin(), next.end());
    merge(all);
    level.swap(next);
    if (all.size() > 4096) break;  // many radii: nested exactness is out of reach anyway
  }
  return all;
}

class ChainIntegrator {
 public:
  ChainIntegrator(const PairPotential& p, double beta, const ChainDomain& dom,
                  const PairIntegrand& integrand, int extra_nodes, int subdivisions)
      : p_(p), beta_(beta), dom_(dom), integrand_(integrand), extra_(extra_nodes),
        sub_(subdivisions), x_(dom.points, 0.0), f_(graphs::edge_count(dom.points), 0.0) {
    const auto radii = p.breakpoints();
    const int n = dom.points;
    const bool many = radii.size() > 2;
    const double rmax = radii.empty() ? 0.0 : radii.back();
    offsets_ = offset_set(radii, many ? 1 : std::max(n - 1, 1), std::max(n - 1, 1) * rmax);
  }

  double run() { return level(0); }

 private:
  double level(int m) {
    const int n = dom_.points;
    if (m == n) return integrand_(f_);
    if (m == 0 && dom_.pin_first) {
      x_[0] = 0.0;
      return level(1);
    }
    const double lo = m == 0 ? 0.0 : x_[m - 1];
    const double hi = m == 0 ? dom_.box : std::min(dom_.box, x_[m - 1] + dom_.max_gap);
    if (!(hi > lo)) return 0.0;

    std::vector<double> pts{lo, hi};
    auto add_anchor = [&](double a) {
      for (double o : offsets_) {
        const double t = a + o;
        if (t > lo && t < hi) pts.push_back(t);
      }
    };
    add_anchor(0.0);
    if (std::isfinite(dom_.box)) add_anchor(dom_.box);
    for (int j = 0; j < m; ++j) add_anchor(x_[j]);
    std::sort(pts.begin(), pts.end());
    std::vector<double> br;
    br.reserve(pts.size());
    for (double t : pts)
      if (br.empty() || t - br.back() > 1e-13 * (1.0 + std::abs(t))) br.push_back(t);
    if (br.back() != hi) br.back() = hi;

    const int remaining = n - 1 - m;
    const quad::Rule& rule = quad::gauss_legendre(remaining / 2 + 1 + extra_);
    const int q = static_cast<int>(rule.nodes.size());
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < br.size(); ++k) {
      const double h = (br[k + 1] - br[k]) / sub_;
      for (int s = 0; s < sub_; ++s) {
        const double mid = br[k] + (s + 0.5) * h;
        double piece = 0.0;
        for (int i = 0; i < q; ++i) {
          const double xm = mid + 0.5 * h * rule.nodes[i];
          x_[m] = xm;
          for (int j = 0; j < m; ++j) f_[pair_bit(n, j, m)] = f_bond(p_, beta_, xm - x_[j]);
          piece += rule.weights[i] * level(m + 1);
        }
        sum += 0.5 * h * piece;
      }
    }
    return sum;
  }

  const PairPotential& p_;
  double beta_;
  ChainDomain dom_;
  const PairIntegrand& integrand_;
  int extra_;
  int sub_;
  std::vector<double> x_;
  std::vector<double> f_;
  std::vector<double> offsets_;
};

double ordered_chain_integral_sub(const PairPotential& p, double beta, const ChainDomain& dom,
                                  const PairIntegrand& integrand, int extra_nodes, int sub) {
  ChainIntegrator ci(p, beta, dom, integrand, extra_nodes, sub);
  return ci.run();
}

std::vector<graphs::EdgeMask> single_edge() { return {graphs::EdgeMask{1}}; }

void check_beta(double beta) {
  if (!(beta > 0) || !std::isfinite(beta)) throw DomainError("beta must be finite and > 0");
}

void check_tempered(const PairPotential& p) {
  if (!std::isfinite(p.range())) {
    throw DomainError("cluster integrand diverges: potential " + p.name() + " has infinite range");
  }
}

double ball_volume(int d, double radius) {
  return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0) * std::pow(radius, d);
}

// Uniform direction on the unit sphere in R^d.
void random_direction(ChunkRng& rng, int d, double* out) {
  if (d == 1) {
    out[0] = rng.uniform() < 0.5 ? -1.0 : 1.0;
    return;
  }
  while (true) {
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) {
      out[a] = 2.0 * rng.uniform() - 1.0;
      r2 += out[a] * out[a];
    }
    if (r2 > 1e-12 && r2 <= 1.0) {
      const double inv = 1.0 / std::sqrt(r2);
      for (int a = 0; a < d; ++a) out[a] *= inv;
      return;
    }
  }
}

void random_in_ball(ChunkRng& rng, int d, double radius, double* out) {
  while (true) {
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) {
      out[a] = 2.0 * rng.uniform() - 1.0;
      r2 += out[a] * out[a];
    }
    if (r2 <= 1.0) break;
  }
  for (int a = 0; a < d; ++a) out[a] *= radius;
}

// Monte Carlo estimate of (1/V)(1/denominator) int sum_graphs prod f.
// Infinite volume: x_1 = 0, the rest uniform in the ball of radius
// (n-1) * range, with the radius of x_2 stratified into equal-volume shells.
// Box: all points uniform in [0, L]^d, first coordinate of x_1 stratified.
ClusterValue monte_carlo_sum(const PairPotential& p, double beta, int n,
                             const PairIntegrand& integrand, double denominator,
                             const VolumeSpec& volume, const MethodSpec& m) {
  if (m.samples < 1) throw InputError("samples: must be >= 1");
  if (m.chunks < 2) throw InputError("chunks: Monte Carlo needs at least 2 chunks");
  constexpr int kStrata = 8;
  const int d = p.dimension();
  const int chunks = m.chunks;
  std::uint64_t per_chunk = (m.samples + chunks - 1) / chunks;
  per_chunk = ((per_chunk + kStrata - 1) / kStrata) * kStrata;

  const double radius = (n - 1) * p.range();
  double scale;
  if (volume.is_infinite()) {
    scale = std::pow(ball_volume(d, radius), n - 1) / denominator;
  } else {
    scale = std::pow(*volume.box, d * (n - 1)) / denominator;
  }

  std::vector<double> means(chunks, 0.0);
  for_each_chunk(chunks, m.workers, [&](int c) {
    ChunkRng rng(m.seed, static_cast<std::uint64_t>(c));
    std::vector<double> x(static_cast<std::size_t>(n) * d, 0.0);
    std::vector<double> f(graphs::edge_count(n), 0.0);
    double sum = 0.0;
    for (std::uint64_t s = 0; s < per_chunk; ++s) {
      const int stratum = static_cast<int>(s % kStrata);
      if (volume.is_infinite()) {
        std::fill(x.begin(), x.begin() + d, 0.0);
        // x_2 in shell `stratum`: r^d uniform on [stratum, stratum+1) / kStrata.
        double dir[3];
        random_direction(rng, d, dir);
        const double r = radius * std::pow((stratum + rng.uniform()) / kStrata, 1.0 / d);
        for (int a = 0; a < d; ++a) x[d + a] = r * dir[a];
        for (int i = 2; i < n; ++i) random_in_ball(rng, d, radius, &x[static_cast<std::size_t>(i) * d]);
      } else {
        const double L = *volume.box;
        for (int i = 0; i < n; ++i)
          for (int a = 0; a < d; ++a) x[static_cast<std::size_t>(i) * d + a] = L * rng.uniform();
        x[0] = L * (stratum + rng.uniform()) / kStrata;
      }
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit) {
          double r2 = 0.0;
          for (int a = 0; a < d; ++a) {
            const double dx = x[static_cast<std::size_t>(i) * d + a] - x[static_cast<std::size_t>(j) * d + a];
            r2 += dx * dx;
          }
          f[bit] = f_bond(p, beta, std::sqrt(r2));
        }
      sum += integrand(f);
    }
    means[c] = sum / static_cast<double>(per_chunk);
  });

  double mean = 0.0;
  for (double v : means) mean += v;
  mean /= chunks;
  double var = 0.0;
  for (double v : means) var += (v - mean) * (v - mean);
  var /= (chunks - 1);
  return {scale * mean, scale * std::sqrt(var / chunks)};
}

PairIntegrand connected_integrand(int n) {
  if (n <= 5) {
    auto sum = std::make_shared<GraphSum>(n, graphs::GraphClass::connected);
    return [sum](std::span<const double> f) { return (*sum)(f); };
  }
  return [n](std::span<const double> f) { return connected_sum_recursive(n, f); };
}

PairIntegrand irreducible_integrand(int vertices) {
  auto sum = vertices == 2 ? std::make_shared<GraphSum>(2, single_edge())
                           : std::make_shared<GraphSum>(vertices, graphs::GraphClass::two_connected);
  return [sum](std::span<const double> f) { return (*sum)(f); };
}

// (1/V)(1/denominator) * integral over all n positions, via the ordered region.
ClusterValue quadrature_sum(const PairPotential& p, double beta, int n,
                            const PairIntegrand& integrand, double denominator,
                            const VolumeSpec& volume, const MethodSpec& m) {
  if (p.dimension() != 1) {
    throw InputError("quadrature cluster integrals are one-dimensional; use monte_carlo for d = " +
                     std::to_string(p.dimension()));
  }
  ChainDomain dom;
  dom.points = n;
  dom.max_gap = p.range();
  double factor;
  if (volume.is_infinite()) {
    dom.pin_first = true;
    // n! orderings of the n points about the leftmost one.
    factor = to_double(factorial(n)) / denominator;
  } else {
    dom.box = *volume.box;
    factor = to_double(factorial(n)) / denominator / *volume.box;
  }
  const double coarse = ordered_chain_integral_sub(p, beta, dom, integrand, m.extra_nodes, 1);
  const double fine = ordered_chain_integral_sub(p, beta, dom, integrand, m.extra_nodes, 2);
  return {factor * fine, factor * std::abs(fine - coarse)};
}

}  // namespace

quad::Estimate ordered_chain_integral(const PairPotential& p, double beta, const ChainDomain& dom,
                                      const PairIntegrand& integrand, int extra_nodes) {
  if (dom.points < 1) throw DomainError("chain integral needs at least one point");
  if (!dom.pin_first && !std::isfinite(dom.box)) {
    throw DomainError("unpinned chain integral needs a finite box");
  }
  const double coarse = ordered_chain_integral_sub(p, beta, dom, integrand, extra_nodes, 1);
  const double fine = ordered_chain_integral_sub(p, beta, dom, integrand, extra_nodes, 2);
  return {fine, std::abs(fine - coarse)};
}

std::string VolumeSpec::label() const { return box ? "box L=" + fmt(*box) : "infinite"; }

std::string MethodSpec::label() const {
  switch (method) {
    case Method::quadrature: return "quadrature";
    case Method::monte_carlo: return "monte_carlo";
    case Method::exact: return "exact";
  }
  return "?";
}

double ClusterTable::at(int order) const {
  auto it = values.find(order);
  if (it == values.end()) {
    throw InputError("coefficient table is missing " + quantity.substr(0, quantity.find('_')) +
                     "_" + std::to_string(order));
  }
  return it->second.value;
}

MayerCoefficients make_mayer_table(double beta, VolumeSpec volume, MethodSpec method,
                                   std::string potential) {
  MayerCoefficients t;
  t.quantity = "b_n";
  t.beta = beta;
  t.volume = volume;
  t.method = method;
  t.potential = std::move(potential);
  t.values[1] = {1.0, 0.0};
  return t;
}

MayerCoefficients mayer_table_from_values(std::span<const double> b_from_2) {
  MayerCoefficients t = make_mayer_table(1.0, VolumeSpec::infinite(), MethodSpec{}, "given");
  t.method.method = Method::exact;
  for (std::size_t i = 0; i < b_from_2.size(); ++i) t.values[static_cast<int>(i) + 2] = {b_from_2[i], 0.0};
  return t;
}

GraphSum::GraphSum(int n, graphs::GraphClass cls) : n_(n) {
  offsets_.push_back(0);
  graphs::for_each_graph(n, cls, [&](const graphs::LabeledGraph& g) {
    for (graphs::EdgeMask m = g.mask(); m; m &= m - 1) edges_.push_back(std::countr_zero(m));
    offsets_.push_back(edges_.size());
  });
}

GraphSum::GraphSum(int n, std::vector<graphs::EdgeMask> masks) : n_(n) {
  offsets_.push_back(0);
  for (graphs::EdgeMask mask : masks) {
    for (graphs::EdgeMask m = mask; m; m &= m - 1) edges_.push_back(std::countr_zero(m));
    offsets_.push_back(edges_.size());
  }
}

double GraphSum::operator()(std::span<const double> f) const {
  double total = 0.0;
  for (std::size_t g = 0; g + 1 < offsets_.size(); ++g) {
    double prod = 1.0;
    for (std::size_t e = offsets_[g]; e < offsets_[g + 1]; ++e) {
      prod *= f[edges_[e]];
      if (prod == 0.0) break;
    }
    total += prod;
  }
  return total;
}

double connected_sum_recursive(int n, std::span<const double> f) {
  if (n < 1 || n > graphs::kMaxVertices) throw CapacityError("connected_sum_recursive: bad n");
  if (n == 1) return 1.0;
  const std::uint32_t full = (1U << n) - 1;
  std::array<double, 1U << graphs::kMaxVertices> w{};
  std::array<double, 1U << graphs::kMaxVertices> c{};
  w[0] = 1.0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int top = 31 - std::countl_zero(s);
    const std::uint32_t rest = s & ~(1U << top);
    double prod = w[rest];
    for (std::uint32_t r = rest; r; r &= r - 1) prod *= 1.0 + f[pair_bit(n, std::countr_zero(r), top)];
    w[s] = prod;
  }
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    double v = w[s];
    const std::uint32_t others = s & ~low;
    // Proper subsets T of s containing `low`: T = low | u, u a proper submask of others.
    for (std::uint32_t u = (others - 1) & others;; u = (u - 1) & others) {
      if (u == others) break;
      const std::uint32_t t = low | u;
      v -= c[t] * w[s & ~t];
      if (u == 0) break;
    }
    c[s] = v;
  }
  return c[full];
}

ClusterValue mayer_bn(const PairPotential& p, double beta, int n, const VolumeSpec& volume,
                      const MethodSpec& method) {
  check_beta(beta);
  if (n < 1) throw DomainError("mayer_bn needs n >= 1");
  if (n == 1) return {1.0, 0.0};
  if (volume.box && !(*volume.box > 0)) throw InputError("box side L must be > 0");
  check_tempered(p);
  switch (method.method) {
    case Method::exact: {
      if (p.kind() != PotentialKind::hard_rod || !volume.is_infinite()) {
        throw InputError("exact Mayer coefficients are available for hard rods in infinite volume");
      }
      return tonks_mayer_coefficients(p.sigma(), n).values.at(n);
    }
    case Method::quadrature:
      if (n > kMaxQuadratureOrder) {
        throw CapacityError("quadrature b_n supports n <= " + std::to_string(kMaxQuadratureOrder));
      }
      return quadrature_sum(p, beta, n, connected_integrand(n), to_double(factorial(n)), volume,
                            method);
    case Method::monte_carlo:
      if (n > kMaxMonteCarloOrder) {
        throw CapacityError("Monte Carlo b_n supports n <= " + std::to_string(kMaxMonteCarloOrder));
      }
      return monte_carlo_sum(p, beta, n, connected_integrand(n), to_double(factorial(n)), volume,
                             method);
  }
  throw InputError("unknown method");
}

MayerCoefficients mayer_coefficients(const PairPotential& p, double beta, int n_max,
                                     const VolumeSpec& volume, const MethodSpec& method) {
  MayerCoefficients t = make_mayer_table(beta, volume, method, p.name());
  for (int n = 2; n <= n_max; ++n) t.values[n] = mayer_bn(p, beta, n, volume, method);
  return t;
}

ClusterValue virial_bk_direct(const PairPotential& p, double beta, int k, const MethodSpec& method,
                              const VolumeSpec& volume) {
  check_beta(beta);
  if (k < 1) throw DomainError("virial_bk_direct needs k >= 1");
  check_tempered(p);
  const double kfact = to_double(factorial(k));
  switch (method.method) {
    case Method::exact:
      if (p.kind() != PotentialKind::hard_rod || !volume.is_infinite()) {
        throw InputError("exact virial coefficients are available for hard rods in infinite volume");
      }
      return {-(k + 1.0) * std::pow(p.sigma(), k) / k, 0.0};
    case Method::quadrature:
      if (k > 3) throw CapacityError("quadrature beta_k supports k <= 3");
      return quadrature_sum(p, beta, k + 1, irreducible_integrand(k + 1), kfact, volume, method);
    case Method::monte_carlo:
      if (k > 2) throw CapacityError("Monte Carlo beta_k supports k <= 2");
      return monte_carlo_sum(p, beta, k + 1, irreducible_integrand(k + 1), kfact, volume, method);
  }
  throw InputError("unknown method");
}

VirialDirect virial_direct_table(const PairPotential& p, double beta, int k_max,
                                 const MethodSpec& method) {
  VirialDirect t;
  t.quantity = "beta_k";
  t.beta = beta;
  t.method = method;
  t.potential = p.name();
  for (int k = 1; k <= k_max; ++k) t.values[k] = virial_bk_direct(p, beta, k, method);
  return t;
}

double penrose_bn_bound(int n, double beta, double B, double c_beta) {
  if (n < 2) throw DomainError("penrose_bn_bound needs n >= 2");
  if (B < 0) throw DomainError("stability constant B must be >= 0");
  if (!(c_beta > 0)) throw DomainError("C(beta) must be > 0");
  const Rational comb(ipow(n, n - 2), factorial(n));
  return std::exp(2.0 * beta * B * (n - 2)) * to_double(comb) * std::pow(c_beta, n - 1);
}

MayerCoefficients tonks_mayer_coefficients(double sigma, int n_max) {
  if (!(sigma > 0)) throw DomainError("sigma must be > 0");
  MethodSpec m;
  m.method = Method::exact;
  MayerCoefficients t =
      make_mayer_table(1.0, VolumeSpec::infinite(), m, PairPotential::hard_rod(sigma).name());
  for (int n = 2; n <= n_max; ++n) {
    const Rational c(ipow(n, n - 1), factorial(n));
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    t.values[n] = {sign * to_double(c) * std::pow(sigma, n - 1), 0.0};
  }
  return t;
}

}  // namespace mayerkit::cluster
