#include "mayerkit/polymer.hpp"

#include "mayerkit/errors.hpp"
#include "mayerkit/graphs.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <string>

namespace mayerkit::polymer {

namespace {

constexpr int pair_bit(int n, int i, int j) { return i * (2 * n - i - 1) / 2 + (j - i - 1); }

std::vector<std::vector<graphs::VertexMask>> subsets_by_size(int N) {
  std::vector<std::vector<graphs::VertexMask>> out(N + 1);
  for (graphs::VertexMask m = 0; m < (graphs::VertexMask{1} << N); ++m) out[std::popcount(m)].push_back(m);
  return out;
}

// phi^T over all edge masks on n vertices.
std::vector<double> ursell_table(int n) {
  std::vector<double> t(std::size_t{1} << graphs::edge_count(n));
  for (std::size_t m = 0; m < t.size(); ++m)
    t[m] = static_cast<double>(graphs::ursell_value(graphs::LabeledGraph(n, m)));
  return t;
}

// |penrose_trees| over all edge masks on n vertices (0 when disconnected).
std::vector<long> penrose_count_table(int n) {
  std::vector<long> t(std::size_t{1} << graphs::edge_count(n), 0);
  for (std::size_t m = 0; m < t.size(); ++m) {
    const graphs::LabeledGraph g(n, m);
    if (graphs::is_connected(g)) t[m] = static_cast<long>(graphs::penrose_trees(g).size());
  }
  return t;
}

std::vector<double> zeta_vector(const ActivityProfile& a) {
  std::vector<double> z(a.N + 1, 0.0);
  for (auto [m, v] : a.zeta) z[m] = v;
  return z;
}

// Ordered tuples s_1..s_n with s_i >= 2 summing to total.
void compositions(int n, int total, std::vector<int>& cur, const std::function<void()>& fn) {
  if (static_cast<int>(cur.size()) == n) {
    if (total == 0) fn();
    return;
  }
  const int left = n - static_cast<int>(cur.size()) - 1;
  for (int s = 2; total - s >= 2 * left; ++s) {
    cur.push_back(s);
    compositions(n, total - s, cur, fn);
    cur.pop_back();
  }
}

template <class T>
T ck_generic(int N, int k, const std::function<T(int)>& bs_fact, const std::function<T(const Rational&)>& conv) {
  if (k < 1) throw DomainError("ck_finite_N needs k >= 1");
  if (k > kMaxPExactParts) throw CapacityError("ck_finite_N supports k <= " + std::to_string(kMaxPExactParts));
  T total = T(0);
  for (int n = 1; n <= k; ++n) {
    T w = T(0);
    std::vector<int> s;
    compositions(n, k + n, s, [&] {
      T prod = conv(p_exact(N, s));
      for (int si : s) prod *= bs_fact(si);
      w += prod;
    });
    w *= conv(Rational(BigInt(k + 1), factorial(n)));
    if (n % 2 == 0) total -= w;
    else total += w;
  }
  return total;
}

}  // namespace

ActivityProfile ActivityProfile::from_zeta(int N, std::map<int, double> zeta) {
  ActivityProfile a;
  a.N = N;
  a.zeta = std::move(zeta);
  a.validate();
  return a;
}

ActivityProfile ActivityProfile::from_mayer(int N, double V, const cluster::MayerCoefficients& b) {
  if (N < 1) throw DomainError("N must be >= 1");
  if (!(V > 0)) throw DomainError("V must be > 0");
  ActivityProfile a;
  a.N = N;
  a.V = V;
  a.rho = N / V;
  for (int n = 2; n <= N; ++n) {
    const double bn = b.at(n);
    const double nf = std::exp(std::lgamma(n + 1.0));
    a.mu[n] = bn * nf / std::pow(static_cast<double>(N), n - 1);
    a.zeta[n] = std::pow(*a.rho, n - 1) * a.mu[n];
  }
  a.validate();
  return a;
}

ActivityProfile ActivityProfile::from_tonks(int N, double V, double sigma) {
  if (N < 1) throw DomainError("N must be >= 1");
  if (!(V > 0)) throw DomainError("V must be > 0");
  if (!(sigma > 0)) throw DomainError("sigma must be > 0");
  ActivityProfile a;
  a.N = N;
  a.V = V;
  a.rho = N / V;
  for (int m = 2; m <= N; ++m) {
    a.zeta[m] = std::pow(-m * sigma / V, m - 1);
    a.mu[m] = a.zeta[m] / std::pow(*a.rho, m - 1);
  }
  return a;
}

double ActivityProfile::zeta_at(int m) const {
  auto it = zeta.find(m);
  return it == zeta.end() ? 0.0 : it->second;
}

std::map<int, double> ActivityProfile::C_rho() const {
  std::map<int, double> out;
  for (auto [m, z] : zeta) {
    if (z == 0.0) {
      out[m] = 0.0;
      continue;
    }
    const double lchoose = std::lgamma(static_cast<double>(N)) - std::lgamma(static_cast<double>(m)) -
                           std::lgamma(static_cast<double>(N - m + 1));
    out[m] = std::exp(std::log(std::abs(z)) + lchoose);
  }
  return out;
}

void ActivityProfile::validate() const {
  if (N < 1) throw InputError("N: must be >= 1");
  for (auto [m, z] : zeta) {
    if (m < 2 || m > N) throw InputError("zeta: index " + std::to_string(m) + " outside 2..N");
    if (!std::isfinite(z)) throw InputError("zeta_" + std::to_string(m) + ": must be finite");
  }
}

double xi_exact(int N, const ActivityProfile& a, XiMethod method) {
  if (N != a.N) throw InputError("N does not match the activity profile");
  const auto z = zeta_vector(a);
  return method == XiMethod::recursion ? xi_recursion<double>(N, z) : xi_bruteforce<double>(N, z);
}

UrsellSeries log_xi_ursell(int N, const ActivityProfile& a, int n_max) {
  if (N != a.N) throw InputError("N does not match the activity profile");
  if (N < 1 || N > kMaxUrsellN) throw CapacityError("log_xi_ursell supports N <= " + std::to_string(kMaxUrsellN));
  if (n_max < 1 || n_max > kMaxUrsellOrder) {
    throw CapacityError("log_xi_ursell supports orders 1.." + std::to_string(kMaxUrsellOrder));
  }
  const auto z = zeta_vector(a);
  const auto by_size = subsets_by_size(N);
  std::vector<graphs::VertexMask> polymers;
  std::vector<double> weight;
  for (int m = 2; m <= N; ++m) {
    if (z[m] == 0.0) continue;
    for (auto r : by_size[m]) {
      polymers.push_back(r);
      weight.push_back(z[m]);
    }
  }

  UrsellSeries out;
  double running = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const auto phi = ursell_table(n);
    double term = 0.0;
    std::vector<graphs::VertexMask> R(n);
    // R_1 fixed to the lowest |R_1| elements; the sum is invariant under
    // relabeling the ground set, so each size class counts C(N, m) times.
    std::function<double(int, graphs::EdgeMask)> rec = [&](int pos, graphs::EdgeMask mask) -> double {
      if (pos == n) return phi[mask];
      double acc = 0.0;
      for (std::size_t p = 0; p < polymers.size(); ++p) {
        graphs::EdgeMask mm = mask;
        for (int i = 0; i < pos; ++i)
          if (R[i] & polymers[p]) mm |= graphs::EdgeMask{1} << pair_bit(n, i, pos);
        R[pos] = polymers[p];
        acc += weight[p] * rec(pos + 1, mm);
      }
      return acc;
    };
    for (int m = 2; m <= N; ++m) {
      if (z[m] == 0.0) continue;
      R[0] = (graphs::VertexMask{1} << m) - 1;
      term += to_double(binomial(N, m)) * z[m] * rec(1, 0);
    }
    term /= to_double(factorial(n));
    running += term;
    out.terms.push_back(term);
    out.partial_sums.push_back(running);
  }
  return out;
}

FpCheck fp_check(const ActivityProfile& a, double alpha) {
  if (!(alpha > 0)) throw DomainError("fp_check needs a > 0");
  FpCheck r;
  for (auto [m, c] : a.C_rho()) {
    if (c == 0.0) continue;
    r.lhs += std::exp(alpha * m + std::log(c));
  }
  r.rhs = std::expm1(alpha);
  r.holds = r.lhs <= r.rhs;
  return r;
}

Rational p_exact(int N, std::span<const int> s, bool naive) {
  const int n = static_cast<int>(s.size());
  if (n < 1 || n > kMaxPExactParts) throw CapacityError("p_exact supports 1..4 parts");
  if (N < 1 || N > kMaxPExactN) throw CapacityError("p_exact supports N <= " + std::to_string(kMaxPExactN));
  int k = 0;
  for (int si : s) {
    if (si < 2) throw InputError("p_exact needs every s_i >= 2");
    k += si - 1;
  }
  for (int si : s)
    if (si > N) return Rational(0);
  double work = 1.0;
  for (int i = naive ? 0 : 1; i < n; ++i) work *= to_double(binomial(N, s[i]));
  if (work > 2e8) throw CapacityError("p_exact: subset-tuple enumeration too large");

  static thread_local std::map<int, std::vector<long>> tables;
  auto& count = tables[n];
  if (count.empty()) count = penrose_count_table(n);
  const auto by_size = subsets_by_size(N);

  std::vector<graphs::VertexMask> R(n);
  std::function<BigInt(int, graphs::EdgeMask)> rec = [&](int pos, graphs::EdgeMask mask) -> BigInt {
    if (pos == n) return count[mask];
    long acc = 0;
    BigInt big = 0;
    for (auto r : by_size[s[pos]]) {
      graphs::EdgeMask mm = mask;
      for (int i = 0; i < pos; ++i)
        if (R[i] & r) mm |= graphs::EdgeMask{1} << pair_bit(n, i, pos);
      R[pos] = r;
      if (pos + 1 == n) acc += count[mm];
      else big += rec(pos + 1, mm);
    }
    return big + acc;
  };
  BigInt total;
  if (naive) {
    total = rec(0, 0);
  } else {
    R[0] = (graphs::VertexMask{1} << s[0]) - 1;
    total = binomial(N, s[0]) * rec(1, 0);
  }
  return Rational(total, ipow(N, k + 1));
}

Rational p_limit(std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  if (n < 1) throw InputError("p_limit needs at least one part");
  int k = 0;
  for (int si : s) {
    if (si < 2) throw InputError("p_limit needs every s_i >= 2");
    k += si - 1;
  }
  if (n == 1) return Rational(BigInt(1), factorial(s[0]));
  BigInt den = 1;
  for (int si : s) den *= factorial(si - 1);
  return Rational(factorial(n - 2) * binomial(k - 1 + n, n - 2), den);
}

double ck_finite_N(int N, const cluster::MayerCoefficients& b, int k) {
  for (int i = 2; i <= k + 1; ++i) b.at(i);
  return ck_generic<double>(
      N, k, [&](int s) { return b.at(s) * to_double(factorial(s)); },
      [](const Rational& q) { return to_double(q); });
}

Rational ck_finite_N_exact(int N, std::span<const Rational> b, int k) {
  if (static_cast<int>(b.size()) < k + 2) throw InputError("ck_finite_N needs b_2..b_{k+1}");
  return ck_generic<Rational>(
      N, k, [&](int s) { return b[s] * Rational(factorial(s)); },
      [](const Rational& q) { return q; });
}

}  // namespace mayerkit::polymer
