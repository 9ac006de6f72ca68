#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace mayerkit::quad {

struct Rule {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;
};

// q-point Gauss-Legendre rule, exact for polynomials of degree 2q-1.
// Rules are computed once per q and cached; the reference stays valid.
const Rule& gauss_legendre(int q);

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// Composite rule over [a, b] with `panels` equal panels of a q-point rule.
template <class Fn>
double composite(Fn&& f, double a, double b, int panels, int q) {
  const Rule& rule = gauss_legendre(q);
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double s = 0.0;
    for (int i = 0; i < q; ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    sum += 0.5 * h * s;
  }
  return sum;
}

// Piecewise composite rule with breakpoints (sorted, including both ends);
// error is |I(2 panels) - I(panels)| per segment, summed.
template <class Fn>
Estimate piecewise(Fn&& f, std::span<const double> breaks, int panels, int q) {
  Estimate e;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double a = breaks[k], b = breaks[k + 1];
    if (!(b > a)) continue;
    const double coarse = composite(f, a, b, panels, q);
    const double fine = composite(f, a, b, 2 * panels, q);
    e.value += fine;
    e.error += std::abs(fine - coarse);
  }
  return e;
}

}  // namespace mayerkit::quad
