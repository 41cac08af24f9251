#include "hilbmod/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hilbmod/extensions.hpp"

namespace hilbmod {

void PVConfig::validate() const {
  if (n < 8 || n % 2 != 0) {
    throw std::invalid_argument("PVConfig: n must be even and >= 8");
  }
  if (!(shift > 0.0 && shift < 1.0)) {
    throw std::invalid_argument("PVConfig: shift must lie in (0, 1)");
  }
}

// Composite midpoint rule with spacing close to h_target.
static double midpoint(const Evaluable& f, double a, double b, double h_target,
                       double shift) {
  if (!(b > a)) return 0.0;
  const int m = std::max(1, static_cast<int>(std::ceil((b - a) / h_target)));
  const double h = (b - a) / m;
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    acc += f(a + (j + shift) * h);
  }
  return acc * h;
}

// Symmetric window about the pole: nodes pole +- (j+shift)h in pairs.
static double pv_window(const Evaluable& f, double pole, double radius,
                        double h_target, double shift) {
  if (!(radius > 0.0)) return 0.0;
  int m = std::max(1, static_cast<int>(std::ceil(radius / h_target)));
  const double h = radius / m;
  double acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double d = (j + shift) * h;
    acc += f(pole + d) + f(pole - d);
  }
  return acc * h;
}

double pv_integrate(const Evaluable& f, double pole, double a, double b,
                    const PVConfig& cfg, const std::vector<double>& breakpoints) {
  cfg.validate();
  if (!(a < pole && pole < b)) {
    throw std::invalid_argument("pv_integrate: pole must lie inside (a, b)");
  }
  const double h_target = (b - a) / cfg.n;
  const double span = b - a;

  // The symmetric window reaches the nearest of the interval ends and any
  // breakpoint, so every outer piece has a smooth integrand.
  double radius = std::min(pole - a, b - pole);
  std::vector<double> cuts{a, b};
  for (double x : breakpoints) {
    if (x > a && x < b && std::abs(x - pole) > 1e-14 * span) {
      radius = std::min(radius, std::abs(x - pole));
      cuts.push_back(x);
    }
  }
  double acc = pv_window(f, pole, radius, h_target, cfg.shift);

  cuts.push_back(pole - radius);
  cuts.push_back(pole + radius);
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (hi - lo <= 1e-14 * span) continue;
    if (lo >= pole - radius - 1e-14 * span && hi <= pole + radius + 1e-14 * span) {
      continue;  // covered by the window
    }
    acc += midpoint(f, lo, hi, h_target, cfg.shift);
  }
  return acc;
}

double pv_integrate(const Evaluable& f, double pole, double a, double b,
                    const PVConfig& cfg) {
  return pv_integrate(f, pole, a, b, cfg, {});
}

static void require_interior(double t, double T, const char* who) {
  if (!(t > 0.0 && t < T)) {
    throw std::invalid_argument(std::string(who) + ": t must lie strictly inside (0, T)");
  }
}

// One m-point rule over (a,b), no blocking. The graded integrands below keep
// their endpoint behavior mild, and a single high-order rule rides it out far
// better than composite blocks of fixed order.
static double single_gl(const Evaluable& f, double a, double b, int m) {
  const GaussRule& rule = gauss_legendre(m);
  const double mid = 0.5 * (a + b);
  const double hal = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    acc += rule.weights[j] * f(mid + hal * rule.nodes[j]);
  }
  return acc * hal;
}

double ht_csc(const Evaluable& f, const Horizon& horizon, double t,
              const PVConfig& cfg) {
  cfg.validate();
  const double T = horizon.T;
  require_interior(t, T, "ht_csc");
  const double a = M_PI / (2.0 * T);
  const double regular = integrate_gl(
      [&](double s) { return f(s) / std::sin(a * (s + t)); }, 0.0, T, cfg.n);
  const double singular = pv_integrate(
      [&](double s) { return f(s) / std::sin(a * (s - t)); }, t, 0.0, T, cfg);
  return (regular + singular) / (2.0 * T);
}

double ht_cot_periodic(const Evaluable& f, const Horizon& horizon, double t,
                       const PVConfig& cfg) {
  cfg.validate();
  const double T = horizon.T;
  require_interior(t, T, "ht_cot_periodic");
  const double c = M_PI / (4.0 * T);
  const auto integrand = [&](double s) {
    return eval_tilde(f, horizon, s) / std::tan(c * (t - s));
  };
  // Breakpoints of the reflection: multiples of T inside the shifted cell.
  std::vector<double> breaks;
  const int kmin = static_cast<int>(std::floor((t - 2.0 * T) / T)) + 1;
  const int kmax = static_cast<int>(std::ceil((t + 2.0 * T) / T)) - 1;
  for (int k = kmin; k <= kmax; ++k) breaks.push_back(k * T);
  const double val = pv_integrate(integrand, t, t - 2.0 * T, t + 2.0 * T, cfg, breaks);
  return -val / (4.0 * T);
}

double ht_weakly_singular(const Evaluable& f, const Evaluable& df,
                          const Horizon& horizon, double t, int n) {
  if (!df) {
    throw std::invalid_argument(
        "ht_weakly_singular: derivative required (see make_series_derivative)");
  }
  if (n < 8) {
    throw std::invalid_argument("ht_weakly_singular: need n >= 8");
  }
  const double T = horizon.T;
  if (!(t >= 0.0 && t <= T)) {
    throw std::invalid_argument("ht_weakly_singular: t must lie in [0, T]");
  }
  const double b = M_PI / (4.0 * T);
  const double f0 = f(0.0);
  if (f0 != 0.0 && !(t > 0.0 && t < T)) {
    throw std::invalid_argument(
        "ht_weakly_singular: boundary term diverges at t in {0, T} when f(0) != 0");
  }
  double out = (f0 != 0.0) ? -(2.0 / M_PI) * f0 * std::log(std::tan(b * t)) : 0.0;

  // The distance |s - t| = width*u^2 is carried analytically; recomputing it
  // as a difference would cancel to zero at the innermost nodes of large
  // rules and send the log to -inf.
  const auto kernel = [&](double s, double dist) {
    return std::log(std::tan(b * (s + t)) * std::tan(b * dist));
  };
  const int half = std::max(8, n / 2);
  double acc = 0.0;
  if (t > 0.0) {
    // s = t - t u^2 clusters nodes at the log singularity from the left.
    acc += single_gl(
        [&](double u) {
          const double d = t * u * u;
          return 2.0 * t * u * df(t - d) * kernel(t - d, d);
        },
        0.0, 1.0, half);
  }
  if (t < T) {
    const double w = T - t;
    acc += single_gl(
        [&](double u) {
          const double d = w * u * u;
          return 2.0 * w * u * df(t + d) * kernel(t + d, d);
        },
        0.0, 1.0, half);
  }
  return out - acc / M_PI;
}

double ht_alternative(const Evaluable& f, const Horizon& horizon, double t,
                      const PVConfig& cfg) {
  cfg.validate();
  const double T = horizon.T;
  require_interior(t, T, "ht_alternative");
  const double a = M_PI / (2.0 * T);
  const double ct = std::cos(a * t);
  const auto integrand = [&](double s) {
    const double cs = std::cos(a * s);
    return f(s) * std::sin(a * s) / (cs * cs - ct * ct);
  };
  return -(ct / T) * pv_integrate(integrand, t, 0.0, T, cfg);
}

double csc_series(double z, int K) {
  if (K < 1) {
    throw std::invalid_argument("csc_series: need K >= 1");
  }
  if (z == 0.0 || !(std::abs(z) < M_PI)) {
    throw std::invalid_argument("csc_series: need 0 < |z| < pi");
  }
  double acc = 0.0;
  double sign = -1.0;
  const double z2 = z * z;
  for (int k = 1; k <= K; ++k) {
    const double kpi = k * M_PI;
    acc += sign / (z2 - kpi * kpi);
    sign = -sign;
  }
  return 1.0 / z + 2.0 * z * acc;
}

}  // namespace hilbmod
