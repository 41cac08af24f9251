#include "hilbmod/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hilbmod/quadrature.hpp"

namespace hilbmod {

Horizon::Horizon(double T_) : T(T_) {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw std::invalid_argument("Horizon: T must be a positive finite real");
  }
}

Grid1D make_grid(const Horizon& horizon, int n, GridKind kind) {
  if (n < 2) {
    throw std::invalid_argument("make_grid: need n >= 2");
  }
  const double T = horizon.T;
  Grid1D g;
  g.kind = kind;
  g.nodes.resize(static_cast<std::size_t>(n));
  g.weights.resize(static_cast<std::size_t>(n));
  switch (kind) {
    case GridKind::UniformInterior:
      for (int j = 0; j < n; ++j) {
        g.nodes[j] = (j + 0.5) * T / n;
        g.weights[j] = T / n;
      }
      break;
    case GridKind::GaussLegendre: {
      const GaussRule& rule = gauss_legendre(n);
      for (int j = 0; j < n; ++j) {
        g.nodes[j] = 0.5 * T * (rule.nodes[j] + 1.0);
        g.weights[j] = 0.5 * T * rule.weights[j];
      }
      break;
    }
    case GridKind::PeriodicUniform:
      for (int j = 0; j < n; ++j) {
        g.nodes[j] = -2.0 * T + j * (4.0 * T / n);
        g.weights[j] = 4.0 * T / n;
      }
      break;
  }
  return g;
}

SampledSignal sample(const Evaluable& f, const Horizon& horizon, const Grid1D& grid) {
  SampledSignal s;
  s.grid = grid;
  s.horizon = horizon;
  s.values.resize(grid.nodes.size());
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    s.values[i] = f(grid.nodes[i]);
  }
  return s;
}

static bool same_grid(const Grid1D& a, const Grid1D& b) {
  return a.kind == b.kind && a.nodes == b.nodes && a.weights == b.weights;
}

double l2_inner(const SampledSignal& a, const SampledSignal& b) {
  if (!same_grid(a.grid, b.grid) || a.values.size() != b.values.size()) {
    throw std::invalid_argument("l2_inner: signals must share one grid");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    acc += a.grid.weights[i] * a.values[i] * b.values[i];
  }
  return acc;
}

ErrorNorms error_norms(const SampledSignal& approx, const Evaluable& exact,
                       double margin) {
  if (!(margin >= 0.0 && margin < 0.5)) {
    throw std::invalid_argument("error_norms: margin must lie in [0, 0.5)");
  }
  const double T = approx.horizon.T;
  const double lo = margin * T;
  const double hi = (1.0 - margin) * T;
  ErrorNorms out;
  double acc = 0.0;
  for (std::size_t i = 0; i < approx.values.size(); ++i) {
    const double t = approx.grid.nodes[i];
    const double e = std::abs(approx.values[i] - exact(t));
    acc += approx.grid.weights[i] * e * e;
    if (t >= lo && t <= hi) {
      out.sup_interior = std::max(out.sup_interior, e);
    }
  }
  out.l2 = std::sqrt(acc);
  return out;
}

void validate_corpus_case(const CorpusCase& c) {
  if (!c.f) {
    throw std::invalid_argument("corpus case '" + c.name + "' has no function");
  }
  if (!c.df) return;
  const double T = c.horizon.T;
  const double h = 1e-6 * T;
  for (int j = 0; j < 10; ++j) {
    const double t = (j + 0.5) * T / 10;
    const double fd = (c.f(t + h) - c.f(t - h)) / (2.0 * h);
    const double an = c.df(t);
    const double scale = std::max(1.0, std::abs(an));
    if (std::abs(fd - an) > 1e-4 * scale) {
      throw std::invalid_argument("corpus case '" + c.name +
                                  "': derivative fails finite-difference check");
    }
  }
}

}  // namespace hilbmod
