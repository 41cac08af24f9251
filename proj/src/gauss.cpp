#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hilbmod/quadrature.hpp"

namespace hilbmod {

// Newton iteration on the Legendre three-term recurrence.
static GaussRule compute_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int k = 0; k < half; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[k] = -x;
    rule.nodes[n - 1 - k] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[k] = w;
    rule.weights[n - 1 - k] = w;
  }
  if (n % 2 == 1) rule.nodes[half - 1] = 0.0;
  return rule;
}

const GaussRule& gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: need n >= 1");
  }
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, compute_rule(n)).first;
  }
  return it->second;
}

double integrate_gl(const Evaluable& f, double a, double b, int total_nodes) {
  if (!(b > a)) return 0.0;
  const int blocks = std::max(1, (total_nodes + 31) / 32);
  const GaussRule& rule = gauss_legendre(32);
  const double h = (b - a) / blocks;
  double acc = 0.0;
  for (int i = 0; i < blocks; ++i) {
    const double lo = a + i * h;
    const double mid = lo + 0.5 * h;
    double block = 0.0;
    for (int j = 0; j < 32; ++j) {
      block += rule.weights[j] * f(mid + 0.5 * h * rule.nodes[j]);
    }
    acc += 0.5 * h * block;
  }
  return acc;
}

}  // namespace hilbmod
