#pragma once

#include "hilbmod/core.hpp"

namespace hilbmod {

// n-point Gauss-Legendre rule on [-1,1]; results are cached and thread-safe.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// Gauss-Legendre integral of f over (a,b) using composite 32-point blocks,
// at least total_nodes nodes in all.
double integrate_gl(const Evaluable& f, double a, double b, int total_nodes);

// Principal-value quadrature configuration. n subintervals (even, >= 8) set
// the target spacing h = (b-a)/n; shift in (0,1) is the node offset inside
// each cell (0.5 centers nodes so none collides with the pole).
struct PVConfig {
  int n = 4096;
  double shift = 0.5;
  void validate() const;
};

// PV integral of f over (a,b) with a simple pole inside. A window symmetric
// about the pole is covered by midpoint cells paired as pole +- (j+shift)h,
// which cancels the odd part of the pole analytically; the rest of (a,b) is
// handled by the plain composite midpoint rule. Optional breakpoints bound
// the window and split the outer pieces so the integrand is smooth on each.
double pv_integrate(const Evaluable& f, double pole, double a, double b,
                    const PVConfig& cfg = {});
double pv_integrate(const Evaluable& f, double pole, double a, double b,
                    const PVConfig& cfg, const std::vector<double>& breakpoints);

// Transform via the cosecant kernel on (0,T):
//   (1/2T) [ int f(s) csc(pi(s+t)/2T) ds + pv int f(s) csc(pi(s-t)/2T) ds ].
// The s+t term is regular and integrated by Gauss-Legendre; the s-t term has
// the simple pole at s=t. t must be strictly inside (0,T).
double ht_csc(const Evaluable& f, const Horizon& horizon, double t,
              const PVConfig& cfg = {});

// Transform via the cotangent kernel over one period of the reflection:
//   -(1/4T) pv int_{t-2T}^{t+2T} tilde f(s) cot(pi(t-s)/4T) ds.
// The shifted cell keeps s=t as the only interior pole; multiples of T are
// breakpoints of the reflection and align the quadrature pieces.
double ht_cot_periodic(const Evaluable& f, const Horizon& horizon, double t,
                       const PVConfig& cfg = {});

// Transform via the weakly singular form for f in H^1 with derivative df:
//   -(2/pi) f(0) log tan(pi t/4T)
//   -(1/pi) int_0^T df(s) log( tan(pi(s+t)/4T) tan(pi|s-t|/4T) ) ds.
// Each half (0,t), (t,T) is integrated by one n/2-point Gauss-Legendre rule
// after the grading s = t +- width*u^2 that clusters nodes at the log
// singularity. Throws std::invalid_argument when df is missing: the derivative must
// be supplied explicitly (make_series_derivative offers a documented
// spectral fallback). Valid for t in [0,T] except exactly 0 or T when
// f(0) != 0 (boundary log term diverges); the zero-width half at an endpoint
// is skipped.
double ht_weakly_singular(const Evaluable& f, const Evaluable& df,
                          const Horizon& horizon, double t, int n = 4096);

// Transform via the factored-cosine kernel:
//   -(cos(pi t/2T)/T) pv int_0^T f(s) sin(pi s/2T) /
//                               (cos^2(pi s/2T) - cos^2(pi t/2T)) ds,
// whose only pole in (0,T) is s=t.
double ht_alternative(const Evaluable& f, const Horizon& horizon, double t,
                      const PVConfig& cfg = {});

// Truncated partial-fraction series of the cosecant,
//   csc z ~ 1/z + 2z sum_{k=1..K} (-1)^k / (z^2 - k^2 pi^2),
// valid for 0 < |z| < pi. Throws std::invalid_argument outside that range.
double csc_series(double z, int K);

}  // namespace hilbmod
