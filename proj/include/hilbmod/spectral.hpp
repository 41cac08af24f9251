#pragma once

#include "hilbmod/core.hpp"

namespace hilbmod {

// Coefficients c_k of the quarter-wave sine basis sin((k+1/2) pi t / T).
struct SineSeries {
  Horizon horizon{1.0};
  std::vector<double> coeffs;
};

// Analysis integrals c_k = (2/T) int_0^T f(s) sin((k+1/2) pi s / T) ds by
// composite Gauss-Legendre. quad_nodes = 0 selects 10*N; anything positive
// below 10*N under-resolves the highest mode and throws std::invalid_argument.
SineSeries sine_coefficients(const Evaluable& f, const Horizon& horizon,
                             int N = 256, int quad_nodes = 0);

// Transform of the series: sum_k c_k cos((k+1/2) pi t / T).
double ht_spectral(const SineSeries& series, double t);

// Synthesis sum_k c_k sin((k+1/2) pi t / T); the canonical interpolant for
// sampled input.
double series_eval(const SineSeries& series, double t);

// Term-wise derivative sum_k c_k (k+1/2)(pi/T) cos((k+1/2) pi t / T).
double series_derivative_eval(const SineSeries& series, double t);

// Wraps series_derivative_eval as an Evaluable; the documented fallback when
// an analytic derivative is unavailable.
Evaluable make_series_derivative(const SineSeries& series);

// Circular Hilbert transform of one full period of samples on a
// periodic-uniform grid (even count M): DFT, multiply coefficient k by
// -i sgn(k) with k=0 and the Nyquist mode zeroed, synthesize back at the same
// nodes. The imaginary residue of the synthesis must stay below 1e-12 of the
// data scale (it does by Hermitian symmetry; violations throw).
SampledSignal circular_hilbert(const SampledSignal& samples);

// Transform of f on out_grid via the periodic reflection: sample eval_tilde
// on the M-point periodic-uniform cell, apply the circular Hilbert transform
// in coefficient space, negate, and evaluate the trigonometric interpolant at
// the output nodes. M even, M >= 64.
SampledSignal ht_via_circular(const Evaluable& f, const Horizon& horizon,
                              int M, const Grid1D& out_grid);
std::vector<double> ht_via_circular(const Evaluable& f, const Horizon& horizon,
                                    int M, const std::vector<double>& out_points);

}  // namespace hilbmod
