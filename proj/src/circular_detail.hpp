#pragma once

#include <complex>
#include <vector>

namespace hilbmod::detail {

// Fourier coefficients of the circular Hilbert transform of one period of
// samples: G_k = -i * F_k for k = 1..M/2-1 (DFT normalized by 1/M); the mean
// and the Nyquist mode are zeroed. The sample origin is the first node, so
// synthesis of a grid starting at s0 evaluates at angle omega*(t - s0).
struct CircularCoeffs {
  double omega = 0.0;   // fundamental angular frequency 2*pi/period
  double origin = 0.0;  // first sample position
  std::vector<std::complex<double>> g;  // indices 1..M/2-1 used; [0] is zero
};

CircularCoeffs circular_multiplier_coeffs(const std::vector<double>& samples,
                                          double period, double origin);

// 2*Re sum_k g_k e^{i k omega (t - origin)} by Hermitian symmetry.
double circular_synth(const CircularCoeffs& c, double t);

}  // namespace hilbmod::detail
