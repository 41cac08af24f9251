#include "hilbmod/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>

#include "circular_detail.hpp"
#include "hilbmod/extensions.hpp"
#include "hilbmod/parallel.hpp"
#include "hilbmod/quadrature.hpp"

namespace hilbmod {

namespace {

// FFTW's planner is not thread-safe; executions on distinct data are.
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}

// Accumulates sums of c_k * sin(...) and c_k * cos(...) at angles
// base + k*step with a complex rotor, refreshed periodically to stop phase
// drift.
struct TrigSums {
  double sin_sum = 0.0;
  double cos_sum = 0.0;
};

TrigSums weighted_trig_sums(const std::vector<double>& c, double base, double step) {
  TrigSums out;
  const std::complex<double> rot = std::polar(1.0, step);
  std::complex<double> z = std::polar(1.0, base);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if ((k & 511u) == 0u && k > 0u) {
      z = std::polar(1.0, std::fmod(base + k * step, 2.0 * M_PI));
    }
    out.cos_sum += c[k] * z.real();
    out.sin_sum += c[k] * z.imag();
    z *= rot;
  }
  return out;
}

}  // namespace

SineSeries sine_coefficients(const Evaluable& f, const Horizon& horizon,
                             int N, int quad_nodes) {
  if (N < 1) {
    throw std::invalid_argument("sine_coefficients: need N >= 1");
  }
  if (quad_nodes == 0) quad_nodes = 10 * N;
  if (quad_nodes < 10 * N) {
    throw std::invalid_argument(
        "sine_coefficients: quad_nodes must be at least 10*N to resolve the "
        "highest mode");
  }
  const double T = horizon.T;
  SineSeries series{horizon, std::vector<double>(N, 0.0)};
  const int blocks = (quad_nodes + 31) / 32;
  const GaussRule& rule = gauss_legendre(32);
  const double h = T / blocks;
  for (int b = 0; b < blocks; ++b) {
    const double mid = (b + 0.5) * h;
    for (int j = 0; j < 32; ++j) {
      const double s = mid + 0.5 * h * rule.nodes[j];
      const double wf = 0.5 * h * rule.weights[j] * f(s);
      // sin((k+1/2) pi s / T) accumulated across k with one rotor.
      const double step = M_PI * s / T;
      const std::complex<double> rot = std::polar(1.0, step);
      std::complex<double> z = std::polar(1.0, 0.5 * step);
      for (int k = 0; k < N; ++k) {
        if ((k & 511) == 0 && k > 0) {
          z = std::polar(1.0, std::fmod((k + 0.5) * step, 2.0 * M_PI));
        }
        series.coeffs[k] += wf * z.imag();
        z *= rot;
      }
    }
  }
  for (double& c : series.coeffs) c *= 2.0 / T;
  return series;
}

double ht_spectral(const SineSeries& series, double t) {
  if (series.coeffs.empty()) {
    throw std::invalid_argument("ht_spectral: empty series");
  }
  const double step = M_PI * t / series.horizon.T;
  return weighted_trig_sums(series.coeffs, 0.5 * step, step).cos_sum;
}

double series_eval(const SineSeries& series, double t) {
  if (series.coeffs.empty()) return 0.0;
  const double step = M_PI * t / series.horizon.T;
  return weighted_trig_sums(series.coeffs, 0.5 * step, step).sin_sum;
}

double series_derivative_eval(const SineSeries& series, double t) {
  if (series.coeffs.empty()) return 0.0;
  const double T = series.horizon.T;
  std::vector<double> scaled(series.coeffs.size());
  for (std::size_t k = 0; k < scaled.size(); ++k) {
    scaled[k] = series.coeffs[k] * (k + 0.5) * M_PI / T;
  }
  const double step = M_PI * t / T;
  return weighted_trig_sums(scaled, 0.5 * step, step).cos_sum;
}

Evaluable make_series_derivative(const SineSeries& series) {
  return [series](double t) { return series_derivative_eval(series, t); };
}

namespace detail {

CircularCoeffs circular_multiplier_coeffs(const std::vector<double>& samples,
                                          double period, double origin) {
  const int M = static_cast<int>(samples.size());
  if (M < 2 || M % 2 != 0) {
    throw std::invalid_argument("circular transform: sample count must be even");
  }
  CircularCoeffs out;
  out.omega = 2.0 * M_PI / period;
  out.origin = origin;
  out.g.assign(M / 2, {0.0, 0.0});

  double* in = fftw_alloc_real(M);
  fftw_complex* spec = fftw_alloc_complex(M / 2 + 1);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(M, in, spec, FFTW_ESTIMATE);
  }
  for (int i = 0; i < M; ++i) in[i] = samples[i];
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  // G_k = -i F_k / M for 0 < k < M/2; mean and Nyquist stay zero.
  for (int k = 1; k < M / 2; ++k) {
    const std::complex<double> F(spec[k][0] / M, spec[k][1] / M);
    out.g[k] = std::complex<double>(0.0, -1.0) * F;
  }
  fftw_free(in);
  fftw_free(spec);
  return out;
}

double circular_synth(const CircularCoeffs& c, double t) {
  const double theta = c.omega * (t - c.origin);
  const std::complex<double> rot = std::polar(1.0, theta);
  std::complex<double> z = rot;  // e^{i*1*theta}
  std::complex<double> acc(0.0, 0.0);
  const std::size_t n = c.g.size();
  for (std::size_t k = 1; k < n; ++k) {
    if ((k & 4095u) == 0u) {
      z = std::polar(1.0, std::fmod(k * theta, 2.0 * M_PI));
    }
    acc += c.g[k] * z;
    z *= rot;
  }
  return 2.0 * acc.real();
}

}  // namespace detail

SampledSignal circular_hilbert(const SampledSignal& samples) {
  if (samples.grid.kind != GridKind::PeriodicUniform) {
    throw std::invalid_argument("circular_hilbert: needs a periodic-uniform grid");
  }
  const int M = static_cast<int>(samples.values.size());
  if (M < 2 || M % 2 != 0) {
    throw std::invalid_argument("circular_hilbert: sample count must be even");
  }
  const double T = samples.horizon.T;
  const auto coeffs =
      detail::circular_multiplier_coeffs(samples.values, 4.0 * T, samples.grid.nodes[0]);
  SampledSignal out = samples;
  parallel_for(out.values.size(), [&](std::size_t i) {
    out.values[i] = detail::circular_synth(coeffs, out.grid.nodes[i]);
  });
  return out;
}

std::vector<double> ht_via_circular(const Evaluable& f, const Horizon& horizon,
                                    int M, const std::vector<double>& out_points) {
  if (M < 64 || M % 2 != 0) {
    throw std::invalid_argument("ht_via_circular: M must be even and >= 64");
  }
  const double T = horizon.T;
  std::vector<double> samples(M);
  parallel_for(samples.size(), [&](std::size_t j) {
    samples[j] = eval_tilde(f, horizon, -2.0 * T + j * (4.0 * T / M));
  });
  const auto coeffs = detail::circular_multiplier_coeffs(samples, 4.0 * T, -2.0 * T);
  std::vector<double> out(out_points.size());
  parallel_for(out.size(), [&](std::size_t i) {
    out[i] = -detail::circular_synth(coeffs, out_points[i]);
  });
  return out;
}

SampledSignal ht_via_circular(const Evaluable& f, const Horizon& horizon,
                              int M, const Grid1D& out_grid) {
  SampledSignal res;
  res.grid = out_grid;
  res.horizon = horizon;
  res.values = ht_via_circular(f, horizon, M, out_grid.nodes);
  return res;
}

}  // namespace hilbmod
