#pragma once

#include <map>
#include <optional>

#include "hilbmod/core.hpp"
#include "hilbmod/quadrature.hpp"
#include "hilbmod/spectral.hpp"

namespace hilbmod {

// Per-method resolutions used by cross-validation and the CLI.
struct Resolutions {
  int spectral_N = 256;
  int pv_n = 4096;     // csc, alternative, weakly singular
  int cot_n = 8192;
  int circular_M = 4096;
};

// Errors and pairwise deviations of every applicable method on one case.
// Methods that cannot run on the case (no derivative for the weakly singular
// form; discontinuous reflection for the series/interpolation methods) are
// absent. vs_exact is filled only when the case has a closed form.
struct ComparisonReport {
  std::string case_name;
  std::vector<std::string> methods;
  Resolutions resolutions;
  std::map<std::string, ErrorNorms> vs_exact;
  std::vector<std::vector<double>> pairwise_sup;  // methods x methods
  double max_pairwise = 0.0;
};

// Recovers f from g = (transform of f) by one circular Hilbert pass over the
// cosine-parity extension of g, restricted to (0,T). g must be evaluable on
// [0,T]. M even, >= 64.
SampledSignal invert(const Evaluable& g, const Horizon& horizon, int M,
                     const Grid1D& out_grid);

// Quadratic form <f, transform f> approximated with an N-term series on the
// given weighted grid. Nonnegative up to discretization error.
double positivity_check(const Evaluable& f, const Horizon& horizon, int N,
                        const Grid1D& grid);

// Difference between the cosecant-kernel transform and the line Hilbert
// transform of the compact reflection:
//   B f(t) = ht_csc(f,t) + (1/pi) pv int_{-2T}^{2T} bar f(s)/(t-s) ds.
double compact_remainder(const Evaluable& f, const Horizon& horizon, double t,
                         const PVConfig& cfg = {});

// Runs every applicable method on the case over out_grid and fills the
// report. Requires a closed form or at least two applicable methods.
ComparisonReport cross_validate(const CorpusCase& c, const Grid1D& out_grid,
                                const Resolutions& res = {});

struct ConvergenceRow {
  int resolution = 0;
  double l2_error = 0.0;
  double sup_interior_error = 0.0;
};

// Error table of one method against the closed form at increasing
// resolutions. Throws std::invalid_argument when the case has no closed form
// or the method name is unknown.
std::vector<ConvergenceRow> convergence_table(const CorpusCase& c,
                                              const std::string& method,
                                              const std::vector<int>& resolutions,
                                              const Grid1D& out_grid);

}  // namespace hilbmod
