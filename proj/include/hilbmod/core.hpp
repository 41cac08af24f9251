#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hilbmod {

using Evaluable = std::function<double(double)>;

// Interval length T of the working interval (0,T). All kernels and extension
// periods derive from it.
struct Horizon {
  double T;
  explicit Horizon(double T_);
};

enum class GridKind { UniformInterior, GaussLegendre, PeriodicUniform };

// Ordered evaluation/quadrature nodes with positive weights.
//   UniformInterior: t_j = (j+1/2)*T/n on (0,T), weights T/n (midpoint rule).
//   GaussLegendre:   n-point rule mapped to (0,T).
//   PeriodicUniform: s_j = -2T + j*4T/n over one 4T cell, weights 4T/n.
struct Grid1D {
  GridKind kind = GridKind::UniformInterior;
  std::vector<double> nodes;
  std::vector<double> weights;
};

Grid1D make_grid(const Horizon& horizon, int n, GridKind kind);

// Real values of a function at the nodes of a grid.
struct SampledSignal {
  Grid1D grid;
  std::vector<double> values;
  Horizon horizon{1.0};
};

SampledSignal sample(const Evaluable& f, const Horizon& horizon, const Grid1D& grid);

// Weighted inner product sum_j w_j a_j b_j over a shared grid.
// Throws std::invalid_argument when the grids differ.
double l2_inner(const SampledSignal& a, const SampledSignal& b);

struct ErrorNorms {
  double l2 = 0.0;
  double sup_interior = 0.0;
};

inline constexpr double kDefaultMargin = 0.05;

// Discrete L2 error over all nodes plus the max absolute error over nodes in
// [margin*T, (1-margin)*T]. The margin keeps boundary log singularities of the
// transform out of the sup norm. margin must lie in [0, 0.5).
ErrorNorms error_norms(const SampledSignal& approx, const Evaluable& exact,
                       double margin = kDefaultMargin);

// Named input function with optional analytic derivative and optional
// closed-form transform. When df is present it must pass a central
// finite-difference consistency check (relative 1e-4, step 1e-6*T, 10 points).
struct CorpusCase {
  std::string name;
  Horizon horizon{1.0};
  Evaluable f;
  Evaluable df;        // may be empty
  Evaluable exact_ht;  // may be empty
};

// Validates the df invariant above; throws std::invalid_argument on failure.
void validate_corpus_case(const CorpusCase& c);

}  // namespace hilbmod
