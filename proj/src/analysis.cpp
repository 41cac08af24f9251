#include "hilbmod/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circular_detail.hpp"
#include "hilbmod/extensions.hpp"
#include "hilbmod/parallel.hpp"

namespace hilbmod {

SampledSignal invert(const Evaluable& g, const Horizon& horizon, int M,
                     const Grid1D& out_grid) {
  if (M < 64 || M % 2 != 0) {
    throw std::invalid_argument("invert: M must be even and >= 64");
  }
  const double T = horizon.T;
  std::vector<double> samples(M);
  parallel_for(samples.size(), [&](std::size_t j) {
    samples[j] = eval_even_tilde(g, horizon, -2.0 * T + j * (4.0 * T / M));
  });
  const auto coeffs = detail::circular_multiplier_coeffs(samples, 4.0 * T, -2.0 * T);
  SampledSignal out;
  out.grid = out_grid;
  out.horizon = horizon;
  out.values.resize(out_grid.nodes.size());
  parallel_for(out.values.size(), [&](std::size_t i) {
    out.values[i] = detail::circular_synth(coeffs, out_grid.nodes[i]);
  });
  return out;
}

double positivity_check(const Evaluable& f, const Horizon& horizon, int N,
                        const Grid1D& grid) {
  const SineSeries series = sine_coefficients(f, horizon, N);
  SampledSignal a = sample(f, horizon, grid);
  SampledSignal b = a;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    b.values[i] = ht_spectral(series, grid.nodes[i]);
  }
  return l2_inner(a, b);
}

double compact_remainder(const Evaluable& f, const Horizon& horizon, double t,
                         const PVConfig& cfg) {
  const double T = horizon.T;
  if (!(t > 0.0 && t < T)) {
    throw std::invalid_argument("compact_remainder: t must lie strictly inside (0, T)");
  }
  const double main = ht_csc(f, horizon, t, cfg);
  const auto integrand = [&](double s) {
    return eval_bar(f, horizon, s) / (t - s);
  };
  const std::vector<double> breaks{-T, 0.0, T};
  const double corr =
      pv_integrate(integrand, t, -2.0 * T, 2.0 * T, cfg, breaks);
  return main + corr / M_PI;
}

namespace {

struct MethodRun {
  std::string name;
  std::vector<double> values;
};

// Series and trigonometric-interpolation methods need a continuous
// reflection; a jump at s = 0 keeps them from converging in the sup norm.
bool series_applicable(const CorpusCase& c) {
  return std::abs(c.f(0.0)) <= 1e-12;
}

std::vector<MethodRun> run_methods(const CorpusCase& c, const Grid1D& out_grid,
                                   const Resolutions& res) {
  const auto& ts = out_grid.nodes;
  std::vector<MethodRun> runs;
  PVConfig pv{res.pv_n};
  PVConfig cot{res.cot_n};

  if (series_applicable(c)) {
    const SineSeries series = sine_coefficients(c.f, c.horizon, res.spectral_N);
    MethodRun r{"spectral", std::vector<double>(ts.size())};
    parallel_for(ts.size(), [&](std::size_t i) {
      r.values[i] = ht_spectral(series, ts[i]);
    });
    runs.push_back(std::move(r));
  }
  {
    MethodRun r{"csc", std::vector<double>(ts.size())};
    parallel_for(ts.size(), [&](std::size_t i) {
      r.values[i] = ht_csc(c.f, c.horizon, ts[i], pv);
    });
    runs.push_back(std::move(r));
  }
  {
    MethodRun r{"cot", std::vector<double>(ts.size())};
    parallel_for(ts.size(), [&](std::size_t i) {
      r.values[i] = ht_cot_periodic(c.f, c.horizon, ts[i], cot);
    });
    runs.push_back(std::move(r));
  }
  if (c.df) {
    MethodRun r{"sz", std::vector<double>(ts.size())};
    parallel_for(ts.size(), [&](std::size_t i) {
      r.values[i] = ht_weakly_singular(c.f, c.df, c.horizon, ts[i], res.pv_n);
    });
    runs.push_back(std::move(r));
  }
  {
    MethodRun r{"alt", std::vector<double>(ts.size())};
    parallel_for(ts.size(), [&](std::size_t i) {
      r.values[i] = ht_alternative(c.f, c.horizon, ts[i], pv);
    });
    runs.push_back(std::move(r));
  }
  if (series_applicable(c)) {
    runs.push_back({"circular", ht_via_circular(c.f, c.horizon, res.circular_M, ts)});
  }
  return runs;
}

}  // namespace

ComparisonReport cross_validate(const CorpusCase& c, const Grid1D& out_grid,
                                const Resolutions& res) {
  const std::vector<MethodRun> runs = run_methods(c, out_grid, res);
  if (!c.exact_ht && runs.size() < 2) {
    throw std::invalid_argument(
        "cross_validate: need a closed form or at least two applicable methods");
  }
  ComparisonReport rep;
  rep.case_name = c.name;
  rep.resolutions = res;
  for (const auto& r : runs) rep.methods.push_back(r.name);

  if (c.exact_ht) {
    for (const auto& r : runs) {
      SampledSignal sig{out_grid, r.values, c.horizon};
      rep.vs_exact[r.name] = error_norms(sig, c.exact_ht, kDefaultMargin);
    }
  }

  const double T = c.horizon.T;
  const double lo = kDefaultMargin * T;
  const double hi = (1.0 - kDefaultMargin) * T;
  const std::size_t m = runs.size();
  rep.pairwise_sup.assign(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      double d = 0.0;
      for (std::size_t p = 0; p < out_grid.nodes.size(); ++p) {
        const double t = out_grid.nodes[p];
        if (t < lo || t > hi) continue;
        d = std::max(d, std::abs(runs[i].values[p] - runs[j].values[p]));
      }
      rep.pairwise_sup[i][j] = rep.pairwise_sup[j][i] = d;
      rep.max_pairwise = std::max(rep.max_pairwise, d);
    }
  }
  return rep;
}

std::vector<ConvergenceRow> convergence_table(const CorpusCase& c,
                                              const std::string& method,
                                              const std::vector<int>& resolutions,
                                              const Grid1D& out_grid) {
  if (!c.exact_ht) {
    throw std::invalid_argument("convergence_table: case has no closed form");
  }
  if (resolutions.empty()) {
    throw std::invalid_argument("convergence_table: no resolutions given");
  }
  const bool known = method == "spectral" || method == "csc" || method == "cot" ||
                     method == "alt" || method == "sz" || method == "circular";
  if (!known) {
    throw std::invalid_argument("convergence_table: unknown method '" + method + "'");
  }
  if (method == "sz" && !c.df) {
    throw std::invalid_argument("convergence_table: case has no derivative");
  }
  const auto evaluate = [&](int r, double t) -> double {
    if (method == "csc") return ht_csc(c.f, c.horizon, t, PVConfig{r});
    if (method == "cot") return ht_cot_periodic(c.f, c.horizon, t, PVConfig{r});
    if (method == "alt") return ht_alternative(c.f, c.horizon, t, PVConfig{r});
    return ht_weakly_singular(c.f, c.df, c.horizon, t, r);
  };

  std::vector<int> sorted = resolutions;
  std::sort(sorted.begin(), sorted.end());
  std::vector<ConvergenceRow> rows;
  for (int r : sorted) {
    SampledSignal sig;
    sig.grid = out_grid;
    sig.horizon = c.horizon;
    sig.values.resize(out_grid.nodes.size());
    if (method == "circular") {
      sig.values = ht_via_circular(c.f, c.horizon, r, out_grid.nodes);
    } else if (method == "spectral") {
      const SineSeries series = sine_coefficients(c.f, c.horizon, r);
      for (std::size_t i = 0; i < sig.values.size(); ++i) {
        sig.values[i] = ht_spectral(series, out_grid.nodes[i]);
      }
    } else {
      std::vector<double>& vals = sig.values;
      parallel_for(vals.size(), [&](std::size_t i) {
        vals[i] = evaluate(r, out_grid.nodes[i]);
      });
    }
    const ErrorNorms e = error_norms(sig, c.exact_ht, kDefaultMargin);
    rows.push_back({r, e.l2, e.sup_interior});
  }
  return rows;
}

}  // namespace hilbmod
