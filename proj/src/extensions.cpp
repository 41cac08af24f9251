#include "hilbmod/extensions.hpp"

#include <cmath>
#include <stdexcept>

namespace hilbmod {

// Reduce s into [0, 4T) and dispatch the four reflection branches.
// Left-closed branches make boundary points deterministic.
static double tilde_core(const Evaluable& f, double T, double s) {
  const double P = 4.0 * T;
  double u = std::fmod(s, P);
  if (u < 0.0) u += P;
  if (u < T) return f(u);
  if (u < 2.0 * T) return f(2.0 * T - u);
  if (u < 3.0 * T) return -f(u - 2.0 * T);
  return -f(P - u);
}

double eval_tilde(const Evaluable& f, const Horizon& horizon, double s) {
  return tilde_core(f, horizon.T, s);
}

double eval_bar(const Evaluable& f, const Horizon& horizon, double s) {
  const double T = horizon.T;
  if (s <= -2.0 * T || s >= 2.0 * T) return 0.0;
  return tilde_core(f, T, s);
}

double eval_tilde_derivative(const Evaluable& df, const Horizon& horizon, double s) {
  const double T = horizon.T;
  if (!(s > -2.0 * T && s < 2.0 * T)) {
    throw std::invalid_argument("eval_tilde_derivative: s must lie in (-2T, 2T)");
  }
  if (s < -T) return -df(s + 2.0 * T);
  if (s < 0.0) return df(-s);
  if (s < T) return df(s);
  return -df(2.0 * T - s);
}

double eval_even_tilde(const Evaluable& g, const Horizon& horizon, double s) {
  const double T = horizon.T;
  const double P = 4.0 * T;
  double u = std::fmod(s, P);
  if (u < 0.0) u += P;
  // Branches of the even-antiperiodic extension on [0, 4T):
  // even about 0 and 2T, sign flip across T and 3T.
  if (u < T) return g(u);
  if (u < 2.0 * T) return -g(2.0 * T - u);
  if (u < 3.0 * T) return -g(u - 2.0 * T);
  return g(P - u);
}

}  // namespace hilbmod
