#pragma once

#include "hilbmod/core.hpp"

namespace hilbmod {

// Periodic reflection of f: odd about 0, antiperiodic across T, 4T-periodic.
// s is reduced mod 4T into [0,4T) and dispatched over four branches
//   [0,T) -> f(u), [T,2T) -> f(2T-u), [2T,3T) -> -f(u-2T), [3T,4T) -> -f(4T-u).
// Branch boundaries take the left-closed branch.
double eval_tilde(const Evaluable& f, const Horizon& horizon, double s);

// Same reflection restricted to (-2T,2T), zero outside. Agrees with
// eval_tilde exactly (same branch code) inside the open interval.
double eval_bar(const Evaluable& f, const Horizon& horizon, double s);

// Derivative of the periodic reflection on (-2T,2T), given df = f' on (0,T):
//   (-2T,-T) -> -df(s+2T), (-T,0) -> df(-s), (0,T) -> df(s), (T,2T) -> -df(2T-s).
// Throws std::invalid_argument outside the open interval.
double eval_tilde_derivative(const Evaluable& df, const Horizon& horizon, double s);

// Cosine-parity extension used by the inversion: even about 0, antiperiodic
// across T (g(2T-s) = -g(s)), 4T-periodic.
double eval_even_tilde(const Evaluable& g, const Horizon& horizon, double s);

}  // namespace hilbmod
