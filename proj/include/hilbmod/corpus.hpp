#pragma once

#include "hilbmod/core.hpp"

namespace hilbmod {

// Built-in corpus. Names:
//   one      f = 1, T = 1, closed form -(2/pi) log tan(pi t / 4T)
//   sinpi    f = sin(pi t), T = 1/2, closed form cos(pi t)
//   xsq      f = t^2, T = 1, no closed form
//   poly3    f = t^3 - t^2 T, T = 1, no closed form
//   basis-k  f = sin((k+1/2) pi t / T), T = 1, closed form cos((k+1/2) pi t / T)
// T may be overridden; closed forms that hold only at the canonical horizon
// (sinpi) are dropped when T differs. Unknown names throw
// std::invalid_argument.
CorpusCase corpus_case(const std::string& name);
CorpusCase corpus_case(const std::string& name, double T);

std::vector<std::string> corpus_names();

// True when the periodic reflection of the case is infinitely smooth
// (vanishing value at 0 and derivative at T at every relevant order), so
// series methods converge at machine rate.
bool extension_smooth(const std::string& name);

}  // namespace hilbmod
