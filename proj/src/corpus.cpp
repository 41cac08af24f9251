#include "hilbmod/corpus.hpp"

#include <cmath>
#include <stdexcept>

namespace hilbmod {

static CorpusCase build(const std::string& name, double T_override, bool use_override) {
  CorpusCase c;
  c.name = name;
  if (name == "one") {
    const double T = use_override ? T_override : 1.0;
    c.horizon = Horizon(T);
    c.f = [](double) { return 1.0; };
    c.df = [](double) { return 0.0; };
    c.exact_ht = [T](double t) {
      return -(2.0 / M_PI) * std::log(std::tan(M_PI * t / (4.0 * T)));
    };
  } else if (name == "sinpi") {
    const double T = use_override ? T_override : 0.5;
    c.horizon = Horizon(T);
    c.f = [](double t) { return std::sin(M_PI * t); };
    c.df = [](double t) { return M_PI * std::cos(M_PI * t); };
    if (T == 0.5) {
      c.exact_ht = [](double t) { return std::cos(M_PI * t); };
    }
  } else if (name == "xsq") {
    const double T = use_override ? T_override : 1.0;
    c.horizon = Horizon(T);
    c.f = [](double t) { return t * t; };
    c.df = [](double t) { return 2.0 * t; };
  } else if (name == "poly3") {
    const double T = use_override ? T_override : 1.0;
    c.horizon = Horizon(T);
    c.f = [T](double t) { return t * t * t - t * t * T; };
    c.df = [T](double t) { return 3.0 * t * t - 2.0 * t * T; };
  } else if (name.rfind("basis-", 0) == 0) {
    int k = -1;
    try {
      k = std::stoi(name.substr(6));
    } catch (const std::exception&) {
      k = -1;
    }
    if (k < 0 || k > 1024) {
      throw std::invalid_argument("corpus_case: bad basis index in '" + name + "'");
    }
    const double T = use_override ? T_override : 1.0;
    c.horizon = Horizon(T);
    const double a = (k + 0.5) * M_PI / T;
    c.f = [a](double t) { return std::sin(a * t); };
    c.df = [a](double t) { return a * std::cos(a * t); };
    c.exact_ht = [a](double t) { return std::cos(a * t); };
  } else {
    throw std::invalid_argument("corpus_case: unknown case '" + name + "'");
  }
  validate_corpus_case(c);
  return c;
}

CorpusCase corpus_case(const std::string& name) { return build(name, 0.0, false); }

CorpusCase corpus_case(const std::string& name, double T) {
  return build(name, T, true);
}

std::vector<std::string> corpus_names() {
  return {"one", "sinpi", "xsq", "poly3", "basis-0"};
}

bool extension_smooth(const std::string& name) {
  return name == "sinpi" || name.rfind("basis-", 0) == 0;
}

}  // namespace hilbmod
