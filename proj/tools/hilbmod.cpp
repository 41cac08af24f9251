// Command-line front end: transforms, corpus validation, inversion round
// trips, and convergence tables, emitted as CSV or JSON for plotting and CI.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbmod/analysis.hpp"
#include "hilbmod/corpus.hpp"
#include "hilbmod/extensions.hpp"

using json = nlohmann::ordered_json;
using namespace hilbmod;

namespace {

constexpr int kExitTolerance = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNumeric = 65;

// Fixed scientific notation, 12 significant digits, for bit-stable CI diffs.
std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

// JSON numbers carry exactly the CSV-rounded values.
double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

struct Options {
  std::string command;
  std::string case_name = "one";
  double T = 0.0;  // 0 means the case's canonical horizon
  std::string method = "all";
  int N = 2048;
  int n = 4096;
  int cot_n = 8192;
  int M = 65536;
  int out_points = 99;
  double margin = 0.05;
  std::string format = "csv";
  std::string output = "-";
  std::vector<int> resolutions;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);  // binary keeps LF endings everywhere
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

const std::set<std::string> kMethods{"spectral", "csc", "cot", "sz", "alt",
                                     "circular", "all"};

CorpusCase load_case(const Options& opt) {
  if (opt.T != 0.0) return corpus_case(opt.case_name, opt.T);
  return corpus_case(opt.case_name);
}

Resolutions to_resolutions(const Options& opt) {
  Resolutions r;
  r.spectral_N = opt.N;
  r.pv_n = opt.n;
  r.cot_n = opt.cot_n;
  r.circular_M = opt.M;
  return r;
}

// Per-case gate used by corpus/compare: closed-form error and pairwise
// deviation must stay within tolerance.
double case_tolerance(const std::string& name) {
  if (name == "sinpi" || name.rfind("basis-", 0) == 0) return 1e-6;
  return 1e-5;
}

std::vector<std::string> methods_for(const CorpusCase& c, const std::string& method) {
  std::vector<std::string> out;
  const bool series_ok = std::abs(c.f(0.0)) <= 1e-12;
  const auto want = [&](const std::string& m) {
    return method == "all" || method == m;
  };
  if (want("spectral") && series_ok) out.push_back("spectral");
  if (want("csc")) out.push_back("csc");
  if (want("cot")) out.push_back("cot");
  if (want("sz") && c.df) out.push_back("sz");
  if (want("alt")) out.push_back("alt");
  if (want("circular") && series_ok) out.push_back("circular");
  if (out.empty()) {
    throw std::invalid_argument("method '" + method + "' is not applicable to case '" +
                                c.name + "'");
  }
  return out;
}

std::vector<double> run_method(const CorpusCase& c, const std::string& m,
                               const Resolutions& res, const std::vector<double>& ts) {
  std::vector<double> v(ts.size());
  if (m == "spectral") {
    const SineSeries s = sine_coefficients(c.f, c.horizon, res.spectral_N);
    for (std::size_t i = 0; i < ts.size(); ++i) v[i] = ht_spectral(s, ts[i]);
  } else if (m == "csc") {
    for (std::size_t i = 0; i < ts.size(); ++i)
      v[i] = ht_csc(c.f, c.horizon, ts[i], PVConfig{res.pv_n});
  } else if (m == "cot") {
    for (std::size_t i = 0; i < ts.size(); ++i)
      v[i] = ht_cot_periodic(c.f, c.horizon, ts[i], PVConfig{res.cot_n});
  } else if (m == "sz") {
    for (std::size_t i = 0; i < ts.size(); ++i)
      v[i] = ht_weakly_singular(c.f, c.df, c.horizon, ts[i], res.pv_n);
  } else if (m == "alt") {
    for (std::size_t i = 0; i < ts.size(); ++i)
      v[i] = ht_alternative(c.f, c.horizon, ts[i], PVConfig{res.pv_n});
  } else {
    v = ht_via_circular(c.f, c.horizon, res.circular_M, ts);
  }
  return v;
}

int cmd_transform(const Options& opt) {
  const CorpusCase c = load_case(opt);
  const Grid1D grid = make_grid(c.horizon, opt.out_points, GridKind::UniformInterior);
  const Resolutions res = to_resolutions(opt);
  const std::vector<std::string> methods = methods_for(c, opt.method);
  std::vector<std::vector<double>> cols;
  for (const auto& m : methods) cols.push_back(run_method(c, m, res, grid.nodes));

  Output out(opt.output);
  if (opt.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      json row;
      row["t"] = round12(grid.nodes[i]);
      for (std::size_t m = 0; m < methods.size(); ++m) {
        row[methods[m]] = round12(cols[m][i]);
      }
      rows.push_back(row);
    }
    json doc;
    doc["case"] = c.name;
    doc["method"] = methods;
    doc["resolution"] = {{"N", res.spectral_N}, {"n", res.pv_n},
                         {"cot_n", res.cot_n}, {"M", res.circular_M}};
    doc["rows"] = rows;
    out.stream() << doc.dump(2) << "\n";
  } else {
    out.stream() << "t";
    for (const auto& m : methods) out.stream() << "," << m;
    out.stream() << "\n";
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
      out.stream() << fmt12(grid.nodes[i]);
      for (std::size_t m = 0; m < methods.size(); ++m) {
        out.stream() << "," << fmt12(cols[m][i]);
      }
      out.stream() << "\n";
    }
  }
  return 0;
}

json report_to_json(const ComparisonReport& rep, double tol, bool pass) {
  json doc;
  doc["case"] = rep.case_name;
  doc["method"] = rep.methods;
  doc["resolution"] = {{"N", rep.resolutions.spectral_N},
                       {"n", rep.resolutions.pv_n},
                       {"cot_n", rep.resolutions.cot_n},
                       {"M", rep.resolutions.circular_M}};
  json errors;
  for (const auto& m : rep.methods) {
    auto it = rep.vs_exact.find(m);
    if (it != rep.vs_exact.end()) {
      errors[m] = {{"l2", round12(it->second.l2)},
                   {"sup", round12(it->second.sup_interior)}};
    }
  }
  errors["max_pairwise"] = round12(rep.max_pairwise);
  errors["tolerance"] = tol;
  doc["errors"] = errors;
  doc["pass"] = pass;
  return doc;
}

int validate_report(const ComparisonReport& rep, double tol, bool& pass) {
  pass = rep.max_pairwise <= tol;
  for (const auto& [m, e] : rep.vs_exact) {
    if (e.sup_interior > tol) pass = false;
  }
  return pass ? 0 : kExitTolerance;
}

int cmd_corpus(const Options& opt, bool single_case) {
  std::vector<std::string> names;
  if (single_case) {
    names.push_back(opt.case_name);
  } else {
    names = corpus_names();
  }
  const Resolutions res = to_resolutions(opt);
  json docs = json::array();
  int status = 0;
  for (const auto& name : names) {
    const CorpusCase c = (opt.T != 0.0 && single_case) ? corpus_case(name, opt.T)
                                                       : corpus_case(name);
    const Grid1D grid = make_grid(c.horizon, opt.out_points, GridKind::UniformInterior);
    const ComparisonReport rep = cross_validate(c, grid, res);
    const double tol = case_tolerance(name);
    bool pass = false;
    const int s = validate_report(rep, tol, pass);
    status = std::max(status, s);
    docs.push_back(report_to_json(rep, tol, pass));
  }
  Output out(opt.output);
  out.stream() << docs.dump(2) << "\n";
  return status;
}

int cmd_invert(const Options& opt) {
  const CorpusCase c = load_case(opt);
  if (std::abs(c.f(0.0)) > 1e-12) {
    throw std::invalid_argument(
        "invert: case '" + c.name +
        "' has f(0) != 0; its transform diverges at t = 0 and cannot be sampled");
  }
  // Forward transform: the closed form when available, the weakly singular
  // quadrature otherwise (valid on all of [0, T] once f(0) = 0).
  Evaluable g;
  if (c.exact_ht) {
    g = c.exact_ht;
  } else if (c.df) {
    g = [&c, &opt](double t) {
      return ht_weakly_singular(c.f, c.df, c.horizon, t, opt.n);
    };
  } else {
    throw std::invalid_argument("invert: case '" + c.name +
                                "' has neither a closed form nor a derivative");
  }
  const Grid1D grid = make_grid(c.horizon, opt.out_points, GridKind::UniformInterior);
  const SampledSignal rec = invert(g, c.horizon, opt.M, grid);

  Output out(opt.output);
  out.stream() << "t,phi,recovered,abs_error\n";
  for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
    const double t = grid.nodes[i];
    const double exact = c.f(t);
    out.stream() << fmt12(t) << "," << fmt12(exact) << "," << fmt12(rec.values[i])
                 << "," << fmt12(std::abs(rec.values[i] - exact)) << "\n";
  }
  return 0;
}

int cmd_convergence(const Options& opt) {
  if (opt.method == "all") {
    throw std::invalid_argument("convergence: pick one method, not 'all'");
  }
  const CorpusCase c = load_case(opt);
  std::vector<int> res = opt.resolutions;
  if (res.empty()) {
    res = (opt.method == "spectral") ? std::vector<int>{16, 32, 64, 128, 256}
                                     : std::vector<int>{512, 1024, 2048, 4096};
  }
  const Grid1D grid = make_grid(c.horizon, opt.out_points, GridKind::UniformInterior);
  const auto rows = convergence_table(c, opt.method, res, grid);
  Output out(opt.output);
  out.stream() << "resolution,l2_error,linf_interior_error\n";
  for (const auto& row : rows) {
    out.stream() << row.resolution << "," << fmt12(row.l2_error) << ","
                 << fmt12(row.sup_interior_error) << "\n";
  }
  return 0;
}

int dispatch(const Options& opt) {
  if (opt.command == "transform") return cmd_transform(opt);
  if (opt.command == "corpus") return cmd_corpus(opt, false);
  if (opt.command == "compare") return cmd_corpus(opt, true);
  if (opt.command == "invert") return cmd_invert(opt);
  return cmd_convergence(opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modified Hilbert transform toolbox"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--case", opt.case_name, "corpus case name");
    sub->add_option("--T", opt.T, "horizon override (> 0)");
    sub->add_option("--method", opt.method, "spectral|csc|cot|sz|alt|circular|all");
    sub->add_option("--N", opt.N, "series length");
    sub->add_option("--n", opt.n, "quadrature subintervals");
    sub->add_option("--cot-n", opt.cot_n, "subintervals for the cot kernel");
    sub->add_option("--M", opt.M, "periodic sample count");
    sub->add_option("--out-points", opt.out_points, "output grid size");
    sub->add_option("--margin", opt.margin, "sup-norm margin fraction");
    sub->add_option("--format", opt.format, "csv|json");
    sub->add_option("--output", opt.output, "output path ('-' = stdout)");
    sub->add_option("--resolutions", opt.resolutions, "convergence resolutions");
  };
  for (const char* name : {"transform", "corpus", "invert", "compare", "convergence"}) {
    add_common(app.add_subcommand(name));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  opt.command = app.get_subcommands().front()->get_name();

  if (!kMethods.count(opt.method)) {
    std::cerr << "unknown method '" << opt.method << "'\n";
    return kExitUsage;
  }
  bool known_case = false;
  for (const auto& n : corpus_names()) known_case |= (n == opt.case_name);
  known_case |= opt.case_name.rfind("basis-", 0) == 0;
  if (!known_case) {
    std::cerr << "unknown case '" << opt.case_name << "'\n";
    return kExitUsage;
  }
  if (opt.format != "csv" && opt.format != "json") {
    std::cerr << "unknown format '" << opt.format << "'\n";
    return kExitUsage;
  }

  try {
    return dispatch(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
