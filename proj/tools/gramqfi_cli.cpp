// Command line front end: single-point evaluations, parameter sweeps and the
// built-in validation suite for the Gramian-metric information toolkit.
//
// Exit codes: 0 success, 1 failed validation checks, 2 argument/specification
// errors, 3 model-domain errors, 4 solver failures, 5 I/O failures.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gramqfi/cat.hpp"
#include "gramqfi/engine.hpp"
#include "gramqfi/validation.hpp"

namespace {

using gramqfi::CatConfig;
using gramqfi::LossyConfig;
using gramqfi::SqueezedConfig;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

enum class Model { CatParams, CatLossy, Displacement, Squeezed };

Model parse_model(const std::string& name) {
  if (name == "cat-params") return Model::CatParams;
  if (name == "cat-lossy") return Model::CatLossy;
  if (name == "displacement") return Model::Displacement;
  if (name == "squeezed") return Model::Squeezed;
  throw UsageError("unknown model '" + name +
                   "' (choose cat-params, cat-lossy, displacement, squeezed)");
}

struct PointParams {
  std::optional<double> c, alpha, alpha0, gammabar, r, epsilon;
  long copies = 1;
  std::vector<double> weight;  // empty = identity

  std::optional<double>& slot(const std::string& name) {
    if (name == "c") return c;
    if (name == "alpha") return alpha;
    if (name == "alpha0") return alpha0;
    if (name == "gammabar") return gammabar;
    if (name == "r") return r;
    if (name == "epsilon") return epsilon;
    throw UsageError("unknown parameter '" + name + "'");
  }
};

using Record = std::vector<std::pair<std::string, double>>;

void forbid(const std::string& model_name,
            std::initializer_list<std::pair<const char*,
                                            const std::optional<double>*>>
                flags) {
  for (const auto& [name, slot] : flags) {
    if (slot->has_value()) {
      throw UsageError("--" + std::string(name) + " is not a parameter of "
                       "model " + model_name);
    }
  }
}

double require(const std::optional<double>& v, const char* flag,
               const char* model_name) {
  if (!v) {
    throw UsageError("model " + std::string(model_name) + " requires --" +
                     flag);
  }
  return *v;
}

gramqfi::RMatrix weight_matrix(const PointParams& p, Eigen::Index dim) {
  if (p.weight.empty()) {
    return gramqfi::RMatrix::Identity(dim, dim);
  }
  if (static_cast<Eigen::Index>(p.weight.size()) != dim * dim) {
    throw gramqfi::BadWeight("--weight needs " + std::to_string(dim * dim) +
                             " comma-separated entries for this model, got " +
                             std::to_string(p.weight.size()));
  }
  gramqfi::RMatrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = p.weight[static_cast<std::size_t>(i * dim + j)];
    }
  }
  return g;
}

Record eval_cat_params(const PointParams& p) {
  forbid("cat-params",
         {{"alpha0", &p.alpha0}, {"gammabar", &p.gammabar}, {"r", &p.r},
          {"epsilon", &p.epsilon}});
  CatConfig cfg;
  cfg.c = require(p.c, "c", "cat-params");
  cfg.alpha = require(p.alpha, "alpha", "cat-params");

  const gramqfi::ModelMatrices model = gramqfi::build_alpha_model(cfg);
  const gramqfi::SldSolution slds = gramqfi::solve_slds(model);
  const gramqfi::QfiResult qfi = gramqfi::qfi_gamma(model, slds);
  const gramqfi::WeightedBound bound =
      gramqfi::scalar_qcrb(qfi.h, weight_matrix(p, 2), p.copies);

  Record rec;
  rec.emplace_back("H_cc", qfi.h(0, 0));
  rec.emplace_back("H_calpha", qfi.h(0, 1));
  rec.emplace_back("H_alphaalpha", qfi.h(1, 1));
  rec.emplace_back("Gamma_calpha", qfi.gamma(0, 1));
  rec.emplace_back("imaginary_leakage", qfi.imaginary_leakage);
  rec.emplace_back("residual_c", slds.residuals[0]);
  rec.emplace_back("residual_alpha", slds.residuals[1]);
  rec.emplace_back("rank_deficiency_c",
                   static_cast<double>(slds.rank_deficiencies[0]));
  rec.emplace_back("rank_deficiency_alpha",
                   static_cast<double>(slds.rank_deficiencies[1]));
  rec.emplace_back("nbar", gramqfi::mean_photon_cat(cfg));
  rec.emplace_back("bound", bound.value);
  rec.emplace_back("copies", static_cast<double>(bound.copies));
  return rec;
}

Record eval_cat_lossy(const PointParams& p) {
  forbid("cat-lossy",
         {{"c", &p.c}, {"alpha", &p.alpha}, {"r", &p.r},
          {"epsilon", &p.epsilon}});
  LossyConfig lossy;
  lossy.alpha0 = require(p.alpha0, "alpha0", "cat-lossy");
  lossy.gammabar = require(p.gammabar, "gammabar", "cat-lossy");
  const CatConfig cfg = gramqfi::lossy_map(lossy);

  const gramqfi::ModelMatrices model = gramqfi::build_alpha_model(cfg);
  const gramqfi::SldSolution slds = gramqfi::solve_slds(model);
  const gramqfi::QfiResult qfi = gramqfi::qfi_gamma(model, slds);
  const gramqfi::Reparameterized rep = gramqfi::reparameterize(
      model, qfi, slds, gramqfi::lossy_jacobian(lossy),
      {"gammabar", "alpha0"});
  const double comm = std::abs(gramqfi::commutator_expectation(
      rep.model, rep.slds.l[0], rep.slds.l[1]));
  const gramqfi::WeightedBound bound =
      gramqfi::scalar_qcrb(rep.qfi.h, weight_matrix(p, 2), p.copies);

  Record rec;
  rec.emplace_back("c", cfg.c);
  rec.emplace_back("alpha", cfg.alpha);
  rec.emplace_back("H_gammabargammabar", rep.qfi.h(0, 0));
  rec.emplace_back("H_gammabaralpha0", rep.qfi.h(0, 1));
  rec.emplace_back("H_alpha0alpha0", rep.qfi.h(1, 1));
  rec.emplace_back("Gamma_gammabaralpha0", rep.qfi.gamma(0, 1));
  rec.emplace_back("sld_commutator_abs", comm);
  rec.emplace_back("imaginary_leakage", rep.qfi.imaginary_leakage);
  rec.emplace_back("residual_gammabar", rep.slds.residuals[0]);
  rec.emplace_back("residual_alpha0", rep.slds.residuals[1]);
  rec.emplace_back("rank_deficiency_gammabar",
                   static_cast<double>(rep.slds.rank_deficiencies[0]));
  rec.emplace_back("rank_deficiency_alpha0",
                   static_cast<double>(rep.slds.rank_deficiencies[1]));
  rec.emplace_back("nbar", gramqfi::mean_photon_cat(cfg));
  rec.emplace_back("nbar0", gramqfi::mean_photon_pure(lossy.alpha0));
  rec.emplace_back("bound", bound.value);
  rec.emplace_back("copies", static_cast<double>(bound.copies));
  return rec;
}

Record eval_displacement(const PointParams& p) {
  forbid("displacement", {{"r", &p.r}});
  const bool lossy_route = p.alpha0.has_value() || p.gammabar.has_value();
  CatConfig cfg;
  std::optional<double> nbar0;
  if (lossy_route) {
    if (p.c || p.alpha) {
      throw UsageError("model displacement takes either --c/--alpha or "
                       "--alpha0/--gammabar, not both");
    }
    LossyConfig lossy;
    lossy.alpha0 = require(p.alpha0, "alpha0", "displacement");
    lossy.gammabar = require(p.gammabar, "gammabar", "displacement");
    cfg = gramqfi::lossy_map(lossy);
    nbar0 = gramqfi::mean_photon_pure(lossy.alpha0);
  } else {
    cfg.alpha = require(p.alpha, "alpha", "displacement");
    cfg.c = p.c.value_or(1.0);
  }
  cfg.epsilon = p.epsilon.value_or(0.0);

  const gramqfi::ModelMatrices model = gramqfi::build_displacement_model(cfg);
  const gramqfi::SldSolution slds = gramqfi::solve_slds(model);
  const gramqfi::QfiResult qfi = gramqfi::qfi_gamma(model, slds);
  const gramqfi::WeightedBound bound =
      gramqfi::scalar_qcrb(qfi.h, weight_matrix(p, 1), p.copies);

  Record rec;
  rec.emplace_back("c", cfg.c);
  rec.emplace_back("alpha", cfg.alpha);
  rec.emplace_back("epsilon", cfg.epsilon);
  rec.emplace_back("H_epsilon", qfi.h(0, 0));
  rec.emplace_back("imaginary_leakage", qfi.imaginary_leakage);
  rec.emplace_back("residual_epsilon", slds.residuals[0]);
  rec.emplace_back("rank_deficiency_epsilon",
                   static_cast<double>(slds.rank_deficiencies[0]));
  rec.emplace_back("nbar", gramqfi::mean_photon_cat(cfg));
  if (nbar0) rec.emplace_back("nbar0", *nbar0);
  rec.emplace_back("bound", bound.value);
  rec.emplace_back("copies", static_cast<double>(bound.copies));
  return rec;
}

Record eval_squeezed(const PointParams& p) {
  forbid("squeezed",
         {{"c", &p.c}, {"alpha", &p.alpha}, {"alpha0", &p.alpha0},
          {"epsilon", &p.epsilon}});
  SqueezedConfig cfg;
  cfg.r = require(p.r, "r", "squeezed");
  cfg.gammabar = require(p.gammabar, "gammabar", "squeezed");
  const double h = gramqfi::qfi_squeezed(cfg);
  gramqfi::RMatrix hm(1, 1);
  hm(0, 0) = h;
  const gramqfi::WeightedBound bound =
      gramqfi::scalar_qcrb(hm, weight_matrix(p, 1), p.copies);

  Record rec;
  rec.emplace_back("H_epsilon", h);
  rec.emplace_back("nbar0", gramqfi::mean_photon_squeezed(cfg.r));
  rec.emplace_back("bound", bound.value);
  rec.emplace_back("copies", static_cast<double>(bound.copies));
  return rec;
}

Record evaluate_point(Model model, const PointParams& p) {
  switch (model) {
    case Model::CatParams: return eval_cat_params(p);
    case Model::CatLossy: return eval_cat_lossy(p);
    case Model::Displacement: return eval_displacement(p);
    case Model::Squeezed: return eval_squeezed(p);
  }
  throw UsageError("unreachable model");
}

std::string metadata_line(const std::string& command,
                          const std::string& model_name,
                          const PointParams& p,
                          const std::string& extra = "") {
  std::ostringstream os;
  os << "# gramqfi " << command << " model=" << model_name;
  const std::pair<const char*, const std::optional<double>*> flags[] = {
      {"c", &p.c},          {"alpha", &p.alpha},
      {"alpha0", &p.alpha0}, {"gammabar", &p.gammabar},
      {"r", &p.r},          {"epsilon", &p.epsilon}};
  for (const auto& [name, slot] : flags) {
    if (slot->has_value()) os << " " << name << "=" << fmt17(**slot);
  }
  os << " copies=" << p.copies;
  if (!extra.empty()) os << " " << extra;
  return os.str();
}

std::ostream& open_sink(const std::optional<std::string>& out_path,
                        std::ofstream& file) {
  if (!out_path) return std::cout;
  file.open(*out_path);
  if (!file) {
    throw IoError("cannot open '" + *out_path + "' for writing");
  }
  return file;
}

void finish_sink(const std::optional<std::string>& out_path,
                 std::ostream& os, std::ofstream& file) {
  os.flush();
  if (out_path && !file) {
    throw IoError("write to '" + *out_path + "' failed");
  }
}

// ---- eval ----

struct EvalOptions {
  std::string model_name;
  PointParams params;
  std::optional<std::string> out_path;
  bool json = false;
};

int cmd_eval(const EvalOptions& opt) {
  const Model model = parse_model(opt.model_name);
  const Record rec = evaluate_point(model, opt.params);

  std::ofstream file;
  std::ostream& os = open_sink(opt.out_path, file);
  if (opt.json) {
    nlohmann::json j;
    j["command"] = "eval";
    j["model"] = opt.model_name;
    nlohmann::json inputs;
    const std::pair<const char*, const std::optional<double>*> flags[] = {
        {"c", &opt.params.c},           {"alpha", &opt.params.alpha},
        {"alpha0", &opt.params.alpha0}, {"gammabar", &opt.params.gammabar},
        {"r", &opt.params.r},           {"epsilon", &opt.params.epsilon}};
    for (const auto& [name, slot] : flags) {
      if (slot->has_value()) inputs[name] = **slot;
    }
    inputs["copies"] = opt.params.copies;
    j["inputs"] = inputs;
    nlohmann::json results = nlohmann::json::object();
    for (const auto& [key, value] : rec) results[key] = value;
    j["results"] = results;
    os << j.dump(2) << "\n";
  } else {
    os << metadata_line("eval", opt.model_name, opt.params) << "\n";
    os << "key,value\n";
    for (const auto& [key, value] : rec) {
      os << key << "," << fmt17(value) << "\n";
    }
  }
  finish_sink(opt.out_path, os, file);
  return 0;
}

// ---- sweep ----

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  long points = 0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char trailing;
  const int got = std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &g.start,
                              &g.stop, &g.points, &trailing);
  if (got != 3) {
    throw UsageError("--grid expects start:stop:points, got '" + text + "'");
  }
  if (!std::isfinite(g.start) || !std::isfinite(g.stop)) {
    throw UsageError("--grid endpoints must be finite");
  }
  if (g.points < 2) {
    throw UsageError("--grid needs at least 2 points, got " +
                     std::to_string(g.points));
  }
  if (g.points > 10'000'000) {
    throw UsageError("--grid point count is unreasonably large");
  }
  return g;
}

struct SweepSpec {
  Model model = Model::CatParams;
  std::string model_name;
  PointParams fixed;
  std::string sweep_variable;
  GridSpec grid;
  std::vector<std::string> outputs;  // column selection; empty = all
};

struct SweepOptions {
  std::string model_name;
  PointParams params;
  std::string sweep_variable;
  std::string grid_text;
  std::vector<std::string> columns;
  std::optional<std::string> out_path;
};

SweepSpec make_sweep_spec(const SweepOptions& opt) {
  SweepSpec spec;
  spec.model_name = opt.model_name;
  spec.model = parse_model(opt.model_name);
  spec.fixed = opt.params;
  spec.sweep_variable = opt.sweep_variable;
  if (spec.sweep_variable.empty()) {
    throw UsageError("sweep requires --sweep VARIABLE");
  }
  if (spec.fixed.slot(spec.sweep_variable).has_value()) {
    throw UsageError("sweep variable '" + spec.sweep_variable +
                     "' must not also be fixed on the command line");
  }
  spec.grid = parse_grid(opt.grid_text);
  spec.outputs = opt.columns;
  return spec;
}

int cmd_sweep(const SweepOptions& opt) {
  SweepSpec spec = make_sweep_spec(opt);

  std::vector<double> grid(static_cast<std::size_t>(spec.grid.points));
  for (long i = 0; i < spec.grid.points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        spec.grid.start + (spec.grid.stop - spec.grid.start) *
                              static_cast<double>(i) /
                              static_cast<double>(spec.grid.points - 1);
  }

  std::vector<Record> rows;
  rows.reserve(grid.size());
  for (double v : grid) {
    PointParams p = spec.fixed;
    p.slot(spec.sweep_variable) = v;
    try {
      rows.push_back(evaluate_point(spec.model, p));
    } catch (const gramqfi::Error&) {
      std::cerr << "while evaluating sweep point " << spec.sweep_variable
                << "=" << fmt17(v) << "\n";
      throw;
    }
  }

  std::vector<std::string> columns = spec.outputs;
  if (columns.empty()) {
    for (const auto& [key, value] : rows.front()) columns.push_back(key);
  } else {
    for (const std::string& col : columns) {
      const auto hit = std::find_if(
          rows.front().begin(), rows.front().end(),
          [&col](const auto& kv) { return kv.first == col; });
      if (hit == rows.front().end()) {
        std::string known;
        for (const auto& [key, value] : rows.front()) {
          if (!known.empty()) known += ", ";
          known += key;
        }
        throw UsageError("unknown column '" + col + "' (available: " + known +
                         ")");
      }
    }
  }

  std::ofstream file;
  std::ostream& os = open_sink(opt.out_path, file);
  os << metadata_line("sweep", spec.model_name, spec.fixed,
                      "sweep=" + spec.sweep_variable + " grid=" +
                          fmt17(spec.grid.start) + ":" +
                          fmt17(spec.grid.stop) + ":" +
                          std::to_string(spec.grid.points))
     << "\n";
  os << spec.sweep_variable;
  for (const std::string& col : columns) os << "," << col;
  os << "\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << fmt17(grid[i]);
    for (const std::string& col : columns) {
      const auto hit = std::find_if(
          rows[i].begin(), rows[i].end(),
          [&col](const auto& kv) { return kv.first == col; });
      os << "," << (hit == rows[i].end() ? "nan" : fmt17(hit->second));
    }
    os << "\n";
  }
  finish_sink(opt.out_path, os, file);
  return 0;
}

// ---- validate ----

struct ValidateOptions {
  std::optional<double> tol;
  std::optional<std::string> only;
};

int cmd_validate(const ValidateOptions& opt) {
  std::optional<double> tol = opt.tol;
  if (!tol) {
    if (const char* env = std::getenv("GRAMQFI_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
        throw UsageError("GRAMQFI_TOL must be a positive number, got '" +
                         std::string(env) + "'");
      }
      tol = v;
    }
  }

  const std::vector<gramqfi::CheckResult> results =
      gramqfi::run_validation(opt.only, tol);
  int failed = 0;
  double total = 0.0;
  for (const auto& r : results) {
    total += r.seconds;
    if (!r.passed) ++failed;
    std::printf("%-4s %-26s observed=%-12.3e tol=%-9.1e (%.2f s)%s%s\n",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.observed,
                r.tolerance, r.seconds, r.detail.empty() ? "" : "  ",
                r.detail.c_str());
  }
  std::printf("summary: %zu/%zu checks passed in %.2f s\n",
              results.size() - static_cast<std::size_t>(failed),
              results.size(), total);
  return failed == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"Quantum Fisher information and SLD toolkit for finite-rank "
               "models in non-orthogonal bases"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  SweepOptions sweep_opt;
  ValidateOptions validate_opt;

  auto add_param_flags = [](CLI::App* cmd, PointParams& p) {
    cmd->add_option("--c", p.c, "Interference visibility in [0, 1]");
    cmd->add_option("--alpha", p.alpha, "Cat branch amplitude");
    cmd->add_option("--alpha0", p.alpha0,
                    "Initial branch amplitude before loss");
    cmd->add_option("--gammabar", p.gammabar,
                    "Accumulated loss (rate times time)");
    cmd->add_option("--r", p.r, "Squeezing parameter");
    cmd->add_option("--epsilon", p.epsilon, "Probe displacement");
    cmd->add_option("--copies", p.copies,
                    "Number of independent probe copies for the scalar bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--weight", p.weight,
                    "Row-major weight matrix entries for the scalar bound")
        ->delimiter(',');
  };

  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Evaluate one model at one parameter point");
  eval_cmd->add_option("--model", eval_opt.model_name,
                       "cat-params | cat-lossy | displacement | squeezed")
      ->required();
  add_param_flags(eval_cmd, eval_opt.params);
  eval_cmd->add_option("--out", eval_opt.out_path,
                       "Write the record to this file instead of stdout");
  eval_cmd->add_flag("--json", eval_opt.json,
                     "Emit a single JSON record instead of CSV");

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Evaluate a model along a one-dimensional parameter grid");
  sweep_cmd->add_option("--model", sweep_opt.model_name,
                        "cat-params | cat-lossy | displacement | squeezed")
      ->required();
  add_param_flags(sweep_cmd, sweep_opt.params);
  sweep_cmd->add_option("--sweep", sweep_opt.sweep_variable,
                        "Name of the parameter to sweep")
      ->required();
  sweep_cmd->add_option("--grid", sweep_opt.grid_text,
                        "Grid as start:stop:points (points >= 2)")
      ->required();
  sweep_cmd->add_option("--columns", sweep_opt.columns,
                        "Comma-separated output columns (default: all)")
      ->delimiter(',');
  sweep_cmd->add_option("--out", sweep_opt.out_path,
                        "Write the table to this file instead of stdout");

  CLI::App* validate_cmd = app.add_subcommand(
      "validate", "Run the built-in consistency and closed-form checks");
  validate_cmd->add_option(
      "--tol", validate_opt.tol,
      "Tolerance override for every check (default: per-check; the "
      "GRAMQFI_TOL environment variable overrides the defaults too)");
  validate_cmd->add_option("--only", validate_opt.only,
                           "Run only checks whose name contains this string");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval_opt);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt);
    return cmd_validate(validate_opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gramqfi::BadWeight& e) {
    std::cerr << "error (BadWeight): " << e.what() << "\n";
    return 2;
  } catch (const gramqfi::IndexOutOfRange& e) {
    std::cerr << "error (IndexOutOfRange): " << e.what() << "\n";
    return 2;
  } catch (const gramqfi::UnsupportedDerivativeOrder& e) {
    std::cerr << "error (UnsupportedDerivativeOrder): " << e.what() << "\n";
    return 2;
  } catch (const gramqfi::RankChange& e) {
    std::cerr << "error (RankChange): " << e.what() << "\n";
    return 3;
  } catch (const gramqfi::DegenerateBasis& e) {
    std::cerr << "error (DegenerateBasis): " << e.what() << "\n";
    return 3;
  } catch (const gramqfi::EmptyBasis& e) {
    std::cerr << "error (EmptyBasis): " << e.what() << "\n";
    return 3;
  } catch (const gramqfi::SingularMetric& e) {
    std::cerr << "error (SingularMetric): " << e.what() << "\n";
    return 3;
  } catch (const gramqfi::NotPSD& e) {
    std::cerr << "error (NotPSD): " << e.what() << "\n";
    return 3;
  } catch (const gramqfi::NotHermitian& e) {
    std::cerr << "error (NotHermitian): " << e.what() << "\n";
    return 3;
  } catch (const gramqfi::DegenerateFloor& e) {
    std::cerr << "error (DegenerateFloor): " << e.what() << "\n";
    return 3;
  } catch (const gramqfi::ModelInvariantViolation& e) {
    std::cerr << "error (ModelInvariantViolation): " << e.what() << "\n";
    return 3;
  } catch (const gramqfi::SolverFailure& e) {
    std::cerr << "error (SolverFailure): " << e.what() << "\n";
    return 4;
  } catch (const gramqfi::ConvergenceFailure& e) {
    std::cerr << "error (ConvergenceFailure): " << e.what() << "\n";
    return 4;
  } catch (const gramqfi::SingularQfi& e) {
    std::cerr << "error (SingularQfi): " << e.what() << "\n";
    return 4;
  } catch (const IoError& e) {
    std::cerr << "error (io): " << e.what() << "\n";
    return 5;
  } catch (const gramqfi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace

int main(int argc, char** argv) {
  return run(argc, argv);
}
