#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "weylpert/errors.hpp"
#include "weylpert/report.hpp"

namespace {

using namespace weylpert;

constexpr int kExitValidation = 2;
constexpr int kExitClosure = 3;

int max_order_cap() {
  if (const char* env = std::getenv("WEYLPERT_MAX_ORDER")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1) return cap;
    } catch (...) {
    }
    throw ValidationError("WEYLPERT_MAX_ORDER must be a positive integer");
  }
  return 3;
}

std::vector<unsigned> parse_levels(const std::string& text) {
  std::vector<unsigned> levels;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!piece.empty()) {
      auto dots = piece.find("..");
      try {
        if (dots == std::string::npos) {
          levels.push_back(static_cast<unsigned>(std::stoul(piece)));
        } else {
          unsigned lo = static_cast<unsigned>(std::stoul(piece.substr(0, dots)));
          unsigned hi = static_cast<unsigned>(std::stoul(piece.substr(dots + 2)));
          if (hi < lo) throw ValidationError("levels range is reversed: " + piece);
          for (unsigned n = lo; n <= hi; ++n) levels.push_back(n);
        }
      } catch (const ValidationError&) {
        throw;
      } catch (...) {
        throw ValidationError("bad levels spec '" + text + "'");
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (levels.empty()) throw ValidationError("empty levels spec");
  return levels;
}

std::vector<double> parse_lambda_grid(const std::string& text) {
  std::vector<double> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (!piece.empty()) {
      try {
        grid.push_back(std::stod(piece));
      } catch (...) {
        throw ValidationError("bad lambda grid entry '" + piece + "'");
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (grid.empty()) throw ValidationError("empty lambda grid");
  return grid;
}

PotentialSpec load_potential(const std::string& text, int order, unsigned series_cutoff) {
  bool looks_like_file = text.size() > 5 && text.substr(text.size() - 5) == ".json";
  if (looks_like_file || std::filesystem::exists(text)) {
    std::ifstream in(text);
    if (!in) throw ValidationError("cannot open potential file '" + text + "'");
    Json json = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (json.is_discarded()) throw ValidationError("potential file is not valid JSON: " + text);
    PotentialSpec spec = potential_from_json(json);
    spec.order = order;
    return spec;
  }
  return parse_potential(text, order, series_cutoff);
}

void emit(const Json& report, const std::string& format, const std::string& out_path) {
  std::string payload = format == "table" ? render_table(report) : report.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write to '" + out_path + "'");
    out << payload;
  }
  std::cout << payload;
}

struct CommonOptions {
  std::string potential;
  int order = 1;
  std::string levels = "0..3";
  std::string lambda_grid = "1e-3,3e-3,1e-2";
  int dim = 0;
  std::string format = "json";
  std::string out;
  unsigned series_cutoff = 24;
};

int run_solve(const CommonOptions& opt) {
  if (opt.order > max_order_cap())
    throw ValidationError("order " + std::to_string(opt.order) + " exceeds WEYLPERT_MAX_ORDER cap " +
                          std::to_string(max_order_cap()));
  PotentialSpec spec = load_potential(opt.potential, opt.order, opt.series_cutoff);
  MultimodeResult result = solve_multimode(spec);
  emit(solve_report(spec, result, parse_levels(opt.levels)), opt.format, opt.out);
  return 0;
}

int run_algebra(int n, int order, const CommonOptions& opt) {
  if (order > max_order_cap())
    throw ValidationError("order exceeds WEYLPERT_MAX_ORDER cap");
  LieAlgebra alg = generate_algebra(n, order);
  StructureConstants constants = structure_constants(alg);
  emit(algebra_report(alg, constants), opt.format, opt.out);
  return 0;
}

int run_verify(const CommonOptions& opt) {
  if (opt.order > max_order_cap())
    throw ValidationError("order exceeds WEYLPERT_MAX_ORDER cap");
  PotentialSpec spec = load_potential(opt.potential, opt.order, opt.series_cutoff);
  if (spec.modes.size() != 1)
    throw ValidationError("verify works on single-mode potentials");

  ModeResult mode = solve_polynomial(spec.modes[0], spec.order);
  std::vector<unsigned> levels = parse_levels(opt.levels);
  std::vector<double> grid = parse_lambda_grid(opt.lambda_grid);

  std::vector<ComparisonReport> reports;
  if (mode.terms.size() == 1 && mode.terms[0].engine) {
    for (unsigned level : levels)
      reports.push_back(compare(*mode.terms[0].engine, level, grid, opt.dim));
  } else {
    // multi-term: compare the combined series against the summed Hamiltonian
    NumberPolynomial series = mode.combined_series();
    int max_power = 0;
    NormalOrderedOperator hamiltonian = harmonic_hamiltonian(spec.order);
    for (const auto& t : mode.terms) {
      max_power = std::max(max_power, static_cast<int>(t.term.power));
      hamiltonian += position_power(t.term.power, spec.order, 1, t.term.coefficient);
    }
    for (unsigned level : levels) {
      int dim = std::max(opt.dim, static_cast<int>(level) + spec.order * max_power + 40);
      Rational first(0);
      for (const auto& t : mode.terms)
        first += t.term.coefficient * x_power_diagonal(t.term.power, level);
      reports.push_back(compare_series(series, hamiltonian, level, grid, dim, first));
    }
  }
  emit(verify_report(spec, spec.order, reports), opt.format, opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie-algebraic perturbation series for anharmonic oscillators"};
  app.require_subcommand(1);

  CommonOptions opt;
  int algebra_n = 4;

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "json | table")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", opt.out, "also write the report to FILE");
  };

  CLI::App* solve = app.add_subcommand("solve", "solve a potential and report the series");
  solve->add_option("--potential", opt.potential, "shorthand like \"x^4\" or a JSON file")
      ->required();
  solve->add_option("--order", opt.order, "lambda truncation order");
  solve->add_option("--levels", opt.levels, "levels, e.g. \"0\", \"0..3\", \"0,2,5\"");
  solve->add_option("--series-cutoff", opt.series_cutoff, "power cutoff for exp/cosh series");
  add_output_flags(solve);

  CLI::App* algebra = app.add_subcommand("algebra", "generate the truncated Lie algebra");
  algebra->add_option("--n", algebra_n, "potential power")->required();
  algebra->add_option("--order", opt.order, "lambda truncation order");
  add_output_flags(algebra);

  CLI::App* verify = app.add_subcommand("verify", "cross-check the series against the oracle");
  verify->add_option("--potential", opt.potential, "shorthand like \"x^4\" or a JSON file")
      ->required();
  verify->add_option("--order", opt.order, "lambda truncation order");
  verify->add_option("--levels", opt.levels, "levels to verify");
  verify->add_option("--lambda-grid", opt.lambda_grid, "comma-separated numeric lambdas");
  verify->add_option("--dim", opt.dim, "Fock dimension override");
  verify->add_option("--series-cutoff", opt.series_cutoff, "power cutoff for exp/cosh series");
  add_output_flags(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (solve->parsed()) return run_solve(opt);
    if (algebra->parsed()) return run_algebra(algebra_n, opt.order, opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const ClosureInsufficiencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClosure;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
