// Command-line front end: grid scans of the complex plane, point evaluations
// of bounds and pseudomodes, eigenvalue queries, and finite-difference
// cross-checks.  Output is CSV/JSON (scans) or key=value lines (point
// queries), deterministic across runs.

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "steppot/bounds.hpp"
#include "steppot/fd_oracle.hpp"
#include "steppot/operator_model.hpp"
#include "steppot/pseudomode.hpp"
#include "steppot/scan.hpp"

namespace {

using steppot::cplx;

struct CommonOptions {
  std::string v_plus = "0+0i";
  std::string v_minus = "0+0i";
  std::string alpha = "0+0i";
  std::string format = "csv";
  std::string out_path;
  std::string config_path;  // consumed before parsing; kept for --help

  steppot::StepPotential potential() const {
    return {steppot::parse_complex(v_plus), steppot::parse_complex(v_minus)};
  }
  steppot::Interaction interaction() const { return {steppot::parse_complex(alpha)}; }
  steppot::OutputFormat output_format() const {
    if (format == "csv") return steppot::OutputFormat::csv;
    if (format == "json") return steppot::OutputFormat::json;
    throw steppot::ConfigError("format must be csv or json");
  }
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--v-plus", opt.v_plus, "potential level on x >= 0, a+bi");
  cmd->add_option("--v-minus", opt.v_minus, "potential level on x < 0, a+bi");
  cmd->add_option("--alpha", opt.alpha, "delta coupling, a+bi (0 disables)");
  cmd->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out_path, "output path (default: standard output)");
  cmd->add_option("--config", opt.config_path,
                  "config file with key=value lines (flags override it)");
}

// Expands `--config FILE` into option tokens placed right after the
// subcommand name; explicitly given flags come later and win (TakeLast).
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  if (path.empty()) return args;
  std::ifstream file(path);
  if (!file) throw steppot::ConfigError("cannot open config file " + path);
  std::vector<std::string> expanded;
  std::string line;
  while (std::getline(file, line)) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      throw steppot::ConfigError("config file: expected key=value, got '" + line + "'");
    expanded.push_back("--" + line.substr(0, eq));
    expanded.push_back(line.substr(eq + 1));
  }
  // insert after the subcommand token so the keys bind to it
  std::size_t sub_pos = 0;
  while (sub_pos < args.size() && !args[sub_pos].empty() && args[sub_pos][0] == '-') ++sub_pos;
  if (sub_pos < args.size()) ++sub_pos;
  args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub_pos), expanded.begin(),
              expanded.end());
  return args;
}

// key=value report shared by the point subcommands
class Report {
 public:
  void add(const std::string& key, double v) { rows_.push_back({key, steppot::format_double(v)}); }
  void add(const std::string& key, cplx v) {
    rows_.push_back({key, steppot::format_double(v.real()) + (v.imag() < 0 ? "" : "+") +
                              steppot::format_double(v.imag()) + "i"});
  }
  void add(const std::string& key, bool v) { rows_.push_back({key, v ? "true" : "false"}); }
  void add(const std::string& key, const std::string& v) { rows_.push_back({key, v}); }

  void print(const CommonOptions& opt) const {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opt.out_path.empty()) {
      file.open(opt.out_path, std::ios::binary);
      if (!file) throw steppot::IoError("cannot open " + opt.out_path);
      out = &file;
    }
    if (opt.output_format() == steppot::OutputFormat::json) {
      *out << "{\n";
      for (std::size_t i = 0; i < rows_.size(); ++i)
        *out << "  \"" << rows_[i].first << "\": \"" << rows_[i].second << "\""
             << (i + 1 < rows_.size() ? "," : "") << "\n";
      *out << "}\n";
    } else {
      for (const auto& [k, v] : rows_) *out << k << "=" << v << "\n";
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

int run(int argc, char** argv) {
  CLI::App app{"spectral calculator for the 1-D Schrodinger operator with a complex step potential"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  // --- scan ---------------------------------------------------------------
  CommonOptions scan_opt;
  std::string window = "0,1,0,1";
  std::string resolution = "2,2";
  std::string quantity = "spectrum_distance";
  std::string eps_list;
  double oracle_half_width = 30.0, oracle_h = 0.01;
  int oracle_maxit = 500;
  auto* scan_cmd = app.add_subcommand("scan", "evaluate a quantity on a grid window");
  add_common(scan_cmd, scan_opt);
  scan_cmd->add_option("--window", window, "re0,re1,im0,im1");
  scan_cmd->add_option("--res", resolution, "nx,ny");
  scan_cmd->add_option("--quantity", quantity,
                       "bracket_lower|bracket_upper|asymptotic|quotient_exact|oracle|"
                       "omega_membership|spectrum_distance");
  scan_cmd->add_option("--eps", eps_list, "comma list of level-curve epsilons");
  scan_cmd->add_option("--oracle-L", oracle_half_width, "oracle half width");
  scan_cmd->add_option("--oracle-h", oracle_h, "oracle grid spacing");
  scan_cmd->add_option("--oracle-maxit", oracle_maxit, "oracle iteration cap");

  // --- bounds -------------------------------------------------------------
  CommonOptions bounds_opt;
  std::array<double, 2> bounds_z{0.0, 0.0};
  auto* bounds_cmd = app.add_subcommand("bounds", "norm bracket and distances at one z");
  add_common(bounds_cmd, bounds_opt);
  bounds_cmd->add_option("re", bounds_z[0], "Re z")->required();
  bounds_cmd->add_option("im", bounds_z[1], "Im z")->required();

  // --- eig ----------------------------------------------------------------
  CommonOptions eig_opt;
  auto* eig_cmd = app.add_subcommand("eig", "point-interaction eigenvalue for --alpha");
  add_common(eig_cmd, eig_opt);

  // --- pseudomode ---------------------------------------------------------
  CommonOptions pm_opt;
  std::array<double, 2> pm_z{0.0, 0.0};
  auto* pm_cmd = app.add_subcommand("pseudomode", "trial-function coefficients and quotient");
  add_common(pm_cmd, pm_opt);
  pm_cmd->add_option("re", pm_z[0], "Re z")->required();
  pm_cmd->add_option("im", pm_z[1], "Im z")->required();

  // --- oracle -------------------------------------------------------------
  CommonOptions oracle_opt;
  std::array<double, 2> oracle_z{0.0, 0.0};
  double o_half_width = 30.0, o_h = 0.01, o_tol = 1e-10;
  int o_maxit = 500;
  std::string eig_target;
  auto* oracle_cmd = app.add_subcommand("oracle", "finite-difference resolvent norm at one z");
  add_common(oracle_cmd, oracle_opt);
  oracle_cmd->add_option("re", oracle_z[0], "Re z")->required();
  oracle_cmd->add_option("im", oracle_z[1], "Im z")->required();
  oracle_cmd->add_option("--oracle-L", o_half_width, "half width of the truncated interval");
  oracle_cmd->add_option("--oracle-h", o_h, "grid spacing");
  oracle_cmd->add_option("--maxit", o_maxit, "iteration cap");
  oracle_cmd->add_option("--tol", o_tol, "relative Rayleigh tolerance");
  oracle_cmd->add_option("--eig-target", eig_target,
                         "return the discrete eigenvalue nearest this a+bi instead");

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());  // the vector overload consumes from the back
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (scan_cmd->parsed()) {
    steppot::ScanConfig config;
    config.potential = scan_opt.potential();
    config.interaction = scan_opt.interaction();
    std::array<double, 4> w{};
    if (std::sscanf(window.c_str(), "%lf,%lf,%lf,%lf", &w[0], &w[1], &w[2], &w[3]) != 4)
      throw steppot::ConfigError("window: expected re0,re1,im0,im1");
    config.re_min = w[0]; config.re_max = w[1]; config.im_min = w[2]; config.im_max = w[3];
    if (std::sscanf(resolution.c_str(), "%d,%d", &config.nx, &config.ny) != 2)
      throw steppot::ConfigError("res: expected nx,ny");
    config.quantity = steppot::parse_quantity(quantity);
    if (!eps_list.empty()) {
      std::size_t pos = 0;
      while (pos < eps_list.size()) {
        std::size_t next = eps_list.find(',', pos);
        if (next == std::string::npos) next = eps_list.size();
        try {
          config.epsilons.push_back(std::stod(eps_list.substr(pos, next - pos)));
        } catch (const std::exception&) {
          throw steppot::ConfigError("eps: expected a comma list of numbers");
        }
        pos = next + 1;
      }
    }
    config.oracle_half_width = oracle_half_width;
    config.oracle_h = oracle_h;
    config.oracle_max_iterations = oracle_maxit;
    const auto records = steppot::scan(config);
    if (scan_opt.out_path.empty())
      steppot::emit(records, scan_opt.output_format(), std::cout);
    else
      steppot::emit_to_file(records, scan_opt.output_format(), scan_opt.out_path);
    return 0;
  }

  if (bounds_cmd->parsed()) {
    const auto pot = bounds_opt.potential();
    const auto inter = bounds_opt.interaction();
    const steppot::SpectralPoint z{bounds_z[0], bounds_z[1]};
    const auto bracket = steppot::resolvent_norm_bracket(pot, inter, z);
    Report report;
    report.add("spectrum_distance", steppot::spectrum_distance(pot, z));
    report.add("numerical_range_distance", steppot::numerical_range_distance(pot, z));
    report.add("bracket_lower", bracket.lower);
    report.add("bracket_upper", bracket.upper);
    report.add("regime", std::string(steppot::regime_name(bracket.regime)));
    try {
      report.add("asymptotic", steppot::resolvent_norm_asymptotic(pot, inter, z));
    } catch (const steppot::Error&) {
      report.add("asymptotic", std::string(""));
    }
    report.print(bounds_opt);
    return 0;
  }

  if (eig_cmd->parsed()) {
    const auto pot = eig_opt.potential();
    const auto inter = eig_opt.interaction();
    const auto result = steppot::eigen_result(pot, inter);
    Report report;
    report.add("in_omega", result.in_omega);
    if (result.in_omega) {
      report.add("eigenvalue", *result.eigenvalue);
      report.add("growth_rate_left", result.eigenfunction_rates->first);
      report.add("decay_rate_right", result.eigenfunction_rates->second);
      const auto k = steppot::wavenumbers(pot, steppot::SpectralPoint(*result.eigenvalue));
      report.add("wavenumber_residual", std::abs(k.k_plus + k.k_minus + inter.alpha));
    }
    report.print(eig_opt);
    return 0;
  }

  if (pm_cmd->parsed()) {
    const auto pot = pm_opt.potential();
    const auto inter = pm_opt.interaction();
    const steppot::SpectralPoint z{pm_z[0], pm_z[1]};
    const auto coeffs = steppot::pseudomode_coeffs(pot, inter, z);
    const auto [continuity, jump] = steppot::check_domain_conditions(coeffs);
    Report report;
    report.add("n1", coeffs.n1);
    report.add("n2", coeffs.n2);
    report.add("p1", coeffs.p1);
    report.add("p2", coeffs.p2);
    report.add("continuity_residual", continuity);
    report.add("jump_residual", jump);
    report.add("degenerate_im_v", coeffs.degenerate_im_v);
    if (!coeffs.degenerate_im_v) {
      report.add("quotient_exact", steppot::pseudomode_quotient_exact(coeffs, pot, z));
      try {
        report.add("quotient_asymptotic", steppot::pseudomode_quotient_asymptotic(pot, inter, z));
      } catch (const steppot::Error&) {
        report.add("quotient_asymptotic", std::string(""));
      }
    }
    report.print(pm_opt);
    return 0;
  }

  // oracle
  const auto pot = oracle_opt.potential();
  const auto inter = oracle_opt.interaction();
  const steppot::SpectralPoint z{oracle_z[0], oracle_z[1]};
  const auto disc = steppot::build_discretization(pot, inter, o_half_width, o_h);
  Report report;
  if (eig_target.empty()) {
    report.add("oracle_resolvent_norm",
               steppot::oracle_resolvent_norm(disc, z, o_maxit, o_tol));
  } else {
    const cplx target = steppot::parse_complex(eig_target);
    report.add("oracle_eigenvalue", steppot::oracle_eigenvalue_near(disc, target, o_maxit));
  }
  report.add("nodes", static_cast<double>(disc.n));
  report.print(oracle_opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const steppot::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const steppot::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
