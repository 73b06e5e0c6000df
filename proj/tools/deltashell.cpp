// Command-line front end: single-point solves, Figure-style ground-state
// sweeps, critical-coupling queries, the printed-formula comparison report,
// and sharp-limit oracle runs. All output is deterministic CSV.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltashell/csv.hpp"
#include "deltashell/oracle.hpp"
#include "deltashell/solver.hpp"

namespace {

using namespace deltashell;

// Exit codes: 0 success, 2 usage error, 3 domain error.
constexpr int kUsageError = 2;
constexpr int kDomainError = 3;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);  // LF endings regardless of platform
  if (!file) throw DomainError(ErrorCode::BadArgument, "cannot open " + path);
  return file;
}

void run_solve(std::ostream& out, double rho, double A, int kappa) {
  const SpectrumResult res = find_bound_states(rho, A, kappa);
  out << "rho,coupling,kappa,status,energy\n";
  out << format_sig(rho) << ',' << format_sig(A) << ',' << kappa << ','
      << to_string(res.status) << ',';
  if (res.status == SpectrumStatus::Bound) out << format_sig(res.energies.back());
  out << '\n';
}

void run_sweep(std::ostream& out, const std::vector<double>& rho_list, double A_min,
               double A_max, int steps) {
  const std::vector<SweepRow> rows = sweep(rho_list, A_min, A_max, steps);
  out << "rho,coupling_A,status,epsilon\n";
  for (const SweepRow& row : rows) {
    out << format_sig(row.rho) << ',' << format_sig(row.coupling_A) << ','
        << to_string(row.status) << ',';
    if (row.status == SpectrumStatus::Bound) out << format_sig(row.epsilon);
    out << '\n';
  }
}

void run_critical(std::ostream& out, double rho, int branch) {
  const CriticalCoupling cc = critical_coupling(rho, branch);
  out << "rho,branch,a_crit\n";
  out << format_sig(cc.rho) << ',' << cc.branch_index << ','
      << format_sig(cc.a_crit) << '\n';
}

void run_compare(std::ostream& out, double rho, double epsilon) {
  const AlphaComparison cmp = compare_alphas(dimensionless_point(epsilon, rho));
  out << "rho,epsilon,alpha_matching,alpha_avn_printed,"
         "autoval_residual_at_matching_alpha\n";
  out << format_sig(rho) << ',' << format_sig(epsilon) << ','
      << format_sig(cmp.alpha_matching) << ',' << format_sig(cmp.alpha_avn_printed)
      << ',' << format_sig(cmp.autoval_residual) << '\n';
}

void run_oracle(std::ostream& out, double rho, double A,
                const std::vector<double>& widths) {
  const std::vector<ConvergenceRow> rows = convergence_study(rho, A, widths);
  out << "width,epsilon_well,epsilon_delta,abs_error\n";
  for (const ConvergenceRow& row : rows) {
    out << format_sig(row.width) << ',';
    out << (row.epsilon_well ? format_sig(*row.epsilon_well) : "UNBOUND") << ',';
    out << (row.epsilon_delta ? format_sig(*row.epsilon_delta) : "UNBOUND") << ',';
    if (row.epsilon_well && row.epsilon_delta) out << format_sig(row.abs_error);
    out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac delta-shell bound states in natural units "
               "(rho in hbar/mc, coupling in hbar*c)"};
  app.require_subcommand(1);

  double rho = 1.0, coupling = 0.0, epsilon = 0.0;
  double coupling_min = 0.0, coupling_max = 0.0;
  int kappa = -1, branch = 0, steps = 2;
  std::vector<double> rho_list, widths;
  std::string out_path;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  CLI::App* solve = app.add_subcommand("solve", "bound states at one (rho, A)");
  solve->add_option("--rho", rho)->required();
  solve->add_option("--coupling", coupling)->required();
  solve->add_option("--kappa", kappa, "channel (default -1)");
  add_out(solve);

  CLI::App* sw = app.add_subcommand("sweep", "ground-state curves over a coupling grid");
  sw->add_option("--rho", rho_list)->required()->delimiter(',');
  sw->add_option("--coupling-min", coupling_min)->required();
  sw->add_option("--coupling-max", coupling_max)->required();
  sw->add_option("--steps", steps)->required()->check(CLI::Range(2, 1000000));
  add_out(sw);

  CLI::App* crit = app.add_subcommand("critical", "supercritical coupling a_crit(rho)");
  crit->add_option("--rho", rho)->required();
  crit->add_option("--branch", branch)->check(CLI::NonNegativeNumber);
  add_out(crit);

  CLI::App* cmp = app.add_subcommand("compare", "matching vs printed eigenvalue formulas");
  cmp->add_option("--rho", rho)->required();
  cmp->add_option("--epsilon", epsilon)->required();
  add_out(cmp);

  CLI::App* orc = app.add_subcommand("oracle", "finite-well convergence to the delta result");
  orc->add_option("--rho", rho)->required();
  orc->add_option("--coupling", coupling)->required();
  orc->add_option("--widths", widths)->required()->delimiter(',');
  add_out(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (sw->parsed() && !(coupling_min < coupling_max)) {
      std::cerr << "error: need --coupling-min < --coupling-max\n";
      return kUsageError;
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    if (solve->parsed()) run_solve(out, rho, coupling, kappa);
    if (sw->parsed()) run_sweep(out, rho_list, coupling_min, coupling_max, steps);
    if (crit->parsed()) run_critical(out, rho, branch);
    if (cmp->parsed()) run_compare(out, rho, epsilon);
    if (orc->parsed()) run_oracle(out, rho, coupling, widths);
  } catch (const deltashell::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return 0;
}
