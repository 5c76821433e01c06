// dfc: discrete fractional calculus toolbox.
//
// Subcommands: ml, solve, bernoulli, compare, fracop.
// Exit codes: 0 success, 1 verified violation / deviation found,
//             2 usage or input error, 3 numeric error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfrac/fracops.hpp"
#include "dfrac/inequalities.hpp"
#include "dfrac/io.hpp"
#include "dfrac/mittag.hpp"
#include "dfrac/solver.hpp"

namespace {

using namespace dfrac;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::vector<int> parse_int_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {std::stoi(text)};
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty range: " + text);
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::vector<double> parse_double_range(const std::string& text, double default_step) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {std::stod(text)};
  const double lo = std::stod(text.substr(0, dots));
  std::string rest = text.substr(dots + 2);
  double step = default_step;
  if (const auto colon = rest.find(':'); colon != std::string::npos) {
    step = std::stod(rest.substr(colon + 1));
    rest = rest.substr(0, colon);
  }
  const double hi = std::stod(rest);
  if (step <= 0.0) throw std::invalid_argument("range step must be positive");
  std::vector<double> out;
  for (double v = lo; v <= hi + 1e-12; v += step) out.push_back(v);
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("empty value list");
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  return os;
}

int cmd_ml(double nu, int beta_offset, double c, const std::string& n_spec, int shift) {
  const auto ns = parse_int_range(n_spec);
  std::cout << "nu,beta,c,n,shift,value\n";
  for (const int n : ns) {
    const double value = ml_eval({nu, beta_offset, c, n, shift});
    std::cout << format_number(nu) << ',' << format_number(nu + beta_offset) << ','
              << format_number(c) << ',' << n << ',' << shift << ','
              << format_number(value) << '\n';
  }
  return kExitOk;
}

int cmd_solve(const std::string& spec_path, const std::string& out_path) {
  std::ifstream in(spec_path);
  if (!in) {
    std::cerr << "error: cannot read spec file: " << spec_path << '\n';
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const IvpSpec spec = ivp_from_json(buf.str());

  const Trajectory oracle = solve_oracle(spec);
  const Trajectory series = solve_series(spec);
  std::optional<Trajectory> closed;
  if (spec.constant_y()) closed = solve_closed_const(spec);

  double max_dev = 0.0;
  std::ostringstream csv;
  csv << "offset,series,closed_form,oracle,max_rel_dev\n";
  for (int n = 0; n <= spec.horizon; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const double scale = std::max(1.0, std::abs(oracle.values[i]));
    double dev = std::abs(series.values[i] - oracle.values[i]) / scale;
    if (closed)
      dev = std::max(dev, std::abs(closed->values[i] - oracle.values[i]) / scale);
    max_dev = std::max(max_dev, dev);
    csv << n << ',' << format_number(series.values[i]) << ','
        << (closed ? format_number(closed->values[i]) : std::string{}) << ','
        << format_number(oracle.values[i]) << ',' << format_number(dev) << '\n';
  }
  if (out_path == "-") {
    std::cout << csv.str();
  } else {
    open_out(out_path) << csv.str();
  }
  std::cout << "max_rel_dev=" << format_number(max_dev) << '\n';
  return max_dev <= 1e-8 ? kExitOk : kExitViolation;
}

int cmd_bernoulli(std::vector<double> nu_list, const std::string& c_spec,
                  double c_step, int c_count, int n_max, double tol, bool explore,
                  double explore_step, int explore_count, bool serial,
                  const std::string& report_path, const std::string& violations_path) {
  if (nu_list.empty())
    for (int k = 1; k <= 20; ++k) nu_list.push_back(0.05 * k);

  CRule rule;
  rule.offset_step = c_step;
  rule.offset_count = c_count;
  rule.explore_below = explore;
  rule.explore_step = explore_step;
  rule.explore_count = explore_count;
  if (!c_spec.empty()) rule.absolute = parse_double_range(c_spec, 0.1);

  const SweepReport report = serial
                                 ? bernoulli_sweep_serial(nu_list, rule, n_max, tol)
                                 : bernoulli_sweep(nu_list, rule, n_max, tol);
  open_out(report_path) << sweep_report_to_json(report) << '\n';
  {
    auto os = open_out(violations_path);
    write_violations_csv(os, report);
  }
  std::cout << "violations=" << report.violations.size()
            << " min_gap=" << format_number(report.min_gap) << '\n';
  return report.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_compare(double nu, double a, double x0, double y0, const std::string& c1_spec,
                const std::string& c2_spec, int n_max, double tol) {
  const FracParams params{a, nu};
  const auto expand = [&](const std::string& s) {
    auto vals = parse_double_list(s);
    if (vals.size() == 1)
      vals.assign(static_cast<std::size_t>(std::max(n_max, 1)), vals.front());
    return GridSeq{GridFamily::ShiftedGrid, params, vals};
  };
  const ComparisonResult res =
      comparison_check(expand(c1_spec), expand(c2_spec), x0, y0, nu, n_max, tol);
  std::cout << "min_gap=" << format_number(res.min_gap) << '\n';
  if (res.passed) {
    std::cout << "result=pass\n";
    return kExitOk;
  }
  std::cout << "result=violation first_offset=" << res.first_violation << '\n';
  return kExitViolation;
}

int cmd_fracop(const std::string& op, const std::string& form, double nu, double a,
               const std::string& family, const std::string& input_path,
               const std::string& output_path) {
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "error: cannot read input file: " << input_path << '\n';
    return kExitUsage;
  }
  const GridFamily fam =
      family == "shifted" ? GridFamily::ShiftedGrid : GridFamily::IntegerGrid;
  const GridSeq f = read_grid_csv(in, fam, {a, nu});

  GridSeq out;
  if (op == "sum") {
    out = frac_sum_seq(f, nu);
  } else {
    out = frac_diff_seq(f, nu,
                        form == "direct" ? DiffForm::Direct : DiffForm::Composition);
  }
  if (output_path == "-") {
    write_grid_csv(std::cout, out);
  } else {
    auto os = open_out(output_path);
    write_grid_csv(os, out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete fractional calculus toolbox"};
  app.require_subcommand(1);

  // ml
  auto* ml = app.add_subcommand("ml", "evaluate the discrete Mittag-Leffler function");
  double ml_nu = 0, ml_c = 0;
  int ml_beta = 0, ml_shift = 0;
  std::string ml_n;
  ml->add_option("--nu", ml_nu, "order nu in (0,1]")->required();
  ml->add_option("--beta-offset", ml_beta, "b in {0,1}, beta = nu + b")
      ->check(CLI::Range(0, 1));
  ml->add_option("--c", ml_c, "coefficient c")->required();
  ml->add_option("--n", ml_n, "offset n or range lo..hi")->required();
  ml->add_option("--shift", ml_shift, "lambda shift (0 = a, r+1 = sigma(r))");

  // solve
  auto* solve = app.add_subcommand("solve", "solve a linear fractional IVP three ways");
  std::string solve_spec, solve_out = "-";
  solve->add_option("--spec", solve_spec, "IvpSpec JSON file")->required();
  solve->add_option("--out", solve_out, "trajectory CSV path (- for stdout)");

  // bernoulli
  auto* bern = app.add_subcommand("bernoulli", "sweep the generalized Bernoulli inequality");
  std::vector<double> b_nu;
  std::string b_c;
  double b_cstep = 0.1, b_tol = 1e-9, b_estep = 0.1;
  int b_ccount = 60, b_nmax = 60, b_ecount = 10;
  bool b_explore = false, b_serial = false;
  std::string b_report = "bernoulli_report.json", b_viol = "bernoulli_violations.csv";
  bern->add_option("--nu", b_nu, "nu values (default 0.05..1.00 step 0.05)");
  bern->add_option("--c", b_c, "absolute c grid lo..hi[:step] (default offsets from -nu)");
  bern->add_option("--c-step", b_cstep, "offset step above -nu");
  bern->add_option("--c-count", b_ccount, "number of offset steps");
  bern->add_option("--n-max", b_nmax, "largest offset n");
  bern->add_option("--tol", b_tol, "violation tolerance (relative)");
  bern->add_flag("--explore-below-hypothesis", b_explore,
                 "also evaluate c < -nu (reported separately)");
  bern->add_option("--explore-step", b_estep, "step below -nu");
  bern->add_option("--explore-count", b_ecount, "number of exploration steps");
  bern->add_flag("--serial", b_serial, "use the serial reference sweep");
  bern->add_option("--report", b_report, "JSON report path");
  bern->add_option("--violations", b_viol, "violations CSV path");

  // compare
  auto* comp = app.add_subcommand("compare", "Jia comparison theorem check");
  double cp_nu = 0, cp_a = 0, cp_x0 = 0, cp_y0 = 0, cp_tol = 1e-10;
  int cp_nmax = 25;
  std::string cp_c1, cp_c2;
  comp->add_option("--nu", cp_nu, "order nu")->required();
  comp->add_option("--a", cp_a, "base point a");
  comp->add_option("--x0", cp_x0, "initial value of x")->required();
  comp->add_option("--y0", cp_y0, "initial value of y")->required();
  comp->add_option("--c1", cp_c1, "coefficient c1 (value or comma list)")->required();
  comp->add_option("--c2", cp_c2, "coefficient c2 (value or comma list)")->required();
  comp->add_option("--n-max", cp_nmax, "horizon N");
  comp->add_option("--tol", cp_tol, "relative tolerance");

  // fracop
  auto* fop = app.add_subcommand("fracop", "apply a fractional sum or difference to a CSV sequence");
  std::string f_op, f_form = "comp", f_family = "integer", f_in, f_out = "-";
  double f_nu = 0, f_a = 0;
  fop->add_option("--op", f_op, "sum or diff")->required()
      ->check(CLI::IsMember({"sum", "diff"}));
  fop->add_option("--form", f_form, "diff form: comp or direct")
      ->check(CLI::IsMember({"comp", "direct"}));
  fop->add_option("--nu", f_nu, "order nu")->required();
  fop->add_option("--a", f_a, "base point a");
  fop->add_option("--family", f_family, "input grid family")
      ->check(CLI::IsMember({"integer", "shifted"}));
  fop->add_option("--input", f_in, "input GridSeq CSV")->required();
  fop->add_option("--output", f_out, "output CSV path (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ml->parsed()) return cmd_ml(ml_nu, ml_beta, ml_c, ml_n, ml_shift);
    if (solve->parsed()) return cmd_solve(solve_spec, solve_out);
    if (bern->parsed())
      return cmd_bernoulli(b_nu, b_c, b_cstep, b_ccount, b_nmax, b_tol, b_explore,
                           b_estep, b_ecount, b_serial, b_report, b_viol);
    if (comp->parsed())
      return cmd_compare(cp_nu, cp_a, cp_x0, cp_y0, cp_c1, cp_c2, cp_nmax, cp_tol);
    if (fop->parsed())
      return cmd_fracop(f_op, f_form, f_nu, f_a, f_family, f_in, f_out);
  } catch (const representation_invalid_error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const gamma_pole_error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const undefined_power_error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
