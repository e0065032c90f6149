#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hardy/dual_poly.hpp"
#include "hardy/errors.hpp"
#include "hardy/format.hpp"
#include "hardy/harmonic_schwarz.hpp"
#include "hardy/matrix_hardy.hpp"
#include "hardy/numerics.hpp"
#include "hardy/parse.hpp"
#include "hardy/poly_hardy.hpp"
#include "hardy/real_matrix.hpp"
#include "hardy/verify.hpp"

namespace {

using hardy::format_real;
using hardy::json_bool;
using hardy::json_int;
using hardy::json_object;
using hardy::json_real;
using hardy::json_string;
using hardy::JsonFields;

std::string canonical_exponent(const hardy::Exponent& p) {
  return p.is_inf() ? "inf" : format_real(p.value());
}

std::string coeff_array(const hardy::CoeffVec& v) {
  std::vector<std::string> rendered;
  rendered.reserve(v.size());
  for (const auto& z : v) rendered.push_back(json_string(hardy::format_complex(z)));
  return hardy::json_array(rendered);
}

std::string diagnostics_json() {
  const hardy::QuadDiagnostics& d = hardy::quad_diagnostics();
  return json_object({{"max_nodes_used", json_int(static_cast<long long>(d.max_nodes_used))},
                      {"last_delta", json_real(d.last_delta)}});
}

void print_line(const std::string& line) { std::printf("%s\n", line.c_str()); }

struct NormArgs {
  std::string space;
  std::string p_text;
  std::string coeffs;
  std::string file;
  std::string method = "reduced";
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  bool plain = false;
};

int run_norm(const NormArgs& args, bool dual) {
  const hardy::Exponent p = hardy::parse_exponent(args.p_text);
  const char* command = dual ? "dual" : "norm";
  hardy::reset_quad_diagnostics();
  JsonFields fields{{"command", json_string(command)},
                    {"space", json_string(args.space)},
                    {"p", json_string(canonical_exponent(p))}};
  double value = 0.0;
  if (args.space == "poly") {
    if (args.coeffs.empty()) {
      throw hardy::ParseError("--space poly needs --coeffs");
    }
    const hardy::CoeffVec v = hardy::parse_coeff_list(args.coeffs);
    fields.emplace_back("coeffs", coeff_array(v));
    if (dual) {
      const hardy::DualNormResult result = hardy::dual_norm_c2(v, p);
      value = result.value;
      fields.emplace_back("value", json_real(result.value));
      fields.emplace_back("witness_t", json_real(result.witness_t));
      fields.emplace_back("lambda", json_real(result.lambda));
    } else {
      value = hardy::hp_norm(v, p);
      fields.emplace_back("value", json_real(value));
    }
  } else {
    if (args.file.empty()) {
      throw hardy::ParseError("--space matrix needs --file");
    }
    const hardy::RealMatrix m = hardy::load_matrix_file(args.file);
    fields.emplace_back("file", json_string(args.file));
    fields.emplace_back("n", json_int(m.dim()));
    if (dual) {
      const hardy::DualMethod method = args.method == "brute"
                                           ? hardy::DualMethod::brute
                                           : hardy::DualMethod::reduced;
      value = hardy::matrix_dual_norm(m, p, method, args.trials, args.seed);
      fields.emplace_back("method", json_string(args.method));
      fields.emplace_back("value", json_real(value));
    } else {
      value = hardy::matrix_hp_norm(m, p);
      fields.emplace_back("value", json_real(value));
    }
  }
  fields.emplace_back("diagnostics", diagnostics_json());
  if (args.plain) {
    print_line(format_real(value));
  } else {
    print_line(json_object(fields));
  }
  return 0;
}

struct SweepArgs {
  std::size_t grid = 101;
  std::string out;
  std::string format = "csv";
};

struct SweepRow {
  double lambda, g, f, gstar, fstar, ratio, bpr, left, right;
};

const std::vector<std::string> kSweepColumns = {
    "lambda", "G", "F", "Gstar", "Fstar", "ratio_14",
    "bpr_slack", "twosides_slack_left", "twosides_slack_right"};

int run_sweep(const SweepArgs& args) {
  if (args.grid < 2) {
    throw hardy::DomainError("sweep needs a grid of at least 2 points");
  }
  std::vector<SweepRow> rows;
  rows.reserve(args.grid);
  bool ok = true;
  double offending = 0.0;
  std::string offending_bound;
  double max_ratio = 0.0;
  double argmax_lambda = 0.0;
  double min_ratio = 2.0;
  double min_bpr = 1.0;
  double min_left = 1.0;
  double min_right = 1.0;
  for (std::size_t k = 0; k < args.grid; ++k) {
    const double lambda =
        static_cast<double>(k) / static_cast<double>(args.grid - 1);
    const hardy::CoeffVec v{{1.0, 0.0}, {lambda, 0.0}};
    SweepRow row;
    row.lambda = lambda;
    row.g = hardy::hp_norm(v, 1.0);
    row.f = hardy::hp_norm(v, 4.0);
    row.gstar = hardy::dual_norm_c2(v, 1.0).value;
    row.fstar = hardy::dual_norm_c2(v, 4.0).value;
    row.ratio = row.gstar / row.f;
    row.bpr = row.g - (3.0 - std::sqrt(4.0 - lambda * lambda));
    const double sextic = hardy::sextic_bound(lambda);
    row.left = sextic - row.g;
    row.right = row.fstar - sextic;
    rows.push_back(row);

    if (row.ratio > max_ratio) {
      max_ratio = row.ratio;
      argmax_lambda = lambda;
    }
    min_ratio = std::min(min_ratio, row.ratio);
    min_bpr = std::min(min_bpr, row.bpr);
    min_left = std::min(min_left, row.left);
    min_right = std::min(min_right, row.right);

    std::string bound;
    if (row.ratio < 1.0 - 1e-8 || row.ratio > 1.01) bound = "ratio_14";
    else if (row.fstar < row.g - 1e-8 || row.fstar > 1.01 * row.g) bound = "norm_comp";
    else if (row.bpr < -1e-10) bound = "bpr_slack";
    else if (row.left < -1e-9 || row.right < -1e-9) bound = "twosides";
    if (!bound.empty() && ok) {
      ok = false;
      offending = lambda;
      offending_bound = bound;
    }
  }

  std::string table;
  if (args.format == "csv") {
    table = hardy::csv_row(kSweepColumns);
    for (const SweepRow& r : rows) {
      table += hardy::csv_row({format_real(r.lambda), format_real(r.g),
                               format_real(r.f), format_real(r.gstar),
                               format_real(r.fstar), format_real(r.ratio),
                               format_real(r.bpr), format_real(r.left),
                               format_real(r.right)});
    }
  } else {
    std::vector<std::string> rendered;
    rendered.reserve(rows.size());
    for (const SweepRow& r : rows) {
      rendered.push_back(json_object({{kSweepColumns[0], json_real(r.lambda)},
                                      {kSweepColumns[1], json_real(r.g)},
                                      {kSweepColumns[2], json_real(r.f)},
                                      {kSweepColumns[3], json_real(r.gstar)},
                                      {kSweepColumns[4], json_real(r.fstar)},
                                      {kSweepColumns[5], json_real(r.ratio)},
                                      {kSweepColumns[6], json_real(r.bpr)},
                                      {kSweepColumns[7], json_real(r.left)},
                                      {kSweepColumns[8], json_real(r.right)}}));
    }
    table = hardy::json_array(rendered) + "\n";
  }

  if (args.out.empty()) {
    std::fputs(table.c_str(), stdout);
  } else {
    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw hardy::ParseError("cannot open output file '" + args.out + "'");
    out << table;
    JsonFields summary{
        {"command", json_string("sweep")},
        {"grid", json_int(static_cast<long long>(args.grid))},
        {"format", json_string(args.format)},
        {"out", json_string(args.out)},
        {"max_ratio", json_real(max_ratio)},
        {"argmax_lambda", json_real(argmax_lambda)},
        {"min_ratio", json_real(min_ratio)},
        {"min_bpr_slack", json_real(min_bpr)},
        {"min_twosides_left", json_real(min_left)},
        {"min_twosides_right", json_real(min_right)},
        {"bounds_ok", json_bool(ok)}};
    if (!ok) {
      summary.emplace_back("offending_lambda", json_real(offending));
      summary.emplace_back("offending_bound", json_string(offending_bound));
    }
    print_line(json_object(summary));
  }
  if (!ok) {
    std::fprintf(stderr, "bound %s violated at lambda = %s\n",
                 offending_bound.c_str(), format_real(offending).c_str());
    return 4;
  }
  return 0;
}

struct SchwarzArgs {
  std::string mode;
  std::string gamma;
  std::string delta;
  std::string alpha;
  std::string beta;
};

int run_schwarz(const SchwarzArgs& args) {
  if (args.mode == "extremal") {
    if (args.gamma.empty() || args.delta.empty()) {
      throw hardy::ParseError("--mode extremal needs --gamma and --delta");
    }
    const hardy::DualDirection d{hardy::parse_complex(args.gamma),
                                 hardy::parse_complex(args.delta)};
    const hardy::SchwarzPair pair = hardy::disk_extremal_derivative(d);
    const std::complex<double> pairing =
        d.gamma * std::conj(pair.alpha) + d.delta * std::conj(pair.beta);
    const double h1 = hardy::hp_norm({d.gamma, d.delta}, 1.0);
    const auto [admissible, dual_h1] = hardy::schwarz_admissible(pair);
    print_line(json_object(
        {{"command", json_string("schwarz")},
         {"mode", json_string("extremal")},
         {"gamma", json_string(hardy::format_complex(d.gamma))},
         {"delta", json_string(hardy::format_complex(d.delta))},
         {"alpha", json_string(hardy::format_complex(pair.alpha))},
         {"beta", json_string(hardy::format_complex(pair.beta))},
         {"duality_residual", json_real(std::abs(pairing - h1))},
         {"dual_h1", json_real(dual_h1)},
         {"admissible", json_bool(admissible)}}));
    return 0;
  }
  if (args.alpha.empty() || args.beta.empty()) {
    throw hardy::ParseError("--mode admissible needs --alpha and --beta");
  }
  const hardy::SchwarzPair pair{hardy::parse_complex(args.alpha),
                                hardy::parse_complex(args.beta)};
  const auto [admissible, dual_h1] = hardy::schwarz_admissible(pair);
  const hardy::CorollaryReport report = hardy::check_corollaries(pair);
  print_line(json_object(
      {{"command", json_string("schwarz")},
       {"mode", json_string("admissible")},
       {"alpha", json_string(hardy::format_complex(pair.alpha))},
       {"beta", json_string(hardy::format_complex(pair.beta))},
       {"dual_h1", json_real(dual_h1)},
       {"admissible", json_bool(admissible)},
       {"modulus_sum_slack", json_real(report.modulus_sum_slack)},
       {"parseval_slack", json_real(report.parseval_slack)},
       {"h4_slack", json_real(report.h4_slack)},
       {"vacuous", json_bool(report.vacuous)}}));
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
};

int run_verify(const VerifyArgs& args) {
  std::vector<hardy::CheckResult> checks;
  if (args.suite == "monster") {
    checks = hardy::verify_monster_suite();
  } else if (args.suite == "triangle") {
    checks = hardy::verify_triangle_suite(args.seed);
  } else if (args.suite == "matrix3") {
    checks = hardy::verify_matrix3_suite(args.seed);
  } else if (args.suite == "corollaries") {
    checks = hardy::verify_corollaries_suite(args.seed);
  } else {
    checks = hardy::verify_all(args.seed);
  }
  std::vector<std::string> rendered;
  rendered.reserve(checks.size());
  for (const hardy::CheckResult& c : checks) {
    rendered.push_back(json_object({{"name", json_string(c.name)},
                                    {"passed", json_bool(c.passed)},
                                    {"report_only", json_bool(c.report_only)},
                                    {"detail", json_string(c.detail)}}));
  }
  const bool passed = hardy::suite_passed(checks);
  print_line(json_object(
      {{"command", json_string("verify")},
       {"suite", json_string(args.suite)},
       {"seed", json_int(static_cast<long long>(args.seed))},
       {"checks", hardy::json_array(rendered)},
       {"passed", json_bool(passed)}}));
  return passed ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hardy norms H^p and dual norms H^p_* on polynomial coefficient pairs "
      "and real square matrices, with extremal harmonic self-maps"};
  app.require_subcommand(1);

  NormArgs norm_args;
  NormArgs dual_args;
  SweepArgs sweep_args;
  SchwarzArgs schwarz_args;
  VerifyArgs verify_args;

  CLI::App* norm = app.add_subcommand("norm", "Compute an H^p (quasi)norm");
  norm->add_option("--space", norm_args.space, "poly or matrix")
      ->required()
      ->check(CLI::IsMember({"poly", "matrix"}));
  norm->add_option("--p", norm_args.p_text, "exponent in [0, inf], 'inf' allowed")
      ->required();
  norm->add_option("--coeffs", norm_args.coeffs,
                   "comma-separated complex list, e.g. \"1,0.5+2i\"");
  norm->add_option("--file", norm_args.file, "matrix JSON file");
  norm->add_flag("--plain", norm_args.plain, "print the bare value");

  CLI::App* dual = app.add_subcommand("dual", "Compute a dual norm H^p_*");
  dual->add_option("--space", dual_args.space, "poly or matrix")
      ->required()
      ->check(CLI::IsMember({"poly", "matrix"}));
  dual->add_option("--p", dual_args.p_text, "exponent; p=2 is self-dual")
      ->required();
  dual->add_option("--coeffs", dual_args.coeffs,
                   "comma-separated complex list, e.g. \"1,0.5+2i\"");
  dual->add_option("--file", dual_args.file, "matrix JSON file");
  dual->add_option("--method", dual_args.method,
                   "matrix search: aligned reduction or random lower bound")
      ->check(CLI::IsMember({"reduced", "brute"}));
  dual->add_option("--trials", dual_args.trials, "brute-force candidate count");
  dual->add_option("--seed", dual_args.seed, "brute-force RNG seed");
  dual->add_flag("--plain", dual_args.plain, "print the bare value");

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Tabulate G, F, G*, F* and inequality slacks over lambda in [0,1]");
  sweep->add_option("--grid", sweep_args.grid, "number of lambda samples (>= 2)");
  sweep->add_option("--out", sweep_args.out,
                    "output file; table goes to stdout when omitted");
  sweep->add_option("--format", sweep_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* schwarz = app.add_subcommand(
      "schwarz", "Extremal harmonic self-maps of the disk and admissibility");
  schwarz->add_option("--mode", schwarz_args.mode, "extremal or admissible")
      ->required()
      ->check(CLI::IsMember({"extremal", "admissible"}));
  schwarz->add_option("--gamma", schwarz_args.gamma, "direction entry (complex)");
  schwarz->add_option("--delta", schwarz_args.delta, "direction entry (complex)");
  schwarz->add_option("--alpha", schwarz_args.alpha, "derivative entry (complex)");
  schwarz->add_option("--beta", schwarz_args.beta, "derivative entry (complex)");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", verify_args.suite,
                     "all, monster, triangle, matrix3 or corollaries")
      ->check(CLI::IsMember({"all", "monster", "triangle", "matrix3", "corollaries"}));
  verify->add_option("--seed", verify_args.seed, "suite RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (norm->parsed()) return run_norm(norm_args, false);
    if (dual->parsed()) return run_norm(dual_args, true);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (schwarz->parsed()) return run_schwarz(schwarz_args);
    return run_verify(verify_args);
  } catch (const hardy::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const hardy::NonConvergence& e) {
    std::fprintf(stderr, "did not converge: %s\n", e.what());
    return 3;
  } catch (const hardy::DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 3;
  }
}
